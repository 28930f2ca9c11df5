#pragma once

#include "distop/bounds.hpp"
#include "distop/certify.hpp"
#include "distop/distributed.hpp"
#include "distop/filtration.hpp"
#include "distop/image.hpp"
#include "distop/invariant.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace distop {

/// Malformed input file; the message names the file row where possible.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

/// CSV numeric table. A first row that does not parse as numbers is treated
/// as a header. Rows must have equal width.
std::vector<std::vector<double>> read_csv_table(std::istream& in, const std::string& source = "input");

PointCloud read_point_cloud(std::istream& in, const std::string& source = "input");
PointCloud read_point_cloud(const std::filesystem::path& path);
void write_point_cloud(std::ostream& out, const PointCloud& cloud);

DistanceMatrix read_distance_matrix(const std::filesystem::path& path);
void write_distance_matrix(std::ostream& out, const DistanceMatrix& d);

/// One target index per line: row i holds phi(i).
Bijection read_bijection(const std::filesystem::path& path);

/// Newline-delimited index tuples separated by spaces or commas.
SubsetCollection read_subset_collection(std::istream& in, std::size_t ground_size);
void write_subset_collection(std::ostream& out, const SubsetCollection& c);

/// {"0": [[b, d], ...], ...} with "inf" for infinite deaths. The truncated
/// top degree (skeleton artifacts) is left out.
Json to_json(const PersistenceDiagram& d);
PersistenceDiagram diagram_from_json(const Json& j, int truncated_degree = -1);

/// [[t, v], ...]; a constant curve has the single threshold "-inf".
Json to_json(const EulerCurve& c);
EulerCurve euler_curve_from_json(const Json& j);

/// [{"vertices": [...], "time": t}, ...]
Json to_json(const FilteredComplex& c);

Json to_json(const InvariantValue& v);

/// {"kind": "RP", "m": 2, "entries": [{"subset": [...], "invariant": ...}]}
Json to_json(const DistributedInvariant& inv);
DistributedInvariant distributed_from_json(const Json& j);

Json to_json(const CertifyReport& r);
Json to_json(const SparseCertifyReport& r);
Json to_json(const BoundReport& r);
Json to_json(const CoverReport& r);

/// Pixel grid as CSV, one image row per line (row 0 = lowest persistence).
void write_image_csv(std::ostream& out, const PersistenceImage& image);

/// Reads a whole file into a JSON value.
Json read_json(const std::filesystem::path& path);

}  // namespace distop
