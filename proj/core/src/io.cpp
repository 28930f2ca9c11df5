#include "distop/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace distop {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

bool parse_double(const std::string& text, double& out) {
  const std::string t = trim(text);
  if (t.empty()) return false;
  const char* begin = t.data();
  const char* end = begin + t.size();
  if (*begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

std::vector<std::string> split(const std::string& line, const std::string& seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (seps.find(ch) != std::string::npos) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return in;
}

Json number_or_inf(double x) {
  if (std::isinf(x)) return x > 0 ? Json("inf") : Json("-inf");
  return Json(x);
}

double read_number(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return kInfinity;
    if (s == "-inf") return -kInfinity;
  }
  throw ParseError("expected a number or \"inf\", got " + j.dump());
}

}  // namespace

std::vector<std::vector<double>> read_csv_table(std::istream& in, const std::string& source) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t row_number = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++row_number;
    if (trim(line).empty()) continue;
    const auto fields = split(line, ",");
    std::vector<double> values;
    bool numeric = true;
    for (const auto& f : fields) {
      double v;
      if (!parse_double(f, v)) {
        numeric = false;
        break;
      }
      values.push_back(v);
    }
    if (!numeric) {
      if (first_content) {  // header
        first_content = false;
        continue;
      }
      throw ParseError(source + ": row " + std::to_string(row_number) + ": non-numeric field");
    }
    first_content = false;
    if (!rows.empty() && values.size() != rows.front().size())
      throw ParseError(source + ": row " + std::to_string(row_number) + ": expected " +
                       std::to_string(rows.front().size()) + " columns, got " +
                       std::to_string(values.size()));
    rows.push_back(std::move(values));
  }
  return rows;
}

PointCloud read_point_cloud(std::istream& in, const std::string& source) {
  const auto rows = read_csv_table(in, source);
  if (rows.empty()) throw ParseError(source + ": no points");
  std::vector<double> coords;
  for (const auto& r : rows) coords.insert(coords.end(), r.begin(), r.end());
  try {
    return PointCloud(rows.front().size(), std::move(coords));
  } catch (const DomainError& e) {
    throw ParseError(source + ": " + e.what());
  }
}

PointCloud read_point_cloud(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_point_cloud(in, path.string());
}

void write_point_cloud(std::ostream& out, const PointCloud& cloud) {
  out << std::setprecision(17);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const auto p = cloud.point(i);
    for (std::size_t c = 0; c < p.size(); ++c) out << (c ? "," : "") << p[c];
    out << '\n';
  }
}

DistanceMatrix read_distance_matrix(const std::filesystem::path& path) {
  auto in = open_input(path);
  const auto rows = read_csv_table(in, path.string());
  try {
    return DistanceMatrix::from_rows(rows);
  } catch (const DomainError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_distance_matrix(std::ostream& out, const DistanceMatrix& d) {
  out << std::setprecision(17);
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) out << (j ? "," : "") << d(i, j);
    out << '\n';
  }
}

Bijection read_bijection(const std::filesystem::path& path) {
  auto in = open_input(path);
  const auto rows = read_csv_table(in, path.string());
  std::vector<Index> mapping;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double v = rows[i].front();
    if (rows[i].size() != 1 || v < 0 || v != std::floor(v))
      throw ParseError(path.string() + ": row " + std::to_string(i + 1) + ": expected one index");
    mapping.push_back(static_cast<Index>(v));
  }
  try {
    return Bijection(std::move(mapping));
  } catch (const DomainError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

SubsetCollection read_subset_collection(std::istream& in, std::size_t ground_size) {
  std::vector<Subset> subsets;
  std::string line;
  std::size_t row_number = 0;
  while (std::getline(in, line)) {
    ++row_number;
    if (trim(line).empty()) continue;
    Subset s;
    for (const auto& f : split(line, " ,\t")) {
      const std::string t = trim(f);
      if (t.empty()) continue;
      unsigned long v = 0;
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (ec != std::errc() || ptr != t.data() + t.size())
        throw ParseError("subset row " + std::to_string(row_number) + ": bad index '" + t + "'");
      s.push_back(static_cast<Index>(v));
    }
    subsets.push_back(std::move(s));
  }
  return SubsetCollection(ground_size, std::move(subsets));
}

void write_subset_collection(std::ostream& out, const SubsetCollection& c) {
  for (const auto& s : c.subsets()) {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '\n';
  }
}

Json to_json(const PersistenceDiagram& d) {
  Json j = Json::object();
  for (const auto& [degree, pts] : d.degrees) {
    if (degree == d.truncated_degree) continue;
    Json arr = Json::array();
    for (const auto& p : pts) arr.push_back(Json::array({p.birth, number_or_inf(p.death)}));
    j[std::to_string(degree)] = std::move(arr);
  }
  return j;
}

PersistenceDiagram diagram_from_json(const Json& j, int truncated_degree) {
  if (!j.is_object()) throw ParseError("diagram JSON must be an object");
  PersistenceDiagram d;
  d.truncated_degree = truncated_degree;
  for (const auto& [key, arr] : j.items()) {
    int degree = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), degree);
    if (ec != std::errc() || ptr != key.data() + key.size() || degree < 0)
      throw ParseError("bad diagram degree '" + key + "'");
    auto& pts = d.degrees[degree];
    for (const auto& p : arr) {
      if (!p.is_array() || p.size() != 2) throw ParseError("diagram points must be [birth, death]");
      pts.push_back({read_number(p[0]), read_number(p[1])});
    }
    std::sort(pts.begin(), pts.end());
  }
  return d;
}

Json to_json(const EulerCurve& c) {
  Json j = Json::array();
  for (const auto& bp : c.breakpoints()) j.push_back(Json::array({number_or_inf(bp.threshold), bp.value}));
  return j;
}

EulerCurve euler_curve_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("Euler curve JSON must be an array");
  std::vector<EulerCurve::Breakpoint> bps;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[1].is_number_integer())
      throw ParseError("Euler curve entries must be [threshold, integer]");
    bps.push_back({read_number(e[0]), e[1].get<long>()});
  }
  return EulerCurve(std::move(bps));
}

Json to_json(const FilteredComplex& c) {
  Json j = Json::array();
  for (const auto& s : c.simplices()) j.push_back({{"vertices", s.vertices}, {"time", s.time}});
  return j;
}

Json to_json(const InvariantValue& v) {
  return std::visit([](const auto& x) { return to_json(x); }, v);
}

Json to_json(const DistributedInvariant& inv) {
  Json entries = Json::array();
  for (const auto& [s, v] : inv.entries) entries.push_back({{"subset", s}, {"invariant", to_json(v)}});
  return {{"kind", to_string(inv.kind)}, {"m", inv.skeleton_dim}, {"entries", std::move(entries)}};
}

DistributedInvariant distributed_from_json(const Json& j) {
  try {
    DistributedInvariant inv;
    inv.kind = parse_kind(j.at("kind").get<std::string>());
    inv.skeleton_dim = j.at("m").get<int>();
    for (const auto& e : j.at("entries")) {
      Subset s = e.at("subset").get<Subset>();
      std::sort(s.begin(), s.end());
      const Json& value = e.at("invariant");
      if (is_persistence_kind(inv.kind))
        inv.entries.emplace(std::move(s), diagram_from_json(value, inv.skeleton_dim));
      else
        inv.entries.emplace(std::move(s), euler_curve_from_json(value));
    }
    return inv;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("distributed invariant JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("distributed invariant JSON: ") + e.what());
  }
}

Json to_json(const CertifyReport& r) {
  return {{"eps_obs", r.eps_obs},       {"bound", r.bound}, {"distortion", r.distortion},
          {"flavor", to_string(r.flavor)}, {"k", r.k},       {"m", r.m},
          {"collection_size", r.collection_size}};
}

Json to_json(const SparseCertifyReport& r) {
  return {{"eps1", r.eps1},
          {"eps2", r.eps2},
          {"bound", r.bound},
          {"distortion", r.distortion},
          {"flavor", to_string(r.flavor)},
          {"k", r.k},
          {"collection_size", r.collection_size},
          {"anchor", r.anchor}};
}

Json to_json(const BoundReport& r) {
  return {{"flavor", to_string(r.flavor)}, {"k", r.k}, {"m", r.m}, {"epsilon", r.epsilon},
          {"bound", r.bound}, {"formula", r.formula}};
}

Json to_json(const CoverReport& r) {
  return {{"covering_ok", r.covering_ok},
          {"closure_ok", r.closure_ok},
          {"missing_pairs", r.missing_pairs},
          {"missing_closures", r.missing_closures}};
}

void write_image_csv(std::ostream& out, const PersistenceImage& image) {
  out << std::setprecision(17);
  for (std::size_t r = 0; r < image.config.height; ++r) {
    for (std::size_t c = 0; c < image.config.width; ++c) out << (c ? "," : "") << image.at(r, c);
    out << '\n';
  }
}

Json read_json(const std::filesystem::path& path) {
  auto in = open_input(path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace distop
