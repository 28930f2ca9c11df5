// distop: command-line front end for distributed persistence.

#include "distop/alignment.hpp"
#include "distop/casestudy.hpp"
#include "distop/certify.hpp"
#include "distop/datasets.hpp"
#include "distop/distributed.hpp"
#include "distop/io.hpp"
#include "distop/reconstruction.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace fs = std::filesystem;
using namespace distop;

namespace {

// Writes to the file at `path`, or stdout when the path is empty or "-".
template <class Emit>
void emit_to(const std::string& path, Emit&& emit) {
  if (path.empty() || path == "-") {
    emit(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  emit(out);
}

void emit_json(const std::string& path, const Json& j) {
  emit_to(path, [&](std::ostream& out) { out << j.dump(2) << '\n'; });
}

std::ofstream create(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  return out;
}

struct Common {
  std::string input, output;
  std::string kind = "rp";
  int m = 1;
  std::size_t k = 10;
  std::size_t subsets = 1000;
  std::uint64_t seed = 0;
};

void cmd_persist(const Common& o) {
  const PointCloud cloud = read_point_cloud(o.input);
  emit_json(o.output, to_json(compute_invariant(cloud, parse_kind(o.kind), o.m)));
}

struct DistributeOptions {
  bool all = false;
  bool closure = false;
  std::string collection_out;
};

void cmd_distribute(const Common& o, const DistributeOptions& d) {
  const PointCloud cloud = read_point_cloud(o.input);
  if (o.k < 1 || o.k > cloud.size()) throw DomainError("--k must lie in [1, n]");
  SubsetCollection c = d.all ? SubsetCollection(cloud.size(), enumerate_subsets(cloud.size(), o.k))
                             : sample_subsets(cloud.size(), o.k, o.subsets, o.seed);
  if (d.closure) c = closure_completion(c, o.k, o.m);
  if (!d.collection_out.empty())
    emit_to(d.collection_out, [&](std::ostream& out) { write_subset_collection(out, c); });
  emit_json(o.output, to_json(compute_distributed(cloud, c, parse_kind(o.kind), o.m)));
}

void cmd_casestudy(const Common& o, bool desk, std::optional<std::size_t> points,
                   std::optional<std::size_t> subsets) {
  CaseStudyConfig cfg = desk ? CaseStudyConfig::desk_scale() : CaseStudyConfig{};
  if (points) cfg.points = *points;
  if (subsets) cfg.subsets = *subsets;
  cfg.k = o.k;
  cfg.seed = o.seed;
  const fs::path dir = o.output.empty() ? fs::path("casestudy") : fs::path(o.output);
  fs::create_directories(dir);

  const CaseStudyResult r = run_case_study(cfg);
  Json manifest = {{"points", cfg.points}, {"k", cfg.k}, {"subsets", cfg.subsets},
                   {"seed", cfg.seed},     {"files", Json::array()}};
  auto record = [&](const std::string& name) { manifest["files"].push_back(name); };

  for (std::size_t c = 0; c < 3; ++c) {
    const std::string name = CaseStudyResult::names[c];
    auto cloud = create(dir / (name + ".csv"));
    write_point_cloud(cloud, r.clouds[c]);
    record(name + ".csv");
    auto diagram = create(dir / (name + "_diagram.json"));
    diagram << to_json(r.full_diagrams[c]).dump(2) << '\n';
    record(name + "_diagram.json");
    auto image = create(dir / (name + "_image.csv"));
    write_image_csv(image, r.average_images[c]);
    record(name + "_image.csv");
  }

  Json tables = Json::object();
  auto table_json = [&](const auto& table) {
    Json t = Json::object();
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) t[CaseStudyResult::names[a]][CaseStudyResult::names[b]] = table[a][b];
    return t;
  };
  tables["note"] =
      "bottleneck: degree-1 diagrams of the full clouds; image_l2: pixelwise L2 between "
      "averaged degree-1 persistence images on a shared grid";
  tables["bottleneck"] = table_json(r.bottleneck);
  tables["image_l2"] = table_json(r.image_l2);
  tables["image_config"] = {{"width", r.image_config.width},
                            {"height", r.image_config.height},
                            {"birth_min", r.image_config.birth_min},
                            {"birth_max", r.image_config.birth_max},
                            {"persistence_min", r.image_config.persistence_min},
                            {"persistence_max", r.image_config.persistence_max},
                            {"sigma", r.image_config.sigma}};
  auto out = create(dir / "tables.json");
  out << tables.dump(2) << '\n';
  record("tables.json");
  auto mf = create(dir / "manifest.json");
  mf << manifest.dump(2) << '\n';

  std::cout << std::setprecision(6) << "bottleneck (degree 1, full clouds)\n";
  for (std::size_t a = 0; a < 3; ++a) {
    std::cout << "  " << std::setw(13) << CaseStudyResult::names[a];
    for (std::size_t b = 0; b < 3; ++b) std::cout << std::setw(12) << r.bottleneck[a][b];
    std::cout << '\n';
  }
  std::cout << "image L2 (averaged distributed images)\n";
  for (std::size_t a = 0; a < 3; ++a) {
    std::cout << "  " << std::setw(13) << CaseStudyResult::names[a];
    for (std::size_t b = 0; b < 3; ++b) std::cout << std::setw(12) << r.image_l2[a][b];
    std::cout << '\n';
  }
}

int cmd_reconstruct(const Common& o) {
  const DistributedInvariant inv = distributed_from_json(read_json(o.input));
  try {
    const DistributedInvariant pairs =
        is_persistence_kind(inv.kind) ? inv : euler_reconstruct_pairs(inv);
    const DistanceMatrix d = distances_from_pair_curves(pairs);
    emit_to(o.output, [&](std::ostream& out) { write_distance_matrix(out, d); });
    return 0;
  } catch (const CoverClosureError& e) {
    std::cerr << "error: " << e.what() << '\n' << to_json(e.report()).dump(2) << '\n';
    return 1;
  }
}

struct CertifyOptions {
  std::string y, phi;
  std::string flavor = "rp";
};

void cmd_certify(const Common& o, const CertifyOptions& c) {
  const PointCloud x = read_point_cloud(o.input);
  const PointCloud y = read_point_cloud(c.y);
  const Bijection phi = c.phi.empty() ? Bijection::identity(x.size()) : read_bijection(c.phi);
  if (o.k < 2 || o.k > x.size()) throw DomainError("--k must lie in [2, n]");
  const SubsetCollection sampled = sample_subsets(x.size(), o.k, o.subsets, o.seed);
  const SubsetCollection closed = closure_completion(sampled, o.k, o.m);
  const CertifyReport r = certify_alignment(x, y, phi, closed, parse_kind(c.flavor), o.m);
  Json j = to_json(r);
  j["sampled_subsets"] = o.subsets;
  j["cover_probability_lower_bound"] = cover_probability_lower_bound(x.size(), o.k, 2, o.subsets);
  emit_json(o.output, j);
}

struct AlignOptions {
  std::optional<double> sigma;
  std::uint64_t noise_seed = 1;
  std::size_t iterations = 20000;
  std::size_t snapshot_every = 1000;
  double lr = 1e-2;
};

void cmd_align(const Common& o, const AlignOptions& a) {
  const PointCloud x = read_point_cloud(o.input);
  const DistanceMatrix dx = pairwise_distances(x);
  const double sigma = a.sigma ? *a.sigma : 0.1 * x.diameter();
  const PointCloud y0 = add_gaussian_noise(x, sigma, a.noise_seed);

  AlignConfig cfg;
  cfg.k = std::min(o.k, x.size());
  cfg.iterations = a.iterations;
  cfg.snapshot_every = a.snapshot_every;
  cfg.seed = o.seed;
  cfg.lr = a.lr;
  const AlignResult r = align(x, y0, cfg);

  const fs::path dir = o.output.empty() ? fs::path("align") : fs::path(o.output);
  fs::create_directories(dir);
  Json snapshots = Json::array();
  for (const auto& s : r.snapshots) {
    std::ostringstream name;
    name << "snapshot_" << std::setw(8) << std::setfill('0') << s.iteration << ".csv";
    auto out = create(dir / name.str());
    write_point_cloud(out, s.cloud);
    const DistanceMatrix dy = pairwise_distances(s.cloud);
    const Bijection id = Bijection::identity(x.size());
    snapshots.push_back({{"iteration", s.iteration},
                         {"file", name.str()},
                         {"mean_distortion", mean_pairwise_distortion(dx, dy, id)},
                         {"max_distortion", quasi_isometry_distortion(dx, dy, id)}});
  }
  auto loss = create(dir / "loss.csv");
  loss << "iteration,loss\n" << std::setprecision(17);
  for (std::size_t i = 0; i < r.loss_history.size(); ++i) loss << i + 1 << ',' << r.loss_history[i] << '\n';

  const Json summary = {{"sigma", sigma},
                        {"k", cfg.k},
                        {"iterations", cfg.iterations},
                        {"seed", cfg.seed},
                        {"lr", cfg.lr},
                        {"snapshots", snapshots}};
  auto out = create(dir / "summary.json");
  out << summary.dump(2) << '\n';
  std::cout << "initial mean distortion " << snapshots.front()["mean_distortion"].get<double>()
            << ", final " << snapshots.back()["mean_distortion"].get<double>() << '\n';
}

struct CoverageOptions {
  std::size_t n = 0, p = 2;
  std::optional<std::size_t> subsets;
  std::optional<double> eps;
};

void cmd_coverage(const Common& o, const CoverageOptions& c) {
  if (c.p < 1 || c.p > o.k) throw DomainError("--p must lie in [1, k]");
  if (o.k > c.n) throw DomainError("--k must not exceed --n");
  if (!c.subsets && !c.eps) throw DomainError("give --subsets, --eps, or both");
  Json j = {{"n", c.n}, {"k", o.k}, {"p", c.p}};
  if (c.subsets) {
    j["subsets"] = *c.subsets;
    j["cover_probability_lower_bound"] = cover_probability_lower_bound(c.n, o.k, c.p, *c.subsets);
  }
  if (c.eps) {
    const std::size_t m = required_sample_count(c.n, o.k, c.p, *c.eps);
    j["eps"] = *c.eps;
    j["required_sample_count"] = m;
    j["bound_at_required"] = cover_probability_lower_bound(c.n, o.k, c.p, m);
  }
  emit_json(o.output, j);
}

void cmd_generate(const Common& o, const std::string& shape, std::size_t n) {
  PointCloud cloud;
  if (shape == "circle")
    cloud = circle_points(n);
  else if (shape == "disc")
    cloud = disc_points(n, o.seed);
  else if (shape == "noisy-circle")
    cloud = noisy_circle_points(n - n / 10, n / 10, o.seed);
  else if (shape == "torus")
    cloud = torus_points();
  else
    throw DomainError("unknown shape '" + shape + "'");
  emit_to(o.output, [&](std::ostream& out) { write_point_cloud(out, cloud); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distop: distributed persistence toolkit"};
  app.require_subcommand(1);

  Common o;
  DistributeOptions dist;
  CertifyOptions cert;
  AlignOptions al;
  CoverageOptions cov;
  bool desk = false;
  std::optional<std::size_t> cs_points, cs_subsets;
  std::string shape = "circle";
  std::size_t gen_n = 100;

  auto add_kind = [&](CLI::App* sub) {
    sub->add_option("--kind", o.kind, "Invariant: rp, cp, re or ce")
        ->check(CLI::IsMember({"rp", "cp", "re", "ce"}, CLI::ignore_case));
  };
  auto add_output = [&](CLI::App* sub, const char* what) { sub->add_option("-o,--output", o.output, what); };

  auto* persist = app.add_subcommand("persist", "Invariant of a whole point cloud");
  persist->add_option("-i,--input", o.input, "Point cloud CSV")->required()->check(CLI::ExistingFile);
  add_kind(persist);
  persist->add_option("--m", o.m, "Skeleton dimension")->check(CLI::NonNegativeNumber);
  add_output(persist, "JSON output (default stdout)");

  auto* distribute = app.add_subcommand("distribute", "Distributed invariant over random subsets");
  distribute->add_option("-i,--input", o.input, "Point cloud CSV")->required()->check(CLI::ExistingFile);
  add_kind(distribute);
  distribute->add_option("--m", o.m, "Skeleton dimension")->check(CLI::NonNegativeNumber);
  distribute->add_option("--k", o.k, "Subset size");
  distribute->add_option("--subsets", o.subsets, "Number of sampled subsets M");
  distribute->add_option("--seed", o.seed, "Sampling seed");
  distribute->add_flag("--all", dist.all, "Use every k-subset instead of sampling");
  distribute->add_flag("--closure", dist.closure, "Add the closure subsets needed for reconstruction");
  distribute->add_option("--collection-out", dist.collection_out, "Also write the subset collection");
  add_output(distribute, "JSON output (default stdout)");

  auto* casestudy = app.add_subcommand("casestudy", "Circle / disc / noisy-circle comparison");
  casestudy->add_flag("--desk", desk, "200 points and 300 subsets");
  casestudy->add_option("--points", cs_points, "Points per cloud");
  casestudy->add_option("--subsets", cs_subsets, "Number of sampled subsets M");
  casestudy->add_option("--k", o.k, "Subset size");
  casestudy->add_option("--seed", o.seed, "Seed");
  add_output(casestudy, "Output directory (default ./casestudy)");

  auto* reconstruct = app.add_subcommand("reconstruct", "Distance matrix from a distributed invariant");
  reconstruct->add_option("-i,--input", o.input, "Distributed invariant JSON")->required()->check(CLI::ExistingFile);
  add_output(reconstruct, "Distance CSV (default stdout)");

  auto* certify = app.add_subcommand("certify", "Bound the distortion of a correspondence");
  certify->add_option("-i,--input,-x,--x", o.input, "Point cloud X (CSV)")->required()->check(CLI::ExistingFile);
  certify->add_option("-y,--y", cert.y, "Point cloud Y (CSV)")->required()->check(CLI::ExistingFile);
  certify->add_option("--phi", cert.phi, "Correspondence, one index per line (default identity)")
      ->check(CLI::ExistingFile);
  certify->add_option("--k", o.k, "Subset size");
  certify->add_option("--m", o.m, "Skeleton dimension")->check(CLI::PositiveNumber);
  certify->add_option("--subsets", o.subsets, "Number of sampled subsets M");
  certify->add_option("--seed", o.seed, "Sampling seed");
  certify->add_option("--flavor", cert.flavor, "rp or cp")->check(CLI::IsMember({"rp", "cp"}, CLI::ignore_case));
  add_output(certify, "JSON report (default stdout)");

  auto* alignc = app.add_subcommand("align", "Align a noisy copy of X back onto X");
  alignc->add_option("-i,--input", o.input, "Point cloud X (CSV)")->required()->check(CLI::ExistingFile);
  alignc->add_option("--sigma", al.sigma, "Noise standard deviation (default 0.1 x diameter)")
      ->check(CLI::NonNegativeNumber);
  alignc->add_option("--noise-seed", al.noise_seed, "Seed for the initial noise");
  alignc->add_option("--k", o.k, "Subset size (default 25)");
  alignc->add_option("--iterations", al.iterations, "Optimizer steps");
  alignc->add_option("--snapshot-every", al.snapshot_every, "Snapshot interval (0: first and last only)");
  alignc->add_option("--lr", al.lr, "Adam learning rate");
  alignc->add_option("--seed", o.seed, "Subset sampling seed");
  add_output(alignc, "Trajectory directory (default ./align)");

  auto* coverage = app.add_subcommand("coverage", "Covering probability bounds");
  coverage->add_option("--n", cov.n, "Ground set size")->required();
  coverage->add_option("--k", o.k, "Subset size")->required();
  coverage->add_option("--p", cov.p, "Tuple size to cover");
  coverage->add_option("--subsets", cov.subsets, "Number of sampled subsets M");
  coverage->add_option("--eps", cov.eps, "Target probability");
  add_output(coverage, "JSON output (default stdout)");

  auto* generate = app.add_subcommand("generate", "Write a synthetic point cloud");
  generate->add_option("--shape", shape, "circle, disc, noisy-circle or torus")
      ->check(CLI::IsMember({"circle", "disc", "noisy-circle", "torus"}));
  generate->add_option("--n", gen_n, "Number of points (torus: fixed 16 x 16)");
  generate->add_option("--seed", o.seed, "Seed");
  add_output(generate, "CSV output (default stdout)");

  // Per-command defaults that differ from the shared ones.
  alignc->preparse_callback([&](std::size_t) { o.k = 25; });
  casestudy->preparse_callback([&](std::size_t) { o.seed = 7; });
  certify->preparse_callback([&](std::size_t) { o.k = 5; o.subsets = 200; });

  CLI11_PARSE(app, argc, argv);

  try {
    if (*persist) cmd_persist(o);
    if (*distribute) cmd_distribute(o, dist);
    if (*casestudy) cmd_casestudy(o, desk, cs_points, cs_subsets);
    if (*reconstruct) return cmd_reconstruct(o);
    if (*certify) cmd_certify(o, cert);
    if (*alignc) cmd_align(o, al);
    if (*coverage) cmd_coverage(o, cov);
    if (*generate) cmd_generate(o, shape, gen_n);
  } catch (const CoverClosureError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
