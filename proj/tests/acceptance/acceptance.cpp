// Acceptance checks: one PASS/FAIL line per criterion. Tolerances are fixed
// here. Pass criterion numbers as arguments to run a subset.

#include "distop/alignment.hpp"
#include "distop/bounds.hpp"
#include "distop/casestudy.hpp"
#include "distop/certify.hpp"
#include "distop/datasets.hpp"
#include "distop/distributed.hpp"
#include "distop/metrics.hpp"
#include "distop/reconstruction.hpp"
#include "distop/rounding.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

using namespace distop;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --- 1: case-study orderings -------------------------------------------------

constexpr int kCircle = 0, kDisc = 1, kNoisy = 2;

Outcome case_study() {
  constexpr double kFullSeconds = 300.0;
  bool pass = true;
  std::string detail;
  for (bool desk : {false, true}) {
    CaseStudyConfig cfg = desk ? CaseStudyConfig::desk_scale() : CaseStudyConfig{};
    const auto t0 = std::chrono::steady_clock::now();
    const CaseStudyResult r = run_case_study(cfg);
    const double secs = seconds_since(t0);
    const bool a = r.bottleneck[kNoisy][kDisc] < r.bottleneck[kNoisy][kCircle];
    const bool b = r.image_l2[kNoisy][kCircle] < r.image_l2[kNoisy][kDisc];
    const bool time_ok = desk || secs <= kFullSeconds;
    pass = pass && a && b && time_ok;
    detail += fmt("%s(n=%zu,M=%zu): dB(noisy,disc)=%.4f %s dB(noisy,circle)=%.4f; "
                  "L2(noisy,circle)=%.4f %s L2(noisy,disc)=%.4f; %.1fs. ",
                  desk ? "desk" : "full", cfg.points, cfg.subsets, r.bottleneck[kNoisy][kDisc],
                  a ? "<" : ">=", r.bottleneck[kNoisy][kCircle], r.image_l2[kNoisy][kCircle],
                  b ? "<" : ">=", r.image_l2[kNoisy][kDisc], secs);

    // Reference only: the narrower default bandwidth of 5%.
    cfg.sigma_fraction = 0.05;
    const CaseStudyResult n = run_case_study(cfg);
    std::printf("INFO [1] %s scale, image sigma 5%%: L2(noisy,circle)=%.4f L2(noisy,disc)=%.4f (%s)\n",
                desk ? "desk" : "full", n.image_l2[kNoisy][kCircle], n.image_l2[kNoisy][kDisc],
                n.image_l2[kNoisy][kCircle] < n.image_l2[kNoisy][kDisc] ? "ordering holds"
                                                                        : "ordering fails");
  }
  return {pass, detail};
}

// --- 2, 3: exact inverse from Euler invariants -------------------------------

double max_error(const DistanceMatrix& a, const DistanceMatrix& b) {
  double e = 0.0;
  for (Index i = 0; i < a.size(); ++i)
    for (Index j = 0; j < a.size(); ++j) e = std::max(e, std::abs(a(i, j) - b(i, j)));
  return e;
}

// Random k-subsets until every pair is covered, then drop members whose pairs
// stay covered without them, then close.
SubsetCollection grown_collection(std::size_t n, std::size_t k, int m, std::mt19937_64& rng) {
  std::vector<Subset> members;
  std::map<std::pair<Index, Index>, int> hits;
  const std::size_t pairs = n * (n - 1) / 2;
  while (hits.size() < pairs) {
    Subset s = random_subset(n, k, rng);
    if (std::find(members.begin(), members.end(), s) != members.end()) continue;
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b) ++hits[{s[a], s[b]}];
    members.push_back(std::move(s));
  }
  std::shuffle(members.begin(), members.end(), rng);
  std::vector<Subset> kept;
  for (const auto& s : members) {
    bool needed = false;
    for (std::size_t a = 0; a < s.size() && !needed; ++a)
      for (std::size_t b = a + 1; b < s.size() && !needed; ++b) needed = hits[{s[a], s[b]}] == 1;
    if (needed) {
      kept.push_back(s);
    } else {
      for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b) --hits[{s[a], s[b]}];
    }
  }
  return closure_completion(SubsetCollection(n, std::move(kept)), k, m);
}

Outcome exact_inverse(bool grown) {
  constexpr double kTol = 1e-9, kSeconds = 120.0;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(grown ? 303 : 202);
  std::size_t clouds = 0, runs = 0, bad = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 104; ++trial) {
    const std::size_t n = 5 + trial % 4;
    const PointCloud cloud = oracle::random_cloud(n, 2 + trial % 2, rng);
    const DistanceMatrix truth = pairwise_distances(cloud);
    const InvariantKind kind = trial % 2 ? InvariantKind::CE : InvariantKind::RE;
    ++clouds;
    for (int m = 1; m <= 2; ++m)
      for (std::size_t k = 2; k <= n; ++k) {
        const SubsetCollection c = grown ? grown_collection(n, k, m, rng)
                                         : closure_completion(SubsetCollection(n, enumerate_subsets(n, k)), k, m);
        if (grown && !check_cover_closure(c, k, m, 2).ok()) {
          ++bad;
          continue;
        }
        const auto pairs = euler_reconstruct_pairs(compute_distributed(cloud, c, kind, m));
        const double e = max_error(distances_from_pair_curves(pairs), truth);
        worst = std::max(worst, e);
        bad += !(e < kTol);
        ++runs;
      }
  }
  const double secs = seconds_since(t0);
  return {bad == 0 && secs <= kSeconds,
          fmt("%zu clouds (n=5..8, RE/CE), %zu (k,m) runs%s, max abs error %.3g (tol %.0e), %zu failures, %.1fs",
              clouds, runs, grown ? " on minimal grown collections" : " on all subsets", worst, kTol, bad,
              secs)};
}

// --- 4: rounding grid --------------------------------------------------------

Outcome rounding() {
  std::mt19937_64 rng(404);
  std::size_t bad1 = 0, bad2 = 0, bad_dense = 0, bad_keep = 0, zero_delta = 0;
  double worst_ratio = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 50;
    std::vector<double> p(n), q(n);
    const int style = trial % 4;
    std::uniform_real_distribution<double> u(0, 10);
    std::uniform_real_distribution<double> noise(-0.1, 0.1);
    for (std::size_t i = 0; i < n; ++i) {
      if (style == 3) {
        // Dyadic values: exact midpoint ties are representable.
        p[i] = static_cast<double>(rng() % 81) / 8.0;
        q[i] = p[i] + static_cast<double>(static_cast<int>(rng() % 9) - 4) / 64.0;
      } else {
        p[i] = u(rng);
        q[i] = p[i] + noise(rng) * (style == 0 ? 0.01 : style == 1 ? 0.1 : 1.0);
      }
    }
    const RoundingResult r = rounding_grid(p, q);
    const double limit = 3 * r.epsilon + 4 * r.delta;
    for (std::size_t i = 0; i < n; ++i) {
      bad1 += r.pi(p[i]) != r.pi(q[i]);
      for (double x : {p[i], q[i]}) {
        const double move = std::abs(r.pi(x) - x);
        bad2 += !(move <= limit);
        if (limit > 0) worst_ratio = std::max(worst_ratio, move / limit);
      }
    }
    if (r.delta == 0.0) {
      ++zero_delta;
      continue;
    }
    const RoundingGrid dense = densify_grid(r);
    for (std::size_t i = 0; i < n; ++i)
      for (double x : {p[i], q[i]}) bad_keep += dense.round(x) != r.pi(x);
    // Furthest point of the data range from the grid: range ends and gap midpoints.
    const double lo = std::min(*std::min_element(p.begin(), p.end()), *std::min_element(q.begin(), q.end()));
    const double hi = std::max(*std::max_element(p.begin(), p.end()), *std::max_element(q.begin(), q.end()));
    const auto v = dense.values();
    auto gap_to_grid = [&](double x) {
      const auto it = std::lower_bound(v.begin(), v.end(), x);
      double best = kInfinity;
      if (it != v.end()) best = *it - x;
      if (it != v.begin()) best = std::min(best, x - *(it - 1));
      return best;
    };
    double far = std::max(gap_to_grid(lo), gap_to_grid(hi));
    for (std::size_t g = 1; g < v.size(); ++g) {
      const double mid = 0.5 * (v[g - 1] + v[g]);
      if (mid >= lo && mid <= hi) far = std::max(far, gap_to_grid(mid));
    }
    bad_dense += !(far <= 14 * r.delta);
  }
  return {bad1 + bad2 + bad_dense + bad_keep == 0,
          fmt("1000 instances (|P|<=50, %zu with delta=0): pi(p)!=pi(q) %zu, |pi(x)-x|>3eps+4delta %zu "
              "(max ratio %.3f), not 14delta-dense %zu, densify changed pi %zu",
              zero_delta, bad1, bad2, worst_ratio, bad_dense, bad_keep)};
}

// --- 5: bottleneck oracle ----------------------------------------------------

Outcome bottleneck_oracle() {
  constexpr double kTol = 1e-12;
  std::mt19937_64 rng(505);
  std::size_t bad = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t ess = rng() % 3;
    const auto a = oracle::random_points(rng() % (6 - ess) + ess, ess, rng);
    auto b = oracle::random_points(rng() % (6 - ess), 0, rng);
    std::uniform_real_distribution<double> u(0, 1);
    for (std::size_t e = 0; e < ess; ++e) b.push_back({u(rng), kInfinity});
    const double got = bottleneck(a, b), want = oracle::brute_matching_cost(a, b, kInfinity);
    const double err = std::abs(got - want);
    worst = std::max(worst, err);
    bad += !(err <= kTol);
  }
  return {bad == 0, fmt("500 pairs (<=5 points, with essential points), max |fast - brute| %.3g (tol %.0e), %zu failures",
                        worst, kTol, bad)};
}

// --- 6: stability ------------------------------------------------------------

Outcome stability() {
  constexpr double kSlack = 1e-12;
  std::mt19937_64 rng(606);
  std::size_t bad = 0;
  double worst = -kInfinity;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 5 + rng() % 8, dim = 2 + trial % 2;
    const PointCloud x = oracle::random_cloud(n, dim, rng);
    std::uniform_real_distribution<double> amp(0.0, 0.15);
    const PointCloud y = add_uniform_noise(x, amp(rng), rng());
    const DistanceMatrix dx = pairwise_distances(x), dy = pairwise_distances(y);
    const double eps = quasi_isometry_distortion(dx, dy, Bijection::identity(n));
    const auto a = rips_persistence(dx, 2).diagram, b = rips_persistence(dy, 2).diagram;
    for (int q = 0; q <= 2; ++q) {
      const double db = bottleneck(a.points(q), b.points(q));
      worst = std::max(worst, db - eps);
      bad += !(db <= eps + kSlack);
    }
  }
  return {bad == 0, fmt("200 clouds, degrees 0..2: max (d_B - eps) = %.3g (slack %.0e), %zu violations", worst, kSlack,
                        bad)};
}

// --- 7: quasi-isometry bound -------------------------------------------------

Outcome bound_consistency() {
  std::mt19937_64 rng(707);
  std::size_t bad = 0;
  double tightest = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 8 + rng() % 5, k = 4 + rng() % 2;
    const int m = 1 + trial % 2;
    const InvariantKind flavor = (trial / 2) % 2 ? InvariantKind::CP : InvariantKind::RP;
    const PointCloud x = oracle::random_cloud(n, 2, rng);
    std::uniform_real_distribution<double> amp(0.0, 0.1);
    const PointCloud y = add_uniform_noise(x, amp(rng), rng());
    const SubsetCollection c = grown_collection(n, k, m, rng);
    const CertifyReport r = certify_alignment(x, y, Bijection::identity(n), c, flavor, m);
    const double bound = quasi_isometry_bound(flavor, k, m, r.eps_obs).bound;
    bad += !(r.distortion <= bound);
    if (bound > 0) tightest = std::max(tightest, r.distortion / bound);
  }
  return {bad == 0, fmt("100 instances (RP/CP, m=1,2, k=4,5): distortion <= bound everywhere, max distortion/bound %.3g, "
                        "%zu violations",
                        tightest, bad)};
}

// --- 8: covering probability -------------------------------------------------

Outcome covering() {
  struct Case {
    std::size_t n, k, p, m;
  };
  const Case cases[] = {{6, 3, 1, 3},  {6, 3, 1, 6},   {8, 4, 2, 10}, {8, 4, 2, 25},
                        {10, 5, 2, 15}, {10, 5, 2, 40}, {12, 6, 3, 60}, {12, 6, 3, 150}};
  constexpr int kTrials = 10000;
  std::mt19937_64 rng(808);
  bool pass = true;
  std::string detail;
  for (const auto& c : cases) {
    const auto targets = enumerate_subsets(c.n, c.p);
    int covered = 0;
    for (int t = 0; t < kTrials; ++t) {
      std::set<Subset> hit;
      for (std::size_t i = 0; i < c.m; ++i) {
        const Subset s = random_subset(c.n, c.k, rng);
        for_each_combination(s.size(), c.p, [&](const Subset& idx) {
          Subset sub;
          for (Index j : idx) sub.push_back(s[j]);
          hit.insert(std::move(sub));
          return true;
        });
      }
      covered += hit.size() == targets.size();
    }
    const double phat = covered / double(kTrials);
    const double se = std::sqrt(phat * (1 - phat) / kTrials);
    const double bound = cover_probability_lower_bound(c.n, c.k, c.p, c.m);
    const bool ok = phat >= bound - 3 * se;
    pass = pass && ok;
    detail += fmt("(%zu,%zu,%zu,%zu) P=%.4f bound=%.4f%s; ", c.n, c.k, c.p, c.m, phat, bound, ok ? "" : " FAIL");
  }
  for (double eps : {0.5, 0.9, 0.99})
    for (const auto& c : cases) {
      const std::size_t need = required_sample_count(c.n, c.k, c.p, eps);
      const bool ok = cover_probability_lower_bound(c.n, c.k, c.p, need) >= eps;
      pass = pass && ok;
      if (!ok) detail += fmt("required_sample_count(%zu,%zu,%zu,%.2f)=%zu falls short; ", c.n, c.k, c.p, eps, need);
    }
  detail += "required_sample_count checked at eps 0.5, 0.9, 0.99";
  return {pass, detail};
}

// --- 9: Euler-Poincare -------------------------------------------------------

Outcome euler_poincare() {
  std::mt19937_64 rng(909);
  std::size_t bad = 0, points = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const FilteredComplex k = oracle::random_complex(5 + rng() % 4, 1 + trial % 3, rng);
    const EulerCurve chi = euler_curve(k);
    const auto betti = betti_curves(k);
    std::set<double> at;
    for (const auto& s : k.simplices()) at.insert(s.time);
    for (double r : at) {
      long count = 0;
      for (const auto& s : k.simplices())
        if (s.time <= r) count += s.vertices.size() % 2 ? 1 : -1;
      long alternating = 0;
      const auto ranks = oracle::betti_at(k, r, static_cast<int>(betti.size()) - 1);
      for (std::size_t q = 0; q < betti.size(); ++q) {
        alternating += (q % 2 ? -1 : 1) * betti[q](r);
        bad += betti[q](r) != ranks[q];
      }
      bad += alternating != count || chi(r) != count;
      ++points;
    }
  }
  return {bad == 0, fmt("200 random complexes, %zu breakpoints: sum (-1)^q beta_q == simplex count == euler_curve, "
                        "Betti curves == boundary ranks; %zu mismatches",
                        points, bad)};
}

// --- 10: gradient ------------------------------------------------------------

Outcome gradient() {
  constexpr double kRel = 1e-4, kStep = 1e-5, kTieGap = 10 * kStep;
  constexpr int kInstances = 100, kNeeded = 95;
  std::mt19937_64 rng(1010);
  int good = 0, used = 0, ties = 0;
  double worst = 0.0;
  while (used < kInstances) {
    const PointCloud x = oracle::random_cloud(8, 2, rng);
    const PointCloud y = oracle::random_cloud(8, 2, rng);
    const LossGradient g = subset_loss_gradient(x, y);
    if (g.min_edge_gap < kTieGap) {  // each step moves edge lengths by at most 2h
      std::printf("INFO [10] tie case skipped: min edge gap %.3g\n", g.min_edge_gap);
      ++ties;
      continue;
    }
    ++used;
    double num = 0.0, den = 0.0;
    for (std::size_t c = 0; c < g.gradient.size(); ++c) {
      std::vector<double> plus(y.coords().begin(), y.coords().end()), minus = plus;
      plus[c] += kStep;
      minus[c] -= kStep;
      const double fd =
          (subset_loss(x, PointCloud(2, plus)).loss - subset_loss(x, PointCloud(2, minus)).loss) / (2 * kStep);
      num += (fd - g.gradient[c]) * (fd - g.gradient[c]);
      den = std::max(den, fd * fd + g.gradient[c] * g.gradient[c]);
    }
    const double rel = den > 0 ? std::sqrt(num / den) : 0.0;
    worst = std::max(worst, rel);
    good += rel < kRel;
  }
  return {good >= kNeeded, fmt("%d of %d generic 8-point instances within relative error %.0e (need %d), %d tie cases "
                               "skipped, max relative error %.3g",
                               good, kInstances, kRel, kNeeded, ties, worst)};
}

// --- 11: alignment -----------------------------------------------------------

Outcome alignment() {
  constexpr double kSeconds = 600.0;
  const PointCloud x = circle_points(100, 1.0);
  const PointCloud y0 = add_gaussian_noise(x, 0.1 * x.diameter(), 11);
  AlignConfig cfg;
  cfg.k = 25;
  cfg.iterations = 20000;
  cfg.seed = 11;
  const auto t0 = std::chrono::steady_clock::now();
  const AlignResult r = align(x, y0, cfg);
  const double secs = seconds_since(t0);
  const AlignResult again = align(x, y0, cfg);
  const bool same = std::ranges::equal(r.final_cloud.coords(), again.final_cloud.coords()) &&
                    r.loss_history == again.loss_history;
  const DistanceMatrix dx = pairwise_distances(x);
  const auto id = Bijection::identity(x.size());
  const double before = mean_pairwise_distortion(dx, pairwise_distances(y0), id);
  const double after = mean_pairwise_distortion(dx, pairwise_distances(r.final_cloud), id);
  return {after < 0.5 * before && same && secs <= kSeconds,
          fmt("circle n=100, sigma=0.1 diam, k=25, 20000 iterations: mean distortion %.4g -> %.4g (need < %.4g), "
              "repeat run %s, %.1fs",
              before, after, 0.5 * before, same ? "identical" : "DIFFERS", secs)};
}

// --- 12: Cech and Rips -------------------------------------------------------

Outcome cech_rips() {
  constexpr double kSlack = 1e-9;
  std::mt19937_64 rng(1212);
  std::size_t simplices = 0, bad = 0, literal = 0, bad_db = 0;
  double worst_db = 0.0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = 2 + trial % 2;
    PointCloud c = oracle::random_cloud(6 + rng() % 4, d, rng);
    std::vector<double> scaled(c.coords().begin(), c.coords().end());
    const double diam = c.diameter();
    for (double& v : scaled) v /= diam;
    c = PointCloud(d, std::move(scaled));
    const double factor = std::sqrt(2.0 * d / (d + 1.0));
    const FilteredComplex rips = rips_filtration(pairwise_distances(c), 2);
    const FilteredComplex cech = cech_filtration(c, 2);
    std::map<Subset, double> rt;
    for (const auto& s : rips.simplices()) rt[s.vertices] = s.time;
    for (const auto& s : cech.simplices()) {
      const double r = rt.at(s.vertices);
      ++simplices;
      bad += !(r <= s.time + kSlack && s.time <= factor * r + kSlack);
      literal += !(s.time <= r + kSlack);
    }
    const auto a = compute_persistence(rips).diagram, b = compute_persistence(cech).diagram;
    for (int q = 0; q < 2; ++q) {
      const double db = bottleneck(a.points(q), b.points(q));
      worst_db = std::max(worst_db, db);
      bad_db += !(db <= factor + kSlack);
    }
  }
  std::printf("INFO [12] stated orientation Cech <= Rips fails on %zu of %zu simplices (every triangle with an "
              "enclosing radius above half its longest edge)\n",
              literal, simplices);
  return {bad == 0 && bad_db == 0,
          fmt("60 unit-diameter clouds in R^2/R^3, %zu simplices: Rips <= Cech <= sqrt(2d/(d+1)) Rips violated %zu "
              "times; d_B(Cech, Rips) max %.4f, %zu above sqrt(2d/(d+1)) (slack %.0e)",
              simplices, bad, worst_db, bad_db, kSlack)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"case study orderings", case_study},
      {"exact inverse from Euler invariants", [] { return exact_inverse(false); }},
      {"exact inverse on grown cover/closure collections", [] { return exact_inverse(true); }},
      {"rounding grid properties", rounding},
      {"bottleneck against brute force", bottleneck_oracle},
      {"Rips diagram stability", stability},
      {"distortion below the quasi-isometry bound", bound_consistency},
      {"covering probability bound", covering},
      {"Euler-Poincare", euler_poincare},
      {"loss gradient against finite differences", gradient},
      {"alignment reduces distortion", alignment},
      {"Cech and Rips containment", cech_rips},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!selected.empty() && !selected.count(id)) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s [%d] %s: %s\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
