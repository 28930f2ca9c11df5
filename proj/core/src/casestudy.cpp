#include "distop/casestudy.hpp"

#include "distop/datasets.hpp"
#include "distop/distributed.hpp"
#include "distop/metrics.hpp"

#include <cmath>

namespace distop {

CaseStudyConfig CaseStudyConfig::desk_scale() {
  CaseStudyConfig cfg;
  cfg.points = 200;
  cfg.subsets = 300;
  return cfg;
}

CaseStudyResult run_case_study(const CaseStudyConfig& cfg) {
  if (cfg.points < cfg.k || cfg.k < 2) throw DomainError("case study needs 2 <= k <= points");
  if (!(cfg.circle_fraction >= 0.0 && cfg.circle_fraction <= 1.0))
    throw DomainError("circle fraction must lie in [0, 1]");

  CaseStudyResult out;
  const auto on_circle = static_cast<std::size_t>(std::lround(cfg.circle_fraction * static_cast<double>(cfg.points)));
  out.clouds[0] = circle_points(cfg.points);
  out.clouds[1] = disc_points(cfg.points, cfg.seed);
  out.clouds[2] = noisy_circle_points(on_circle, cfg.points - on_circle, cfg.seed + 1);

  std::array<std::vector<PersistenceDiagram>, 3> subset_diagrams;
  std::vector<PersistenceDiagram> batch;
  for (std::size_t c = 0; c < 3; ++c) {
    out.full_diagrams[c] = rips_persistence(pairwise_distances(out.clouds[c]), 1).diagram;
    const SubsetCollection subsets = sample_subsets(cfg.points, cfg.k, cfg.subsets, cfg.seed + 10 + c);
    const DistributedInvariant inv =
        compute_distributed(out.clouds[c], subsets, InvariantKind::RP, cfg.skeleton_dim);
    for (const auto& [s, value] : inv.entries) {
      subset_diagrams[c].push_back(std::get<PersistenceDiagram>(value));
      batch.push_back(subset_diagrams[c].back());
    }
  }

  out.image_config = ImageConfig::fit(batch, 1, cfg.image_size, cfg.image_size, cfg.sigma_fraction);
  for (std::size_t c = 0; c < 3; ++c) {
    std::vector<PersistenceImage> images;
    images.reserve(subset_diagrams[c].size());
    for (const auto& d : subset_diagrams[c]) images.push_back(persistence_image(d, 1, out.image_config));
    out.average_images[c] = average_images(images);
  }

  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      out.bottleneck[a][b] = bottleneck(out.full_diagrams[a], out.full_diagrams[b], 1);
      out.image_l2[a][b] = image_l2_distance(out.average_images[a], out.average_images[b]);
    }
  return out;
}

}  // namespace distop
