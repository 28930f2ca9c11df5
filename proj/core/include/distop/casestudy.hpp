#pragma once

#include "distop/image.hpp"
#include "distop/persistence.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace distop {

struct CaseStudyConfig {
  std::size_t points = 500;
  double circle_fraction = 0.9;  // share of the noisy cloud placed on the circle
  std::size_t k = 10;
  std::size_t subsets = 1000;
  int skeleton_dim = 2;
  std::uint64_t seed = 7;
  std::size_t image_size = 20;
  double sigma_fraction = 0.10;  // two pixels on the 20 x 20 grid

  /// 200 points, 300 subsets.
  static CaseStudyConfig desk_scale();
};

struct CaseStudyResult {
  static constexpr std::array<const char*, 3> names{"circle", "disc", "noisy_circle"};
  std::array<PointCloud, 3> clouds;
  std::array<PersistenceDiagram, 3> full_diagrams;  // degree 1 of the whole cloud
  std::array<PersistenceImage, 3> average_images;   // degree 1, shared configuration
  ImageConfig image_config;
  std::array<std::array<double, 3>, 3> bottleneck{};  // full diagrams, degree 1
  std::array<std::array<double, 3>, 3> image_l2{};    // averaged images
};

/// Circle, disc and noisy circle clouds, their full degree-1 diagrams, and
/// averaged persistence images of distributed persistence over random
/// k-subsets.
CaseStudyResult run_case_study(const CaseStudyConfig& cfg);

}  // namespace distop
