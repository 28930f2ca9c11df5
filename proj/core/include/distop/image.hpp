#pragma once

#include "distop/persistence.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace distop {

/// Grid layout in birth-persistence coordinates. Rows index persistence,
/// columns index birth; kernels are evaluated at pixel centers.
struct ImageConfig {
  std::size_t width = 20;
  std::size_t height = 20;
  double birth_min = 0.0, birth_max = 1.0;
  double persistence_min = 0.0, persistence_max = 1.0;
  double sigma = 0.05;

  /// Bounding box of the finite points of `degree` across a batch, with
  /// persistence measured from 0; sigma is `sigma_fraction` of the
  /// persistence range.
  static ImageConfig fit(std::span<const PersistenceDiagram> diagrams, int degree,
                         std::size_t width = 20, std::size_t height = 20,
                         double sigma_fraction = 0.05);

  friend bool operator==(const ImageConfig&, const ImageConfig&) = default;
};

struct PersistenceImage {
  ImageConfig config;
  std::vector<double> pixels;  // height x width, row-major
  std::size_t dropped_essential = 0;

  double at(std::size_t row, std::size_t col) const { return pixels[row * config.width + col]; }
};

/// Sum of persistence-weighted isotropic Gaussians, one per finite point.
PersistenceImage persistence_image(const PersistenceDiagram& diagram, int degree,
                                   const ImageConfig& cfg);

/// Pixelwise mean of identically configured images.
PersistenceImage average_images(std::span<const PersistenceImage> images);

/// Pixelwise L2 distance between identically configured images.
double image_l2_distance(const PersistenceImage& a, const PersistenceImage& b);

}  // namespace distop
