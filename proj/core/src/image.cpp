#include "distop/image.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace distop {

ImageConfig ImageConfig::fit(std::span<const PersistenceDiagram> diagrams, int degree,
                             std::size_t width, std::size_t height, double sigma_fraction) {
  if (width == 0 || height == 0) throw DomainError("image grid must be non-empty");
  if (!(sigma_fraction > 0.0)) throw DomainError("sigma fraction must be positive");
  double bmin = kInfinity, bmax = -kInfinity, pmax = 0.0;
  for (const auto& d : diagrams)
    for (const auto& p : d.points(degree)) {
      if (p.essential()) continue;
      bmin = std::min(bmin, p.birth);
      bmax = std::max(bmax, p.birth);
      pmax = std::max(pmax, p.persistence());
    }
  ImageConfig cfg;
  cfg.width = width;
  cfg.height = height;
  if (bmin > bmax) {
    bmin = 0.0;
    bmax = 1.0;
  }
  if (bmax - bmin <= 0.0) {
    bmin -= 0.5;
    bmax += 0.5;
  }
  if (pmax <= 0.0) pmax = 1.0;
  cfg.birth_min = bmin;
  cfg.birth_max = bmax;
  cfg.persistence_min = 0.0;
  cfg.persistence_max = pmax;
  cfg.sigma = sigma_fraction * pmax;
  return cfg;
}

PersistenceImage persistence_image(const PersistenceDiagram& diagram, int degree,
                                   const ImageConfig& cfg) {
  if (!(cfg.sigma > 0.0)) throw DomainError("image bandwidth must be positive");
  if (cfg.width == 0 || cfg.height == 0) throw DomainError("image grid must be non-empty");
  PersistenceImage image;
  image.config = cfg;
  image.pixels.assign(cfg.width * cfg.height, 0.0);

  const double dx = (cfg.birth_max - cfg.birth_min) / static_cast<double>(cfg.width);
  const double dy = (cfg.persistence_max - cfg.persistence_min) / static_cast<double>(cfg.height);
  const double norm = 1.0 / (2.0 * std::numbers::pi * cfg.sigma * cfg.sigma);
  const double inv_two_var = 1.0 / (2.0 * cfg.sigma * cfg.sigma);

  for (const auto& p : diagram.points(degree)) {
    if (p.essential()) {
      ++image.dropped_essential;
      continue;
    }
    const double pers = p.persistence();
    for (std::size_t row = 0; row < cfg.height; ++row) {
      const double y = cfg.persistence_min + (static_cast<double>(row) + 0.5) * dy;
      for (std::size_t col = 0; col < cfg.width; ++col) {
        const double x = cfg.birth_min + (static_cast<double>(col) + 0.5) * dx;
        const double r2 = (x - p.birth) * (x - p.birth) + (y - pers) * (y - pers);
        image.pixels[row * cfg.width + col] += pers * norm * std::exp(-r2 * inv_two_var);
      }
    }
  }
  return image;
}

PersistenceImage average_images(std::span<const PersistenceImage> images) {
  if (images.empty()) throw DomainError("cannot average an empty list of images");
  PersistenceImage out;
  out.config = images.front().config;
  out.pixels.assign(images.front().pixels.size(), 0.0);
  for (const auto& img : images) {
    if (!(img.config == out.config)) throw DomainError("images have different grid configurations");
    for (std::size_t i = 0; i < out.pixels.size(); ++i) out.pixels[i] += img.pixels[i];
    out.dropped_essential += img.dropped_essential;
  }
  const double scale = 1.0 / static_cast<double>(images.size());
  for (double& v : out.pixels) v *= scale;
  return out;
}

double image_l2_distance(const PersistenceImage& a, const PersistenceImage& b) {
  if (!(a.config == b.config)) throw DomainError("images have different grid configurations");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.pixels.size(); ++i) {
    const double d = a.pixels[i] - b.pixels[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

}  // namespace distop
