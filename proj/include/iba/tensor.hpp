#ifndef IBA_TENSOR_HPP_
#define IBA_TENSOR_HPP_

#include <cassert>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace iba {

// Dense row-major C x H x W tensor of doubles. Channel-first layout so a
// 2-D map is simply channels == 1.
struct Tensor {
  int channels = 0;
  int height = 0;
  int width = 0;
  std::vector<double> data;

  Tensor() = default;
  Tensor(int c, int h, int w, double fill = 0.0)
      : channels(c), height(h), width(w),
        data(static_cast<size_t>(c) * h * w, fill) {
    if (c <= 0 || h <= 0 || w <= 0)
      throw std::invalid_argument("Tensor: dimensions must be positive");
  }

  size_t size() const { return data.size(); }

  double& at(int c, int y, int x) {
    return data[(static_cast<size_t>(c) * height + y) * width + x];
  }
  double at(int c, int y, int x) const {
    return data[(static_cast<size_t>(c) * height + y) * width + x];
  }

  bool same_shape(const Tensor& o) const {
    return channels == o.channels && height == o.height && width == o.width;
  }

  void fill(double v) { std::fill(data.begin(), data.end(), v); }

  bool all_finite() const {
    for (double v : data)
      if (!std::isfinite(v)) return false;
    return true;
  }
};

inline Tensor zeros_like(const Tensor& t) {
  return Tensor(t.channels, t.height, t.width, 0.0);
}

// 2-D spatial grid (H x W). Used for images, saliency maps and masks.
struct Grid {
  int height = 0;
  int width = 0;
  std::vector<double> data;

  Grid() = default;
  Grid(int h, int w, double fill = 0.0)
      : height(h), width(w), data(static_cast<size_t>(h) * w, fill) {
    if (h <= 0 || w <= 0)
      throw std::invalid_argument("Grid: dimensions must be positive");
  }

  size_t size() const { return data.size(); }

  double& at(int y, int x) { return data[static_cast<size_t>(y) * width + x]; }
  double at(int y, int x) const {
    return data[static_cast<size_t>(y) * width + x];
  }

  bool same_shape(const Grid& o) const {
    return height == o.height && width == o.width;
  }

  bool all_finite() const {
    for (double v : data)
      if (!std::isfinite(v)) return false;
    return true;
  }
};

}  // namespace iba

#endif  // IBA_TENSOR_HPP_
