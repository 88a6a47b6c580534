#include "iba/image.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace iba {

namespace {

uint8_t to_byte(double v) {
  v = std::clamp(v, 0.0, 1.0);
  return static_cast<uint8_t>(std::lround(v * 255.0));
}

}  // namespace

void write_pgm(const std::string& path, const Image& img) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("write_pgm: cannot open " + path);
  f << "P5\n" << img.width << " " << img.height << "\n255\n";
  std::vector<char> bytes(img.size());
  for (size_t i = 0; i < img.size(); ++i)
    bytes[i] = static_cast<char>(to_byte(img.data[i]));
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw std::runtime_error("write_pgm: write failed for " + path);
}

Image read_pgm(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("read_pgm: cannot open " + path);
  std::string magic;
  f >> magic;
  if (magic != "P5") throw std::runtime_error("read_pgm: not a P5 file: " + path);
  auto next_int = [&f, &path]() {
    // Skip whitespace and '#' comment lines.
    int c = f.get();
    while (c != EOF && (std::isspace(c) || c == '#')) {
      if (c == '#')
        while (c != EOF && c != '\n') c = f.get();
      c = f.get();
    }
    int v = 0;
    bool any = false;
    while (c != EOF && std::isdigit(c)) {
      v = v * 10 + (c - '0');
      any = true;
      c = f.get();
    }
    if (!any) throw std::runtime_error("read_pgm: malformed header in " + path);
    return v;
  };
  const int w = next_int();
  const int h = next_int();
  const int maxval = next_int();
  if (maxval != 255)
    throw std::runtime_error("read_pgm: unsupported maxval in " + path);
  Image img(h, w);
  std::vector<char> bytes(img.size());
  f.read(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (f.gcount() != static_cast<std::streamsize>(bytes.size()))
    throw std::runtime_error("read_pgm: truncated pixel data in " + path);
  for (size_t i = 0; i < img.size(); ++i)
    img.data[i] = static_cast<uint8_t>(bytes[i]) / 255.0;
  return img;
}

void write_ppm(const std::string& path, int height, int width,
               const std::vector<uint8_t>& rgb) {
  if (rgb.size() != static_cast<size_t>(3) * height * width)
    throw std::invalid_argument("write_ppm: buffer size mismatch");
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("write_ppm: cannot open " + path);
  f << "P6\n" << width << " " << height << "\n255\n";
  f.write(reinterpret_cast<const char*>(rgb.data()),
          static_cast<std::streamsize>(rgb.size()));
  if (!f) throw std::runtime_error("write_ppm: write failed for " + path);
}

Grid bilinear_resize(const Grid& src, int out_h, int out_w) {
  if (out_h <= 0 || out_w <= 0)
    throw std::invalid_argument("bilinear_resize: empty target");
  Grid dst(out_h, out_w);
  const double sy = out_h > 1 ? static_cast<double>(src.height - 1) / (out_h - 1) : 0.0;
  const double sx = out_w > 1 ? static_cast<double>(src.width - 1) / (out_w - 1) : 0.0;
  for (int y = 0; y < out_h; ++y) {
    const double fy = y * sy;
    const int y0 = std::min(static_cast<int>(fy), src.height - 1);
    const int y1 = std::min(y0 + 1, src.height - 1);
    const double wy = fy - y0;
    for (int x = 0; x < out_w; ++x) {
      const double fx = x * sx;
      const int x0 = std::min(static_cast<int>(fx), src.width - 1);
      const int x1 = std::min(x0 + 1, src.width - 1);
      const double wx = fx - x0;
      dst.at(y, x) = (1 - wy) * ((1 - wx) * src.at(y0, x0) + wx * src.at(y0, x1)) +
                     wy * ((1 - wx) * src.at(y1, x0) + wx * src.at(y1, x1));
    }
  }
  return dst;
}

Image gaussian_blur(const Image& img, double sigma) {
  if (sigma <= 0.0) return img;
  const int radius = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
  std::vector<double> kernel(2 * radius + 1);
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    kernel[i + radius] = std::exp(-0.5 * (i * i) / (sigma * sigma));
    sum += kernel[i + radius];
  }
  for (double& k : kernel) k /= sum;

  Image tmp(img.height, img.width);
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) {
      double acc = 0.0;
      for (int i = -radius; i <= radius; ++i) {
        const int xi = std::clamp(x + i, 0, img.width - 1);
        acc += kernel[i + radius] * img.at(y, xi);
      }
      tmp.at(y, x) = acc;
    }
  Image out(img.height, img.width);
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) {
      double acc = 0.0;
      for (int i = -radius; i <= radius; ++i) {
        const int yi = std::clamp(y + i, 0, img.height - 1);
        acc += kernel[i + radius] * tmp.at(yi, x);
      }
      out.at(y, x) = acc;
    }
  return out;
}

std::array<uint8_t, 3> viridis(double t) {
  static constexpr uint8_t stops[16][3] = {
      {68, 1, 84},    {72, 26, 108},  {71, 47, 125},  {65, 68, 135},
      {57, 86, 140},  {49, 104, 142}, {42, 120, 142}, {35, 136, 142},
      {31, 152, 139}, {34, 168, 132}, {53, 183, 121}, {84, 197, 104},
      {122, 209, 81}, {165, 219, 54}, {210, 226, 27}, {253, 231, 37}};
  t = std::clamp(t, 0.0, 1.0);
  const double pos = t * 15.0;
  const int i0 = std::min(static_cast<int>(pos), 14);
  const double w = pos - i0;
  std::array<uint8_t, 3> out{};
  for (int c = 0; c < 3; ++c)
    out[c] = static_cast<uint8_t>(
        std::lround((1 - w) * stops[i0][c] + w * stops[i0 + 1][c]));
  return out;
}

std::vector<uint8_t> render_overlay(const Image& base, const Grid& heat,
                                    double alpha) {
  if (!base.same_shape(heat))
    throw std::invalid_argument("render_overlay: shape mismatch");
  double lo = heat.data[0], hi = heat.data[0];
  for (double v : heat.data) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double span = hi > lo ? hi - lo : 1.0;
  std::vector<uint8_t> rgb(base.size() * 3);
  for (size_t i = 0; i < base.size(); ++i) {
    const double g = std::clamp(base.data[i], 0.0, 1.0);
    const auto color = viridis((heat.data[i] - lo) / span);
    for (int c = 0; c < 3; ++c) {
      const double mixed = (1.0 - alpha) * g * 255.0 + alpha * color[c];
      rgb[3 * i + c] = static_cast<uint8_t>(std::lround(std::clamp(mixed, 0.0, 255.0)));
    }
  }
  return rgb;
}

}  // namespace iba
