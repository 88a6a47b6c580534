#ifndef IBA_IMAGE_HPP_
#define IBA_IMAGE_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "iba/tensor.hpp"

namespace iba {

// Grayscale images are Grids with values in [0, 1].
using Image = Grid;

// Binary PGM (P5, maxval 255). Values are clamped to [0,1] and quantized.
void write_pgm(const std::string& path, const Image& img);
Image read_pgm(const std::string& path);

// Binary PPM (P6). rgb has 3*H*W bytes, interleaved.
void write_ppm(const std::string& path, int height, int width,
               const std::vector<uint8_t>& rgb);

// Bilinear resize with corner alignment: corner samples map onto corner
// samples exactly.
Grid bilinear_resize(const Grid& src, int out_h, int out_w);

// Separable Gaussian blur, replicated borders, kernel truncated at 3 sigma.
Image gaussian_blur(const Image& img, double sigma);

// Viridis lookup for t in [0,1].
std::array<uint8_t, 3> viridis(double t);

// Blends a min-max normalized heat map over a grayscale image with the
// given alpha. Returns interleaved RGB bytes.
std::vector<uint8_t> render_overlay(const Image& base, const Grid& heat,
                                    double alpha = 0.5);

}  // namespace iba

#endif  // IBA_IMAGE_HPP_
