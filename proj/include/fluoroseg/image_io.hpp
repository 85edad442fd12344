#ifndef FLUOROSEG_IMAGE_IO_HPP_
#define FLUOROSEG_IMAGE_IO_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "fluoroseg/core_types.hpp"

namespace fluoroseg {

// Grayscale PNG I/O. Raw images are stored 16-bit; label maps 8-bit with
// values 0..N. All functions throw io_error on failure.

// Writes pixels rounded and clamped to [0, 65535].
void write_gray16_png(const std::string& path, const GrayImage& img);

// Writes round(v * 65535); values are expected in [0, 1].
void write_norm16_png(const std::string& path, const NormalizedImage& img);

void write_label_png(const std::string& path, const LabelMap& labels);

// Reads an 8- or 16-bit grayscale PNG; pixel values are returned as stored.
GrayImage read_gray_png(const std::string& path);

// Reads a PNG written by write_norm16_png (or any gray PNG) and rescales to
// [0, 1] by the bit depth.
NormalizedImage read_norm_png(const std::string& path);

LabelMap read_label_png(const std::string& path);

// 8-bit RGB output for overlays and plots. `rgb` is row-major, 3 bytes/pixel.
void write_rgb_png(const std::string& path, int width, int height,
                   const std::vector<uint8_t>& rgb);

}  // namespace fluoroseg

#endif  // FLUOROSEG_IMAGE_IO_HPP_
