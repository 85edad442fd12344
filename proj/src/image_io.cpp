#include "fluoroseg/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>

#include "fluoroseg/errors.hpp"

namespace fluoroseg {

namespace {

struct FileCloser {
  void operator()(FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<FILE, FileCloser>;

void write_gray_png_impl(const std::string& path, int width, int height,
                         int bit_depth, const std::vector<uint16_t>& pixels) {
  FilePtr fp(std::fopen(path.c_str(), "wb"));
  if (!fp) throw io_error("cannot open for writing: " + path);

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw io_error("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw io_error("png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw io_error("libpng error while writing " + path);
  }
  png_init_io(png, fp.get());
  png_set_IHDR(png, info, width, height, bit_depth, PNG_COLOR_TYPE_GRAY,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);

  std::vector<uint8_t> row(static_cast<size_t>(width) * (bit_depth == 16 ? 2 : 1));
  for (int y = 0; y < height; ++y) {
    if (bit_depth == 16) {
      for (int x = 0; x < width; ++x) {
        const uint16_t v = pixels[static_cast<size_t>(y) * width + x];
        row[2 * x] = static_cast<uint8_t>(v >> 8);  // network byte order
        row[2 * x + 1] = static_cast<uint8_t>(v & 0xff);
      }
    } else {
      for (int x = 0; x < width; ++x) {
        row[x] = static_cast<uint8_t>(pixels[static_cast<size_t>(y) * width + x]);
      }
    }
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

struct GrayPng {
  int width = 0, height = 0, bit_depth = 0;
  std::vector<uint16_t> pixels;
};

GrayPng read_gray_png_impl(const std::string& path) {
  FilePtr fp(std::fopen(path.c_str(), "rb"));
  if (!fp) throw io_error("cannot open for reading: " + path);

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw io_error("png_create_read_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw io_error("png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw io_error("libpng error while reading " + path);
  }
  png_init_io(png, fp.get());
  png_read_info(png, info);

  const int color_type = png_get_color_type(png, info);
  int bit_depth = png_get_bit_depth(png, info);
  if (color_type != PNG_COLOR_TYPE_GRAY) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw io_error("expected single-channel grayscale PNG: " + path);
  }
  if (bit_depth < 8) {
    png_set_expand_gray_1_2_4_to_8(png);
    bit_depth = 8;
  }
  png_read_update_info(png, info);

  GrayPng out;
  out.width = static_cast<int>(png_get_image_width(png, info));
  out.height = static_cast<int>(png_get_image_height(png, info));
  out.bit_depth = bit_depth;
  out.pixels.resize(static_cast<size_t>(out.width) * out.height);

  std::vector<uint8_t> row(static_cast<size_t>(out.width) * (bit_depth == 16 ? 2 : 1));
  for (int y = 0; y < out.height; ++y) {
    png_read_row(png, row.data(), nullptr);
    if (bit_depth == 16) {
      for (int x = 0; x < out.width; ++x) {
        out.pixels[static_cast<size_t>(y) * out.width + x] =
            static_cast<uint16_t>((row[2 * x] << 8) | row[2 * x + 1]);
      }
    } else {
      for (int x = 0; x < out.width; ++x) {
        out.pixels[static_cast<size_t>(y) * out.width + x] = row[x];
      }
    }
  }
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return out;
}

}  // namespace

void write_gray16_png(const std::string& path, const GrayImage& img) {
  std::vector<uint16_t> q(img.pixels.size());
  for (size_t i = 0; i < img.pixels.size(); ++i) {
    q[i] = static_cast<uint16_t>(std::lround(std::clamp(img.pixels[i], 0.0, 65535.0)));
  }
  write_gray_png_impl(path, img.width, img.height, 16, q);
}

void write_norm16_png(const std::string& path, const NormalizedImage& img) {
  std::vector<uint16_t> q(img.pixels.size());
  for (size_t i = 0; i < img.pixels.size(); ++i) {
    q[i] = static_cast<uint16_t>(std::lround(std::clamp(img.pixels[i], 0.0, 1.0) * 65535.0));
  }
  write_gray_png_impl(path, img.width, img.height, 16, q);
}

void write_label_png(const std::string& path, const LabelMap& labels) {
  std::vector<uint16_t> q(labels.ids.begin(), labels.ids.end());
  write_gray_png_impl(path, labels.width, labels.height, 8, q);
}

GrayImage read_gray_png(const std::string& path) {
  GrayPng p = read_gray_png_impl(path);
  GrayImage img{p.width, p.height, std::vector<double>(p.pixels.size())};
  for (size_t i = 0; i < p.pixels.size(); ++i) img.pixels[i] = p.pixels[i];
  return img;
}

NormalizedImage read_norm_png(const std::string& path) {
  GrayPng p = read_gray_png_impl(path);
  const double scale = (p.bit_depth == 16) ? 65535.0 : 255.0;
  NormalizedImage img{p.width, p.height, std::vector<double>(p.pixels.size())};
  for (size_t i = 0; i < p.pixels.size(); ++i) img.pixels[i] = p.pixels[i] / scale;
  return img;
}

LabelMap read_label_png(const std::string& path) {
  GrayPng p = read_gray_png_impl(path);
  LabelMap m{p.width, p.height, {}};
  m.ids.resize(p.pixels.size());
  for (size_t i = 0; i < p.pixels.size(); ++i) m.ids[i] = static_cast<uint8_t>(p.pixels[i]);
  return m;
}

void write_rgb_png(const std::string& path, int width, int height,
                   const std::vector<uint8_t>& rgb) {
  if (rgb.size() != static_cast<size_t>(width) * height * 3) {
    throw shape_error("write_rgb_png: buffer size does not match dimensions");
  }
  FilePtr fp(std::fopen(path.c_str(), "wb"));
  if (!fp) throw io_error("cannot open for writing: " + path);

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw io_error("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw io_error("png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw io_error("libpng error while writing " + path);
  }
  png_init_io(png, fp.get());
  png_set_IHDR(png, info, width, height, 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int y = 0; y < height; ++y) {
    png_write_row(png, const_cast<png_bytep>(rgb.data() + static_cast<size_t>(y) * width * 3));
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace fluoroseg
