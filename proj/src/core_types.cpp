#include "fluoroseg/core_types.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fluoroseg/errors.hpp"

namespace fluoroseg {

NormalizedImage normalize_image(const GrayImage& img, NormalizationMode mode) {
  if (img.width < 1 || img.height < 1 || img.pixels.empty()) {
    throw value_error("normalize_image: image has no pixels");
  }
  double lo = img.pixels[0], hi = img.pixels[0];
  for (double v : img.pixels) {
    if (v < 0.0) throw value_error("normalize_image: negative intensity " + std::to_string(v));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (hi <= 0.0) throw value_error("normalize_image: all-zero image (max = 0)");

  NormalizedImage out{img.width, img.height, std::vector<double>(img.pixels.size())};
  const double denom = (mode == NormalizationMode::paper) ? hi : (hi - lo);
  if (denom <= 0.0) {
    // Constant image under minmax: defined as all zeros.
    std::fill(out.pixels.begin(), out.pixels.end(), 0.0);
    return out;
  }
  for (size_t i = 0; i < img.pixels.size(); ++i) {
    out.pixels[i] = (img.pixels[i] - lo) / denom;
  }
  return out;
}

LabelCube encode_onehot(const LabelMap& m, int n_layers) {
  LabelCube c;
  c.width = m.width;
  c.height = m.height;
  c.layers = n_layers;
  c.data.assign(static_cast<size_t>(m.width) * m.height * n_layers, 0);
  const size_t plane = static_cast<size_t>(m.width) * m.height;
  for (size_t i = 0; i < m.ids.size(); ++i) {
    const int id = m.ids[i];
    if (id >= n_layers) {
      throw value_error("encode_onehot: class id " + std::to_string(id) +
                        " outside [0, " + std::to_string(n_layers - 1) + "]");
    }
    c.data[static_cast<size_t>(id) * plane + i] = 1;
  }
  return c;
}

LabelMap decode_labelmap(const LabelCube& c) {
  validate_onehot(c);
  LabelMap m;
  m.width = c.width;
  m.height = c.height;
  m.ids.assign(static_cast<size_t>(c.width) * c.height, 0);
  const size_t plane = static_cast<size_t>(c.width) * c.height;
  for (int n = 1; n < c.layers; ++n) {
    const uint8_t* layer = c.data.data() + static_cast<size_t>(n) * plane;
    for (size_t i = 0; i < plane; ++i) {
      if (layer[i]) m.ids[i] = static_cast<uint8_t>(n);
    }
  }
  return m;
}

bool is_onehot(const LabelCube& c) {
  const size_t plane = static_cast<size_t>(c.width) * c.height;
  for (size_t i = 0; i < plane; ++i) {
    int sum = 0;
    for (int n = 0; n < c.layers; ++n) {
      const uint8_t v = c.data[static_cast<size_t>(n) * plane + i];
      if (v > 1) return false;
      sum += v;
    }
    if (sum != 1) return false;
  }
  return true;
}

void validate_onehot(const LabelCube& c) {
  const size_t plane = static_cast<size_t>(c.width) * c.height;
  for (size_t i = 0; i < plane; ++i) {
    int sum = 0;
    for (int n = 0; n < c.layers; ++n) {
      const uint8_t v = c.data[static_cast<size_t>(n) * plane + i];
      if (v > 1) throw value_error("label cube: non-binary value at pixel " + std::to_string(i));
      sum += v;
    }
    if (sum != 1) {
      throw value_error("label cube: layers sum to " + std::to_string(sum) +
                        " at pixel " + std::to_string(i) + " (expected 1)");
    }
  }
}

bool is_probability_cube(const ProbabilityCube& p, double tol) {
  const size_t plane = p.plane_size();
  for (size_t i = 0; i < plane; ++i) {
    double sum = 0.0;
    for (int n = 0; n < p.layers; ++n) {
      const double v = p.data[static_cast<size_t>(n) * plane + i];
      if (!(v >= 0.0 && v <= 1.0)) return false;
      sum += v;
    }
    if (std::abs(sum - 1.0) > tol) return false;
  }
  return true;
}

void validate_probability_cube(const ProbabilityCube& p, double tol) {
  if (!is_probability_cube(p, tol)) {
    throw value_error("probability cube: values outside [0,1] or per-pixel sums off 1");
  }
}

SegMap argmax_segmap(const ProbabilityCube& p) {
  SegMap s;
  s.width = p.width;
  s.height = p.height;
  s.ids.assign(p.plane_size(), 0);
  const size_t plane = p.plane_size();
  for (size_t i = 0; i < plane; ++i) {
    double best = p.data[i];
    int arg = 0;
    for (int n = 1; n < p.layers; ++n) {
      const double v = p.data[static_cast<size_t>(n) * plane + i];
      if (v > best) {  // strict: ties keep the smaller id
        best = v;
        arg = n;
      }
    }
    s.ids[i] = static_cast<uint8_t>(arg);
  }
  return s;
}

}  // namespace fluoroseg
