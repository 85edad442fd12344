#ifndef FLUOROSEG_CORE_TYPES_HPP_
#define FLUOROSEG_CORE_TYPES_HPP_

#include <cstdint>
#include <vector>

namespace fluoroseg {

// Number of marker classes (background excluded). Kept as the single config
// constant; modules take the class count from their configs and default to
// this value rather than hard-coding it.
inline constexpr int kMarkerClasses = 5;
inline constexpr int kNumLayers = kMarkerClasses + 1;  // background + markers

// Pixel grids are row-major with (row = y, col = x). Coordinates are (x, y)
// in pixel units with (0, 0) at the top-left pixel center.

// Raw single-channel image in detector units (non-negative).
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<double> pixels;  // size width*height

  double& at(int x, int y) { return pixels[static_cast<size_t>(y) * width + x]; }
  double at(int x, int y) const { return pixels[static_cast<size_t>(y) * width + x]; }
  static GrayImage zeros(int w, int h) { return {w, h, std::vector<double>(static_cast<size_t>(w) * h, 0.0)}; }
};

// Intensity-normalized image, every value in [0, 1].
struct NormalizedImage {
  int width = 0;
  int height = 0;
  std::vector<double> pixels;

  double& at(int x, int y) { return pixels[static_cast<size_t>(y) * width + x]; }
  double at(int x, int y) const { return pixels[static_cast<size_t>(y) * width + x]; }
  static NormalizedImage zeros(int w, int h) { return {w, h, std::vector<double>(static_cast<size_t>(w) * h, 0.0)}; }
};

// Compact per-pixel class ids in {0 (background), 1..N}.
struct LabelMap {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> ids;

  uint8_t& at(int x, int y) { return ids[static_cast<size_t>(y) * width + x]; }
  uint8_t at(int x, int y) const { return ids[static_cast<size_t>(y) * width + x]; }
  static LabelMap zeros(int w, int h) { return {w, h, std::vector<uint8_t>(static_cast<size_t>(w) * h, 0)}; }
};

// One-hot ground truth, N+1 binary layers; layers sum to 1 at every pixel.
struct LabelCube {
  int width = 0;
  int height = 0;
  int layers = 0;
  std::vector<uint8_t> data;  // layer-major: [layer][y][x]

  uint8_t& at(int layer, int x, int y) {
    return data[(static_cast<size_t>(layer) * height + y) * width + x];
  }
  uint8_t at(int layer, int x, int y) const {
    return data[(static_cast<size_t>(layer) * height + y) * width + x];
  }
};

namespace detail {
template <class Tag>
struct BasicCube {
  int width = 0;
  int height = 0;
  int layers = 0;
  std::vector<double> data;  // layer-major: [layer][y][x]

  double& at(int layer, int x, int y) {
    return data[(static_cast<size_t>(layer) * height + y) * width + x];
  }
  double at(int layer, int x, int y) const {
    return data[(static_cast<size_t>(layer) * height + y) * width + x];
  }
  static BasicCube zeros(int w, int h, int n) {
    return {w, h, n, std::vector<double>(static_cast<size_t>(w) * h * n, 0.0)};
  }
  size_t plane_size() const { return static_cast<size_t>(width) * height; }
};
}  // namespace detail

// Unnormalized per-pixel class scores produced by the network.
using LogitCube = detail::BasicCube<struct LogitTag>;
// Per-pixel class distribution: values in [0, 1], layers sum to 1.
using ProbabilityCube = detail::BasicCube<struct ProbabilityTag>;

// Argmax partition of a ProbabilityCube; ties break toward the smaller id.
struct SegMap {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> ids;

  uint8_t& at(int x, int y) { return ids[static_cast<size_t>(y) * width + x]; }
  uint8_t at(int x, int y) const { return ids[static_cast<size_t>(y) * width + x]; }
};

enum class NormalizationMode {
  // (I - min(I)) / max(I): output max may be below 1 when min > 0.
  paper,
  // Conventional (I - min(I)) / (max(I) - min(I)).
  minmax,
};

// Normalizes a raw image into [0, 1]. Throws value_error on an empty or
// negative-valued image, and on an all-zero image (degenerate: max = 0).
// A constant positive image maps to all zeros in both modes.
NormalizedImage normalize_image(const GrayImage& img,
                                NormalizationMode mode = NormalizationMode::paper);

// One-hot encoding of a label map into n_layers = N+1 binary layers.
// Throws value_error if any id is outside [0, n_layers-1].
LabelCube encode_onehot(const LabelMap& m, int n_layers = kNumLayers);

// Inverse of encode_onehot. Throws value_error if the cube is not one-hot.
LabelMap decode_labelmap(const LabelCube& c);

// Validation-mode checks. The throwing variants raise value_error with a
// pixel-precise message.
bool is_onehot(const LabelCube& c);
void validate_onehot(const LabelCube& c);
// Every value in [0, 1] and per-pixel layer sums within `tol` of 1.
bool is_probability_cube(const ProbabilityCube& p, double tol = 1e-5);
void validate_probability_cube(const ProbabilityCube& p, double tol = 1e-5);

// Per-pixel argmax with ties broken toward the smaller class id.
SegMap argmax_segmap(const ProbabilityCube& p);

}  // namespace fluoroseg

#endif  // FLUOROSEG_CORE_TYPES_HPP_
