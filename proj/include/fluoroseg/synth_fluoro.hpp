#ifndef FLUOROSEG_SYNTH_FLUORO_HPP_
#define FLUOROSEG_SYNTH_FLUORO_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "fluoroseg/core_types.hpp"
#include "fluoroseg/manifest.hpp"

namespace fluoroseg {

enum class MarkerShape { circle, sphere, tube, cross, triangle };

// Physical marker description. Dimensions in millimetres; a negative value
// means "not applicable" for that shape.
struct MarkerSpec {
  int class_id = 0;
  MarkerShape shape = MarkerShape::circle;
  double hole_radius_mm = -1.0;
  double thickness_mm = 0.8;
  double length_mm = -1.0;
};

// The five default marker specs, class ids 1..5 in the fixed sequencing
// circle, sphere, tube, cross, triangle.
const std::vector<MarkerSpec>& default_marker_specs();

// Analytic footprint of the marker silhouette at scale 1, in mm^2.
double marker_area_mm2(const MarkerSpec& spec);

struct NoiseConfig {
  double gaussian_sigma = 0.02;  // relative to intensity_scale
  double poisson_scale = 1.0;    // sigma = poisson_scale * sqrt(intensity)
};

struct BackgroundConfig {
  double gradient_amplitude = 0.20;
  double mesh_amplitude = 0.08;
};

struct SceneConfig {
  int width = 512;
  int height = 512;
  int n_setups = 14;
  std::vector<double> view_angles_deg;  // default: 13 angles, -90..90 step 15
  double pixel_pitch_mm = 0.8;
  int stent_segments = 1;  // marker instances of each class per frame
  NoiseConfig noise;
  BackgroundConfig background;
  uint64_t seed = 0;
  // Marker appearance.
  double contrast = 0.55;        // attenuation of the marker vs local background
  double contrast_jitter = 0.1;  // relative per-marker jitter
  double min_separation_px = 20.0;
  bool allow_overlap = false;
  double foreshorten_floor = 0.35;
  double intensity_scale = 3000.0;  // raw detector units of a unit background
  // Per-class pixel-fraction targets of the frame area. The renderer scales
  // each marker so its footprint meets the target (floored at
  // min_marker_px pixels when positive).
  std::vector<double> fraction_targets = {3e-4, 1e-4, 2e-4, 3e-4, 3e-4};
  double min_marker_px = 0.0;
  // Dataset sizing: dropped_setups whole setups are removed, then
  // dropped_frames single frames are removed from the train setups.
  int dropped_setups = 1;
  int dropped_frames = 11;
  int test_setups = 6;

  static std::vector<double> default_view_angles();
  const std::vector<double>& angles() const;
  // Canonical serialization used for config hashing.
  std::string canonical_string() const;
};

struct Pose {
  double x = 0.0;
  double y = 0.0;
  double rot_deg = 0.0;
  double foreshorten = 1.0;  // in (0, 1], compresses one axis
};

// Binary stamp of one rendered marker, positioned inside a frame.
struct Stamp {
  int x0 = 0, y0 = 0;  // top-left of the stamp box in frame coordinates
  int w = 0, h = 0;
  std::vector<uint8_t> mask;  // row-major, 1 = marker pixel
  double centroid_x = 0.0, centroid_y = 0.0;  // frame coordinates
  int pixel_count = 0;

  bool on(int fx, int fy) const {
    if (fx < x0 || fy < y0 || fx >= x0 + w || fy >= y0 + h) return false;
    return mask[static_cast<size_t>(fy - y0) * w + (fx - x0)] != 0;
  }
};

// Rasterizes one marker at the given pose. Physical dimensions are taken
// from the spec and converted with `pitch_mm_per_px`; the silhouette is
// supersampled 4x4 and thresholded at `coverage_threshold`. Throws
// placement_error when the stamp lies fully outside the frame, and
// value_error when the foreshortening factor is outside (0, 1].
Stamp render_marker(const MarkerSpec& spec, const Pose& pose, double pitch_mm_per_px,
                    int frame_w, int frame_h, double coverage_threshold = 0.5);

struct FrameRecord {
  GrayImage image;
  LabelMap labels;
  std::vector<CenterGT> gt_centers;  // exact centroids of labeled pixels
  int setup_id = 0;
  double view_angle_deg = 0.0;
};

// Composes one deterministic frame for (cfg, setup_id, angle). The frame
// sub-seed derives from (cfg.seed, setup_id, angle) so generation order does
// not matter. Throws config_error when the fraction targets are infeasible
// at the configured pitch/frame size.
FrameRecord compose_frame(const SceneConfig& cfg, int setup_id, double angle_deg);

// Explicit split assignment by setup. Leaving train_setups empty assigns the
// complement of test_setups. Throws config_error when a setup appears in
// both lists.
struct SplitRule {
  std::vector<int> test_setups;
  std::vector<int> train_setups;
};

struct GeneratedDataset {
  DatasetManifest manifest;
  std::vector<FrameRecord> frames;  // parallel to manifest.frames
};

// In-memory generation (desk-scale datasets and tests).
GeneratedDataset generate_frames(const SceneConfig& cfg, const SplitRule* rule = nullptr);

// Streams frames to out_dir/{images,labels} and writes out_dir/manifest.json.
DatasetManifest generate_dataset(const SceneConfig& cfg, const std::string& out_dir,
                                 const SplitRule* rule = nullptr);

}  // namespace fluoroseg

#endif  // FLUOROSEG_SYNTH_FLUORO_HPP_
