#ifndef FLUOROSEG_MANIFEST_HPP_
#define FLUOROSEG_MANIFEST_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace fluoroseg {

struct CenterGT {
  int class_id = 0;
  double x_px = 0.0;
  double y_px = 0.0;
};

struct FrameEntry {
  std::string frame_id;
  std::string image_path;  // relative to the manifest directory
  std::string label_path;
  int setup_id = 0;
  double view_angle_deg = 0.0;
  std::string split;  // "train" | "test"
  std::vector<CenterGT> gt_centers;
  // Provenance, set on augmented frames only.
  std::string source_id;
  double aug_theta_deg = 0.0;
  std::string aug_flip;  // "" | "none" | "h" | "v"
};

struct DatasetManifest {
  int schema_version = 1;
  uint64_t seed = 0;
  std::string config_hash;
  double pixel_pitch_mm = 0.8;
  int width = 0;
  int height = 0;
  // True when image files store already-normalized intensities (augmented
  // datasets); loaders then skip re-normalization.
  bool normalized = false;
  std::vector<FrameEntry> frames;

  std::vector<const FrameEntry*> split_frames(const std::string& split) const;
  size_t count_split(const std::string& split) const;
};

void save_manifest(const DatasetManifest& m, const std::string& path);
DatasetManifest load_manifest(const std::string& path);

// FNV-1a over the canonical serialization; used for grid-cell cache keys.
uint64_t fnv1a64(const std::string& bytes);
std::string manifest_hash(const DatasetManifest& m);

}  // namespace fluoroseg

#endif  // FLUOROSEG_MANIFEST_HPP_
