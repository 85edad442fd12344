#include "fluoroseg/manifest.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "fluoroseg/errors.hpp"
#include "fluoroseg/version.hpp"

namespace fluoroseg {

using nlohmann::json;

std::vector<const FrameEntry*> DatasetManifest::split_frames(const std::string& split) const {
  std::vector<const FrameEntry*> out;
  for (const auto& f : frames) {
    if (f.split == split) out.push_back(&f);
  }
  return out;
}

size_t DatasetManifest::count_split(const std::string& split) const {
  size_t n = 0;
  for (const auto& f : frames) {
    if (f.split == split) ++n;
  }
  return n;
}

namespace {

json to_json(const DatasetManifest& m) {
  json j;
  j["schema_version"] = m.schema_version;
  j["seed"] = m.seed;
  j["config_hash"] = m.config_hash;
  j["pixel_pitch_mm"] = m.pixel_pitch_mm;
  j["width"] = m.width;
  j["height"] = m.height;
  j["normalized"] = m.normalized;
  j["frames"] = json::array();
  for (const auto& f : m.frames) {
    json jf;
    jf["frame_id"] = f.frame_id;
    jf["image_path"] = f.image_path;
    jf["label_path"] = f.label_path;
    jf["setup_id"] = f.setup_id;
    jf["view_angle_deg"] = f.view_angle_deg;
    jf["split"] = f.split;
    json centers = json::array();
    for (const auto& c : f.gt_centers) {
      centers.push_back({{"class_id", c.class_id}, {"x_px", c.x_px}, {"y_px", c.y_px}});
    }
    jf["gt_centers"] = centers;
    if (!f.source_id.empty()) {
      jf["source_id"] = f.source_id;
      jf["aug_theta_deg"] = f.aug_theta_deg;
      jf["aug_flip"] = f.aug_flip;
    }
    j["frames"].push_back(std::move(jf));
  }
  return j;
}

}  // namespace

void save_manifest(const DatasetManifest& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write manifest: " + path);
  out << to_json(m).dump(2) << "\n";
}

DatasetManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot read manifest: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw io_error("malformed manifest " + path + ": " + e.what());
  }
  DatasetManifest m;
  m.schema_version = j.value("schema_version", 1);
  m.seed = j.value("seed", uint64_t{0});
  m.config_hash = j.value("config_hash", "");
  m.pixel_pitch_mm = j.value("pixel_pitch_mm", 0.8);
  m.width = j.value("width", 0);
  m.height = j.value("height", 0);
  m.normalized = j.value("normalized", false);
  for (const auto& jf : j.value("frames", json::array())) {
    FrameEntry f;
    f.frame_id = jf.value("frame_id", "");
    f.image_path = jf.value("image_path", "");
    f.label_path = jf.value("label_path", "");
    f.setup_id = jf.value("setup_id", 0);
    f.view_angle_deg = jf.value("view_angle_deg", 0.0);
    f.split = jf.value("split", "");
    for (const auto& jc : jf.value("gt_centers", json::array())) {
      f.gt_centers.push_back({jc.value("class_id", 0), jc.value("x_px", 0.0), jc.value("y_px", 0.0)});
    }
    f.source_id = jf.value("source_id", "");
    f.aug_theta_deg = jf.value("aug_theta_deg", 0.0);
    f.aug_flip = jf.value("aug_flip", "");
    m.frames.push_back(std::move(f));
  }
  return m;
}

uint64_t fnv1a64(const std::string& bytes) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string manifest_hash(const DatasetManifest& m) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(to_json(m).dump());
  return os.str();
}

}  // namespace fluoroseg
