#ifndef FLUOROSEG_VERSION_HPP_
#define FLUOROSEG_VERSION_HPP_

namespace fluoroseg {

// Bumped on any change that affects numerical results or file formats.
// Grid cells key their result cache on this string.
inline constexpr const char* kCodeVersion = "1.0.0";

// Schema version written into config files, manifests and checkpoints.
inline constexpr int kSchemaVersion = 1;

}  // namespace fluoroseg

#endif  // FLUOROSEG_VERSION_HPP_
