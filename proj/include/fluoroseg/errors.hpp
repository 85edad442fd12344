#ifndef FLUOROSEG_ERRORS_HPP_
#define FLUOROSEG_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace fluoroseg {

// Invalid values inside otherwise well-formed data (bad class id, negative
// intensity, degenerate image, non-one-hot cube, ...).
class value_error : public std::invalid_argument {
 public:
  explicit value_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Mismatched tensor/image dimensions.
class shape_error : public std::invalid_argument {
 public:
  explicit shape_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Inconsistent or infeasible configuration (split overlap, fraction targets
// that cannot fit the frame, input size not divisible by 2^n_blocks, ...).
class config_error : public std::invalid_argument {
 public:
  explicit config_error(const std::string& msg) : std::invalid_argument(msg) {}
};

class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Marker stamp placed fully outside the frame.
class placement_error : public std::runtime_error {
 public:
  explicit placement_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fluoroseg

#endif  // FLUOROSEG_ERRORS_HPP_
