#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidsep {

// Library error carrying a short machine-readable code alongside the human
// message. Codes in use: "parse", "params", "singular",
// "not-a-representation", "catalog", "io".
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Text could not be parsed; position is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse",
              message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Parameter outside its admissible set (excluded a, zero f, bad condition or
// branch, degenerate search box, ...).
class ParamError : public Error {
 public:
  explicit ParamError(const std::string& message) : Error("params", message) {}
};

class SingularMatrixError : public Error {
 public:
  SingularMatrixError(double det_magnitude, double threshold)
      : Error("singular", "matrix is numerically singular: |det| = " +
                              std::to_string(det_magnitude) +
                              " below threshold " + std::to_string(threshold)),
        det_magnitude_(det_magnitude),
        threshold_(threshold) {}

  double det_magnitude() const noexcept { return det_magnitude_; }
  double threshold() const noexcept { return threshold_; }

 private:
  double det_magnitude_;
  double threshold_;
};

// A candidate block quadruple failed validation. `which` names the failed
// check ("equation (1)", "equation (2)", "braid relation", "image",
// "sigma2"); residual is relative to the largest entry magnitude involved.
class NotARepresentationError : public Error {
 public:
  NotARepresentationError(std::string which, double residual)
      : Error("not-a-representation",
              which + " violated, relative residual " +
                  std::to_string(residual)),
        which_(std::move(which)),
        residual_(residual) {}

  explicit NotARepresentationError(const std::string& message)
      : Error("not-a-representation", message) {}

  const std::string& which() const noexcept { return which_; }
  double residual() const noexcept { return residual_; }

 private:
  std::string which_;
  double residual_ = 0.0;
};

class CatalogError : public Error {
 public:
  explicit CatalogError(const std::string& message)
      : Error("catalog", message) {}
};

}  // namespace braidsep
