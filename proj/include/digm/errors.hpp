// Exception types shared across the solver library.
#pragma once

#include <stdexcept>
#include <string>

namespace digm {

// An element of the polygonal curve collapsed below the representable length
// threshold; carries the offending element index.
class DegenerateMeshError : public std::runtime_error {
 public:
  DegenerateMeshError(int element, const std::string& what)
      : std::runtime_error(what), element_(element) {}
  int element() const { return element_; }

 private:
  int element_;
};

// The wall gradient vanished (or is undefined) where it was needed.
class SingularBoundaryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Newton projection onto a wall did not converge.
class ProjectionFailedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A linear system pivot fell below the singularity threshold.
class SingularSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace digm
