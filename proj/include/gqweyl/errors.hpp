#ifndef GQWEYL_ERRORS_HPP
#define GQWEYL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gqw {

// Input pair cannot be normalized onto Sigma^6 (|zp^dag zs| below threshold).
struct DegenerateSpinor : std::runtime_error {
  explicit DegenerateSpinor(const std::string& what) : std::runtime_error(what) {}
};

// embed_sl2 argument has |det a - 1| above tolerance.
struct NotUnimodular : std::runtime_error {
  explicit NotUnimodular(const std::string& what) : std::runtime_error(what) {}
};

// Vector violates the linearized Sigma^6 constraint at the base point.
struct NonTangentVector : std::runtime_error {
  explicit NonTangentVector(const std::string& what) : std::runtime_error(what) {}
};

// Leaf-to-section solve is ill-conditioned; resample the input point.
struct SingularLeafSolve : std::runtime_error {
  explicit SingularLeafSolve(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gqw

#endif
