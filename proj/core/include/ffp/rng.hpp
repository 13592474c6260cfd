#pragma once

#include <cstdint>

#include "ffp/linalg.hpp"

namespace ffp {

// Deterministic random source. splitmix64 core with a hand-rolled Box-Muller
// transform, so streams do not depend on the standard library implementation.
// All randomness in the library flows through instances of this class.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // Independent deterministic substream; does not advance this generator.
  Rng split(std::uint64_t stream) const;

  std::uint64_t next_u64();
  double uniform();  // [0, 1)
  double gaussian();

  RealVector gaussian_vector(Eigen::Index n);
  RealMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols);
  ComplexMatrix gaussian_complex(Eigen::Index rows, Eigen::Index cols);

  // n x d block with orthonormal columns, Haar-distributed via QR of a
  // complex Gaussian matrix.
  ComplexMatrix haar_basis(int n, int d);

 private:
  std::uint64_t state_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace ffp
