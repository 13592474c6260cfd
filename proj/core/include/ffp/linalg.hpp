#pragma once

#include <Eigen/Dense>
#include <complex>

#include "ffp/tolerances.hpp"

namespace ffp {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Dense complex linear algebra for small ambient dimensions (<= ~32).
// All functions are pure; validation failures throw ffp::validation_error.

double frobenius_norm(const ComplexMatrix& a);
double spectral_norm(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);

// Entrywise (Schur) product. Shapes must agree.
ComplexMatrix hadamard_product(const ComplexMatrix& a, const ComplexMatrix& b);
RealMatrix hadamard_product(const RealMatrix& a, const RealMatrix& b);

// ||H - H*||_sp <= rel_tol * (1 + ||H||_sp)
bool is_hermitian(const ComplexMatrix& h, double rel_tol = 1e-12);

struct EigenDecomposition {
  RealVector eigenvalues;      // sorted non-increasing
  ComplexMatrix eigenvectors;  // unitary; column k pairs with eigenvalues(k)
};

// Hermitian eigendecomposition with deterministic ordering and vector phases
// (eigenvalues non-increasing, first component of each eigenvector above
// 1e-8 in modulus made real positive).
EigenDecomposition eigh(const ComplexMatrix& h);

// Eigenvalues only, sorted non-increasing.
RealVector eigenvalues_desc(const ComplexMatrix& h);

// P = U U* for an n x d block U with orthonormal columns.
ComplexMatrix projector_from_basis(const ComplexMatrix& u,
                                   double tol = kDefaultTolerances.structural);

// A B - B A. Anti-Hermitian whenever A and B are Hermitian.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

// exp(t X) for anti-Hermitian X, computed through the eigendecomposition of
// the Hermitian matrix -iX. Result is unitary.
ComplexMatrix exp_antihermitian(const ComplexMatrix& x, double t,
                                double tol = kDefaultTolerances.structural);

// QR re-orthonormalization of a full-column-rank block, with deterministic
// column phases (the R factor's diagonal made real positive).
ComplexMatrix orthonormalize(const ComplexMatrix& u);

struct PsdSolveResult {
  ComplexVector solution;  // least-norm solution of G x = b on the range of G
  bool in_range;           // residual <= residual_rel_tol * ||b||
  double residual;
};

// Least-norm solve for Hermitian PSD G via its eigendecomposition, with an
// explicit range-membership decision.
PsdSolveResult solve_hermitian_psd(const ComplexMatrix& g, const ComplexVector& b,
                                   double rank_rel_tol = 1e-12,
                                   double residual_rel_tol = 1e-9);

struct RealPsdSolveResult {
  RealVector solution;
  bool in_range;
  double residual;
};

RealPsdSolveResult solve_symmetric_psd(const RealMatrix& g, const RealVector& b,
                                       double rank_rel_tol = 1e-12,
                                       double residual_rel_tol = 1e-9);

}  // namespace ffp
