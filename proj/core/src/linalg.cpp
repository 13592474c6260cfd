#include "ffp/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <string>

#include "ffp/errors.hpp"

namespace ffp {

namespace {

void require_square(const ComplexMatrix& a, const char* what) {
  if (a.rows() != a.cols())
    throw validation_error(std::string(what) + ": matrix is not square");
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw validation_error(std::string(what) + ": shape mismatch");
}

// Deterministic phase convention: the first component whose modulus exceeds
// 1e-8 is made real positive. Columns are unit vectors, so such a component
// always exists for n <= 1e16.
void fix_column_phases(ComplexMatrix& v) {
  for (Eigen::Index j = 0; j < v.cols(); ++j) {
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
      const double m = std::abs(v(i, j));
      if (m > 1e-8) {
        v.col(j) *= std::conj(v(i, j)) / m;
        break;
      }
    }
  }
}

}  // namespace

double frobenius_norm(const ComplexMatrix& a) { return a.norm(); }

double spectral_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues()(0);
}

Complex trace(const ComplexMatrix& a) { return a.trace(); }

ComplexMatrix hadamard_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "hadamard_product");
  return a.cwiseProduct(b);
}

RealMatrix hadamard_product(const RealMatrix& a, const RealMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw validation_error("hadamard_product: shape mismatch");
  return a.cwiseProduct(b);
}

bool is_hermitian(const ComplexMatrix& h, double rel_tol) {
  if (h.rows() != h.cols()) return false;
  return spectral_norm(h - h.adjoint()) <= rel_tol * (1.0 + spectral_norm(h));
}

EigenDecomposition eigh(const ComplexMatrix& h) {
  require_square(h, "eigh");
  if (!is_hermitian(h))
    throw validation_error("eigh: input is not Hermitian within tolerance");
  const ComplexMatrix sym = (h + h.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigh: eigensolver did not converge");

  const Eigen::Index n = h.rows();
  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.eigenvalues(i) = solver.eigenvalues()(n - 1 - i);
    out.eigenvectors.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  fix_column_phases(out.eigenvectors);
  return out;
}

RealVector eigenvalues_desc(const ComplexMatrix& h) {
  require_square(h, "eigenvalues_desc");
  if (!is_hermitian(h))
    throw validation_error("eigenvalues_desc: input is not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver((h + h.adjoint()) / 2.0,
                                                      Eigen::EigenvaluesOnly);
  return solver.eigenvalues().reverse();
}

ComplexMatrix projector_from_basis(const ComplexMatrix& u, double tol) {
  if (u.cols() < 1 || u.rows() < u.cols())
    throw validation_error("projector_from_basis: need an n x d block with 1 <= d <= n");
  const ComplexMatrix gram = u.adjoint() * u;
  const double defect =
      (gram - ComplexMatrix::Identity(u.cols(), u.cols())).norm();
  if (defect > tol)
    throw validation_error("projector_from_basis: columns are not orthonormal (defect " +
                           std::to_string(defect) + ")");
  ComplexMatrix p = u * u.adjoint();
  return (p + p.adjoint()) / 2.0;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "commutator");
  require_square(b, "commutator");
  if (a.rows() != b.rows())
    throw validation_error("commutator: dimension mismatch");
  return a * b - b * a;
}

ComplexMatrix exp_antihermitian(const ComplexMatrix& x, double t, double tol) {
  require_square(x, "exp_antihermitian");
  const double defect = spectral_norm(x + x.adjoint());
  if (defect > tol * (1.0 + spectral_norm(x)))
    throw validation_error("exp_antihermitian: input is not anti-Hermitian (defect " +
                           std::to_string(defect) + ")");
  // -iX is Hermitian; exp(tX) = V diag(exp(i t lambda)) V*.
  const ComplexMatrix herm = Complex(0.0, -1.0) * (x - x.adjoint()) / 2.0;
  const EigenDecomposition ed = eigh(herm);
  const Eigen::Index n = x.rows();
  ComplexVector phases(n);
  for (Eigen::Index i = 0; i < n; ++i)
    phases(i) = std::exp(Complex(0.0, t * ed.eigenvalues(i)));
  return ed.eigenvectors * phases.asDiagonal() * ed.eigenvectors.adjoint();
}

ComplexMatrix orthonormalize(const ComplexMatrix& u) {
  if (u.cols() < 1 || u.rows() < u.cols())
    throw validation_error("orthonormalize: need an n x d block with 1 <= d <= n");
  Eigen::HouseholderQR<ComplexMatrix> qr(u);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(u.rows(), u.cols());
  const ComplexMatrix r = qr.matrixQR().topLeftCorner(u.cols(), u.cols());
  for (Eigen::Index j = 0; j < u.cols(); ++j) {
    const double m = std::abs(r(j, j));
    if (m < 1e-12 * (1.0 + u.norm()))
      throw validation_error("orthonormalize: block is rank deficient");
    q.col(j) *= r(j, j) / m;
  }
  return q;
}

PsdSolveResult solve_hermitian_psd(const ComplexMatrix& g, const ComplexVector& b,
                                   double rank_rel_tol, double residual_rel_tol) {
  require_square(g, "solve_hermitian_psd");
  if (g.rows() != b.size())
    throw validation_error("solve_hermitian_psd: shape mismatch");
  const EigenDecomposition ed = eigh(g);
  const double lam_max = ed.eigenvalues.size() > 0 ? std::max(0.0, ed.eigenvalues(0)) : 0.0;
  const double cut = rank_rel_tol * std::max(lam_max, 1.0e-300);

  ComplexVector y = ComplexVector::Zero(b.size());
  for (Eigen::Index i = 0; i < ed.eigenvalues.size(); ++i) {
    if (ed.eigenvalues(i) > cut) {
      const ComplexVector v = ed.eigenvectors.col(i);
      y += (v.dot(b) / ed.eigenvalues(i)) * v;
    }
  }
  PsdSolveResult out;
  out.solution = y;
  out.residual = (g * y - b).norm();
  out.in_range = out.residual <= residual_rel_tol * b.norm();
  if (b.norm() == 0.0) out.in_range = true;
  return out;
}

RealPsdSolveResult solve_symmetric_psd(const RealMatrix& g, const RealVector& b,
                                       double rank_rel_tol, double residual_rel_tol) {
  const PsdSolveResult c = solve_hermitian_psd(g.cast<Complex>(), b.cast<Complex>(),
                                               rank_rel_tol, residual_rel_tol);
  RealPsdSolveResult out;
  out.solution = c.solution.real();
  out.in_range = c.in_range;
  out.residual = c.residual;
  return out;
}

}  // namespace ffp
