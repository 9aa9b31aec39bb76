#include "qgstrip/linalg.hpp"

#include <Eigen/SVD>

#include "qgstrip/errors.hpp"

namespace qgstrip {

namespace {

void require_finite(const CMatrix& m, const char* who) {
  if (!m.allFinite())
    throw NumericError(std::string(who) + ": non-finite matrix entries");
}

void require_square(const CMatrix& m, const char* who) {
  if (m.rows() != m.cols())
    throw ShapeError(std::string(who) + ": matrix must be square, got " +
                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

Eigen::JacobiSVD<CMatrix> full_svd(const CMatrix& m, const char* who) {
  require_square(m, who);
  require_finite(m, who);
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success)
    throw NumericError(std::string(who) + ": SVD did not converge");
  return svd;
}

}  // namespace

CMatrix mat_mul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows())
    throw ShapeError("mat_mul: inner dimensions disagree, " +
                     std::to_string(a.cols()) + " vs " + std::to_string(b.rows()));
  return a * b;
}

CVector fix_phase(CVector v) {
  if (v.size() == 0) return v;
  Eigen::Index imax = 0;
  v.cwiseAbs().maxCoeff(&imax);
  const double mag = std::abs(v(imax));
  if (mag > 0.0) v *= std::conj(v(imax)) / mag;
  return v;
}

SmallestSingularResult smallest_singular(const CMatrix& m) {
  auto svd = full_svd(m, "smallest_singular");
  const auto& sv = svd.singularValues();
  SmallestSingularResult res;
  res.sigma_min = sv(sv.size() - 1);
  res.right_vector = fix_phase(svd.matrixV().col(sv.size() - 1));
  return res;
}

Eigen::VectorXd singular_values(const CMatrix& m) {
  require_square(m, "singular_values");
  require_finite(m, "singular_values");
  Eigen::JacobiSVD<CMatrix> svd(m);
  if (svd.info() != Eigen::Success)
    throw NumericError("singular_values: SVD did not converge");
  return svd.singularValues();
}

std::vector<CVector> null_space(const CMatrix& m, double tol) {
  if (tol <= 0.0) throw DomainError("null_space: tol must be positive");
  auto svd = full_svd(m, "null_space");
  const auto& sv = svd.singularValues();
  const double cutoff = tol * sv(0);
  std::vector<CVector> basis;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) <= cutoff) basis.push_back(fix_phase(svd.matrixV().col(i)));
  }
  return basis;
}

CVector solve(const CMatrix& m, const CVector& rhs) {
  require_square(m, "solve");
  require_finite(m, "solve");
  if (rhs.size() != m.rows())
    throw ShapeError("solve: rhs length " + std::to_string(rhs.size()) +
                     " does not match matrix size " + std::to_string(m.rows()));
  Eigen::FullPivLU<CMatrix> lu(m);
  if (!lu.isInvertible())
    throw SingularMatrixError("solve: matrix singular to working tolerance");
  return lu.solve(rhs);
}

double max_principal_angle_sin(const std::vector<CVector>& a,
                               const std::vector<CVector>& b) {
  if (a.empty() || a.size() != b.size())
    throw ShapeError("max_principal_angle_sin: subspace dimensions disagree");
  const Eigen::Index n = a[0].size();
  CMatrix ua(n, static_cast<Eigen::Index>(a.size()));
  CMatrix ub(n, static_cast<Eigen::Index>(b.size()));
  for (size_t i = 0; i < a.size(); ++i) ua.col(static_cast<Eigen::Index>(i)) = a[i];
  for (size_t i = 0; i < b.size(); ++i) ub.col(static_cast<Eigen::Index>(i)) = b[i];
  // Residual of ua after projecting onto span(ub); its largest singular
  // value is sin of the largest principal angle.
  CMatrix resid = ua - ub * (ub.adjoint() * ua);
  Eigen::JacobiSVD<CMatrix> svd(resid);
  return svd.singularValues()(0);
}

}  // namespace qgstrip
