#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace qgstrip {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Relative singular-value cutoff for rank decisions. Secular matrices in
// the scanned windows have isolated roots, so a fairly tight cutoff is safe.
inline constexpr double kRankTol = 1e-8;

// Matrix product with an explicit shape check.
CMatrix mat_mul(const CMatrix& a, const CMatrix& b);

// Rotates v by a global phase so its largest-magnitude entry is real and
// positive. Vectors defined only up to a phase become reproducible.
CVector fix_phase(CVector v);

struct SmallestSingularResult {
  double sigma_min = 0.0;
  CVector right_vector;  // unit norm, phase-fixed
};

// Smallest singular value of a square matrix with a corresponding right
// singular vector.
SmallestSingularResult smallest_singular(const CMatrix& m);

// All singular values, nonincreasing.
Eigen::VectorXd singular_values(const CMatrix& m);

// Orthonormal basis of the span of right singular vectors with
// sigma <= tol * sigma_max. May be empty.
std::vector<CVector> null_space(const CMatrix& m, double tol = kRankTol);

// Solves m x = rhs. Throws SingularMatrixError when m is singular to
// tolerance.
CVector solve(const CMatrix& m, const CVector& rhs);

// sin of the largest principal angle between the spans of two orthonormal
// vector sets. The sin formulation stays accurate for tiny angles where
// acos(|<u,v>|) saturates at sqrt(eps).
double max_principal_angle_sin(const std::vector<CVector>& a,
                               const std::vector<CVector>& b);

}  // namespace qgstrip
