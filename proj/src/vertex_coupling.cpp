#include "qgstrip/vertex_coupling.hpp"

#include <string>

#include "qgstrip/errors.hpp"

namespace qgstrip {

CouplingMatrix cyclic_matrix(int degree) {
  if (degree < 2)
    throw DomainError("cyclic_matrix: degree must be at least 2, got " +
                      std::to_string(degree));
  CMatrix u = CMatrix::Zero(degree, degree);
  for (int i = 0; i < degree; ++i) u(i, (i + 1) % degree) = 1.0;
  return {degree, std::move(u)};
}

ScatteringMatrix scattering(const CouplingMatrix& u, double k) {
  if (!(k > 0.0))
    throw DomainError("scattering: momentum k must be positive, got " +
                      std::to_string(k));
  const int d = u.degree;
  const CMatrix eye = CMatrix::Identity(d, d);
  const CMatrix pencil = (u.matrix - eye) - k * (u.matrix + eye);
  Eigen::FullPivLU<CMatrix> lu(pencil);
  if (!lu.isInvertible())
    throw SingularMatrixError("scattering: singular vertex pencil at k = " +
                              std::to_string(k));
  ScatteringMatrix s;
  s.degree = d;
  s.k = k;
  s.eta = (1.0 - k) / (1.0 + k);
  s.matrix = -lu.solve((u.matrix - eye) + k * (u.matrix + eye));
  return s;
}

Eigen::MatrixXd asymptotic_transmission_probabilities(const CouplingMatrix& u,
                                                      double k) {
  return scattering(u, k).matrix.cwiseAbs2();
}

}  // namespace qgstrip
