#include "qgstrip/secular.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "qgstrip/errors.hpp"

namespace qgstrip {

namespace {

using RowVec = Eigen::RowVectorXcd;

// Adds one endpoint's value and outward-derivative entries over the (a, b)
// unknowns of its edge, including the Floquet factor.
void endpoint_rows(const StripModel& model, const EndpointRef& ep, double k,
                   double theta, RowVec& value, RowVec& derivative) {
  const double len = model.edges[ep.edge].length;
  const Complex bloch = std::exp(Complex(0.0, ep.bloch_power * theta));
  const Complex ik(0.0, k);
  const int ia = 2 * ep.edge, ib = ia + 1;
  if (ep.end == EdgeEnd::Start) {
    value(ia) += bloch;
    value(ib) += bloch;
    derivative(ia) += -ik * bloch;
    derivative(ib) += ik * bloch;
  } else {
    const Complex down = std::exp(Complex(0.0, -k * len));
    const Complex up = std::exp(Complex(0.0, k * len));
    value(ia) += down * bloch;
    value(ib) += up * bloch;
    derivative(ia) += ik * down * bloch;
    derivative(ib) += -ik * up * bloch;
  }
}

// Local incoming/outgoing amplitude entries at one endpoint: the incoming
// wave is the one travelling toward the vertex.
void endpoint_amplitudes(const StripModel& model, const EndpointRef& ep,
                         double k, double theta, RowVec& incoming,
                         RowVec& outgoing) {
  const double len = model.edges[ep.edge].length;
  const Complex bloch = std::exp(Complex(0.0, ep.bloch_power * theta));
  const int ia = 2 * ep.edge, ib = ia + 1;
  if (ep.end == EdgeEnd::Start) {
    incoming(ia) += bloch;
    outgoing(ib) += bloch;
  } else {
    incoming(ib) += std::exp(Complex(0.0, k * len)) * bloch;
    outgoing(ia) += std::exp(Complex(0.0, -k * len)) * bloch;
  }
}

void require_positive_k(double k, const char* who) {
  if (!(k > 0.0))
    throw DomainError(std::string(who) + ": momentum k must be positive");
}

}  // namespace

CMatrix assemble(const StripModel& model, double k, double theta) {
  require_positive_k(k, "assemble");
  const int n = model.unknowns();
  CMatrix m = CMatrix::Zero(n, n);
  int row = 0;
  for (const auto& v : model.vertices) {
    const int d = v.degree();
    CMatrix value = CMatrix::Zero(d, n);
    CMatrix derivative = CMatrix::Zero(d, n);
    for (int i = 0; i < d; ++i) {
      RowVec vr = value.row(i), dr = derivative.row(i);
      endpoint_rows(model, v.endpoints[i], k, theta, vr, dr);
      value.row(i) = vr;
      derivative.row(i) = dr;
    }
    if (v.kirchhoff) {
      // Continuity of the value and balance of outward derivatives.
      m.row(row) = value.row(0) - value.row(1);
      m.row(row + 1) = derivative.row(0) + derivative.row(1);
    } else {
      const CMatrix eye = CMatrix::Identity(d, d);
      m.block(row, 0, d, n) = (v.coupling.matrix - eye) * value +
                              Complex(0.0, 1.0) * (v.coupling.matrix + eye) * derivative;
    }
    row += d;
  }
  return m;
}

CMatrix assemble_via_scattering(const StripModel& model, double k, double theta) {
  require_positive_k(k, "assemble_via_scattering");
  const int n = model.unknowns();
  CMatrix m = CMatrix::Zero(n, n);

  std::map<int, CMatrix> s_by_degree;
  auto s_matrix = [&](int d) -> const CMatrix& {
    auto it = s_by_degree.find(d);
    if (it == s_by_degree.end())
      it = s_by_degree.emplace(d, scattering(cyclic_matrix(d), k).matrix).first;
    return it->second;
  };
  CMatrix s_through(2, 2);
  s_through << 0, 1, 1, 0;

  int row = 0;
  for (const auto& v : model.vertices) {
    const int d = v.degree();
    CMatrix incoming = CMatrix::Zero(d, n);
    CMatrix outgoing = CMatrix::Zero(d, n);
    for (int i = 0; i < d; ++i) {
      RowVec ir = incoming.row(i), orow = outgoing.row(i);
      endpoint_amplitudes(model, v.endpoints[i], k, theta, ir, orow);
      incoming.row(i) = ir;
      outgoing.row(i) = orow;
    }
    const CMatrix& s = v.kirchhoff ? s_through : s_matrix(d);
    m.block(row, 0, d, n) = s * incoming - outgoing;
    row += d;
  }
  return m;
}

CMatrix assemble_form(const StripModel& model, double k, double theta,
                      SecularForm form) {
  return form == SecularForm::Direct ? assemble(model, k, theta)
                                     : assemble_via_scattering(model, k, theta);
}

double edge_norm_sq(Complex a, Complex b, double k, double l) {
  if (!(k > 0.0) || !(l > 0.0))
    throw DomainError("edge_norm_sq: k and l must be positive");
  const Complex cross = a * std::conj(b) *
                        (1.0 - std::exp(Complex(0.0, -2.0 * k * l))) /
                        Complex(0.0, 2.0 * k);
  return (std::norm(a) + std::norm(b)) * l + 2.0 * cross.real();
}

std::vector<BlochMode> extract_modes(const StripModel& model, double k,
                                     double theta, double tol) {
  const CMatrix m = assemble(model, k, theta);
  const Eigen::VectorXd sv = singular_values(m);
  const double sigma_max = sv(0);
  auto basis = null_space(m, tol);
  if (basis.empty()) {
    std::ostringstream os;
    os << "extract_modes: no spectral point at k = " << k << ", theta = "
       << theta << " (sigma_min/sigma_max = " << sv(sv.size() - 1) / sigma_max
       << ", tol = " << tol << ")";
    throw NoModeError(os.str(), sv(sv.size() - 1) / sigma_max);
  }

  std::vector<BlochMode> modes;
  modes.reserve(basis.size());
  for (auto& v : basis) {
    BlochMode mode;
    mode.k = k;
    mode.theta = theta;
    mode.residual = (m * v).norm() / sigma_max;
    double total = 0.0;
    for (const auto& e : model.edges)
      total += edge_norm_sq(v(2 * e.id), v(2 * e.id + 1), k, e.length);
    mode.coeffs = fix_phase(v / std::sqrt(total));
    mode.multiplicity = static_cast<int>(basis.size());
    modes.push_back(std::move(mode));
  }
  return modes;
}

}  // namespace qgstrip
