#pragma once

#include "qgstrip/strip_model.hpp"

namespace qgstrip {

// One solved spectral point of a Bloch fiber. coeffs holds the plane-wave
// amplitudes (a_e, b_e) per edge id, normalized so the L2 norm of the
// eigenfunction over the period cell equals one; the global phase makes
// the largest-magnitude coefficient real positive.
struct BlochMode {
  double k = 0.0;
  double theta = 0.0;  // quasimomentum in (-pi, pi]
  CVector coeffs;      // length 2 * edges
  double residual = 0.0;  // ||M v|| / sigma_max at the raw unit null vector
  int multiplicity = 1;
};

// Secular matrix in vertex-condition form: d rows per coupled vertex,
//   (U - I) Psi + i (U + I) Psi',
// two continuity rows per trivial vertex. Per endpoint, with edge length l:
//   Start:  value a + b,                 outward derivative ik(b - a)
//   Finish: value a e^{-ikl} + b e^{ikl}, outward derivative
//           ik(a e^{-ikl} - b e^{ikl})
// and every contribution carries the endpoint's factor e^{i m theta}.
// The matrix is square of size 2 * edges for any strip model.
CMatrix assemble(const StripModel& model, double k, double theta);

// Same null space, encoded through vertex scattering:
//   S(k) (incoming amplitudes) - (outgoing amplitudes) = 0
// per vertex, where the incoming amplitude at a Start endpoint is a and at
// a Finish endpoint b e^{ikl}, the outgoing b resp. a e^{-ikl}, again with
// Floquet factors. Trivial vertices scatter through: S = [[0,1],[1,0]].
CMatrix assemble_via_scattering(const StripModel& model, double k, double theta);

// Which of the two algebraically equivalent encodings to use.
enum class SecularForm { Direct, Scattering };

CMatrix assemble_form(const StripModel& model, double k, double theta,
                      SecularForm form);

// Closed form of int_0^l |a e^{-ikx} + b e^{ikx}|^2 dx.
double edge_norm_sq(Complex a, Complex b, double k, double l);

// Extracts every null vector of M(k, theta) with sigma <= tol * sigma_max
// as a cell-normalized BlochMode (multiplicity = null-space dimension).
// Throws NoModeError reporting sigma_min when the null space is empty.
std::vector<BlochMode> extract_modes(const StripModel& model, double k,
                                     double theta, double tol = kRankTol);

}  // namespace qgstrip
