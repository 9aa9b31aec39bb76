#pragma once

#include <Eigen/Dense>

#include "qgstrip/linalg.hpp"

namespace qgstrip {

// Unitary matrix of the preferred-orientation vertex condition
//   (U - I) Psi + i (U + I) Psi' = 0,
// where Psi collects boundary values and Psi' outward derivatives at the
// vertex. U is the single-cycle permutation: row i carries its 1 in
// column i+1 (mod d). The coupling is not invariant under time reversal;
// at momentum k = 1 an incoming wave is fully transmitted to the next edge
// of the cycle.
struct CouplingMatrix {
  int degree = 0;
  CMatrix matrix;
};

// Builds the d x d single-cycle permutation. Requires d >= 2.
CouplingMatrix cyclic_matrix(int degree);

// Vertex scattering matrix at momentum k > 0: maps incoming plane-wave
// amplitudes to outgoing ones,
//
//   S(k) = -[(U - I) - k (U + I)]^{-1} [(U - I) + k (U + I)],
//
// obtained by inserting psi = a e^{-ikx} + b e^{ikx} (edge coordinate x = 0
// at the vertex, so Psi = a + b and Psi' = ik(b - a)) into the vertex
// condition. Unitary for every real k > 0; S(1) = U exactly. For odd
// degree, U has no eigenvalue -1 and S(k) -> I as k -> infinity; for even
// degree the -1 eigenspace keeps S(k) away from I.
struct ScatteringMatrix {
  int degree = 0;
  double k = 0.0;
  double eta = 0.0;  // (1 - k) / (1 + k)
  CMatrix matrix;
};

ScatteringMatrix scattering(const CouplingMatrix& u, double k);

// Entrywise transmission/reflection probabilities |S(k)_ij|^2. Rows sum to
// one by unitarity; for even degree all entries approach 1/d at large k.
Eigen::MatrixXd asymptotic_transmission_probabilities(const CouplingMatrix& u,
                                                      double k);

}  // namespace qgstrip
