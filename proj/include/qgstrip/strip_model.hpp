#pragma once

#include <string>
#include <vector>

#include "qgstrip/vertex_coupling.hpp"

namespace qgstrip {

// Edge families. Vertical edges are g (and h on the brick lattice, where
// each left vertical line is split in two by a trivial mid vertex),
// horizontal edges are f, slanted edges are e.
enum class EdgeFamily { G, H, F, E };

char family_letter(EdgeFamily f);

// One edge of the period cell, identified with the interval (0, length).
struct EdgeSpec {
  int id = -1;
  double length = 0.0;
  EdgeFamily family = EdgeFamily::G;
  int column = 0;  // position across the strip, 1-based
};

enum class EdgeEnd { Start, Finish };  // Start: x = 0, Finish: x = length

// One edge endpoint as seen from a vertex. bloch_power m means the
// wavefunction at this endpoint belongs to the cell m periods away along
// the strip and carries the Floquet factor e^{i m theta}.
struct EndpointRef {
  int edge = -1;
  EdgeEnd end = EdgeEnd::Start;
  int bloch_power = 0;
};

// Vertex record. For coupled vertices the endpoint order is the cyclic
// coupling order (it defines the preferred orientation and is fixed by the
// builder). kirchhoff marks the trivial degree-2 vertex: continuity of the
// value and of the derivative through the vertex.
struct VertexSpec {
  int id = -1;
  std::vector<EndpointRef> endpoints;
  bool kirchhoff = false;
  CouplingMatrix coupling;  // unset for kirchhoff vertices

  int degree() const { return static_cast<int>(endpoints.size()); }
};

enum class LatticeKind { Rectangular, Brick };

// Immutable description of one Floquet period cell of a lattice strip.
// Each edge carries two unknowns, the amplitudes (a, b) of
// psi(x) = a e^{-ikx} + b e^{ikx}; unknown 2*id is a, 2*id + 1 is b.
struct StripModel {
  std::string name;
  LatticeKind kind = LatticeKind::Rectangular;
  int cells = 0;
  double l1 = 0.0, l2 = 0.0, l3 = 0.0;  // l3 unused for rectangular strips
  std::vector<EdgeSpec> edges;
  std::vector<VertexSpec> vertices;

  int unknowns() const { return 2 * static_cast<int>(edges.size()); }
  std::vector<double> distinct_lengths() const;
  // Id of the unique (family, column) edge, or -1 when absent.
  int edge_id(EdgeFamily family, int column) const;
};

// Rectangular-lattice strip, N cells across. The cell holds N horizontal
// edges f_1..f_N (length l1) and N+1 vertical edges g_1..g_{N+1} (length
// l2); the top end of each g edge couples into the cell below, factor
// e^{-i theta}. Boundary vertices have degree 3, interior degree 4.
StripModel build_rectangular(int cells, double l1, double l2);

// Brick-lattice strip, N cells across. Vertical edges g_j over h_j (length
// l2 each, trivial vertex in between on the left line of each column),
// horizontal edges f_j (length l1), slanted edges e_j (length l3). All
// vertices except the left-boundary one have odd degree (3 or 5); the left
// boundary vertex has degree 4.
StripModel build_brick(int cells, double l1, double l2, double l3);

struct ValidationReport {
  bool ok = false;
  std::string message;  // first violation when not ok
};

// Checks endpoint cover (every (edge, end) pair referenced exactly once),
// the degree sum identity, and coupling/degree agreement.
ValidationReport validate(const StripModel& model);

// Structured-text serialization of edges, vertices, coupling orders and
// Bloch powers; used for golden tests and debugging.
std::string dump(const StripModel& model);

}  // namespace qgstrip
