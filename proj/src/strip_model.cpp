#include "qgstrip/strip_model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "qgstrip/errors.hpp"

namespace qgstrip {

char family_letter(EdgeFamily f) {
  switch (f) {
    case EdgeFamily::G: return 'g';
    case EdgeFamily::H: return 'h';
    case EdgeFamily::F: return 'f';
    case EdgeFamily::E: return 'e';
  }
  return '?';
}

std::vector<double> StripModel::distinct_lengths() const {
  std::vector<double> out;
  for (const auto& e : edges) {
    bool seen = false;
    for (double l : out)
      if (std::abs(l - e.length) < 1e-12) { seen = true; break; }
    if (!seen) out.push_back(e.length);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int StripModel::edge_id(EdgeFamily family, int column) const {
  for (const auto& e : edges)
    if (e.family == family && e.column == column) return e.id;
  return -1;
}

namespace {

void check_strip_args(int cells, double l1, double l2, double l3) {
  if (cells < 1)
    throw DomainError("strip builder: cell count must be at least 1, got " +
                      std::to_string(cells));
  if (!(l1 > 0.0) || !(l2 > 0.0) || !(l3 > 0.0))
    throw DomainError("strip builder: edge lengths must be positive");
}

int add_edge(StripModel& m, EdgeFamily family, int column, double length) {
  const int id = static_cast<int>(m.edges.size());
  m.edges.push_back({id, length, family, column});
  return id;
}

void add_cyclic_vertex(StripModel& m, std::vector<EndpointRef> endpoints) {
  VertexSpec v;
  v.id = static_cast<int>(m.vertices.size());
  v.coupling = cyclic_matrix(static_cast<int>(endpoints.size()));
  v.endpoints = std::move(endpoints);
  m.vertices.push_back(std::move(v));
}

void add_kirchhoff_vertex(StripModel& m, std::vector<EndpointRef> endpoints) {
  VertexSpec v;
  v.id = static_cast<int>(m.vertices.size());
  v.kirchhoff = true;
  v.endpoints = std::move(endpoints);
  m.vertices.push_back(std::move(v));
}

constexpr auto kStart = EdgeEnd::Start;
constexpr auto kFinish = EdgeEnd::Finish;

}  // namespace

StripModel build_rectangular(int cells, double l1, double l2) {
  check_strip_args(cells, l1, l2, 1.0);
  const int n = cells;
  StripModel m;
  m.name = "rect";
  m.kind = LatticeKind::Rectangular;
  m.cells = n;
  m.l1 = l1;
  m.l2 = l2;

  // Unknown ordering: family g first, then f, each in column order.
  std::vector<int> g(n + 2), f(n + 1);
  for (int j = 1; j <= n + 1; ++j) g[j] = add_edge(m, EdgeFamily::G, j, l2);
  for (int j = 1; j <= n; ++j) f[j] = add_edge(m, EdgeFamily::F, j, l1);

  // Left boundary: g_1 at both ends (the top end belongs to the cell
  // below, factor e^{-i theta}) and the first horizontal edge.
  add_cyclic_vertex(m, {{g[1], kStart, 0}, {g[1], kFinish, -1}, {f[1], kStart, 0}});
  // Interior columns.
  for (int j = 2; j <= n; ++j)
    add_cyclic_vertex(m, {{g[j], kStart, 0},
                          {f[j - 1], kFinish, 0},
                          {g[j], kFinish, -1},
                          {f[j], kStart, 0}});
  // Right boundary.
  add_cyclic_vertex(m, {{g[n + 1], kStart, 0},
                        {f[n], kFinish, 0},
                        {g[n + 1], kFinish, -1}});
  return m;
}

StripModel build_brick(int cells, double l1, double l2, double l3) {
  check_strip_args(cells, l1, l2, l3);
  const int n = cells;
  StripModel m;
  m.name = "brick";
  m.kind = LatticeKind::Brick;
  m.cells = n;
  m.l1 = l1;
  m.l2 = l2;
  m.l3 = l3;

  // Unknown ordering: families g, h, f, e, each in column order.
  std::vector<int> g(n + 2), h(n + 2), f(n + 1), e(n + 1);
  for (int j = 1; j <= n + 1; ++j) g[j] = add_edge(m, EdgeFamily::G, j, l2);
  for (int j = 1; j <= n + 1; ++j) h[j] = add_edge(m, EdgeFamily::H, j, l2);
  for (int j = 1; j <= n; ++j) f[j] = add_edge(m, EdgeFamily::F, j, l1);
  for (int j = 1; j <= n; ++j) e[j] = add_edge(m, EdgeFamily::E, j, l3);

  // Interior degree-5 vertices: incoming slant from the left column, then
  // the next column's vertical pair top, slant, horizontal, and the lower
  // vertical section of the cell above (factor e^{+i theta}).
  for (int j = 1; j <= n - 1; ++j)
    add_cyclic_vertex(m, {{e[j], kFinish, 0},
                          {g[j + 1], kStart, 0},
                          {e[j + 1], kStart, 0},
                          {f[j + 1], kStart, 0},
                          {h[j + 1], kFinish, +1}});
  // Degree-3 vertices at the lower-right end of each horizontal edge; the
  // vertical pair they meet belongs to the cell above.
  for (int j = 1; j <= n; ++j)
    add_cyclic_vertex(m, {{f[j], kFinish, 0},
                          {h[j + 1], kStart, +1},
                          {g[j + 1], kFinish, +1}});
  // Right boundary, degree 3.
  add_cyclic_vertex(m, {{h[n + 1], kFinish, +1},
                        {e[n], kFinish, 0},
                        {g[n + 1], kStart, 0}});
  // Left boundary, degree 4. Incident edges counter-clockwise by geometric
  // angle: h_1 of the cell above (up), g_1 (down), e_1 (slant down-right),
  // f_1 (right); same convention the odd-degree vertices above follow.
  add_cyclic_vertex(m, {{h[1], kFinish, +1},
                        {g[1], kStart, 0},
                        {e[1], kStart, 0},
                        {f[1], kStart, 0}});
  // Trivial mid vertex of the left vertical line.
  add_kirchhoff_vertex(m, {{g[1], kFinish, 0}, {h[1], kStart, 0}});
  return m;
}

ValidationReport validate(const StripModel& model) {
  const int ne = static_cast<int>(model.edges.size());
  for (int i = 0; i < ne; ++i) {
    if (model.edges[i].id != i)
      return {false, "edge ids not contiguous at index " + std::to_string(i)};
    if (!(model.edges[i].length > 0.0))
      return {false, "edge " + std::to_string(i) + " has nonpositive length"};
  }

  std::set<std::pair<int, int>> seen;
  int degree_sum = 0;
  for (const auto& v : model.vertices) {
    degree_sum += v.degree();
    if (!v.kirchhoff && v.coupling.degree != v.degree())
      return {false, "vertex " + std::to_string(v.id) +
                         " coupling degree does not match endpoint count"};
    if (v.kirchhoff && v.degree() != 2)
      return {false, "vertex " + std::to_string(v.id) +
                         " marked trivial but degree is not 2"};
    for (const auto& ep : v.endpoints) {
      if (ep.edge < 0 || ep.edge >= ne)
        return {false, "vertex " + std::to_string(v.id) +
                           " references unknown edge " + std::to_string(ep.edge)};
      auto key = std::make_pair(ep.edge, ep.end == EdgeEnd::Start ? 0 : 1);
      if (!seen.insert(key).second) {
        std::ostringstream os;
        os << "endpoint (" << family_letter(model.edges[ep.edge].family)
           << model.edges[ep.edge].column << ", "
           << (ep.end == EdgeEnd::Start ? "start" : "finish")
           << ") referenced more than once";
        return {false, os.str()};
      }
    }
  }
  if (static_cast<int>(seen.size()) != 2 * ne)
    return {false, "endpoint cover incomplete: " + std::to_string(seen.size()) +
                       " of " + std::to_string(2 * ne) + " endpoints referenced"};
  if (degree_sum != 2 * ne)
    return {false, "degree sum " + std::to_string(degree_sum) +
                       " does not equal 2 * edge count"};
  return {true, ""};
}

std::string dump(const StripModel& model) {
  std::ostringstream os;
  os << "model " << model.name << " cells=" << model.cells << " l1=" << model.l1
     << " l2=" << model.l2;
  if (model.kind == LatticeKind::Brick) os << " l3=" << model.l3;
  os << "\n";
  for (const auto& e : model.edges)
    os << "edge " << e.id << " " << family_letter(e.family) << e.column
       << " length=" << e.length << "\n";
  for (const auto& v : model.vertices) {
    os << "vertex " << v.id << " "
       << (v.kirchhoff ? "kirchhoff" : "cyclic") << " degree=" << v.degree()
       << "\n";
    for (const auto& ep : v.endpoints)
      os << "  " << family_letter(model.edges[ep.edge].family)
         << model.edges[ep.edge].column << " "
         << (ep.end == EdgeEnd::Start ? "start" : "finish")
         << " bloch=" << ep.bloch_power << "\n";
  }
  return os.str();
}

}  // namespace qgstrip
