#ifndef GALCOV_GRID_COMPLEX_HPP_
#define GALCOV_GRID_COMPLEX_HPP_

// The cylindrical degeneration X_0^{m,n}: an m x n grid of squares, periodic
// in the column direction, each square split by its up-right diagonal into a
// LOWER (lower-right) and UPPER (upper-left) triangle.  Edges are the interior
// grid segments and the diagonals; the bottom and top boundary segments carry
// no branch-curve line and are not modelled.

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "json.hpp"

namespace galcov {

  struct GridParams {
    int m = 1;
    int n = 2;

    GridParams() = default;
    GridParams(int m_, int n_) : m(m_), n(n_) {
      if (m < 1) {
        throw RangeError("m must be >= 1, got " + std::to_string(m));
      }
      if (n < 2) {
        throw RangeError("n must be >= 2, got " + std::to_string(n));
      }
    }

    int x() const noexcept {
      return m * n;
    }
    int y() const noexcept {
      return n * (m - 1);
    }
    // Only reported when m >= 2.
    int z() const noexcept {
      return n * (m - 2);
    }

    int triangle_count() const noexcept {
      return 2 * m * n;
    }
    int edge_count() const noexcept {
      return 3 * m * n - n;
    }
    int vertex_count() const noexcept {
      return n * (m + 1);
    }

    friend bool operator==(GridParams const&, GridParams const&) = default;
  };

  enum class Half { lower, upper };
  enum class EdgeKind { diagonal, vertical, horizontal };
  enum class VertexKind { bottom2, top2, inner6 };
  enum class VertexSubtype { seam, regular };

  inline char const* to_string(Half h) {
    return h == Half::lower ? "LOWER" : "UPPER";
  }
  inline char const* to_string(EdgeKind k) {
    switch (k) {
      case EdgeKind::diagonal:
        return "DIAGONAL";
      case EdgeKind::vertical:
        return "VERTICAL";
      default:
        return "HORIZONTAL";
    }
  }
  inline char const* to_string(VertexKind k) {
    switch (k) {
      case VertexKind::bottom2:
        return "BOTTOM2";
      case VertexKind::top2:
        return "TOP2";
      default:
        return "INNER6";
    }
  }
  inline char const* to_string(VertexSubtype s) {
    return s == VertexSubtype::seam ? "SEAM" : "REGULAR";
  }

  struct Triangle {
    int id;
    int row;  // k in 1..m
    int col;  // p in 1..n
    Half half;
  };

  struct Edge {
    int id;
    EdgeKind kind;
    // Row k for diagonals and verticals, level k (1..m-1) for horizontals.
    int level;
    // Column p; a vertical sits on the boundary p|p+1, a horizontal above
    // square (level, p).
    int position;
    std::array<int, 2> triangles;  // sorted
    std::array<int, 2> endpoints;  // sorted vertex ids
  };

  struct Vertex {
    int id;
    VertexKind kind;
    VertexSubtype subtype;
    int level;     // 0..m
    int boundary;  // column boundary 0..n-1; boundary b lies left of column b+1
    std::vector<int> edges;   // sorted labels
    std::vector<int> cyclic;  // hexagon order (inner vertices only)
  };

  struct DualGraph {
    int node_count = 0;
    // links[e-1] joins the two triangles of edge e
    std::vector<std::array<int, 2>> links;
    std::vector<std::vector<int>> incident;  // per node (1-based), edge ids

    int link_count() const noexcept {
      return static_cast<int>(links.size());
    }
    int degree(int node) const {
      return static_cast<int>(incident.at(node - 1).size());
    }
    int cycle_rank() const noexcept {
      return link_count() - node_count + 1;
    }
    bool connected() const {
      if (node_count == 0) {
        return true;
      }
      std::vector<int> parent(node_count + 1);
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int x) {
        while (parent[x] != x) {
          x = parent[x] = parent[parent[x]];
        }
        return x;
      };
      int comps = node_count;
      for (auto const& l : links) {
        int a = find(l[0]), b = find(l[1]);
        if (a != b) {
          parent[a] = b;
          --comps;
        }
      }
      return comps == 1;
    }
  };

  struct Hexagon {
    int vertex;               // inner vertex id
    VertexSubtype subtype;
    std::array<int, 6> sorted;  // a < b < c < d < e < f
    std::array<int, 6> cyclic;  // consecutive entries share a triangle
  };

  struct CycleInventory {
    std::vector<Hexagon> hexagons;
    std::vector<std::vector<int>> h_cycles;  // H_1..H_m, canonical edge order
  };

  class DegenerationComplex {
   public:
    explicit DegenerationComplex(GridParams params) : _p(params) {
      build();
    }

    GridParams const& params() const noexcept {
      return _p;
    }
    std::vector<Triangle> const& triangles() const noexcept {
      return _triangles;
    }
    std::vector<Edge> const& edges() const noexcept {
      return _edges;
    }
    std::vector<Vertex> const& vertices() const noexcept {
      return _vertices;
    }

    Triangle const& triangle(int id) const {
      check_id(id, _p.triangle_count(), "triangle");
      return _triangles[id - 1];
    }
    Edge const& edge(int id) const {
      check_id(id, _p.edge_count(), "edge");
      return _edges[id - 1];
    }
    Vertex const& vertex(int id) const {
      check_id(id, _p.vertex_count(), "vertex");
      return _vertices[id - 1];
    }

    int triangle_id(int row, int col, Half h) const noexcept {
      return 2 * _p.n * (row - 1) + 2 * col - (h == Half::lower ? 1 : 0);
    }

    // Edges sharing a triangle, i.e. adjacent in the dual graph.
    bool share_triangle(int e1, int e2) const {
      auto const& a = edge(e1).triangles;
      auto const& b = edge(e2).triangles;
      return e1 != e2
             && (a[0] == b[0] || a[0] == b[1] || a[1] == b[0] || a[1] == b[1]);
    }

    int shared_vertex_count(int e1, int e2) const {
      auto const& a = edge(e1).endpoints;
      auto const& b = edge(e2).endpoints;
      int c = 0;
      for (int x : a) {
        c += (x == b[0]) + (x == b[1]);
      }
      return c;
    }

   private:
    static void check_id(int id, int count, char const* what) {
      if (id < 1 || id > count) {
        throw RangeError(std::string("unknown ") + what + " id "
                         + std::to_string(id));
      }
    }

    // grid point (level, boundary) -> vertex id
    int vertex_at(int level, int boundary) const {
      int const n = _p.n, m = _p.m;
      boundary = ((boundary % n) + n) % n;
      if (level == 0) {
        return boundary + 1;
      }
      if (level < m) {
        return level * n + boundary + 1;
      }
      // top vertices are numbered by the column they close on the right
      return m * n + (boundary == 0 ? n : boundary);
    }

    void build() {
      int const m = _p.m, n = _p.n;
      for (int k = 1; k <= m; ++k) {
        for (int p = 1; p <= n; ++p) {
          _triangles.push_back({triangle_id(k, p, Half::lower), k, p, Half::lower});
          _triangles.push_back({triangle_id(k, p, Half::upper), k, p, Half::upper});
        }
      }

      _edges.resize(_p.edge_count());
      auto put = [&](int id, EdgeKind kind, int level, int pos, int t1, int t2,
                     int v1, int v2) {
        Edge e{id, kind, level, pos, {std::min(t1, t2), std::max(t1, t2)},
               {std::min(v1, v2), std::max(v1, v2)}};
        _edges[id - 1] = e;
      };
      for (int k = 1; k <= m; ++k) {
        int const base = 3 * n * (k - 1);
        for (int p = 1; p <= n; ++p) {
          int const next = p % n + 1;
          put(base + 2 * p - 1, EdgeKind::diagonal, k, p,
              triangle_id(k, p, Half::lower), triangle_id(k, p, Half::upper),
              vertex_at(k - 1, p - 1), vertex_at(k, p));
          put(base + 2 * p, EdgeKind::vertical, k, p,
              triangle_id(k, p, Half::lower), triangle_id(k, next, Half::upper),
              vertex_at(k - 1, p), vertex_at(k, p));
        }
        if (k < m) {
          for (int p = 1; p <= n; ++p) {
            put(base + 2 * n + p, EdgeKind::horizontal, k, p,
                triangle_id(k, p, Half::upper),
                triangle_id(k + 1, p, Half::lower), vertex_at(k, p - 1),
                vertex_at(k, p));
          }
        }
      }

      _vertices.resize(_p.vertex_count());
      for (int level = 0; level <= m; ++level) {
        for (int b = 0; b < n; ++b) {
          int id = vertex_at(level, b);
          Vertex v;
          v.id = id;
          v.level = level;
          v.boundary = b;
          if (level == 0) {
            v.kind = VertexKind::bottom2;
            v.subtype = id == 1 ? VertexSubtype::seam : VertexSubtype::regular;
          } else if (level == m) {
            v.kind = VertexKind::top2;
            v.subtype = VertexSubtype::seam;
          } else {
            v.kind = VertexKind::inner6;
            v.subtype = b == 0 ? VertexSubtype::seam : VertexSubtype::regular;
          }
          _vertices[id - 1] = std::move(v);
        }
      }
      for (auto const& e : _edges) {
        for (int v : e.endpoints) {
          _vertices[v - 1].edges.push_back(e.id);
        }
      }
      for (auto& v : _vertices) {
        std::sort(v.edges.begin(), v.edges.end());
        v.edges.erase(std::unique(v.edges.begin(), v.edges.end()),
                      v.edges.end());
        if (v.kind == VertexKind::inner6) {
          v.cyclic = hexagon_order(v.edges);
        }
      }
    }

    // Walk the six edges at an inner vertex: start at the smallest label and
    // step to its smaller triangle-sharing neighbour.
    std::vector<int> hexagon_order(std::vector<int> const& es) const {
      std::vector<int> order{es.front()};
      int prev = 0;
      while (order.size() < es.size()) {
        int cur = order.back();
        int next = 0;
        for (int e : es) {
          if (e != cur && e != prev && share_triangle(cur, e)
              && std::find(order.begin(), order.end(), e) == order.end()) {
            next = e;
            break;
          }
        }
        if (next == 0) {
          throw Error("hexagon walk failed at vertex edge " + std::to_string(cur));
        }
        prev = cur;
        order.push_back(next);
      }
      return order;
    }

    GridParams _p;
    std::vector<Triangle> _triangles;
    std::vector<Edge> _edges;
    std::vector<Vertex> _vertices;
  };

  inline DegenerationComplex build_complex(GridParams params) {
    return DegenerationComplex(params);
  }

  inline DegenerationComplex build_complex(int m, int n) {
    return DegenerationComplex(GridParams(m, n));
  }

  struct VertexIncidence {
    std::vector<int> sorted;
    std::vector<int> cyclic;  // empty unless INNER6
  };

  inline VertexIncidence vertex_incidence(DegenerationComplex const& c,
                                          int vertex_id) {
    auto const& v = c.vertex(vertex_id);
    return {v.edges, v.cyclic};
  }

  inline std::array<int, 2> edge_triangles(DegenerationComplex const& c,
                                           int edge_id) {
    return c.edge(edge_id).triangles;
  }

  inline DualGraph dual_graph(DegenerationComplex const& c) {
    DualGraph g;
    g.node_count = c.params().triangle_count();
    g.incident.resize(g.node_count);
    for (auto const& e : c.edges()) {
      g.links.push_back(e.triangles);
      g.incident[e.triangles[0] - 1].push_back(e.id);
      g.incident[e.triangles[1] - 1].push_back(e.id);
    }
    return g;
  }

  inline CycleInventory cycle_inventory(DegenerationComplex const& c) {
    CycleInventory inv;
    for (auto const& v : c.vertices()) {
      if (v.kind != VertexKind::inner6) {
        continue;
      }
      Hexagon h;
      h.vertex = v.id;
      h.subtype = v.subtype;
      std::copy(v.edges.begin(), v.edges.end(), h.sorted.begin());
      std::copy(v.cyclic.begin(), v.cyclic.end(), h.cyclic.begin());
      inv.hexagons.push_back(h);
    }
    int const n = c.params().n;
    for (int k = 1; k <= c.params().m; ++k) {
      std::vector<int> cyc;
      for (int i = 1; i <= 2 * n; ++i) {
        cyc.push_back(3 * n * (k - 1) + i);
      }
      inv.h_cycles.push_back(std::move(cyc));
    }
    return inv;
  }

  ////////////////////////////////////////////////////////////////////////
  // Export
  ////////////////////////////////////////////////////////////////////////

  inline nlohmann::ordered_json to_json(DegenerationComplex const& c) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["schema"] = "galcov-complex/1";
    auto const& p = c.params();
    ordered_json params;
    params["m"] = p.m;
    params["n"] = p.n;
    params["x"] = p.x();
    params["y"] = p.y();
    if (p.m >= 2) {
      params["z"] = p.z();
    }
    j["params"] = params;
    ordered_json ts = ordered_json::array();
    for (auto const& t : c.triangles()) {
      ordered_json o;
      o["id"] = t.id;
      o["row"] = t.row;
      o["col"] = t.col;
      o["half"] = to_string(t.half);
      ts.push_back(o);
    }
    j["triangles"] = ts;
    ordered_json es = ordered_json::array();
    for (auto const& e : c.edges()) {
      ordered_json o;
      o["id"] = e.id;
      o["kind"] = to_string(e.kind);
      o["level"] = e.level;
      o["position"] = e.position;
      o["triangles"] = e.triangles;
      o["endpoints"] = e.endpoints;
      es.push_back(o);
    }
    j["edges"] = es;
    ordered_json vs = ordered_json::array();
    for (auto const& v : c.vertices()) {
      ordered_json o;
      o["id"] = v.id;
      o["kind"] = to_string(v.kind);
      o["subtype"] = to_string(v.subtype);
      o["level"] = v.level;
      o["boundary"] = v.boundary;
      o["edges"] = v.edges;
      if (!v.cyclic.empty()) {
        o["cyclic"] = v.cyclic;
      }
      vs.push_back(o);
    }
    j["vertices"] = vs;
    return j;
  }

  inline std::string to_dot(DegenerationComplex const& c) {
    std::ostringstream os;
    auto const& p = c.params();
    os << "graph dual_" << p.m << "_" << p.n << " {\n";
    for (auto const& t : c.triangles()) {
      os << "  t" << t.id << " [label=\"" << t.id << "\"];\n";
    }
    for (auto const& e : c.edges()) {
      os << "  t" << e.triangles[0] << " -- t" << e.triangles[1]
         << " [label=\"" << e.id << "\"];\n";
    }
    os << "}\n";
    return os.str();
  }

}  // namespace galcov

#endif  // GALCOV_GRID_COMPLEX_HPP_
