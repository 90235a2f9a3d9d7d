#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <set>

#include "galcov/galcov.hpp"

using namespace galcov;

namespace {

  using Bits = std::vector<std::uint8_t>;

  Bits indicator(std::vector<int> const& edges, int count) {
    Bits b(count, 0);
    for (int e : edges) {
      b[e - 1] ^= 1;
    }
    return b;
  }

  int gf2_rank(std::vector<Bits> rows) {
    int rank = 0;
    int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
      auto piv = std::find_if(rows.begin() + rank, rows.end(),
                              [c](Bits const& r) { return r[c] != 0; });
      if (piv == rows.end()) {
        continue;
      }
      std::swap(*piv, rows[rank]);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(i) != rank && rows[i][c]) {
          for (int k = 0; k < cols; ++k) {
            rows[i][k] ^= rows[rank][k];
          }
        }
      }
      ++rank;
    }
    return rank;
  }

  // Every cycle vector lies in the kernel of the triangle boundary map.
  bool is_cycle(Bits const& v, DegenerationComplex const& cx) {
    std::vector<int> deg(cx.params().triangle_count() + 1, 0);
    for (int e = 1; e <= static_cast<int>(v.size()); ++e) {
      if (v[e - 1]) {
        for (int t : cx.edge(e).triangles) {
          deg[t] ^= 1;
        }
      }
    }
    return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 0; });
  }

  bool same_cycle(std::vector<int> a, std::vector<int> const& b) {
    for (int flip = 0; flip < 2; ++flip) {
      for (std::size_t r = 0; r < a.size(); ++r) {
        if (a == b) {
          return true;
        }
        std::rotate(a.begin(), a.begin() + 1, a.end());
      }
      std::reverse(a.begin(), a.end());
    }
    return false;
  }

}  // namespace

TEST(GridComplex, SpecExamples) {
  auto c24 = build_complex(2, 4);
  EXPECT_EQ(c24.triangles().size(), 16u);
  EXPECT_EQ(c24.edges().size(), 20u);
  EXPECT_EQ(c24.vertices().size(), 12u);

  auto c12 = build_complex(1, 2);
  EXPECT_EQ(c12.triangles().size(), 4u);
  EXPECT_EQ(c12.edges().size(), 4u);
  EXPECT_EQ(c12.vertices().size(), 4u);

  auto c35 = build_complex(3, 5);
  EXPECT_EQ(c35.triangles().size(), 30u);
  EXPECT_EQ(c35.edges().size(), 40u);
  EXPECT_EQ(c35.vertices().size(), 20u);
}

TEST(GridComplex, RejectsOutOfRange) {
  EXPECT_THROW(build_complex(0, 4), RangeError);
  EXPECT_THROW(build_complex(2, 1), RangeError);
  auto cx = build_complex(2, 4);
  EXPECT_THROW(vertex_incidence(cx, 13), RangeError);
  EXPECT_THROW(edge_triangles(cx, 21), RangeError);
}

TEST(GridComplex, IncidenceExamples) {
  auto cx = build_complex(2, 4);
  auto v5 = vertex_incidence(cx, 5);
  EXPECT_EQ(v5.sorted, (std::vector<int>{7, 8, 9, 12, 13, 20}));
  EXPECT_EQ(vertex_incidence(cx, 6).sorted, (std::vector<int>{1, 2, 9, 10, 14, 15}));
  EXPECT_EQ(vertex_incidence(cx, 1).sorted, (std::vector<int>{1, 8}));

  EXPECT_EQ(edge_triangles(cx, 1), (std::array<int, 2>{1, 2}));
  EXPECT_EQ(edge_triangles(cx, 9), (std::array<int, 2>{2, 9}));
  EXPECT_EQ(edge_triangles(build_complex(1, 2), 2), (std::array<int, 2>{1, 4}));
}

TEST(GridComplex, CanonicalNumbering) {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 2; n <= 6; ++n) {
      auto cx = build_complex(m, n);
      for (auto const& t : cx.triangles()) {
        int base = 2 * n * (t.row - 1) + 2 * t.col;
        EXPECT_EQ(t.id, t.half == Half::lower ? base - 1 : base);
      }
      for (auto const& e : cx.edges()) {
        int k = e.level, p = e.position;
        int expect = e.kind == EdgeKind::diagonal   ? 3 * n * (k - 1) + 2 * p - 1
                     : e.kind == EdgeKind::vertical ? 3 * n * (k - 1) + 2 * p
                                                    : 3 * n * (k - 1) + 2 * n + p;
        EXPECT_EQ(e.id, expect);
        EXPECT_NE(e.triangles[0], e.triangles[1]);
      }
    }
  }
}

TEST(GridComplex, CountingInvariants) {
  for (int m = 1; m <= 6; ++m) {
    for (int n = 2; n <= 8; ++n) {
      SCOPED_TRACE(std::to_string(m) + "x" + std::to_string(n));
      auto cx = build_complex(m, n);
      EXPECT_EQ(static_cast<int>(cx.edges().size()), 3 * m * n - n);
      EXPECT_EQ(static_cast<int>(cx.triangles().size()), 2 * m * n);
      EXPECT_EQ(static_cast<int>(cx.vertices().size()), n * (m + 1));
      int two = 0, six = 0;
      for (auto const& v : cx.vertices()) {
        if (v.kind == VertexKind::inner6) {
          ++six;
          EXPECT_EQ(v.edges.size(), 6u);
        } else {
          ++two;
          EXPECT_EQ(v.edges.size(), 2u);
        }
      }
      EXPECT_EQ(two, 2 * n);
      EXPECT_EQ(six, n * (m - 1));

      auto g = dual_graph(cx);
      EXPECT_TRUE(g.connected());
      EXPECT_EQ(g.cycle_rank(), m * n - n + 1);
      int forks = 0;
      for (int t = 1; t <= g.node_count; ++t) {
        EXPECT_TRUE(g.degree(t) == 2 || g.degree(t) == 3);
        forks += g.degree(t) == 3;
      }
      EXPECT_EQ(forks, 2 * n * (m - 1));
    }
  }
}

TEST(GridComplex, VertexLayout) {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 2; n <= 6; ++n) {
      auto cx = build_complex(m, n);
      EXPECT_EQ(cx.vertex(1).edges, (std::vector<int>{1, 2 * n}));
      for (int p = 2; p <= n; ++p) {
        EXPECT_EQ(cx.vertex(p).edges, (std::vector<int>{2 * p - 2, 2 * p - 1}));
      }
      for (int p = 1; p <= n; ++p) {
        int base = 3 * n * (m - 1);
        EXPECT_EQ(cx.vertex(m * n + p).edges,
                  (std::vector<int>{base + 2 * p - 1, base + 2 * p}));
        EXPECT_EQ(cx.vertex(m * n + p).kind, VertexKind::top2);
      }
      for (int k = 1; k < m; ++k) {
        EXPECT_EQ(cx.vertex(k * n + 1).subtype, VertexSubtype::seam);
        for (int p = 2; p <= n; ++p) {
          EXPECT_EQ(cx.vertex(k * n + p).subtype, VertexSubtype::regular);
        }
      }
    }
  }
}

TEST(GridComplex, HexagonShape) {
  for (int m = 2; m <= 5; ++m) {
    for (int n = 2; n <= 7; ++n) {
      auto cx = build_complex(m, n);
      auto inv = cycle_inventory(cx);
      ASSERT_EQ(static_cast<int>(inv.hexagons.size()), n * (m - 1));
      for (auto const& h : inv.hexagons) {
        auto const& s = h.sorted;
        auto want = h.subtype == VertexSubtype::regular
                        ? std::array<int, 6>{s[0], s[1], s[3], s[5], s[4], s[2]}
                        : std::array<int, 6>{s[0], s[1], s[2], s[4], s[5], s[3]};
        EXPECT_EQ(h.cyclic, want);
        for (int i = 0; i < 6; ++i) {
          EXPECT_TRUE(cx.share_triangle(h.cyclic[i], h.cyclic[(i + 1) % 6]));
          EXPECT_FALSE(cx.share_triangle(h.cyclic[i], h.cyclic[(i + 3) % 6]));
        }
      }
    }
  }
}

TEST(GridComplex, CycleSpaceBasis) {
  for (int m = 1; m <= 5; ++m) {
    for (int n = 2; n <= 7; ++n) {
      SCOPED_TRACE(std::to_string(m) + "x" + std::to_string(n));
      auto cx = build_complex(m, n);
      int const E = cx.params().edge_count();
      auto inv = cycle_inventory(cx);
      ASSERT_EQ(static_cast<int>(inv.h_cycles.size()), m);
      for (int k = 1; k <= m; ++k) {
        std::vector<int> want;
        for (int i = 1; i <= 2 * n; ++i) {
          want.push_back(3 * n * (k - 1) + i);
        }
        EXPECT_EQ(inv.h_cycles[k - 1], want);
      }
      std::vector<Bits> basis;
      for (auto const& h : inv.hexagons) {
        basis.push_back(indicator({h.cyclic.begin(), h.cyclic.end()}, E));
      }
      basis.push_back(indicator(inv.h_cycles[0], E));
      for (auto const& b : basis) {
        EXPECT_TRUE(is_cycle(b, cx));
      }
      EXPECT_EQ(gf2_rank(basis), m * n - n + 1);

      for (int k = 1; k < m; ++k) {
        Bits lhs = indicator(inv.h_cycles[k - 1], E);
        Bits rhs = indicator(inv.h_cycles[k], E);
        for (int i = 0; i < E; ++i) {
          lhs[i] ^= rhs[i];
        }
        Bits sum(E, 0);
        for (auto const& h : inv.hexagons) {
          if (cx.vertex(h.vertex).level == k) {
            for (int e : h.cyclic) {
              sum[e - 1] ^= 1;
            }
          }
        }
        EXPECT_EQ(lhs, sum);
      }
    }
  }
}

TEST(GridComplex, InventoryExamples) {
  auto i24 = cycle_inventory(build_complex(2, 4));
  EXPECT_EQ(i24.hexagons.size(), 4u);
  EXPECT_EQ(i24.h_cycles[1], (std::vector<int>{13, 14, 15, 16, 17, 18, 19, 20}));
  auto i15 = cycle_inventory(build_complex(1, 5));
  EXPECT_TRUE(i15.hexagons.empty());
  EXPECT_EQ(i15.h_cycles.size(), 1u);
  auto i34 = cycle_inventory(build_complex(3, 4));
  EXPECT_EQ(i34.hexagons.size(), 8u);
  EXPECT_EQ(i34.h_cycles[0][0], 1);
  EXPECT_EQ(i34.h_cycles[1][0], 13);
  EXPECT_EQ(i34.h_cycles[2][0], 25);
}

// Vertex incidence for (2,4) against the published relation lists.
TEST(GridComplex, PrintedIncidenceFixture) {
  std::ifstream in(std::string(GALCOV_FIXTURES) + "/printed_2_4.json");
  ASSERT_TRUE(in);
  auto fx = nlohmann::json::parse(in);
  auto cx = build_complex(2, 4);
  for (auto const& v : fx["six_line"]) {
    int id = v["vertex"];
    std::set<int> letters;
    std::vector<int> chain;
    for (auto const& t : v["triples"]) {
      letters.insert(t[0].get<int>());
      letters.insert(t[1].get<int>());
      chain.push_back(t[0]);
    }
    auto inc = vertex_incidence(cx, id);
    EXPECT_EQ(inc.sorted, std::vector<int>(letters.begin(), letters.end())) << "V" << id;
    // printed chain is the hexagon order up to rotation and reflection
    EXPECT_TRUE(same_cycle(inc.cyclic, chain)) << "V" << id;
  }
  std::set<std::pair<int, int>> printed;
  for (auto const& t : fx["two_line_triples"]) {
    printed.insert({t[0].get<int>(), t[1].get<int>()});
  }
  for (auto const& v : cx.vertices()) {
    if (v.kind != VertexKind::inner6) {
      EXPECT_TRUE(printed.count({v.edges[0], v.edges[1]}) == 1) << "V" << v.id;
    }
  }
}

TEST(GridComplex, DeterministicExport) {
  auto a = to_json(build_complex(3, 4)).dump();
  auto b = to_json(build_complex(3, 4)).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(to_dot(build_complex(2, 3)), to_dot(build_complex(2, 3)));
  auto j = to_json(build_complex(2, 4));
  EXPECT_EQ(j["edges"].size(), 20u);
  EXPECT_EQ(j["vertices"].size(), 12u);
}
