#ifndef GALCOV_SURFACE_HPP_
#define GALCOV_SURFACE_HPP_

// Singularity census of the branch curve, Chern numbers and index of the
// Galois cover, and the irregularity bounds.  Everything is exact.

#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"
#include "grid_complex.hpp"
#include "json.hpp"

namespace galcov {

  using BigInt = boost::multiprecision::cpp_int;
  using BigRational = boost::multiprecision::cpp_rational;

  struct SingularityCensus {
    int m = 0, n = 0;
    long long b = 0;  // degree of the generic cover
    long long h = 0;  // degree of the branch curve
    long long d = 0;  // nodes
    long long rho = 0;  // cusps
    // breakdown
    long long pairs_total = 0;
    long long pairs_at_two_line = 0;
    long long pairs_at_six_line = 0;
    long long double_incident_pairs = 0;
    long long disjoint_pairs = 0;
    long long nodes_from_disjoint = 0;
    long long nodes_from_six_line = 0;
    long long cusps_from_two_line = 0;
    long long cusps_from_six_line = 0;

    friend bool operator==(SingularityCensus const&, SingularityCensus const&) = default;
  };

  namespace detail {
    inline long long choose2(long long k) {
      return k * (k - 1) / 2;
    }
  }  // namespace detail

  // Every pair of lines meeting at no vertex of the degeneration gives 4
  // nodes; each six-line vertex gives 24 nodes and 24 cusps; each two-line
  // vertex gives 3 cusps.
  inline SingularityCensus singularity_census(DegenerationComplex const& cx) {
    auto const& p = cx.params();
    SingularityCensus c;
    c.m = p.m;
    c.n = p.n;
    c.b = 2LL * p.m * p.n;
    c.h = 6LL * p.m * p.n - 2LL * p.n;
    long long const e = p.edge_count();
    c.pairs_total = detail::choose2(e);
    long long two = 0, six = 0;
    for (auto const& v : cx.vertices()) {
      long long k = static_cast<long long>(v.edges.size());
      if (v.kind == VertexKind::inner6) {
        c.pairs_at_six_line += detail::choose2(k);
        ++six;
      } else {
        c.pairs_at_two_line += detail::choose2(k);
        ++two;
      }
    }
    long long disjoint = 0;
    for (int i = 1; i <= e; ++i) {
      for (int j = i + 1; j <= e; ++j) {
        int s = cx.shared_vertex_count(i, j);
        if (s == 0) {
          ++disjoint;
        } else if (s == 2) {
          ++c.double_incident_pairs;
        }
      }
    }
    c.disjoint_pairs = disjoint;
    c.nodes_from_disjoint = 4 * disjoint;
    c.nodes_from_six_line = 24 * six;
    c.cusps_from_two_line = 3 * two;
    c.cusps_from_six_line = 24 * six;
    c.d = c.nodes_from_disjoint + c.nodes_from_six_line;
    c.rho = c.cusps_from_two_line + c.cusps_from_six_line;
    return c;
  }

  // The printed formulas; the breakdown is filled where it is implied.
  inline SingularityCensus census_closed_form(int m, int n) {
    GridParams p(m, n);
    SingularityCensus c;
    c.m = m;
    c.n = n;
    c.b = 2LL * m * n;
    c.h = 6LL * m * n - 2LL * n;
    long long const e = 3LL * m * n - n;
    long long const y = static_cast<long long>(n) * (m - 1);
    c.pairs_total = detail::choose2(e);
    c.pairs_at_two_line = 2LL * n;
    c.pairs_at_six_line = 15 * y;
    c.double_incident_pairs = n == 2 ? (m - 1) : 0;
    c.disjoint_pairs = c.pairs_total - 2LL * n - 15 * y + c.double_incident_pairs;
    c.nodes_from_disjoint = 4 * c.disjoint_pairs;
    c.nodes_from_six_line = 24 * y;
    c.cusps_from_two_line = 6LL * n;
    c.cusps_from_six_line = 24 * y;
    c.d = c.nodes_from_six_line + c.nodes_from_disjoint;
    c.rho = 6LL * n + 24 * y;
    return c;
  }

  // Expanded polynomial for d.
  inline long long node_polynomial(int m, int n) {
    long long M = m, N = n;
    if (n == 2) {
      return 72 * M * M - 128 * M + 64;
    }
    return 18 * M * M * N * N - 12 * M * N * N - 42 * M * N + 2 * N * N + 30 * N;
  }

  inline BigInt factorial(long long k) {
    BigInt f = 1;
    for (long long i = 2; i <= k; ++i) {
      f *= i;
    }
    return f;
  }

  enum class ChernRoute { census, closed_form };
  enum class Sign { negative, zero, positive };

  inline char const* to_string(Sign s) {
    switch (s) {
      case Sign::negative:
        return "NEGATIVE";
      case Sign::zero:
        return "ZERO";
      case Sign::positive:
        return "POSITIVE";
    }
    return "?";
  }

  struct ChernNumbers {
    BigInt c1sq;
    BigInt c2;
    // factors over b! (exact rationals; integral in every case here)
    BigRational c1sq_factor;
    BigRational c2_factor;

    friend bool operator==(ChernNumbers const&, ChernNumbers const&) = default;
  };

  namespace detail {
    inline BigInt require_integer(BigRational const& q, char const* what) {
      if (denominator(q) != 1) {
        throw Error(std::string(what) + " is not an integer");
      }
      return numerator(q);
    }
  }  // namespace detail

  // Census route: c1^2 = b!/4 (h-6)^2, c2 = b! (h^2/2 - 3h/2 + 3 - 3d/4 - 4rho/3).
  inline ChernNumbers chern_from_census(SingularityCensus const& c) {
    BigInt const bf = factorial(c.b);
    BigRational h(c.h), d(c.d), rho(c.rho);
    BigRational f1 = (h - 6) * (h - 6) / 4;
    BigRational f2 = h * h / 2 - 3 * h / 2 + 3 - 3 * d / 4 - 4 * rho / 3;
    ChernNumbers out;
    out.c1sq_factor = f1;
    out.c2_factor = f2;
    out.c1sq = detail::require_integer(BigRational(bf) * f1, "c1^2");
    out.c2 = detail::require_integer(BigRational(bf) * f2, "c2");
    return out;
  }

  // Polynomial route.
  inline ChernNumbers chern_closed_form(int m, int n) {
    GridParams p(m, n);
    BigInt const bf = factorial(2LL * m * n);
    BigRational M(m), N(n);
    ChernNumbers out;
    if (n == 2) {
      out.c1sq_factor = 36 * M * M - 60 * M + 25;
      out.c2_factor = 18 * M * M - 34 * M + 17;
    } else {
      out.c1sq_factor = 9 * M * M * N * N - 6 * M * N * N - 18 * M * N + N * N + 6 * N + 9;
      out.c2_factor = BigRational(9, 2) * M * M * N * N - 3 * M * N * N
                      - BigRational(19, 2) * M * N + BigRational(1, 2) * N * N
                      + BigRational(9, 2) * N + 3;
    }
    out.c1sq = detail::require_integer(BigRational(bf) * out.c1sq_factor, "c1^2");
    out.c2 = detail::require_integer(BigRational(bf) * out.c2_factor, "c2");
    return out;
  }

  inline ChernNumbers chern_numbers(int m, int n, ChernRoute route) {
    if (route == ChernRoute::census) {
      return chern_from_census(singularity_census(build_complex(m, n)));
    }
    return chern_closed_form(m, n);
  }

  struct IndexTau {
    BigRational tau;
    BigRational factor;  // tau / b!
    Sign sign = Sign::zero;
  };

  inline IndexTau index_from_chern(ChernNumbers const& c, long long b) {
    IndexTau t;
    t.tau = (BigRational(c.c1sq) - 2 * BigRational(c.c2)) / 3;
    detail::require_integer(t.tau, "tau");
    t.factor = t.tau / BigRational(factorial(b));
    t.sign = t.tau < 0 ? Sign::negative : (t.tau > 0 ? Sign::positive : Sign::zero);
    return t;
  }

  inline IndexTau index_tau(int m, int n) {
    return index_from_chern(chern_numbers(m, n, ChernRoute::census), 2LL * m * n);
  }

  // Case table of the index theorem, independent of any arithmetic above.
  inline Sign expected_sign(int m, int n) {
    GridParams p(m, n);
    if (m == 1) {
      return Sign::negative;
    }
    if (n == 2) {
      return Sign::positive;
    }
    if (m == 2) {
      return n == 3 ? Sign::zero : Sign::negative;
    }
    return Sign::positive;
  }

  // Printed closed form for tau / b!: (8m-9)/3 for n = 2, (mn-3n+3)/3 else.
  inline BigRational tau_factor_closed_form(int m, int n) {
    if (n == 2) {
      return BigRational(8 * m - 9, 3);
    }
    return BigRational(m * n - 3 * n + 3, 3);
  }

  struct IrregularityReport {
    int m = 0, n = 0;
    long long l = 0;               // sheets of the cover
    long long h1_rank_bound = 0;   // (l - 1) * rank H_1(X) with rank 2
    long long q_bound = 0;         // q >= 2mn - 1
    long long subgroup_rank = 0;   // m (2n - 1)
    std::optional<long long> benchmark_q;  // m = 1: q = 2n - 1
  };

  inline IrregularityReport irregularity_report(int m, int n) {
    GridParams p(m, n);
    IrregularityReport r;
    r.m = m;
    r.n = n;
    r.l = 2LL * m * n;
    r.h1_rank_bound = (r.l - 1) * 2;
    r.q_bound = r.l - 1;
    r.subgroup_rank = static_cast<long long>(m) * (2 * n - 1);
    if (m == 1) {
      r.benchmark_q = 2LL * n - 1;
    }
    return r;
  }

  struct SurfaceInvariantReport {
    SingularityCensus census;
    ChernNumbers chern;
    IndexTau tau;
    IrregularityReport irregularity;
  };

  inline SurfaceInvariantReport surface_report(int m, int n) {
    SurfaceInvariantReport r;
    r.census = singularity_census(build_complex(m, n));
    r.chern = chern_from_census(r.census);
    r.tau = index_from_chern(r.chern, r.census.b);
    r.irregularity = irregularity_report(m, n);
    return r;
  }

  namespace detail {
    inline std::string rat(BigRational const& q) {
      std::ostringstream os;
      os << numerator(q);
      if (denominator(q) != 1) {
        os << "/" << denominator(q);
      }
      return os.str();
    }
    // b!*k, b!/k or -b!*p/q
    inline std::string factored(BigRational const& f, long long b) {
      if (f == 0) {
        return "0";
      }
      BigInt num = numerator(f), den = denominator(f);
      std::ostringstream os;
      if (num < 0) {
        os << "-";
        num = -num;
      }
      os << b << "!";
      if (num != 1) {
        os << "*" << num;
      }
      if (den != 1) {
        os << "/" << den;
      }
      return os.str();
    }
  }  // namespace detail

  inline nlohmann::ordered_json to_json(SingularityCensus const& c) {
    nlohmann::ordered_json j;
    j["m"] = c.m;
    j["n"] = c.n;
    j["b"] = c.b;
    j["h"] = c.h;
    j["d"] = c.d;
    j["rho"] = c.rho;
    nlohmann::ordered_json br;
    br["pairs_total"] = c.pairs_total;
    br["pairs_at_two_line_vertices"] = c.pairs_at_two_line;
    br["pairs_at_six_line_vertices"] = c.pairs_at_six_line;
    br["double_incident_pairs"] = c.double_incident_pairs;
    br["disjoint_pairs"] = c.disjoint_pairs;
    br["nodes_from_disjoint_pairs"] = c.nodes_from_disjoint;
    br["nodes_from_six_line_vertices"] = c.nodes_from_six_line;
    br["cusps_from_two_line_vertices"] = c.cusps_from_two_line;
    br["cusps_from_six_line_vertices"] = c.cusps_from_six_line;
    j["breakdown"] = br;
    return j;
  }

  inline nlohmann::ordered_json to_json(SurfaceInvariantReport const& r) {
    nlohmann::ordered_json j;
    j["schema"] = "galcov-surface/1";
    j["census"] = to_json(r.census);
    long long const b = r.census.b;
    j["c1sq"] = r.chern.c1sq.str();
    j["c1sq_factored"] = detail::factored(r.chern.c1sq_factor, b);
    j["c2"] = r.chern.c2.str();
    j["c2_factored"] = detail::factored(r.chern.c2_factor, b);
    j["tau"] = detail::rat(r.tau.tau);
    j["tau_factored"] = detail::factored(r.tau.factor, b);
    j["sign"] = to_string(r.tau.sign);
    nlohmann::ordered_json q;
    q["sheets"] = r.irregularity.l;
    q["h1_rank_bound"] = r.irregularity.h1_rank_bound;
    q["q_bound"] = r.irregularity.q_bound;
    q["subgroup_rank"] = r.irregularity.subgroup_rank;
    if (r.irregularity.benchmark_q) {
      q["benchmark_q"] = *r.irregularity.benchmark_q;
    } else {
      q["benchmark_q"] = nullptr;
    }
    j["irregularity"] = q;
    return j;
  }

  // Columns: m, n, b, h, d, rho, c1sq-factor, c2-factor, tau-factor, sign.
  inline std::string surface_table(std::vector<SurfaceInvariantReport> const& rows,
                                   bool csv) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"m", "n", "b", "h", "d", "rho", "c1sq-factor", "c2-factor",
                     "tau-factor", "sign"});
    for (auto const& r : rows) {
      cells.push_back({std::to_string(r.census.m), std::to_string(r.census.n),
                       std::to_string(r.census.b), std::to_string(r.census.h),
                       std::to_string(r.census.d), std::to_string(r.census.rho),
                       detail::rat(r.chern.c1sq_factor), detail::rat(r.chern.c2_factor),
                       detail::rat(r.tau.factor), to_string(r.tau.sign)});
    }
    std::ostringstream os;
    if (csv) {
      for (auto const& row : cells) {
        for (std::size_t k = 0; k < row.size(); ++k) {
          os << (k ? "," : "") << row[k];
        }
        os << "\n";
      }
      return os.str();
    }
    std::vector<std::size_t> width(cells[0].size(), 0);
    for (auto const& row : cells) {
      for (std::size_t k = 0; k < row.size(); ++k) {
        width[k] = std::max(width[k], row[k].size());
      }
    }
    for (auto const& row : cells) {
      for (std::size_t k = 0; k < row.size(); ++k) {
        os << (k ? "  " : "") << std::setw(static_cast<int>(width[k])) << row[k];
      }
      os << "\n";
    }
    return os.str();
  }

}  // namespace galcov

#endif  // GALCOV_SURFACE_HPP_
