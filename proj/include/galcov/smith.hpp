#ifndef GALCOV_SMITH_HPP_
#define GALCOV_SMITH_HPP_

// Exact integer linear algebra for abelianised presentations: sparse integer
// matrices, Smith normal form (sparse unit-pivot elimination followed by a
// dense arbitrary-precision pass on what remains), and ranks over Q and GF(p).

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"
#include "presentation.hpp"

namespace galcov {

  using BigInt = boost::multiprecision::cpp_int;
  using BigRational = boost::multiprecision::cpp_rational;

  template <typename T>
  using SparseRow = std::vector<std::pair<int, T>>;  // sorted by column

  struct IntegerMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<SparseRow<BigInt>> data;

    IntegerMatrix() = default;
    IntegerMatrix(int r, int c) : rows(r), cols(c), data(r) {}

    static IntegerMatrix from_dense(std::vector<std::vector<long long>> const& d,
                                    int cols) {
      IntegerMatrix m(static_cast<int>(d.size()), cols);
      for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < cols; ++j) {
          if (d[i][j] != 0) {
            m.data[i].emplace_back(j, BigInt(d[i][j]));
          }
        }
      }
      return m;
    }

    std::size_t nonzeros() const {
      std::size_t n = 0;
      for (auto const& r : data) {
        n += r.size();
      }
      return n;
    }

    BigInt at(int i, int j) const {
      for (auto const& [c, v] : data[i]) {
        if (c == j) {
          return v;
        }
      }
      return 0;
    }

    // Largest absolute entry.
    BigInt max_abs() const {
      BigInt m = 0;
      for (auto const& r : data) {
        for (auto const& e : r) {
          m = std::max(m, BigInt(abs(e.second)));
        }
      }
      return m;
    }
  };

  // Exponent-sum matrix: one row per relator, one column per generator.
  inline IntegerMatrix abelianize(GroupPresentation const& p) {
    IntegerMatrix m(static_cast<int>(p.relators.size()), p.generator_count());
    std::map<int, long long> acc;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      acc.clear();
      for (Letter l : p.relators[i].word) {
        acc[generator_of(l) - 1] += exponent_of(l);
      }
      for (auto const& [c, v] : acc) {
        if (v != 0) {
          m.data[i].emplace_back(c, BigInt(v));
        }
      }
    }
    return m;
  }

  struct AbelianInvariants {
    int free_rank = 0;
    std::vector<BigInt> torsion;  // d_1 | d_2 | ..., each >= 2

    bool is_trivial() const {
      return free_rank == 0 && torsion.empty();
    }

    std::string to_string() const {
      if (is_trivial()) {
        return "0";
      }
      std::ostringstream os;
      bool first = true;
      for (auto const& d : torsion) {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
      }
      if (free_rank > 0) {
        os << (first ? "" : " + ") << "Z^" << free_rank;
      }
      return os.str();
    }

    friend bool operator==(AbelianInvariants const&,
                           AbelianInvariants const&) = default;
  };

  struct SmithOptions {
    // Budget on the dense remainder left after sparse elimination.
    std::uint64_t dense_budget = 4'000'000;  // rows * cols
  };

  struct SmithResult {
    AbelianInvariants invariants;
    int rank = 0;             // number of nonzero invariant factors
    int unit_pivots = 0;      // eliminated in the sparse phase
    int dense_rows = 0;       // size of the dense remainder
    int dense_cols = 0;
  };

  namespace detail {

    // Integer traits: checked int64 or unbounded BigInt.
    struct Overflow {};

    inline long long sub_mul(long long a, long long q, long long b) {
      long long prod, res;
      if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &res)) {
        throw Overflow{};
      }
      return res;
    }
    inline BigInt sub_mul(BigInt const& a, BigInt const& q, BigInt const& b) {
      return a - q * b;
    }
    inline bool is_unit(long long v) {
      return v == 1 || v == -1;
    }
    inline bool is_unit(BigInt const& v) {
      return v == 1 || v == -1;
    }

    // r2 := r2 - q * r1 over sorted sparse rows
    template <typename T>
    void axpy(SparseRow<T>& r2, T const& q, SparseRow<T> const& r1,
              SparseRow<T>& scratch) {
      scratch.clear();
      std::size_t i = 0, j = 0;
      while (i < r2.size() || j < r1.size()) {
        if (j == r1.size() || (i < r2.size() && r2[i].first < r1[j].first)) {
          scratch.push_back(r2[i++]);
        } else if (i == r2.size() || r1[j].first < r2[i].first) {
          T v = sub_mul(T(0), q, r1[j].second);
          scratch.emplace_back(r1[j].first, v);
          ++j;
        } else {
          T v = sub_mul(r2[i].second, q, r1[j].second);
          if (v != 0) {
            scratch.emplace_back(r2[i].first, v);
          }
          ++i;
          ++j;
        }
      }
      r2.swap(scratch);
    }

    // Sparse elimination with unit pivots.  Returns the pivot count and leaves
    // the non-eliminated remainder in `rows` (pivot rows cleared).
    template <typename T>
    int eliminate_units(std::vector<SparseRow<T>>& rows, int cols,
                        std::vector<bool>& col_alive) {
      int const nr = static_cast<int>(rows.size());
      std::vector<std::vector<int>> col_rows(cols);
      for (int i = 0; i < nr; ++i) {
        for (auto const& e : rows[i]) {
          col_rows[e.first].push_back(i);
        }
      }
      std::vector<bool> row_alive(nr, true);
      col_alive.assign(cols, true);
      using Item = std::pair<std::size_t, int>;
      std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
      for (int i = 0; i < nr; ++i) {
        if (!rows[i].empty()) {
          heap.emplace(rows[i].size(), i);
        }
      }
      std::vector<bool> has_unit_hint(nr, true);
      SparseRow<T> scratch;
      int pivots = 0;
      while (!heap.empty()) {
        auto [len, r] = heap.top();
        heap.pop();
        if (!row_alive[r] || rows[r].size() != len || rows[r].empty()) {
          continue;
        }
        // unit entry with the sparsest column
        int best = -1;
        std::size_t best_count = SIZE_MAX;
        for (std::size_t k = 0; k < rows[r].size(); ++k) {
          if (is_unit(rows[r][k].second)) {
            std::size_t cnt = col_rows[rows[r][k].first].size();
            if (cnt < best_count) {
              best_count = cnt;
              best = static_cast<int>(k);
            }
          }
        }
        if (best < 0) {
          continue;  // re-queued if a later update touches it
        }
        int const c = rows[r][best].first;
        T const piv = rows[r][best].second;
        auto pivot_row = rows[r];
        auto& touched = col_rows[c];
        std::vector<int> targets;
        targets.swap(touched);
        for (int r2 : targets) {
          if (r2 == r || !row_alive[r2]) {
            continue;
          }
          auto it = std::lower_bound(
              rows[r2].begin(), rows[r2].end(), c,
              [](auto const& e, int col) { return e.first < col; });
          if (it == rows[r2].end() || it->first != c) {
            continue;
          }
          T q = it->second * piv;  // piv is +-1, so q = a / piv
          // record columns new to r2
          std::vector<int> before;
          before.reserve(rows[r2].size());
          for (auto const& e : rows[r2]) {
            before.push_back(e.first);
          }
          axpy(rows[r2], q, pivot_row, scratch);
          for (auto const& e : rows[r2]) {
            if (!std::binary_search(before.begin(), before.end(), e.first)) {
              col_rows[e.first].push_back(r2);
            }
          }
          if (!rows[r2].empty()) {
            heap.emplace(rows[r2].size(), r2);
          }
        }
        row_alive[r] = false;
        rows[r].clear();
        col_alive[c] = false;
        ++pivots;
      }
      return pivots;
    }

    // Unimodular row reduction to Hermite form.  Tall relation matrices
    // shrink to at most `nc` rows before the Smith pass, and reducing above
    // each pivot keeps entries from growing.
    inline void hermite_rows(std::vector<std::vector<BigInt>>& a, int nc) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
      std::erase_if(a, [](auto const& row) {
        return std::all_of(row.begin(), row.end(), [](BigInt const& v) { return v == 0; });
      });
      int const nr = static_cast<int>(a.size());
      int r = 0;
      for (int c = 0; c < nc && r < nr; ++c) {
        int p = -1;
        for (int i = r; i < nr; ++i) {
          if (a[i][c] != 0 && (p < 0 || abs(a[i][c]) < abs(a[p][c]))) {
            p = i;
          }
        }
        if (p < 0) {
          continue;
        }
        // Euclid down the column: reduce by the smallest entry until it
        // is the only nonzero one
        for (;;) {
          std::swap(a[r], a[p]);
          bool done = true;
          for (int i = r + 1; i < nr; ++i) {
            if (a[i][c] == 0) {
              continue;
            }
            BigInt q = a[i][c] / a[r][c];
            for (int j = c; j < nc; ++j) {
              a[i][j] -= q * a[r][j];
            }
            done = done && a[i][c] == 0;
          }
          if (done) {
            break;
          }
          p = -1;
          for (int i = r; i < nr; ++i) {
            if (a[i][c] != 0 && (p < 0 || abs(a[i][c]) < abs(a[p][c]))) {
              p = i;
            }
          }
        }
        if (a[r][c] < 0) {
          for (int j = c; j < nc; ++j) {
            a[r][j] = -a[r][j];
          }
        }
        for (int k = 0; k < r; ++k) {
          BigInt q = a[k][c] / a[r][c];
          if (a[k][c] - q * a[r][c] < 0) {
            q -= 1;
          }
          if (q != 0) {
            for (int j = c; j < nc; ++j) {
              a[k][j] -= q * a[r][j];
            }
          }
        }
        ++r;
      }
      a.resize(r);
    }

    // Dense Smith normal form; returns the nonzero diagonal.
    inline std::vector<BigInt> dense_smith(std::vector<std::vector<BigInt>> a) {
      int const nc0 = a.empty() ? 0 : static_cast<int>(a[0].size());
      hermite_rows(a, nc0);
      int const nr = static_cast<int>(a.size());
      int const nc = nc0;
      std::vector<BigInt> diag;
      int t = 0;
      while (t < nr && t < nc) {
        // smallest nonzero |entry| in the trailing block
        int pr = -1, pc = -1;
        BigInt best = 0;
        for (int i = t; i < nr; ++i) {
          for (int j = t; j < nc; ++j) {
            if (a[i][j] != 0 && (pr < 0 || abs(a[i][j]) < best)) {
              best = abs(a[i][j]);
              pr = i;
              pc = j;
              if (best == 1) {
                break;
              }
            }
          }
          if (best == 1) {
            break;
          }
        }
        if (pr < 0) {
          break;
        }
        std::swap(a[t], a[pr]);
        for (int i = 0; i < nr; ++i) {
          std::swap(a[i][t], a[i][pc]);
        }
        bool clean = false;
        while (!clean) {
          clean = true;
          for (int i = t + 1; i < nr; ++i) {
            if (a[i][t] == 0) {
              continue;
            }
            BigInt q = a[i][t] / a[t][t];
            for (int j = t; j < nc; ++j) {
              a[i][j] -= q * a[t][j];
            }
            if (a[i][t] != 0) {
              std::swap(a[t], a[i]);
              clean = false;
            }
          }
          for (int j = t + 1; j < nc; ++j) {
            if (a[t][j] == 0) {
              continue;
            }
            BigInt q = a[t][j] / a[t][t];
            for (int i = t; i < nr; ++i) {
              a[i][j] -= q * a[i][t];
            }
            if (a[t][j] != 0) {
              for (int i = 0; i < nr; ++i) {
                std::swap(a[i][t], a[i][j]);
              }
              clean = false;
            }
          }
          if (clean) {
            // divisibility of the trailing block
            for (int i = t + 1; i < nr && clean; ++i) {
              for (int j = t + 1; j < nc; ++j) {
                if (a[i][j] % a[t][t] != 0) {
                  for (int k = t; k < nc; ++k) {
                    a[t][k] += a[i][k];
                  }
                  clean = false;
                  break;
                }
              }
            }
          }
        }
        diag.push_back(abs(a[t][t]));
        ++t;
      }
      return diag;
    }

    // Normalise a diagonal into invariant factors d_1 | d_2 | ...
    inline std::vector<BigInt> invariant_factors(std::vector<BigInt> d) {
      for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
          BigInt g = gcd(d[i], d[j]);
          BigInt l = d[i] / g * d[j];
          d[i] = g;
          d[j] = l;
        }
      }
      return d;
    }

    template <typename T>
    SmithResult smith_with(IntegerMatrix const& m, SmithOptions const& opt) {
      std::vector<SparseRow<T>> rows(m.rows);
      for (int i = 0; i < m.rows; ++i) {
        for (auto const& [c, v] : m.data[i]) {
          rows[i].emplace_back(c, static_cast<T>(v));
        }
      }
      std::vector<bool> col_alive;
      SmithResult res;
      res.unit_pivots = eliminate_units(rows, m.cols, col_alive);
      std::vector<int> live_cols;
      std::vector<int> col_pos(m.cols, -1);
      for (int c = 0; c < m.cols; ++c) {
        if (col_alive[c]) {
          col_pos[c] = static_cast<int>(live_cols.size());
          live_cols.push_back(c);
        }
      }
      std::vector<int> live_rows;
      for (int i = 0; i < m.rows; ++i) {
        if (!rows[i].empty()) {
          live_rows.push_back(i);
        }
      }
      res.dense_rows = static_cast<int>(live_rows.size());
      res.dense_cols = static_cast<int>(live_cols.size());
      if (static_cast<std::uint64_t>(res.dense_rows) * res.dense_cols
          > opt.dense_budget) {
        throw BudgetError("smith-dense",
                          "dense Smith remainder " + std::to_string(res.dense_rows)
                              + "x" + std::to_string(res.dense_cols)
                              + " exceeds budget");
      }
      std::vector<std::vector<BigInt>> dense(
          res.dense_rows, std::vector<BigInt>(res.dense_cols, 0));
      for (int k = 0; k < res.dense_rows; ++k) {
        for (auto const& [c, v] : rows[live_rows[k]]) {
          dense[k][col_pos[c]] = BigInt(v);
        }
      }
      auto diag = dense_smith(std::move(dense));
      for (int i = 0; i < res.unit_pivots; ++i) {
        diag.push_back(1);
      }
      diag = invariant_factors(std::move(diag));
      res.rank = static_cast<int>(diag.size());
      res.invariants.free_rank = m.cols - res.rank;
      for (auto const& d : diag) {
        if (d > 1) {
          res.invariants.torsion.push_back(d);
        }
      }
      return res;
    }
  }  // namespace detail

  inline SmithResult smith_normal_form_detailed(IntegerMatrix const& m,
                                                SmithOptions const& opt = {}) {
    try {
      if (m.max_abs() < (BigInt(1) << 40)) {
        return detail::smith_with<long long>(m, opt);
      }
    } catch (detail::Overflow const&) {
    }
    return detail::smith_with<BigInt>(m, opt);
  }

  inline AbelianInvariants smith_normal_form(IntegerMatrix const& m,
                                             SmithOptions const& opt = {}) {
    return smith_normal_form_detailed(m, opt).invariants;
  }

  ////////////////////////////////////////////////////////////////////////
  // Ranks over fields
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    // Gaussian elimination over a field given by (sub_mul, divide, is_zero).
    template <typename F, typename Ops>
    int sparse_field_rank(std::vector<SparseRow<F>> rows, int cols, Ops ops) {
      int const nr = static_cast<int>(rows.size());
      std::vector<std::vector<int>> col_rows(cols);
      for (int i = 0; i < nr; ++i) {
        for (auto const& e : rows[i]) {
          col_rows[e.first].push_back(i);
        }
      }
      std::vector<bool> alive(nr, true);
      using Item = std::pair<std::size_t, int>;
      std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
      for (int i = 0; i < nr; ++i) {
        if (!rows[i].empty()) {
          heap.emplace(rows[i].size(), i);
        }
      }
      int rank = 0;
      SparseRow<F> scratch;
      while (!heap.empty()) {
        auto [len, r] = heap.top();
        heap.pop();
        if (!alive[r] || rows[r].size() != len || rows[r].empty()) {
          continue;
        }
        std::size_t best = 0, best_count = SIZE_MAX;
        for (std::size_t k = 0; k < rows[r].size(); ++k) {
          std::size_t cnt = col_rows[rows[r][k].first].size();
          if (cnt < best_count) {
            best_count = cnt;
            best = k;
          }
        }
        int const c = rows[r][best].first;
        F const piv = rows[r][best].second;
        auto pivot_row = rows[r];
        std::vector<int> targets;
        targets.swap(col_rows[c]);
        for (int r2 : targets) {
          if (r2 == r || !alive[r2]) {
            continue;
          }
          auto it = std::lower_bound(
              rows[r2].begin(), rows[r2].end(), c,
              [](auto const& e, int col) { return e.first < col; });
          if (it == rows[r2].end() || it->first != c) {
            continue;
          }
          F q = ops.divide(it->second, piv);
          std::vector<int> before;
          for (auto const& e : rows[r2]) {
            before.push_back(e.first);
          }
          scratch.clear();
          std::size_t i = 0, j = 0;
          auto& a = rows[r2];
          while (i < a.size() || j < pivot_row.size()) {
            if (j == pivot_row.size()
                || (i < a.size() && a[i].first < pivot_row[j].first)) {
              scratch.push_back(a[i++]);
            } else if (i == a.size() || pivot_row[j].first < a[i].first) {
              F v = ops.sub_mul(F(0), q, pivot_row[j].second);
              if (!ops.is_zero(v)) {
                scratch.emplace_back(pivot_row[j].first, v);
              }
              ++j;
            } else {
              F v = ops.sub_mul(a[i].second, q, pivot_row[j].second);
              if (!ops.is_zero(v)) {
                scratch.emplace_back(a[i].first, v);
              }
              ++i;
              ++j;
            }
          }
          a.swap(scratch);
          for (auto const& e : a) {
            if (!std::binary_search(before.begin(), before.end(), e.first)) {
              col_rows[e.first].push_back(r2);
            }
          }
          if (!a.empty()) {
            heap.emplace(a.size(), r2);
          }
        }
        alive[r] = false;
        rows[r].clear();
        ++rank;
      }
      return rank;
    }

    struct ModPOps {
      std::int64_t p;
      std::int64_t norm(std::int64_t v) const {
        v %= p;
        return v < 0 ? v + p : v;
      }
      std::int64_t pow(std::int64_t b, std::int64_t e) const {
        std::int64_t r = 1;
        b = norm(b);
        while (e > 0) {
          if (e & 1) {
            r = static_cast<std::int64_t>((__int128) r * b % p);
          }
          b = static_cast<std::int64_t>((__int128) b * b % p);
          e >>= 1;
        }
        return r;
      }
      std::int64_t divide(std::int64_t a, std::int64_t b) const {
        return static_cast<std::int64_t>((__int128) a * pow(b, p - 2) % p);
      }
      std::int64_t sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) const {
        return norm(static_cast<std::int64_t>(
            ((__int128) a - (__int128) q * b % p) % p));
      }
      bool is_zero(std::int64_t v) const {
        return v == 0;
      }
    };

    struct RationalOps {
      BigRational divide(BigRational const& a, BigRational const& b) const {
        return a / b;
      }
      BigRational sub_mul(BigRational const& a, BigRational const& q,
                          BigRational const& b) const {
        return a - q * b;
      }
      bool is_zero(BigRational const& v) const {
        return v == 0;
      }
    };
  }  // namespace detail

  inline int rank_mod_p(IntegerMatrix const& m, std::int64_t p) {
    detail::ModPOps ops{p};
    std::vector<SparseRow<std::int64_t>> rows(m.rows);
    for (int i = 0; i < m.rows; ++i) {
      for (auto const& [c, v] : m.data[i]) {
        BigInt r = v % p;
        std::int64_t x = ops.norm(static_cast<std::int64_t>(r));
        if (x != 0) {
          rows[i].emplace_back(c, x);
        }
      }
    }
    return detail::sparse_field_rank(std::move(rows), m.cols, ops);
  }

  inline int rational_rank(IntegerMatrix const& m) {
    std::vector<SparseRow<BigRational>> rows(m.rows);
    for (int i = 0; i < m.rows; ++i) {
      for (auto const& [c, v] : m.data[i]) {
        rows[i].emplace_back(c, BigRational(v));
      }
    }
    return detail::sparse_field_rank(std::move(rows), m.cols,
                                     detail::RationalOps{});
  }

  struct RankCrossCheck {
    int smith_rank = 0;
    int rational = 0;
    std::vector<std::pair<int, int>> mod_p;  // (p, rank)
    bool consistent = true;
    std::string detail;
  };

  // Free rank from SNF must equal cols - rational rank; rank mod p never
  // exceeds the rational rank and equals it when p divides no invariant
  // factor.
  inline RankCrossCheck cross_check_ranks(IntegerMatrix const& m,
                                          SmithResult const& snf,
                                          std::vector<int> const& primes
                                          = {2, 3, 5, 7, 11}) {
    RankCrossCheck out;
    out.smith_rank = snf.rank;
    out.rational = rational_rank(m);
    std::ostringstream os;
    if (out.rational != snf.rank) {
      out.consistent = false;
      os << "rational rank " << out.rational << " != SNF rank " << snf.rank
         << "; ";
    }
    for (int p : primes) {
      int r = rank_mod_p(m, p);
      out.mod_p.emplace_back(p, r);
      bool divides = false;
      for (auto const& d : snf.invariants.torsion) {
        if (d % p == 0) {
          divides = true;
        }
      }
      int expected = snf.rank;
      for (auto const& d : snf.invariants.torsion) {
        if (d % p == 0) {
          --expected;
        }
      }
      if (r > out.rational || (!divides && r != out.rational) || r != expected) {
        out.consistent = false;
        os << "rank mod " << p << " = " << r << " (expected " << expected
           << "); ";
      }
    }
    out.detail = os.str();
    return out;
  }

}  // namespace galcov

#endif  // GALCOV_SMITH_HPP_
