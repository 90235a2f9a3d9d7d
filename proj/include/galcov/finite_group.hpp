#ifndef GALCOV_FINITE_GROUP_HPP_
#define GALCOV_FINITE_GROUP_HPP_

// Small finite groups as multiplication tables, and homomorphism counting
// from a finite presentation by backtracking over generator images.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"
#include "permutation.hpp"
#include "presentation.hpp"

namespace galcov {

  // Elements 0..order-1, element 0 is the identity.
  class FiniteGroup {
   public:
    FiniteGroup() = default;
    FiniteGroup(std::string name, std::vector<std::vector<int>> table)
        : _name(std::move(name)), _table(std::move(table)) {
      int const n = order();
      _inv.assign(n, -1);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (_table[a][b] == 0) {
            _inv[a] = b;
          }
        }
        if (_inv[a] < 0 || _table[0][a] != a || _table[a][0] != a) {
          throw InputError("table of " + _name + " is not a group with identity 0");
        }
      }
    }

    // Closure of a set of permutations.
    static FiniteGroup from_permutations(std::string name,
                                         std::vector<Permutation> const& gens,
                                         int degree) {
      std::vector<Permutation> elts{Permutation(degree)};
      std::map<Permutation, int> index{{elts[0], 0}};
      for (std::size_t i = 0; i < elts.size(); ++i) {
        for (auto const& g : gens) {
          auto p = elts[i] * g;
          if (index.emplace(p, static_cast<int>(elts.size())).second) {
            elts.push_back(p);
          }
        }
      }
      int const n = static_cast<int>(elts.size());
      std::vector<std::vector<int>> t(n, std::vector<int>(n));
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          t[a][b] = index.at(elts[a] * elts[b]);
        }
      }
      return FiniteGroup(std::move(name), std::move(t));
    }

    std::string const& name() const noexcept {
      return _name;
    }
    int order() const noexcept {
      return static_cast<int>(_table.size());
    }
    int mul(int a, int b) const {
      return _table[a][b];
    }
    int inv(int a) const {
      return _inv[a];
    }

   private:
    std::string _name;
    std::vector<std::vector<int>> _table;
    std::vector<int> _inv;
  };

  namespace groups {
    inline Permutation cycle_perm(int degree, std::vector<int> const& cyc) {
      std::vector<int> img(degree);
      std::iota(img.begin(), img.end(), 1);
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        img[cyc[i] - 1] = cyc[(i + 1) % cyc.size()];
      }
      return Permutation::from_images(img);
    }

    inline FiniteGroup trivial() {
      return FiniteGroup("1", {{0}});
    }

    inline FiniteGroup cyclic(int k) {
      std::vector<int> c(k);
      std::iota(c.begin(), c.end(), 1);
      return FiniteGroup::from_permutations("C" + std::to_string(k),
                                            {cycle_perm(k, c)}, k);
    }

    // Product of cyclic groups acting on disjoint blocks.
    inline FiniteGroup abelian(std::vector<int> const& factors) {
      int degree = 0;
      for (int f : factors) {
        degree += f;
      }
      std::vector<Permutation> gens;
      std::string name;
      int off = 0;
      for (int f : factors) {
        std::vector<int> c(f);
        std::iota(c.begin(), c.end(), off + 1);
        gens.push_back(cycle_perm(degree, c));
        name += (name.empty() ? "C" : "xC") + std::to_string(f);
        off += f;
      }
      return FiniteGroup::from_permutations(name, gens, degree);
    }

    inline FiniteGroup symmetric3() {
      return FiniteGroup::from_permutations(
          "S3", {cycle_perm(3, {1, 2}), cycle_perm(3, {1, 2, 3})}, 3);
    }

    inline FiniteGroup dihedral8() {
      return FiniteGroup::from_permutations(
          "D8", {cycle_perm(4, {1, 2, 3, 4}), cycle_perm(4, {1, 3})}, 4);
    }

    // Quaternion group: elements +-1, +-i, +-j, +-k.
    inline FiniteGroup quaternion8() {
      // unit table for 1,i,j,k with signs
      static int const unit[4][4] = {
          {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
      static int const sign[4][4] = {
          {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
      // element index = unit + 4 * (negative ? 1 : 0)
      std::vector<std::vector<int>> t(8, std::vector<int>(8));
      for (int a = 0; a < 8; ++a) {
        for (int b = 0; b < 8; ++b) {
          int ua = a % 4, ub = b % 4;
          int s = sign[ua][ub] * (a >= 4 ? -1 : 1) * (b >= 4 ? -1 : 1);
          t[a][b] = unit[ua][ub] + (s < 0 ? 4 : 0);
        }
      }
      return FiniteGroup("Q8", std::move(t));
    }

    // One representative of every isomorphism class of order <= 8.
    inline std::vector<FiniteGroup> all_up_to_order_8() {
      return {trivial(),           cyclic(2),         cyclic(3),
              cyclic(4),           abelian({2, 2}),   cyclic(5),
              cyclic(6),           symmetric3(),      cyclic(7),
              cyclic(8),           abelian({4, 2}),   abelian({2, 2, 2}),
              dihedral8(),         quaternion8()};
    }

    inline FiniteGroup by_name(std::string const& name) {
      for (auto& g : all_up_to_order_8()) {
        if (g.name() == name) {
          return g;
        }
      }
      if (name == "S4") {
        return FiniteGroup::from_permutations(
            "S4", {cycle_perm(4, {1, 2}), cycle_perm(4, {1, 2, 3, 4})}, 4);
      }
      throw InputError("unknown target group '" + name + "'");
    }
  }  // namespace groups

  struct HomCountOptions {
    std::uint64_t budget = 100'000'000;  // relator evaluations
  };

  inline std::uint64_t hom_count(GroupPresentation const& p,
                                 FiniteGroup const& target,
                                 HomCountOptions const& opt = {}) {
    int const ng = p.generator_count();
    // relators become checkable once their largest generator is assigned
    std::vector<std::vector<Word const*>> due(ng + 1);
    for (auto const& r : p.relators) {
      int g = r.word.max_generator();
      if (g > ng) {
        throw InputError("relator mentions generator beyond the alphabet");
      }
      due[g].push_back(&r.word);
    }
    std::vector<int> img(ng + 1, 0);
    std::uint64_t evals = 0;
    std::uint64_t count = 0;

    auto holds = [&](Word const& w) {
      if (++evals > opt.budget) {
        throw BudgetError("hom-count",
                          "hom_count exceeded budget of "
                              + std::to_string(opt.budget)
                              + " relator evaluations");
      }
      int x = 0;
      for (Letter l : w) {
        int e = img[generator_of(l)];
        x = target.mul(x, l > 0 ? e : target.inv(e));
      }
      return x == 0;
    };

    std::function<void(int)> rec = [&](int g) {
      if (g > ng) {
        ++count;
        return;
      }
      for (int e = 0; e < target.order(); ++e) {
        img[g] = e;
        bool ok = true;
        for (auto const* w : due[g]) {
          if (!holds(*w)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          rec(g + 1);
        }
      }
    };
    for (auto const* w : due[0]) {
      if (!holds(*w)) {
        return 0;
      }
    }
    rec(1);
    return count;
  }

}  // namespace galcov

#endif  // GALCOV_FINITE_GROUP_HPP_
