#ifndef GALCOV_COSET_TABLE_HPP_
#define GALCOV_COSET_TABLE_HPP_

// Coset table of the kernel of a permutation representation.  The quotient is
// the permutation group itself, so cosets are enumerated by closure over the
// generator images rather than by Todd-Coxeter.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "permutation.hpp"

namespace galcov {

  struct CosetTable {
    int generator_count = 0;
    // table[c][g-1]: coset reached from c by the right action of generator g
    std::vector<std::vector<int>> table;
    // inverse action: inverse[c][g-1] = c' with table[c'][g-1] == c
    std::vector<std::vector<int>> inverse;
    // Schreier tree: coset 0 is the kernel itself
    std::vector<int> parent;
    std::vector<int> parent_generator;
    std::vector<Permutation> representative;

    int coset_count() const noexcept {
      return static_cast<int>(table.size());
    }

    bool is_tree_edge(int coset, int g) const {
      int d = table[coset][g - 1];
      return d != 0 && parent[d] == coset && parent_generator[d] == g;
    }

    bool complete() const {
      for (auto const& row : table) {
        if (static_cast<int>(row.size()) != generator_count
            || std::find(row.begin(), row.end(), -1) != row.end()) {
          return false;
        }
      }
      return !table.empty();
    }
  };

  struct CosetOptions {
    std::uint64_t limit = 1'000'000;
    // Nonzero seeds shuffle the generator order used by the closure.
    std::uint64_t seed = 0;
  };

  inline std::uint64_t factorial_u64(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) {
      if (f > UINT64_MAX / static_cast<std::uint64_t>(i)) {
        return UINT64_MAX;
      }
      f *= static_cast<std::uint64_t>(i);
    }
    return f;
  }

  namespace detail {
    struct PermKeyHash {
      std::size_t operator()(std::vector<int> const& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
          h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6)
               + (h >> 2);
        }
        return h;
      }
    };
  }  // namespace detail

  // Breadth-first closure of the image group.  The group generated by
  // transpositions of a connected graph is the full symmetric group, so the
  // size guard uses degree!.
  inline CosetTable coset_table_from_perms(GeneratorMap const& map,
                                           CosetOptions const& opt = {}) {
    std::uint64_t expected = factorial_u64(map.degree);
    if (expected > opt.limit) {
      throw BudgetError("coset-limit",
                        "coset enumeration needs " + std::to_string(map.degree)
                            + "! = "
                            + (expected == UINT64_MAX ? std::string("(overflow)")
                                                      : std::to_string(expected))
                            + " cosets, above the limit of "
                            + std::to_string(opt.limit));
    }
    int const ng = map.generator_count();
    std::vector<int> order(ng);
    std::iota(order.begin(), order.end(), 1);
    if (opt.seed != 0) {
      std::mt19937_64 rng(opt.seed);
      std::shuffle(order.begin(), order.end(), rng);
    }

    CosetTable t;
    t.generator_count = ng;
    std::unordered_map<std::vector<int>, int, detail::PermKeyHash> index;
    t.representative.emplace_back(map.degree);
    index.emplace(t.representative[0].raw(), 0);
    t.parent.push_back(-1);
    t.parent_generator.push_back(0);
    t.table.emplace_back(ng, -1);
    for (std::size_t c = 0; c < t.representative.size(); ++c) {
      for (int g : order) {
        Permutation p = t.representative[c] * map.images[g];
        auto [it, fresh] = index.emplace(p.raw(), static_cast<int>(t.representative.size()));
        if (fresh) {
          if (t.representative.size() >= opt.limit) {
            throw BudgetError("coset-limit", "coset limit exceeded");
          }
          t.representative.push_back(std::move(p));
          t.parent.push_back(static_cast<int>(c));
          t.parent_generator.push_back(g);
          t.table.emplace_back(ng, -1);
        }
        t.table[c][g - 1] = it->second;
      }
    }
    int const nc = t.coset_count();
    t.inverse.assign(nc, std::vector<int>(ng, -1));
    for (int c = 0; c < nc; ++c) {
      for (int g = 1; g <= ng; ++g) {
        t.inverse[t.table[c][g - 1]][g - 1] = c;
      }
    }
    return t;
  }

}  // namespace galcov

#endif  // GALCOV_COSET_TABLE_HPP_
