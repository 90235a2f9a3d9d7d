#ifndef GALCOV_KERNEL_HOMOLOGY_HPP_
#define GALCOV_KERNEL_HOMOLOGY_HPP_

// H_1 of K_1 = ker(G_1 -> S_{2mn}) by coset closure, Reidemeister-Schreier
// rewriting and Smith normal form, plus the images of the gamma elements.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coset_table.hpp"
#include "error.hpp"
#include "grid_complex.hpp"
#include "json.hpp"
#include "permutation.hpp"
#include "presentation.hpp"
#include "reidemeister_schreier.hpp"
#include "smith.hpp"

namespace galcov {

  struct HomologyOptions {
    std::uint64_t coset_limit = 1'000'000;
    std::uint64_t seed = 0;
    SmithOptions smith{};
    bool cross_check = true;
  };

  struct KernelHomology {
    int m = 0, n = 0;
    std::uint64_t seed = 0;
    int cosets = 0;
    int schreier_generators = 0;
    int relators = 0;
    SmithResult snf;
    RankCrossCheck ranks;
  };

  // Everything needed to push further words through the same rewriting.
  struct KernelContext {
    GeneratorMap map;
    CosetTable table;
    IntegerMatrix relations;
    KernelHomology result;
  };

  inline KernelContext kernel_context(DegenerationComplex const& cx,
                                      GeneratorMap const& map,
                                      HomologyOptions const& opt = {}) {
    KernelContext ctx;
    ctx.map = map;
    ctx.table = coset_table_from_perms(map, {opt.coset_limit, opt.seed});
    auto g1 = g1_presentation(cx);
    auto k = reidemeister_schreier(g1, ctx.table);
    ctx.relations = abelianize(k);
    auto& r = ctx.result;
    r.m = cx.params().m;
    r.n = cx.params().n;
    r.seed = opt.seed;
    r.cosets = ctx.table.coset_count();
    r.schreier_generators = k.generator_count();
    r.relators = static_cast<int>(k.relators.size());
    r.snf = smith_normal_form_detailed(ctx.relations, opt.smith);
    if (opt.cross_check) {
      r.ranks = cross_check_ranks(ctx.relations, r.snf);
    }
    return ctx;
  }

  inline KernelContext kernel_context(DegenerationComplex const& cx,
                                      HomologyOptions const& opt = {}) {
    return kernel_context(cx, transposition_map(cx), opt);
  }

  inline AbelianInvariants h1_of_kernel(int m, int n,
                                        HomologyOptions const& opt = {}) {
    return kernel_context(build_complex(m, n), opt).result.snf.invariants;
  }

  struct ElementImages {
    std::vector<Word> words;
    // exponent-sum vectors over the Schreier generators
    std::vector<std::vector<long long>> vectors;
    // rank of the span of the images in H_1 (x) Q
    int rank = 0;
    // per-element: image is zero in H_1 (x) Q
    std::vector<bool> torsion;
  };

  inline std::vector<long long> schreier_vector(Word const& w,
                                                SchreierIndex const& idx,
                                                int columns) {
    int end = 0;
    Word s = idx.rewrite(w, 0, &end);
    if (end != 0) {
      throw InputError("word " + w.to_string() + " is not in the kernel");
    }
    std::vector<long long> v(columns, 0);
    for (Letter l : s) {
      v[generator_of(l) - 1] += exponent_of(l);
    }
    return v;
  }

  // Rank in H_1 (x) Q of the span of words: rank(R + W) - rank(R).
  inline ElementImages element_images_in_h1(std::vector<Word> const& words,
                                            KernelContext const& ctx) {
    for (auto const& w : words) {
      if (!kernel_membership(w, ctx.map)) {
        throw InputError("word " + w.to_string() + " is not in the kernel");
      }
    }
    SchreierIndex idx(ctx.table);
    int const cols = idx.count();
    ElementImages out;
    out.words = words;
    int const base = ctx.result.snf.rank;
    IntegerMatrix aug = ctx.relations;
    for (auto const& w : words) {
      auto v = schreier_vector(w, idx, cols);
      out.vectors.push_back(v);
      SparseRow<BigInt> row;
      for (int c = 0; c < cols; ++c) {
        if (v[c] != 0) {
          row.emplace_back(c, BigInt(v[c]));
        }
      }
      IntegerMatrix single = ctx.relations;
      single.data.push_back(row);
      ++single.rows;
      out.torsion.push_back(rational_rank(single) == base);
      aug.data.push_back(std::move(row));
      ++aug.rows;
    }
    out.rank = rational_rank(aug) - base;
    return out;
  }

  inline nlohmann::ordered_json to_json(KernelHomology const& h) {
    nlohmann::ordered_json j;
    j["schema"] = "galcov-homology/1";
    j["m"] = h.m;
    j["n"] = h.n;
    j["seed"] = h.seed;
    j["cosets"] = h.cosets;
    j["schreier_generators"] = h.schreier_generators;
    j["relators"] = h.relators;
    j["free_rank"] = h.snf.invariants.free_rank;
    auto tors = nlohmann::ordered_json::array();
    for (auto const& d : h.snf.invariants.torsion) {
      tors.push_back(d.str());
    }
    j["torsion"] = tors;
    j["h1"] = h.snf.invariants.to_string();
    nlohmann::ordered_json rk;
    rk["smith"] = h.ranks.smith_rank;
    rk["rational"] = h.ranks.rational;
    nlohmann::ordered_json mp;
    for (auto const& [p, r] : h.ranks.mod_p) {
      mp[std::to_string(p)] = r;
    }
    rk["mod_p"] = mp;
    rk["consistent"] = h.ranks.consistent;
    j["ranks"] = rk;
    return j;
  }

}  // namespace galcov

#endif  // GALCOV_KERNEL_HOMOLOGY_HPP_
