#ifndef GALCOV_REIDEMEISTER_SCHREIER_HPP_
#define GALCOV_REIDEMEISTER_SCHREIER_HPP_

#include <string>
#include <vector>

#include "coset_table.hpp"
#include "error.hpp"
#include "presentation.hpp"

namespace galcov {

  // Numbering of the Schreier generators: one per non-tree table entry.
  class SchreierIndex {
   public:
    explicit SchreierIndex(CosetTable const& t) : _t(&t) {
      int const nc = t.coset_count(), ng = t.generator_count;
      _id.assign(nc, std::vector<int>(ng, 0));
      int next = 0;
      for (int c = 0; c < nc; ++c) {
        for (int g = 1; g <= ng; ++g) {
          if (!t.is_tree_edge(c, g)) {
            _id[c][g - 1] = ++next;
          }
        }
      }
      _count = next;
    }

    int count() const noexcept {
      return _count;
    }

    // 0 for tree entries
    int id(int coset, int g) const {
      return _id[coset][g - 1];
    }

    // Rewrite a word read from `start` into Schreier generators; returns the
    // coset reached at the end through `end` when given.
    Word rewrite(Word const& w, int start = 0, int* end = nullptr) const {
      Word out;
      int c = start;
      for (Letter l : w) {
        int g = generator_of(l);
        if (g < 1 || g > _t->generator_count) {
          throw InputError("letter outside the coset table alphabet");
        }
        if (l > 0) {
          if (int s = _id[c][g - 1]) {
            out.push_back(s);
          }
          c = _t->table[c][g - 1];
        } else {
          int prev = _t->inverse[c][g - 1];
          if (int s = _id[prev][g - 1]) {
            out.push_back(-s);
          }
          c = prev;
        }
      }
      if (end) {
        *end = c;
      }
      return out;
    }

   private:
    CosetTable const* _t;
    std::vector<std::vector<int>> _id;
    int _count = 0;
  };

  // Kernel presentation: every relator rewritten at every coset.
  inline GroupPresentation reidemeister_schreier(GroupPresentation const& p,
                                                 CosetTable const& t) {
    if (!t.complete()) {
      throw InputError("coset table is incomplete");
    }
    if (p.generator_count() != t.generator_count) {
      throw InputError("presentation and coset table alphabets differ");
    }
    SchreierIndex idx(t);
    GroupPresentation out;
    out.name = "ker(" + p.name + ")";
    for (int s = 1; s <= idx.count(); ++s) {
      out.generators.push_back("s" + std::to_string(s));
    }
    for (auto const& r : p.relators) {
      for (int c = 0; c < t.coset_count(); ++c) {
        out.relators.push_back({idx.rewrite(r.word, c), r.tag, r.label});
      }
    }
    return out;
  }

}  // namespace galcov

#endif  // GALCOV_REIDEMEISTER_SCHREIER_HPP_
