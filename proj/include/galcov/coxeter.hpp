#ifndef GALCOV_COXETER_HPP_
#define GALCOV_COXETER_HPP_

// Word reduction in the affine Weyl group of type A~_{r-1}, used to build
// explicit braid/commutation/cancellation traces for words on the edges of a
// dual cycle u_1..u_r.  u_i maps to s_i for i < r and u_r to s_0; adjacent
// edges braid, the rest commute, which is exactly the Coxeter graph of
// A~_{r-1} (a cycle).  Elements are affine permutations stored by their
// window [f(1), ..., f(r)].

#include <algorithm>
#include <map>
#include <vector>

#include "error.hpp"
#include "prover.hpp"

namespace galcov {

  class AffineCoxeter {
   public:
    using Element = std::vector<long long>;

    explicit AffineCoxeter(int r) : _r(r) {
      if (r < 3) {
        throw RangeError("affine type A needs a cycle of length >= 3");
      }
    }

    int rank() const noexcept {
      return _r;
    }

    Element identity() const {
      Element f(_r);
      for (int i = 0; i < _r; ++i) {
        f[i] = i + 1;
      }
      return f;
    }

    // w -> w s
    void right_multiply(Element& f, int s) const {
      if (s == 0) {
        long long f0 = f[_r - 1] - _r;
        long long f1 = f[0];
        f[0] = f0;
        f[_r - 1] = f1 + _r;
      } else {
        std::swap(f[s - 1], f[s]);
      }
    }

    bool is_descent(Element const& f, int s) const {
      if (s == 0) {
        return f[_r - 1] - _r > f[0];
      }
      return f[s - 1] > f[s];
    }

    long long length(Element const& f) const {
      long long l = 0;
      for (int i = 0; i < _r; ++i) {
        for (int j = i + 1; j < _r; ++j) {
          long long d = f[j] - f[i];
          long long q = d >= 0 ? d / _r : -((-d + _r - 1) / _r);
          l += q < 0 ? -q : q;
        }
      }
      return l;
    }

    // m(s, t) for distinct generators
    int order(int s, int t) const {
      int d = ((s - t) % _r + _r) % _r;
      return (d == 1 || d == _r - 1) ? 3 : 2;
    }

   private:
    int _r;
  };

  // Rewrites words over one dual cycle into a canonical reduced form,
  // recording each move against a MoveSet.
  class CycleReducer {
   public:
    CycleReducer(std::vector<int> cycle, MoveSet const& ms)
        : _cycle(std::move(cycle)), _ms(ms), _cox(static_cast<int>(_cycle.size())) {
      int const r = static_cast<int>(_cycle.size());
      for (int i = 1; i <= r; ++i) {
        _index[_cycle[i - 1]] = i % r;
      }
    }

    bool covers(Word const& w) const {
      return std::all_of(w.begin(), w.end(), [&](Letter l) {
        return _index.count(generator_of(l)) > 0;
      });
    }

    AffineCoxeter::Element element(Word const& w) const {
      auto f = _cox.identity();
      for (Letter l : w) {
        _cox.right_multiply(f, gen(generator_of(l)));
      }
      return f;
    }

    // Trace from w to the canonical reduced word of its element.
    ProofTrace reduce(Word const& w_in) {
      Word w = w_in.involutory();
      if (!covers(w)) {
        throw InputError("word leaves the cycle alphabet");
      }
      _steps.clear();
      _word = w.letters();
      // left to right: keep a reduced prefix
      auto x = _cox.identity();
      int len = 0;
      while (len < static_cast<int>(_word.size())) {
        int s = gen(_word[len]);
        if (_cox.is_descent(x, s)) {
          make_end_with(len, x, s);
          // cancel the pair at len-1, len
          record(len - 1, _ms.involution_rule(_word[len]), 1);
          _word.erase(_word.begin() + len - 1, _word.begin() + len + 1);
          --len;
          _cox.right_multiply(x, s);
        } else {
          _cox.right_multiply(x, s);
          ++len;
        }
      }
      canonicalize(len, x);
      ProofTrace t{w, Word(_word), _steps};
      t.replay(_ms);
      return t;
    }

    // Trace proving w1 = w2 when their elements agree.
    std::optional<ProofTrace> prove(Word const& w1, Word const& w2) {
      auto t1 = reduce(w1);
      auto t2 = reduce(w2);
      if (t1.final != t2.final) {
        return std::nullopt;
      }
      t1.append(t2.reversed(_ms));
      return t1;
    }

   private:
    int gen(int label) const {
      return _index.at(label);
    }
    int label(int s) const {
      int const r = static_cast<int>(_cycle.size());
      return _cycle[(s == 0 ? r : s) - 1];
    }

    void record(int pos, int rule, int dir) {
      if (rule < 0) {
        throw InputError("move set lacks a rule needed for the cycle");
      }
      _steps.push_back({pos, rule, dir});
    }

    // Replace the factor at pos by `to`, logging the rule in the right
    // direction.
    void rewrite(int pos, int rule, std::vector<int> const& to) {
      auto const& r = _ms.rule(rule);
      int dir = std::equal(r.rhs.begin(), r.rhs.end(), to.begin(), to.end()) ? 1 : -1;
      record(pos, rule, dir);
      std::copy(to.begin(), to.end(), _word.begin() + pos);
    }

    // Make _word[0..len) (reduced for x, s a right descent) end with s.
    void make_end_with(int len, AffineCoxeter::Element const& x, int s) {
      int t = gen(_word[len - 1]);
      if (t == s) {
        return;
      }
      int m = _cox.order(s, t);
      make_end_with_alt(len, x, t, s, m);
      int a = label(s), b = label(t);
      if (m == 2) {
        rewrite(len - 2, _ms.commute_rule(a, b), {b, a});
        // now ... t s
      } else {
        rewrite(len - 3, _ms.braid_rule(a, b), {a, b, a});
      }
    }

    // Make _word[0..len) end with the alternating word of length k whose
    // last letter is `last` and whose other letter is `other`.
    void make_end_with_alt(int len, AffineCoxeter::Element x, int last, int other,
                           int k) {
      make_end_with(len, x, last);
      if (k == 1) {
        return;
      }
      _cox.right_multiply(x, last);
      make_end_with_alt(len - 1, x, other, last, k - 1);
    }

    // Reduced word -> canonical word: peel the smallest right descent.
    void canonicalize(int len, AffineCoxeter::Element x) {
      int const r = static_cast<int>(_cycle.size());
      while (len > 0) {
        int s = 0;
        while (s < r && !_cox.is_descent(x, s)) {
          ++s;
        }
        make_end_with(len, x, s);
        _cox.right_multiply(x, s);
        --len;
      }
    }

    std::vector<int> _cycle;
    MoveSet const& _ms;
    AffineCoxeter _cox;
    std::map<int, int> _index;
    std::vector<int> _word;
    std::vector<ProofStep> _steps;
  };

}  // namespace galcov

#endif  // GALCOV_COXETER_HPP_
