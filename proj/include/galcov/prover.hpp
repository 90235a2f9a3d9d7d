#ifndef GALCOV_PROVER_HPP_
#define GALCOV_PROVER_HPP_

// Bounded equality proofs in involutory presentations.  Words are searched
// modulo commutation: every state is the lexicographic normal form of its
// trace class, and rewrite rules match factors up to commuting letters.  Each
// search edge expands into primitive steps (adjacent swaps and rule
// applications) so a finished trace replays letter by letter.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "json.hpp"
#include "permutation.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace galcov {

  struct Rule {
    Word lhs;
    Word rhs;
    RelatorTag tag;
    std::string label;
  };

  // Rewrite rules of an involutory presentation.  Commutation rules are kept
  // for trace bookkeeping; the search treats them implicitly.
  class MoveSet {
   public:
    MoveSet() = default;

    // `split_relators`: also add every cyclic split x -> y of the quintic,
    // fork and cycle relators (x y^-1 a rotation of the relator or its
    // inverse), so one move can replace a single letter by its expansion.
    static MoveSet from_presentation(GroupPresentation const& p,
                                     bool split_relators = true) {
      MoveSet ms;
      ms._generators = p.generator_count();
      ms._commute.assign(ms._generators + 1,
                         std::vector<int>(ms._generators + 1, -1));
      ms._braid.assign(ms._generators + 1,
                       std::vector<int>(ms._generators + 1, -1));
      ms._involution.assign(ms._generators + 1, -1);
      for (auto const& r : p.relators) {
        Word w = r.word.involutory();
        switch (r.tag) {
          case RelatorTag::involution:
            ms._involution[generator_of(w[0])] = ms.add({w, Word{}, r.tag, r.label});
            break;
          case RelatorTag::commutator: {
            int i = w[0], j = w[1];
            int id = ms.add({Word{i, j}, Word{j, i}, r.tag, r.label});
            ms._commute[i][j] = ms._commute[j][i] = id;
            break;
          }
          case RelatorTag::triple: {
            int i = w[0], j = w[1];
            int id = ms.add({Word{i, j, i}, Word{j, i, j}, r.tag, r.label});
            ms._braid[i][j] = ms._braid[j][i] = id;
            break;
          }
          default:
            ms.add_relator(w, r.tag, r.label, split_relators);
            break;
        }
      }
      return ms;
    }

    // x -> y for the half split (and every split when `all_splits`).
    void add_relator(Word const& w, RelatorTag tag, std::string const& label,
                     bool all_splits) {
      int const len = static_cast<int>(w.size());
      if (len == 0) {
        return;
      }
      std::set<std::pair<std::vector<Letter>, std::vector<Letter>>> seen;
      for (auto const& rel : {w, w.inverse().involutory()}) {
        for (int rot = 0; rot < len; ++rot) {
          std::vector<Letter> c(rel.begin() + rot, rel.end());
          c.insert(c.end(), rel.begin(), rel.begin() + rot);
          for (int k = (len + 1) / 2; k <= len - (all_splits ? 1 : 0); ++k) {
            if (!all_splits && k != (len + 1) / 2) {
              continue;
            }
            Word x(std::vector<Letter>(c.begin(), c.begin() + k));
            Word y = Word(std::vector<Letter>(c.begin() + k, c.end()))
                         .inverse()
                         .involutory();
            if (seen.insert({x.letters(), y.letters()}).second
                && !seen.count({y.letters(), x.letters()})) {
              add({x, y, tag, label});
            }
          }
          if (!all_splits) {
            break;
          }
        }
      }
    }

    int add(Rule r) {
      for (Letter l : r.lhs) {
        _generators = std::max(_generators, generator_of(l));
      }
      for (Letter l : r.rhs) {
        _generators = std::max(_generators, generator_of(l));
      }
      _rules.push_back(std::move(r));
      return static_cast<int>(_rules.size()) - 1;
    }

    std::vector<Rule> const& rules() const noexcept {
      return _rules;
    }
    Rule const& rule(int id) const {
      return _rules.at(id);
    }
    int generator_count() const noexcept {
      return _generators;
    }
    bool commutes(int a, int b) const {
      return a != b && a < static_cast<int>(_commute.size())
             && b < static_cast<int>(_commute.size()) && _commute[a][b] >= 0;
    }
    int commute_rule(int a, int b) const {
      return _commute.at(a).at(b);
    }
    int braid_rule(int a, int b) const {
      return _braid.at(a).at(b);
    }
    int involution_rule(int a) const {
      return _involution.at(a);
    }
    bool is_commute(int id) const {
      return _rules[id].tag == RelatorTag::commutator;
    }

   private:
    int _generators = 0;
    std::vector<Rule> _rules;
    std::vector<std::vector<int>> _commute;
    std::vector<std::vector<int>> _braid;
    std::vector<int> _involution;
  };

  // direction +1 replaces the rule's lhs at `position` by its rhs; -1 the
  // reverse.
  struct ProofStep {
    int position = 0;
    int rule = 0;
    int direction = 1;

    friend bool operator==(ProofStep const&, ProofStep const&) = default;
  };

  struct ProofTrace {
    Word initial;
    Word final;
    std::vector<ProofStep> steps;

    // Applies one step; throws InputError when the pattern is absent.
    static Word apply(Word const& w, ProofStep const& s, MoveSet const& ms) {
      auto const& r = ms.rule(s.rule);
      auto const& from = s.direction > 0 ? r.lhs : r.rhs;
      auto const& to = s.direction > 0 ? r.rhs : r.lhs;
      auto const& l = w.letters();
      if (s.position < 0
          || static_cast<std::size_t>(s.position) + from.size() > l.size()
          || !std::equal(from.begin(), from.end(), l.begin() + s.position)) {
        throw InputError("proof step does not match at position "
                         + std::to_string(s.position));
      }
      std::vector<Letter> out(l.begin(), l.begin() + s.position);
      out.insert(out.end(), to.begin(), to.end());
      out.insert(out.end(), l.begin() + s.position + from.size(), l.end());
      return Word(std::move(out));
    }

    Word replay(MoveSet const& ms) const {
      Word w = initial;
      for (auto const& s : steps) {
        w = apply(w, s, ms);
      }
      if (w != final) {
        throw InputError("replay ends at " + w.to_string() + ", expected "
                         + final.to_string());
      }
      return w;
    }

    // Every intermediate word, initial and final included.
    std::vector<Word> words(MoveSet const& ms) const {
      std::vector<Word> out{initial};
      for (auto const& s : steps) {
        out.push_back(apply(out.back(), s, ms));
      }
      return out;
    }

    // The trace read backwards proves final = initial.
    ProofTrace reversed(MoveSet const& ms) const {
      ProofTrace t{final, initial, {}};
      for (std::size_t k = steps.size(); k-- > 0;) {
        t.steps.push_back({steps[k].position, steps[k].rule, -steps[k].direction});
      }
      return t;
    }

    ProofTrace& append(ProofTrace const& next) {
      if (steps.empty() && initial.empty() && final.empty()) {
        *this = next;
        return *this;
      }
      if (next.initial != final) {
        throw InputError("traces do not compose");
      }
      steps.insert(steps.end(), next.steps.begin(), next.steps.end());
      final = next.final;
      return *this;
    }

    // Steps that are not commutations.
    std::size_t essential_steps(MoveSet const& ms) const {
      return std::count_if(steps.begin(), steps.end(), [&](ProofStep const& s) {
        return !ms.is_commute(s.rule);
      });
    }
  };

  // Every step preserves the permutation image.
  inline bool trace_preserves_images(ProofTrace const& t, MoveSet const& ms,
                                     GeneratorMap const& map) {
    auto const target = eval_word(t.initial, map);
    for (auto const& w : t.words(ms)) {
      if (eval_word(w, map) != target) {
        return false;
      }
    }
    return true;
  }

  inline nlohmann::ordered_json to_json(ProofTrace const& t, MoveSet const& ms) {
    nlohmann::ordered_json j;
    j["schema"] = "galcov-proof/1";
    j["initial"] = t.initial.letters();
    j["final"] = t.final.letters();
    auto steps = nlohmann::ordered_json::array();
    for (auto const& s : t.steps) {
      auto const& r = ms.rule(s.rule);
      nlohmann::ordered_json o;
      o["position"] = s.position;
      o["rule"] = s.rule;
      o["direction"] = s.direction;
      o["tag"] = to_string(r.tag);
      o["lhs"] = r.lhs.letters();
      o["rhs"] = r.rhs.letters();
      steps.push_back(o);
    }
    j["steps"] = steps;
    return j;
  }

  inline ProofTrace trace_from_json(nlohmann::json const& j) {
    ProofTrace t;
    t.initial = Word(j.at("initial").get<std::vector<Letter>>());
    t.final = Word(j.at("final").get<std::vector<Letter>>());
    for (auto const& s : j.at("steps")) {
      t.steps.push_back({s.at("position").get<int>(), s.at("rule").get<int>(),
                         s.at("direction").get<int>()});
    }
    return t;
  }

  enum class ProofStatus { proven, unknown, unequal };

  inline char const* to_string(ProofStatus s) {
    switch (s) {
      case ProofStatus::proven:
        return "PROVEN";
      case ProofStatus::unknown:
        return "UNKNOWN";
      case ProofStatus::unequal:
        return "UNEQUAL";
    }
    return "?";
  }

  struct ProofResult {
    ProofStatus status = ProofStatus::unknown;
    std::optional<ProofTrace> trace;
    std::uint64_t work = 0;  // successful rule applications
    std::size_t states = 0;

    bool proven() const noexcept {
      return status == ProofStatus::proven;
    }
  };

  struct SearchOptions {
    std::uint64_t budget = 1'000'000;
    // words may grow this far beyond the longer endpoint
    int slack = 8;
    // letters allowed for j j insertion; empty means those of the endpoints
    std::vector<int> insertion_alphabet;
    bool allow_insertion = true;
  };

  namespace detail {

    // Commutation-aware word utilities over one MoveSet.
    class TraceOps {
     public:
      explicit TraceOps(MoveSet const& ms) : _ms(ms) {}

      // Lexicographic normal form; swaps that realise it go to `steps`.
      std::vector<int> canonical(std::vector<int> w,
                                 std::vector<ProofStep>* steps, int offset = 0) const {
        int const n = static_cast<int>(w.size());
        for (int out = 0; out < n; ++out) {
          int best = -1;
          for (int q = out; q < n; ++q) {
            bool free = true;
            for (int k = out; k < q && free; ++k) {
              free = _ms.commutes(w[k], w[q]);
            }
            if (free && (best < 0 || w[q] < w[best])) {
              best = q;
            }
          }
          for (int q = best; q > out; --q) {
            swap_at(w, q - 1, steps, offset);
          }
        }
        return w;
      }

      void swap_at(std::vector<int>& w, int pos, std::vector<ProofStep>* steps,
                   int offset) const {
        if (steps) {
          int a = w[pos], b = w[pos + 1];
          int id = _ms.commute_rule(a, b);
          auto const& r = _ms.rule(id);
          int dir = (r.lhs[0] == a && r.lhs[1] == b) ? 1 : -1;
          steps->push_back({pos + offset, id, dir});
        }
        std::swap(w[pos], w[pos + 1]);
      }

      // Find `pat` as a factor up to commutation, anchored at `p`.  On
      // success returns the index order of a rearranged representative in
      // which the chosen letters are contiguous starting at `*start`.
      bool match(std::vector<int> const& w, std::vector<int> const& pat, int p,
                 std::vector<int>& order, int& start) const {
        int const n = static_cast<int>(w.size());
        int const k = static_cast<int>(pat.size());
        if (w[p] != pat[0] || p + k > n) {
          return false;
        }
        std::vector<int> chosen{p}, left, right;
        int cur = p;
        for (int t = 1; t < k; ++t) {
          int q = cur + 1;
          while (q < n && w[q] != pat[t]) {
            ++q;
          }
          if (q == n) {
            return false;
          }
          for (int x = cur + 1; x < q; ++x) {
            if (_ms.commutes(w[x], pat[t])) {
              right.push_back(x);
              continue;
            }
            bool ok = true;
            for (int c : chosen) {
              ok = ok && _ms.commutes(w[x], w[c]);
            }
            for (int y : right) {
              ok = ok && (y > x || _ms.commutes(w[x], w[y]));
            }
            if (!ok) {
              return false;
            }
            left.push_back(x);
          }
          chosen.push_back(q);
          cur = q;
        }
        for (int y : right) {
          for (int c : chosen) {
            if (c > y && !_ms.commutes(w[y], w[c])) {
              return false;
            }
          }
        }
        order.clear();
        for (int i = 0; i < p; ++i) {
          order.push_back(i);
        }
        std::sort(left.begin(), left.end());
        std::sort(right.begin(), right.end());
        order.insert(order.end(), left.begin(), left.end());
        start = static_cast<int>(order.size());
        order.insert(order.end(), chosen.begin(), chosen.end());
        order.insert(order.end(), right.begin(), right.end());
        for (int i = cur + 1; i < n; ++i) {
          order.push_back(i);
        }
        return true;
      }

      // Realise a rearrangement by adjacent swaps of commuting letters.
      std::vector<int> rearrange(std::vector<int> w, std::vector<int> order,
                                 std::vector<ProofStep>* steps) const {
        // rank[i]: target slot of the letter now at i
        int const n = static_cast<int>(w.size());
        std::vector<int> rank(n);
        for (int s = 0; s < n; ++s) {
          rank[order[s]] = s;
        }
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j + 1 < n - i; ++j) {
            if (rank[j] > rank[j + 1]) {
              swap_at(w, j, steps, 0);
              std::swap(rank[j], rank[j + 1]);
            }
          }
        }
        return w;
      }

     private:
      MoveSet const& _ms;
    };

    struct Move {
      int rule = -1;
      int direction = 1;
      int anchor = 0;      // match anchor, or insertion slot
      int letter = 0;      // inserted letter for j j insertion
    };

    using Key = std::u16string;

    inline Key to_key(std::vector<int> const& w) {
      return Key(w.begin(), w.end());
    }
    inline std::vector<int> from_key(Key const& k) {
      return std::vector<int>(k.begin(), k.end());
    }

    class Searcher {
     public:
      Searcher(MoveSet const& ms, SearchOptions const& opt, int cap,
               std::vector<int> alphabet)
          : _ms(ms), _ops(ms), _opt(opt), _cap(cap), _alphabet(std::move(alphabet)) {
        for (int id = 0; id < static_cast<int>(ms.rules().size()); ++id) {
          auto const& r = ms.rule(id);
          if (ms.is_commute(id)) {
            continue;
          }
          if (r.tag == RelatorTag::involution) {
            _involutions.push_back(id);
          }
          _active.push_back(id);
        }
      }

      // Apply a move to canonical word w.  Returns false if inapplicable.
      // Primitive steps from w to the canonical result go to `steps`.
      bool apply(std::vector<int> const& w, Move const& mv, std::vector<int>& out,
                 std::vector<ProofStep>* steps) const {
        auto const& r = _ms.rule(mv.rule);
        if (mv.letter != 0) {
          // insertion of letter letter at slot anchor
          std::vector<int> x = w;
          x.insert(x.begin() + mv.anchor, {mv.letter, mv.letter});
          if (steps) {
            steps->push_back({mv.anchor, mv.rule, -1});
          }
          out = _ops.canonical(std::move(x), steps);
          return true;
        }
        auto const& from = mv.direction > 0 ? r.lhs : r.rhs;
        auto const& to = mv.direction > 0 ? r.rhs : r.lhs;
        std::vector<int> pat(from.begin(), from.end());
        std::vector<int> order;
        int start = 0;
        if (pat.empty() || !_ops.match(w, pat, mv.anchor, order, start)) {
          return false;
        }
        if (static_cast<int>(w.size() - from.size() + to.size()) > _cap) {
          return false;
        }
        std::vector<int> x = _ops.rearrange(w, order, steps);
        if (steps) {
          steps->push_back({start, mv.rule, mv.direction});
        }
        x.erase(x.begin() + start, x.begin() + start + pat.size());
        x.insert(x.begin() + start, to.begin(), to.end());
        out = _ops.canonical(std::move(x), steps);
        return true;
      }

      template <typename F>
      void for_each_move(std::vector<int> const& w, F&& f) const {
        int const n = static_cast<int>(w.size());
        for (int id : _active) {
          auto const& r = _ms.rule(id);
          for (int dir : {1, -1}) {
            auto const& from = dir > 0 ? r.lhs : r.rhs;
            if (from.empty()) {
              continue;
            }
            for (int p = 0; p < n; ++p) {
              if (w[p] == from[0]) {
                f(Move{id, dir, p, 0});
              }
            }
          }
        }
        if (_opt.allow_insertion && n + 2 <= _cap) {
          for (int id : _involutions) {
            int g = generator_of(_ms.rule(id).lhs[0]);
            if (!std::binary_search(_alphabet.begin(), _alphabet.end(), g)) {
              continue;
            }
            for (int slot = 0; slot <= n; ++slot) {
              f(Move{id, -1, slot, g});
            }
          }
        }
      }

      TraceOps const& ops() const {
        return _ops;
      }

     private:
      MoveSet const& _ms;
      TraceOps _ops;
      SearchOptions const& _opt;
      int _cap;
      std::vector<int> _alphabet;
      std::vector<int> _active;
      std::vector<int> _involutions;
    };

  }  // namespace detail

  // Bidirectional breadth-first search for a proof of w1 = w2.  Words are
  // read in the involutory quotient (exponents dropped).
  inline ProofResult prove_equal(Word const& w1_in, Word const& w2_in,
                                 MoveSet const& ms, SearchOptions const& opt = {}) {
    Word const w1 = w1_in.involutory(), w2 = w2_in.involutory();
    for (Word const* w : {&w1, &w2}) {
      for (Letter l : *w) {
        if (l < 1 || l > ms.generator_count()) {
          throw InputError("letter " + std::to_string(l)
                           + " outside the move set alphabet");
        }
      }
    }
    ProofResult res;
    std::vector<int> alphabet = opt.insertion_alphabet;
    if (alphabet.empty()) {
      for (Word const* w : {&w1, &w2}) {
        for (Letter l : *w) {
          alphabet.push_back(l);
        }
      }
    }
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    int const cap = static_cast<int>(std::max(w1.size(), w2.size())) + opt.slack;
    detail::Searcher search(ms, opt, cap, alphabet);
    auto const& ops = search.ops();

    std::vector<ProofStep> pre1, pre2;
    auto c1 = ops.canonical(w1.letters(), &pre1);
    auto c2 = ops.canonical(w2.letters(), &pre2);

    struct Node {
      detail::Key key;
      int parent;
      detail::Move move;
    };
    std::vector<Node> nodes[2];
    std::unordered_map<detail::Key, int> index[2];
    std::vector<int> frontier[2];
    for (int side = 0; side < 2; ++side) {
      auto const& c = side == 0 ? c1 : c2;
      nodes[side].push_back({detail::to_key(c), -1, {}});
      index[side].emplace(nodes[side][0].key, 0);
      frontier[side].push_back(0);
    }

    int meet[2] = {-1, -1};
    if (index[1].count(nodes[0][0].key)) {
      meet[0] = 0;
      meet[1] = 0;
    }
    while (meet[0] < 0 && !frontier[0].empty() && !frontier[1].empty()) {
      int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
      std::vector<int> next;
      for (int id : frontier[side]) {
        auto w = detail::from_key(nodes[side][id].key);
        bool stop = false;
        search.for_each_move(w, [&](detail::Move const& mv) {
          if (stop) {
            return;
          }
          std::vector<int> out;
          if (!search.apply(w, mv, out, nullptr)) {
            return;
          }
          if (++res.work > opt.budget) {
            stop = true;
            return;
          }
          auto key = detail::to_key(out);
          if (index[side].count(key)) {
            return;
          }
          int nid = static_cast<int>(nodes[side].size());
          nodes[side].push_back({key, id, mv});
          index[side].emplace(key, nid);
          next.push_back(nid);
          auto it = index[1 - side].find(key);
          if (it != index[1 - side].end()) {
            meet[side] = nid;
            meet[1 - side] = it->second;
            stop = true;
          }
        });
        if (stop) {
          break;
        }
      }
      frontier[side].swap(next);
      if (res.work > opt.budget) {
        break;
      }
    }
    res.states = nodes[0].size() + nodes[1].size();
    if (meet[0] < 0) {
      res.status = ProofStatus::unknown;
      return res;
    }

    // path of canonical words with the steps between them
    auto path_steps = [&](int side, int id) {
      std::vector<int> chain;
      for (int k = id; k >= 0; k = nodes[side][k].parent) {
        chain.push_back(k);
      }
      std::reverse(chain.begin(), chain.end());
      ProofTrace t;
      t.initial = Word(detail::from_key(nodes[side][chain[0]].key));
      for (std::size_t i = 1; i < chain.size(); ++i) {
        auto w = detail::from_key(nodes[side][chain[i - 1]].key);
        std::vector<int> out;
        search.apply(w, nodes[side][chain[i]].move, out, &t.steps);
      }
      t.final = Word(detail::from_key(nodes[side][chain.back()].key));
      return t;
    };

    ProofTrace t{w1, Word(c1), pre1};
    t.append(path_steps(0, meet[0]));
    t.append(path_steps(1, meet[1]).reversed(ms));
    t.append(ProofTrace{w2, Word(c2), pre2}.reversed(ms));
    t.replay(ms);
    res.status = ProofStatus::proven;
    res.trace = std::move(t);
    return res;
  }

  // As prove_equal, but reports UNEQUAL when permutation images differ.
  inline ProofResult prove_equal_checked(Word const& w1, Word const& w2,
                                         MoveSet const& ms, GeneratorMap const& map,
                                         SearchOptions const& opt = {}) {
    if (eval_word(w1, map) != eval_word(w2, map)) {
      ProofResult r;
      r.status = ProofStatus::unequal;
      return r;
    }
    return prove_equal(w1, w2, ms, opt);
  }

  // Proves consecutive waypoints equal and concatenates the traces.
  inline ProofResult prove_by_waypoints(std::vector<Word> const& waypoints,
                                        MoveSet const& ms,
                                        SearchOptions const& opt = {}) {
    ProofResult total;
    if (waypoints.empty()) {
      return total;
    }
    ProofTrace t{waypoints[0].involutory(), waypoints[0].involutory(), {}};
    for (std::size_t i = 1; i < waypoints.size(); ++i) {
      auto r = prove_equal(waypoints[i - 1], waypoints[i], ms, opt);
      total.work += r.work;
      total.states += r.states;
      if (!r.proven()) {
        total.status = ProofStatus::unknown;
        return total;
      }
      t.append(*r.trace);
    }
    total.status = ProofStatus::proven;
    total.trace = std::move(t);
    return total;
  }

}  // namespace galcov

#endif  // GALCOV_PROVER_HPP_
