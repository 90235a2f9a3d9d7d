#ifndef GALCOV_GOALS_HPP_
#define GALCOV_GOALS_HPP_

// Proof goals from the construction: hexagon chain equalities, fork
// relators derived in G_1, and commutation of the gamma elements.

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coxeter.hpp"
#include "error.hpp"
#include "grid_complex.hpp"
#include "json.hpp"
#include "permutation.hpp"
#include "presentation.hpp"
#include "prover.hpp"

namespace galcov {

  struct GoalReport {
    std::string name;
    Word lhs;
    Word rhs;
    ProofStatus status = ProofStatus::unknown;
    std::string method;  // script | search | coxeter | commute
    std::optional<ProofTrace> trace;
    std::uint64_t work = 0;
    bool images_preserved = false;

    bool proven() const noexcept {
      return status == ProofStatus::proven;
    }

    // Non-commutation relators applied, as "TAG label" strings.
    std::set<std::string> relators_used(MoveSet const& ms) const {
      std::set<std::string> out;
      if (!trace) {
        return out;
      }
      for (auto const& s : trace->steps) {
        auto const& r = ms.rule(s.rule);
        if (r.tag == RelatorTag::commutator || r.tag == RelatorTag::involution) {
          continue;
        }
        std::string name = to_string(r.tag);
        name += ' ';
        name += r.label.empty() ? r.lhs.to_string() : r.label;
        out.insert(name);
      }
      return out;
    }

    bool uses_braid(MoveSet const& ms, int a, int b) const {
      if (!trace) {
        return false;
      }
      int id = ms.braid_rule(a, b);
      return std::any_of(trace->steps.begin(), trace->steps.end(),
                         [id](ProofStep const& s) { return s.rule == id; });
    }
  };

  // Waypoint scripts: words over role letters, instantiated per goal.
  struct ProofScript {
    std::string name;
    std::string goal;     // "chain"
    std::string subtype;  // REGULAR | SEAM
    int step = 0;         // chain equality index, 1-based
    std::vector<std::vector<std::string>> waypoints;
  };

  inline std::vector<ProofScript> scripts_from_json(nlohmann::json const& j) {
    std::vector<ProofScript> out;
    for (auto const& s : j.at("scripts")) {
      ProofScript p;
      p.name = s.at("name").get<std::string>();
      p.goal = s.at("goal").get<std::string>();
      p.subtype = s.value("subtype", "");
      p.step = s.value("step", 0);
      for (auto const& w : s.at("waypoints")) {
        std::vector<std::string> roles;
        std::string text = w.get<std::string>();
        std::string tok;
        for (char ch : text + " ") {
          if (ch == ' ') {
            if (!tok.empty()) {
              roles.push_back(tok);
            }
            tok.clear();
          } else {
            tok += ch;
          }
        }
        p.waypoints.push_back(roles);
      }
      out.push_back(std::move(p));
    }
    return out;
  }

  inline std::vector<ProofScript> load_scripts(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InputError("cannot open script file " + path);
    }
    return scripts_from_json(nlohmann::json::parse(in));
  }

  inline Word instantiate(std::vector<std::string> const& roles,
                          std::map<std::string, int> const& binding) {
    Word w;
    for (auto const& r : roles) {
      auto it = binding.find(r);
      if (it == binding.end()) {
        throw InputError("script role '" + r + "' is unbound");
      }
      w.push_back(it->second);
    }
    return w;
  }

  struct ProverContext {
    DegenerationComplex const& complex;
    MoveSet moves;
    GeneratorMap map;
    SearchOptions search;
    std::vector<ProofScript> scripts;

    ProverContext(DegenerationComplex const& cx, SearchOptions opt = {},
                  std::vector<ProofScript> sc = {})
        : complex(cx),
          moves(MoveSet::from_presentation(g1_presentation(cx))),
          map(transposition_map(cx)),
          search(opt),
          scripts(std::move(sc)) {}
  };

  namespace detail {
    inline void finish(GoalReport& g, ProofResult const& r, ProverContext const& ctx) {
      g.status = r.status;
      g.work += r.work;
      g.trace = r.trace;
      if (g.trace) {
        g.trace->replay(ctx.moves);
        g.images_preserved = trace_preserves_images(*g.trace, ctx.moves, ctx.map);
      }
    }

    inline GoalReport search_goal(std::string name, Word lhs, Word rhs,
                                  ProverContext const& ctx) {
      GoalReport g{std::move(name), lhs, rhs};
      g.method = "search";
      finish(g, prove_equal_checked(lhs, rhs, ctx.moves, ctx.map, ctx.search), ctx);
      return g;
    }
  }  // namespace detail

  // The five consecutive equalities X_1 = X_2 = ... = X_6 around a hexagon.
  inline std::vector<GoalReport> verify_chain(Hexagon const& h,
                                              ProverContext const& ctx) {
    auto chain = hexagon_chain_words(h);
    std::map<std::string, int> binding;
    for (int k = 0; k < 6; ++k) {
      binding[std::string(1, static_cast<char>('a' + k))] = h.sorted[k];
    }
    std::vector<GoalReport> out;
    for (int i = 0; i + 1 < 6; ++i) {
      std::string name = "chain V" + std::to_string(h.vertex) + " #" + std::to_string(i + 1);
      GoalReport g{name, chain[i], chain[i + 1]};
      for (auto const& s : ctx.scripts) {
        if (s.goal != "chain" || s.step != i + 1 || s.subtype != to_string(h.subtype)) {
          continue;
        }
        std::vector<Word> pts;
        for (auto const& w : s.waypoints) {
          pts.push_back(instantiate(w, binding));
        }
        if (pts.front().involutory() != g.lhs.involutory()
            || pts.back().involutory() != g.rhs.involutory()) {
          throw InputError("script " + s.name + " does not match its goal");
        }
        auto r = prove_by_waypoints(pts, ctx.moves, ctx.search);
        g.work += r.work;
        if (r.proven()) {
          g.method = "script";
          detail::finish(g, r, ctx);
          break;
        }
      }
      if (!g.proven()) {
        auto fallback = detail::search_goal(name, chain[i], chain[i + 1], ctx);
        fallback.work += g.work;
        g = std::move(fallback);
      }
      out.push_back(std::move(g));
    }
    return out;
  }

  // Fork relators [u, v w v] at a degree-3 dual node, derived inside G_1
  // (which has no fork relators of its own).
  inline std::vector<GoalReport> verify_fork_derivation(int triangle,
                                                        ProverContext const& ctx) {
    auto g = dual_graph(ctx.complex);
    if (triangle < 1 || triangle > g.node_count || g.degree(triangle) != 3) {
      throw InputError("triangle " + std::to_string(triangle)
                       + " is not a fork node of the dual graph");
    }
    std::vector<GoalReport> out;
    for (auto const& r : fork_relators(g)) {
      if (r.label != "T" + std::to_string(triangle)) {
        continue;
      }
      Word lhs = r.word.subword(0, 4);
      Word rhs = r.word.subword(4, 4).inverse().involutory();
      out.push_back(detail::search_goal(
          "fork " + r.label + " [" + std::to_string(lhs[0]) + ", "
              + Word{lhs[1], lhs[2], lhs[3]}.to_string() + "]",
          lhs, rhs, ctx));
    }
    return out;
  }

  // [u, v w v] = e for explicit letters.
  inline GoalReport verify_fork_instance(int u, int v, int w,
                                         ProverContext const& ctx) {
    Word lhs{u, v, w, v}, rhs{v, w, v, u};
    return detail::search_goal("fork [" + std::to_string(u) + ", "
                                   + Word{v, w, v}.to_string() + "]",
                               lhs, rhs, ctx);
  }

  // gamma_i gamma_1^-1 gamma_j = gamma_j gamma_1^-1 gamma_i, equivalently
  // [g_i, g_j] = e, by reduction in the affine Coxeter group of the cycle.
  inline GoalReport verify_gamma_commutation(GammaWords const& gw, int i, int j,
                                             ProverContext const& ctx) {
    Word inv1 = gw.gamma_at(1).inverse();
    Word lhs = gw.gamma_at(i) * inv1 * gw.gamma_at(j);
    Word rhs = gw.gamma_at(j) * inv1 * gw.gamma_at(i);
    GoalReport g{"gamma (" + std::to_string(i) + "," + std::to_string(j) + ") on "
                     + std::to_string(gw.cycle.front()) + ".."
                     + std::to_string(gw.cycle.back()),
                 lhs, rhs};
    CycleReducer red(gw.cycle, ctx.moves);
    if (auto t = red.prove(lhs, rhs)) {
      g.method = "coxeter";
      ProofResult r;
      r.status = ProofStatus::proven;
      r.trace = std::move(t);
      detail::finish(g, r, ctx);
      return g;
    }
    auto fb = detail::search_goal(g.name, lhs, rhs, ctx);
    return fb;
  }

  // Elements of different cycles: commutation swaps only.
  inline GoalReport verify_cross_cycle(Word const& x, Word const& y,
                                       ProverContext const& ctx) {
    Word a = x.involutory(), b = y.involutory();
    GoalReport g{"cross " + a.to_string() + " | " + b.to_string(), a * b, b * a};
    g.method = "commute";
    for (Letter p : a) {
      for (Letter q : b) {
        if (p == q || !ctx.moves.commutes(p, q)) {
          g.status = ProofStatus::unknown;
          return g;
        }
      }
    }
    detail::TraceOps ops(ctx.moves);
    std::vector<int> w = (a * b).letters();
    std::vector<int> order;
    for (std::size_t k = 0; k < b.size(); ++k) {
      order.push_back(static_cast<int>(a.size() + k));
    }
    for (std::size_t k = 0; k < a.size(); ++k) {
      order.push_back(static_cast<int>(k));
    }
    ProofTrace t{a * b, b * a, {}};
    ops.rearrange(w, order, &t.steps);
    ProofResult r;
    r.status = ProofStatus::proven;
    r.trace = std::move(t);
    detail::finish(g, r, ctx);
    return g;
  }

  inline nlohmann::ordered_json to_json(GoalReport const& g, MoveSet const& ms,
                                        bool with_trace = false) {
    nlohmann::ordered_json j;
    j["goal"] = g.name;
    j["lhs"] = g.lhs.letters();
    j["rhs"] = g.rhs.letters();
    j["status"] = to_string(g.status);
    j["method"] = g.method;
    j["work"] = g.work;
    j["steps"] = g.trace ? g.trace->steps.size() : 0;
    j["essential_steps"] = g.trace ? g.trace->essential_steps(ms) : 0;
    j["images_preserved"] = g.images_preserved;
    auto used = nlohmann::ordered_json::array();
    for (auto const& u : g.relators_used(ms)) {
      used.push_back(u);
    }
    j["relators_used"] = used;
    if (with_trace && g.trace) {
      j["trace"] = to_json(*g.trace, ms);
    }
    return j;
  }

}  // namespace galcov

#endif  // GALCOV_GOALS_HPP_
