// galcov: command-line front end.
//
// Exit status: 0 success, 1 verification failure (or exhausted budget),
// 2 usage error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "galcov/galcov.hpp"

using namespace galcov;
using json = nlohmann::ordered_json;

namespace {

  struct RunConfig {
    int m = 2;
    int n = 4;
    std::string format = "text";
    std::string out;
    std::uint64_t coset_limit = 1'000'000;
    std::uint64_t prover_budget = 1'000'000;
    std::uint64_t seed = 0;
    bool with_chain = false;
  };

  struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  // GALCOV_LOG=info|debug sends progress lines to stderr.
  int log_level() {
    char const* v = std::getenv("GALCOV_LOG");
    if (!v) {
      return 0;
    }
    std::string s(v);
    return s == "debug" ? 2 : (s == "info" ? 1 : 0);
  }

  void log(int level, std::string const& msg) {
    if (log_level() >= level) {
      std::cerr << "[galcov] " << msg << "\n";
    }
  }

  void require_format(RunConfig const& c, std::initializer_list<char const*> allowed) {
    for (auto const* f : allowed) {
      if (c.format == f) {
        return;
      }
    }
    std::string list;
    for (auto const* f : allowed) {
      list += (list.empty() ? "" : ", ") + std::string(f);
    }
    throw UsageError("--format " + c.format + " is not supported here (use " + list + ")");
  }

  json header(std::string const& cmd, RunConfig const& c) {
    json j;
    j["command"] = cmd;
    j["m"] = c.m;
    j["n"] = c.n;
    j["seed"] = c.seed;
    return j;
  }

  std::string text_header(std::string const& cmd, RunConfig const& c) {
    std::ostringstream os;
    os << "# galcov " << cmd << " m=" << c.m << " n=" << c.n << " seed=" << c.seed
       << "\n";
    return os.str();
  }

  GroupPresentation pick_presentation(std::string const& which,
                                      DegenerationComplex const& cx, bool chain,
                                      int t) {
    if (which == "g1") {
      return g1_presentation(cx);
    }
    if (which == "cy") {
      return cy_presentation(cx);
    }
    if (which == "cy-e6") {
      return cy_e6_presentation(cx, chain);
    }
    if (which == "atn") {
      return a_tn_presentation(t, cx.params().n);
    }
    throw UsageError("--presentation must be g1, cy, cy-e6 or atn");
  }

  ////////////////////////////////////////////////////////////////////////
  // subcommands; each returns its exit status and appends to `out`

  int cmd_build(RunConfig const& c, std::ostream& out) {
    require_format(c, {"text", "json", "dot"});
    auto cx = build_complex(c.m, c.n);
    if (c.format == "dot") {
      out << to_dot(cx);
      return 0;
    }
    if (c.format == "json") {
      json j = header("build", c);
      j["complex"] = to_json(cx);
      out << j.dump(2) << "\n";
      return 0;
    }
    auto const& p = cx.params();
    out << text_header("build", c);
    out << "triangles " << p.triangle_count() << "\nedges " << p.edge_count()
        << "\nvertices " << p.vertex_count() << "\n";
    for (auto const& e : cx.edges()) {
      out << "edge " << e.id << " " << to_string(e.kind) << " triangles {"
          << e.triangles[0] << "," << e.triangles[1] << "} vertices {"
          << e.endpoints[0] << "," << e.endpoints[1] << "}\n";
    }
    for (auto const& v : cx.vertices()) {
      out << "vertex V" << v.id << " " << to_string(v.kind) << " "
          << to_string(v.subtype) << " edges {";
      for (std::size_t k = 0; k < v.edges.size(); ++k) {
        out << (k ? "," : "") << v.edges[k];
      }
      out << "}";
      if (!v.cyclic.empty()) {
        out << " cyclic (";
        for (std::size_t k = 0; k < v.cyclic.size(); ++k) {
          out << (k ? "," : "") << v.cyclic[k];
        }
        out << ")";
      }
      out << "\n";
    }
    return 0;
  }

  int cmd_relations(RunConfig const& c, std::string const& which, int t,
                    std::ostream& out) {
    require_format(c, {"text", "json", "gap", "magma"});
    auto cx = build_complex(c.m, c.n);
    auto p = pick_presentation(which, cx, c.with_chain, t);
    if (c.format == "json") {
      json j = header("relations", c);
      j["presentation"] = to_json(p);
      out << j.dump(2) << "\n";
      return 0;
    }
    if (c.format == "text") {
      out << text_header("relations", c);
    }
    auto fmt = c.format == "text" ? ExportFormat::plain
                                  : export_format_from_string(c.format);
    out << export_presentation(p, fmt);
    return 0;
  }

  int cmd_cycles(RunConfig const& c, std::ostream& out) {
    require_format(c, {"text", "json"});
    auto cx = build_complex(c.m, c.n);
    auto inv = cycle_inventory(cx);
    if (c.format == "json") {
      json j = header("cycles", c);
      json hx = json::array();
      for (auto const& h : inv.hexagons) {
        json o;
        o["vertex"] = h.vertex;
        o["subtype"] = to_string(h.subtype);
        o["sorted"] = h.sorted;
        o["cyclic"] = h.cyclic;
        hx.push_back(o);
      }
      j["hexagons"] = hx;
      j["h_cycles"] = inv.h_cycles;
      out << j.dump(2) << "\n";
      return 0;
    }
    out << text_header("cycles", c);
    for (auto const& h : inv.hexagons) {
      out << "hexagon V" << h.vertex << " " << to_string(h.subtype) << " (";
      for (int k = 0; k < 6; ++k) {
        out << (k ? "," : "") << h.cyclic[k];
      }
      out << ")\n";
    }
    for (std::size_t k = 0; k < inv.h_cycles.size(); ++k) {
      out << "H" << k + 1 << " (";
      for (std::size_t i = 0; i < inv.h_cycles[k].size(); ++i) {
        out << (i ? "," : "") << inv.h_cycles[k][i];
      }
      out << ")\n";
    }
    return 0;
  }

  int cmd_verify(RunConfig const& c, std::ostream& out) {
    require_format(c, {"text", "json"});
    auto cx = build_complex(c.m, c.n);
    auto map = transposition_map(cx);
    std::vector<HomReport> reports;
    reports.push_back(verify_relators(g1_presentation(cx), map));
    reports.push_back(verify_relators(cy_e6_presentation(cx, c.with_chain), map));
    // gamma_{r-1} = gamma_r on every inventoried cycle
    auto inv = cycle_inventory(cx);
    std::vector<std::vector<int>> cycles = inv.h_cycles;
    for (auto const& h : inv.hexagons) {
      cycles.emplace_back(h.cyclic.begin(), h.cyclic.end());
    }
    int gamma_fail = 0;
    json gam = json::array();
    for (auto const& cyc : cycles) {
      auto gw = gamma_words(cyc);
      int r = static_cast<int>(cyc.size());
      bool ok = eval_word(gw.gamma_at(r - 1), map) == eval_word(gw.gamma_at(r), map);
      gamma_fail += ok ? 0 : 1;
      json o;
      o["cycle"] = cyc;
      o["pass"] = ok;
      gam.push_back(o);
    }
    bool pass = gamma_fail == 0;
    for (auto const& r : reports) {
      pass = pass && r.pass;
    }
    if (c.format == "json") {
      json j = header("verify", c);
      j["pass"] = pass;
      json rs = json::array();
      for (auto const& r : reports) {
        rs.push_back(to_json(r, true));
      }
      j["reports"] = rs;
      j["gamma_checks"] = gam;
      out << j.dump(2) << "\n";
      return pass ? 0 : 1;
    }
    out << text_header("verify", c);
    for (auto const& r : reports) {
      out << r.presentation << ": " << r.checks.size() << " relators, "
          << r.failures() << " failures -> " << (r.pass ? "PASS" : "FAIL") << "\n";
      for (auto const& chk : r.checks) {
        if (!chk.pass) {
          out << "  FAIL " << to_string(chk.relator.tag) << " " << chk.relator.label
              << ": " << chk.relator.word.to_string() << " -> " << chk.image << "\n";
        }
      }
    }
    out << "gamma_{r-1} = gamma_r: " << cycles.size() << " cycles, " << gamma_fail
        << " failures -> " << (gamma_fail == 0 ? "PASS" : "FAIL") << "\n";
    out << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : 1;
  }

  int cmd_hom_count(RunConfig const& c, std::string const& target,
                    std::uint64_t budget, std::ostream& out) {
    require_format(c, {"text", "json", "csv"});
    auto cx = build_complex(c.m, c.n);
    auto g1 = g1_presentation(cx);
    auto ce = cy_e6_presentation(cx, c.with_chain);
    std::vector<FiniteGroup> targets;
    if (target == "all") {
      targets = groups::all_up_to_order_8();
    } else {
      targets.push_back(groups::by_name(target));
    }
    HomCountOptions opt{budget};
    bool agree = true;
    json rows = json::array();
    std::ostringstream txt;
    for (auto const& g : targets) {
      auto a = hom_count(g1, g, opt);
      auto b = hom_count(ce, g, opt);
      agree = agree && a == b;
      json o;
      o["target"] = g.name();
      o["order"] = g.order();
      o["g1"] = a;
      o["cy_e6"] = b;
      o["agree"] = a == b;
      rows.push_back(o);
      if (c.format == "csv") {
        txt << g.name() << "," << g.order() << "," << a << "," << b << ","
            << (a == b ? "yes" : "no") << "\n";
      } else {
        txt << g.name() << " (order " << g.order() << "): G1 " << a << ", CY/E6 " << b
            << (a == b ? "" : "  MISMATCH") << "\n";
      }
    }
    if (c.format == "json") {
      json j = header("hom-count", c);
      j["counts"] = rows;
      j["agree"] = agree;
      out << j.dump(2) << "\n";
    } else if (c.format == "csv") {
      out << "target,order,g1,cy_e6,agree\n" << txt.str();
    } else {
      out << text_header("hom-count", c) << txt.str()
          << (agree ? "AGREE" : "DISAGREE") << "\n";
    }
    return agree ? 0 : 1;
  }

  int cmd_homology(RunConfig const& c, std::ostream& out) {
    require_format(c, {"text", "json"});
    auto cx = build_complex(c.m, c.n);
    HomologyOptions opt;
    opt.coset_limit = c.coset_limit;
    opt.seed = c.seed;
    auto t0 = std::chrono::steady_clock::now();
    auto ctx = kernel_context(cx, opt);
    log(1, "homology: " + std::to_string(ctx.result.cosets) + " cosets, "
               + std::to_string(ctx.result.schreier_generators) + " Schreier generators");
    auto elements = kernel_elements(cx).all_elements();
    auto img = element_images_in_h1(elements, ctx);
    log(1, "homology done in "
               + std::to_string(std::chrono::duration<double>(
                                    std::chrono::steady_clock::now() - t0)
                                    .count())
               + " s");
    int const expected = cx.params().m * (2 * cx.params().n - 1);
    bool pass = img.rank == expected && ctx.result.ranks.consistent;
    if (c.format == "json") {
      json j = header("homology", c);
      j["homology"] = to_json(ctx.result);
      j["element_count"] = elements.size();
      j["element_rank"] = img.rank;
      j["expected_rank"] = expected;
      j["pass"] = pass;
      out << j.dump(2) << "\n";
      return pass ? 0 : 1;
    }
    auto const& r = ctx.result;
    out << text_header("homology", c);
    out << "cosets " << r.cosets << "\nschreier generators " << r.schreier_generators
        << "\nrelators " << r.relators << "\nH1(K1) = " << r.snf.invariants.to_string()
        << "\nrank checks: rational " << r.ranks.rational;
    for (auto const& [p, rk] : r.ranks.mod_p) {
      out << ", mod " << p << " " << rk;
    }
    out << (r.ranks.consistent ? " (consistent)" : " (INCONSISTENT)") << "\n";
    out << "gamma elements " << elements.size() << ", rank of images " << img.rank
        << " (expected " << expected << ")\n";
    out << (pass ? "PASS" : "FAIL: rank differs from m(2n-1)") << "\n";
    return pass ? 0 : 1;
  }

  int cmd_prove(RunConfig const& c, std::string const& goal, std::string const& lhs,
                std::string const& rhs, std::string const& scripts, int triangle,
                bool traces, std::ostream& out) {
    require_format(c, {"text", "json"});
    auto cx = build_complex(c.m, c.n);
    SearchOptions so;
    so.budget = c.prover_budget;
    std::vector<ProofScript> sc;
    if (!scripts.empty()) {
      sc = load_scripts(scripts);
    }
    ProverContext ctx(cx, so, sc);
    std::vector<GoalReport> reports;
    if (goal == "chain") {
      for (auto const& h : cycle_inventory(cx).hexagons) {
        for (auto& g : verify_chain(h, ctx)) {
          reports.push_back(std::move(g));
        }
      }
    } else if (goal == "fork") {
      auto dg = dual_graph(cx);
      for (int t = 1; t <= dg.node_count; ++t) {
        if (dg.degree(t) == 3 && (triangle == 0 || triangle == t)) {
          for (auto& g : verify_fork_derivation(t, ctx)) {
            reports.push_back(std::move(g));
          }
        }
      }
      if (reports.empty()) {
        throw InputError("no fork configuration found");
      }
    } else if (goal == "gamma") {
      auto ke = kernel_elements(cx);
      for (auto const& gw : ke.cycles) {
        int r = static_cast<int>(gw.cycle.size());
        for (int i = 1; i < r; ++i) {
          reports.push_back(verify_gamma_commutation(gw, i, i + 1, ctx));
        }
      }
      for (std::size_t a = 0; a < ke.cycles.size(); ++a) {
        for (std::size_t b = a + 1; b < ke.cycles.size(); ++b) {
          int ra = static_cast<int>(ke.cycles[a].cycle.size());
          int rb = static_cast<int>(ke.cycles[b].cycle.size());
          reports.push_back(verify_cross_cycle(ke.cycles[a].element_at(ra),
                                               ke.cycles[b].element_at(rb), ctx));
        }
      }
    } else if (goal == "custom") {
      if (lhs.empty() || rhs.empty()) {
        throw UsageError("--lhs and --rhs are required for the custom goal");
      }
      GoalReport g{"custom", Word::parse(lhs), Word::parse(rhs)};
      g.method = "search";
      auto r = prove_equal_checked(g.lhs, g.rhs, ctx.moves, ctx.map, ctx.search);
      g.status = r.status;
      g.work = r.work;
      g.trace = r.trace;
      if (g.trace) {
        g.images_preserved = trace_preserves_images(*g.trace, ctx.moves, ctx.map);
      }
      reports.push_back(std::move(g));
    } else {
      throw UsageError("--goal must be chain, fork, gamma or custom");
    }
    bool pass = true;
    for (auto const& g : reports) {
      pass = pass && g.proven() && g.images_preserved;
    }
    if (c.format == "json") {
      json j = header("prove", c);
      j["goal"] = goal;
      j["budget"] = c.prover_budget;
      json arr = json::array();
      for (auto const& g : reports) {
        arr.push_back(to_json(g, ctx.moves, traces));
      }
      j["results"] = arr;
      j["pass"] = pass;
      out << j.dump(2) << "\n";
      return pass ? 0 : 1;
    }
    out << text_header("prove", c);
    for (auto const& g : reports) {
      out << g.name << ": " << to_string(g.status) << " via " << g.method;
      if (g.trace) {
        out << ", " << g.trace->steps.size() << " steps ("
            << g.trace->essential_steps(ctx.moves) << " non-commuting)";
      }
      out << "\n";
      if (traces && g.trace) {
        for (auto const& w : g.trace->words(ctx.moves)) {
          out << "    " << w.to_string() << "\n";
        }
      }
    }
    out << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : 1;
  }

  int cmd_census(RunConfig const& c, std::ostream& out) {
    require_format(c, {"text", "json"});
    auto enumerated = singularity_census(build_complex(c.m, c.n));
    auto closed = census_closed_form(c.m, c.n);
    bool agree = enumerated == closed && enumerated.d == node_polynomial(c.m, c.n);
    if (c.format == "json") {
      json j = header("census", c);
      j["census"] = to_json(enumerated);
      j["closed_form_d"] = closed.d;
      j["closed_form_rho"] = closed.rho;
      j["agree"] = agree;
      out << j.dump(2) << "\n";
      return agree ? 0 : 1;
    }
    auto const& e = enumerated;
    out << text_header("census", c);
    out << "b " << e.b << "\nh " << e.h << "\nd " << e.d << "\nrho " << e.rho << "\n";
    out << "pairs total " << e.pairs_total << ", at two-line vertices "
        << e.pairs_at_two_line << ", at six-line vertices " << e.pairs_at_six_line
        << ", double incident " << e.double_incident_pairs << ", disjoint "
        << e.disjoint_pairs << "\n";
    out << "closed form d " << closed.d << ", rho " << closed.rho << " -> "
        << (agree ? "AGREE" : "DISAGREE") << "\n";
    return agree ? 0 : 1;
  }

  int cmd_chern(RunConfig const& c, std::ostream& out) {
    require_format(c, {"text", "json", "csv"});
    auto rep = surface_report(c.m, c.n);
    auto closed = chern_closed_form(c.m, c.n);
    bool agree = closed == rep.chern && rep.tau.sign == expected_sign(c.m, c.n)
                 && rep.tau.factor == tau_factor_closed_form(c.m, c.n);
    if (c.format == "json") {
      json j = header("chern", c);
      j["report"] = to_json(rep);
      j["routes_agree"] = agree;
      out << j.dump(2) << "\n";
    } else if (c.format == "csv") {
      out << surface_table({rep}, true);
    } else {
      out << text_header("chern", c);
      auto j = to_json(rep);
      out << "c1^2 = " << j["c1sq_factored"].get<std::string>() << " = "
          << j["c1sq"].get<std::string>() << "\n";
      out << "c2   = " << j["c2_factored"].get<std::string>() << " = "
          << j["c2"].get<std::string>() << "\n";
      out << "tau  = " << j["tau_factored"].get<std::string>() << " = "
          << j["tau"].get<std::string>() << " (" << to_string(rep.tau.sign) << ")\n";
      out << "routes " << (agree ? "AGREE" : "DISAGREE") << "\n";
    }
    return agree ? 0 : 1;
  }

  int cmd_irregularity(RunConfig const& c, std::ostream& out) {
    require_format(c, {"text", "json"});
    auto r = irregularity_report(c.m, c.n);
    if (c.format == "json") {
      json j = header("irregularity", c);
      j["sheets"] = r.l;
      j["h1_rank_bound"] = r.h1_rank_bound;
      j["q_bound"] = r.q_bound;
      j["subgroup_rank"] = r.subgroup_rank;
      if (r.benchmark_q) {
        j["benchmark_q"] = *r.benchmark_q;
      } else {
        j["benchmark_q"] = nullptr;
      }
      out << j.dump(2) << "\n";
      return 0;
    }
    out << text_header("irregularity", c);
    out << "sheets " << r.l << "\nrank H1 >= " << r.h1_rank_bound << "\nq >= "
        << r.q_bound << "\nsubgroup rank " << r.subgroup_rank << "\n";
    if (r.benchmark_q) {
      out << "benchmark q = " << *r.benchmark_q << "\n";
    }
    return 0;
  }

  // Grid battery: counts, homomorphism checks, census and Chern routes.
  int cmd_sweep(RunConfig const& c, int max_m, int max_n, std::ostream& out) {
    require_format(c, {"text", "json", "csv"});
    if (max_m < 1 || max_n < 2) {
      throw UsageError("--max-m must be >= 1 and --max-n >= 2");
    }
    std::vector<SurfaceInvariantReport> rows;
    json arr = json::array();
    bool all = true;
    std::ostringstream flags;
    flags << "m,n,edges,relators,hom,census,chern,sign\n";
    for (int m = 1; m <= max_m; ++m) {
      for (int n = 2; n <= max_n; ++n) {
        auto cx = build_complex(m, n);
        auto map = transposition_map(cx);
        auto g1 = g1_presentation(cx);
        bool hom = verify_relators(g1, map).pass
                   && verify_relators(cy_e6_presentation(cx, true), map).pass;
        auto rep = surface_report(m, n);
        bool census = rep.census == census_closed_form(m, n);
        bool chern = rep.chern == chern_closed_form(m, n);
        bool sign = rep.tau.sign == expected_sign(m, n);
        all = all && hom && census && chern && sign;
        rows.push_back(rep);
        json o;
        o["m"] = m;
        o["n"] = n;
        o["edges"] = cx.params().edge_count();
        o["relators"] = g1.relators.size();
        o["hom"] = hom;
        o["census"] = census;
        o["chern"] = chern;
        o["sign"] = sign;
        arr.push_back(o);
        flags << m << "," << n << "," << cx.params().edge_count() << ","
              << g1.relators.size() << "," << hom << "," << census << "," << chern
              << "," << sign << "\n";
      }
    }
    if (c.format == "json") {
      json j = header("sweep", c);
      j["grid"] = arr;
      j["pass"] = all;
      out << j.dump(2) << "\n";
    } else if (c.format == "csv") {
      out << flags.str();
    } else {
      out << text_header("sweep", c) << surface_table(rows, false);
      out << (all ? "PASS" : "FAIL") << "\n";
    }
    return all ? 0 : 1;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"galcov: cylindrical degenerations, their presentations and invariants"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("-m", cfg.m, "path length of the CP1 stick curve (>= 1)");
    sub->add_option("-n", cfg.n, "loop length of the torus stick curve (>= 2)");
    sub->add_option("--format", cfg.format, "text | json | csv | dot | gap | magma");
    sub->add_option("--out", cfg.out, "write output to a file");
    sub->add_option("--coset-limit", cfg.coset_limit, "largest coset table");
    sub->add_option("--prover-budget", cfg.prover_budget,
                    "rule applications per proof search");
    sub->add_option("--seed", cfg.seed, "seed for coset order and tie-breaking");
    sub->add_flag("--with-chain-relators", cfg.with_chain,
                  "add the full hexagon chains as redundant relators");
  };

  std::string presentation = "g1", target = "all", goal = "chain", lhs, rhs, scripts;
  int atn_t = 1, triangle = 0, max_m = 4, max_n = 6;
  std::uint64_t hom_budget = 100'000'000;
  bool traces = false;
  std::function<int(std::ostream&)> action;

  auto* build = app.add_subcommand("build", "build the degeneration complex");
  common(build);
  build->callback([&] { action = [&](std::ostream& o) { return cmd_build(cfg, o); }; });

  auto* rel = app.add_subcommand("relations", "emit a presentation");
  common(rel);
  rel->add_option("--presentation", presentation, "g1 | cy | cy-e6 | atn");
  rel->add_option("--t", atn_t, "number of symbols for atn");
  rel->callback([&] {
    action = [&](std::ostream& o) { return cmd_relations(cfg, presentation, atn_t, o); };
  });

  auto* cyc = app.add_subcommand("cycles", "hexagons and h-cycles");
  common(cyc);
  cyc->callback([&] { action = [&](std::ostream& o) { return cmd_cycles(cfg, o); }; });

  auto* ver = app.add_subcommand("verify", "check relators in the symmetric group");
  common(ver);
  ver->callback([&] { action = [&](std::ostream& o) { return cmd_verify(cfg, o); }; });

  auto* hc = app.add_subcommand("hom-count", "count homomorphisms to small groups");
  common(hc);
  hc->add_option("--target", target, "group name or 'all' (orders <= 8)");
  hc->add_option("--budget", hom_budget, "relator evaluations");
  hc->callback([&] {
    action = [&](std::ostream& o) { return cmd_hom_count(cfg, target, hom_budget, o); };
  });

  auto* hom = app.add_subcommand("homology", "H1 of the kernel and gamma images");
  common(hom);
  hom->add_option("--limit", cfg.coset_limit, "alias of --coset-limit");
  hom->callback([&] { action = [&](std::ostream& o) { return cmd_homology(cfg, o); }; });

  auto* prv = app.add_subcommand("prove", "rewriting proofs");
  common(prv);
  prv->add_option("--goal", goal, "chain | fork | gamma | custom");
  prv->add_option("--lhs", lhs, "custom goal: left word");
  prv->add_option("--rhs", rhs, "custom goal: right word");
  prv->add_option("--scripts", scripts, "waypoint script file (JSON)");
  prv->add_option("--triangle", triangle, "restrict fork goals to one triangle");
  prv->add_flag("--trace", traces, "include full traces");
  prv->callback([&] {
    action = [&](std::ostream& o) {
      return cmd_prove(cfg, goal, lhs, rhs, scripts, triangle, traces, o);
    };
  });

  auto* cen = app.add_subcommand("census", "nodes and cusps of the branch curve");
  common(cen);
  cen->callback([&] { action = [&](std::ostream& o) { return cmd_census(cfg, o); }; });

  auto* ch = app.add_subcommand("chern", "Chern numbers and index");
  common(ch);
  ch->callback([&] { action = [&](std::ostream& o) { return cmd_chern(cfg, o); }; });

  auto* irr = app.add_subcommand("irregularity", "irregularity bounds");
  common(irr);
  irr->callback([&] { action = [&](std::ostream& o) { return cmd_irregularity(cfg, o); }; });

  auto* sw = app.add_subcommand("sweep", "grid acceptance battery");
  common(sw);
  sw->add_option("--max-m", max_m, "largest m");
  sw->add_option("--max-n", max_n, "largest n");
  sw->callback([&] {
    action = [&](std::ostream& o) { return cmd_sweep(cfg, max_m, max_n, o); };
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    std::ostringstream buf;
    int status = action(buf);
    if (cfg.out.empty()) {
      std::cout << buf.str();
    } else {
      std::ofstream f(cfg.out, std::ios::binary);
      if (!f) {
        std::cerr << "usage error: cannot write " << cfg.out << "\n";
        return 2;
      }
      f << buf.str();
    }
    return status;
  } catch (UsageError const& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (RangeError const& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (BudgetError const& e) {
    json j;
    j["error"] = "budget";
    j["budget"] = e.budget();
    j["message"] = e.what();
    j["seed"] = cfg.seed;
    std::cout << j.dump() << "\n";
    std::cerr << "budget exceeded (" << e.budget() << "): " << e.what() << "\n";
    return 1;
  } catch (InputError const& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
