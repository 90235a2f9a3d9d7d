#ifndef GALCOV_PRESENTATION_HPP_
#define GALCOV_PRESENTATION_HPP_

// Finitely presented groups attached to the degeneration: the involutory
// quotient G_1 of the branch-curve group, the Coxeter quotient C_Y(T) of the
// dual graph, the hexagon (E6) cycle relators, the gamma-words of the
// horizontal cycles, and the auxiliary family A_{t,n}.

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "error.hpp"
#include "grid_complex.hpp"
#include "json.hpp"
#include "word.hpp"

namespace galcov {

  enum class RelatorTag {
    involution,
    triple,
    commutator,
    quintic,
    fork,
    e6cycle,
    atn
  };

  inline char const* to_string(RelatorTag t) {
    switch (t) {
      case RelatorTag::involution:
        return "INVOLUTION";
      case RelatorTag::triple:
        return "TRIPLE";
      case RelatorTag::commutator:
        return "COMMUTATOR";
      case RelatorTag::quintic:
        return "QUINTIC";
      case RelatorTag::fork:
        return "FORK";
      case RelatorTag::e6cycle:
        return "E6CYCLE";
      default:
        return "ATN";
    }
  }

  inline RelatorTag relator_tag_from_string(std::string const& s) {
    static std::map<std::string, RelatorTag> const table{
        {"INVOLUTION", RelatorTag::involution},
        {"TRIPLE", RelatorTag::triple},
        {"COMMUTATOR", RelatorTag::commutator},
        {"QUINTIC", RelatorTag::quintic},
        {"FORK", RelatorTag::fork},
        {"E6CYCLE", RelatorTag::e6cycle},
        {"ATN", RelatorTag::atn}};
    auto it = table.find(s);
    if (it == table.end()) {
      throw InputError("unknown relator tag '" + s + "'");
    }
    return it->second;
  }

  struct Relator {
    Word word;
    RelatorTag tag;
    std::string label;  // e.g. "V6" for a vertex relator, "T9" for a fork

    friend bool operator==(Relator const&, Relator const&) = default;
  };

  struct GroupPresentation {
    std::string name;
    std::vector<std::string> generators;
    std::vector<Relator> relators;

    int generator_count() const noexcept {
      return static_cast<int>(generators.size());
    }

    std::size_t count(RelatorTag tag) const {
      return std::count_if(relators.begin(), relators.end(),
                           [tag](Relator const& r) { return r.tag == tag; });
    }

    std::vector<Relator> with_tag(RelatorTag tag) const {
      std::vector<Relator> out;
      for (auto const& r : relators) {
        if (r.tag == tag) {
          out.push_back(r);
        }
      }
      return out;
    }

    // Generators g with g^2 among the relators.
    bool involutory() const {
      std::vector<bool> inv(generators.size() + 1, false);
      for (auto const& r : relators) {
        auto const& w = r.word;
        if (w.size() == 2 && w[0] == w[1]) {
          inv[generator_of(w[0])] = true;
        }
      }
      return std::all_of(inv.begin() + 1, inv.end(), [](bool b) { return b; });
    }

    // Deterministic order: (tag, letters).
    void sort_relators() {
      std::stable_sort(relators.begin(), relators.end(),
                       [](Relator const& a, Relator const& b) {
                         return std::tie(a.tag, a.word) < std::tie(b.tag, b.word);
                       });
    }

    friend bool operator==(GroupPresentation const&,
                           GroupPresentation const&) = default;
  };

  namespace detail {
    inline std::vector<std::string> edge_names(int count) {
      std::vector<std::string> out;
      for (int i = 1; i <= count; ++i) {
        out.push_back(std::to_string(i));
      }
      return out;
    }

    inline Word triple_word(int i, int j) {
      return Word{i, j}.power(3);
    }
    inline Word commutator_word(int i, int j) {
      return Word{i, j}.power(2);
    }

    // Involutions and the pair classification over a given adjacency rule.
    template <typename Adjacent>
    void add_pair_relators(GroupPresentation& p, int count, Adjacent adj) {
      for (int i = 1; i <= count; ++i) {
        p.relators.push_back({Word{i, i}, RelatorTag::involution, ""});
      }
      for (int i = 1; i <= count; ++i) {
        for (int j = i + 1; j <= count; ++j) {
          if (adj(i, j)) {
            p.relators.push_back({triple_word(i, j), RelatorTag::triple, ""});
          } else {
            p.relators.push_back(
                {commutator_word(i, j), RelatorTag::commutator, ""});
          }
        }
      }
    }
  }  // namespace detail

  // The quintic at an inner vertex with sorted labels a..f:
  // c a b a c = d f e f d, stored as c a b a c (d f e f d)^-1.
  inline Word quintic_word(std::array<int, 6> const& s) {
    int a = s[0], b = s[1], c = s[2], d = s[3], e = s[4], f = s[5];
    return Word{c, a, b, a, c, d, f, e, f, d};
  }

  inline GroupPresentation g1_presentation(DegenerationComplex const& cx) {
    GroupPresentation p;
    auto const& prm = cx.params();
    p.name = "G1(" + std::to_string(prm.m) + "," + std::to_string(prm.n) + ")";
    int const count = prm.edge_count();
    p.generators = detail::edge_names(count);
    detail::add_pair_relators(
        p, count, [&](int i, int j) { return cx.share_triangle(i, j); });
    for (auto const& h : cycle_inventory(cx).hexagons) {
      p.relators.push_back({quintic_word(h.sorted), RelatorTag::quintic,
                            "V" + std::to_string(h.vertex)});
    }
    p.sort_relators();
    return p;
  }

  // Fork relators [u, v w v] for each role choice at a degree-3 dual node.
  inline std::vector<Relator> fork_relators(DualGraph const& g) {
    std::vector<Relator> out;
    for (int t = 1; t <= g.node_count; ++t) {
      auto es = g.incident[t - 1];
      if (es.size() != 3) {
        continue;
      }
      std::sort(es.begin(), es.end());
      for (int r = 0; r < 3; ++r) {
        int u = es[r], v = es[(r + 1) % 3], w = es[(r + 2) % 3];
        if (v > w) {
          std::swap(v, w);
        }
        out.push_back({Word{u, v, w, v}.power(2), RelatorTag::fork,
                       "T" + std::to_string(t)});
      }
    }
    return out;
  }

  inline GroupPresentation cy_presentation(DualGraph const& g) {
    GroupPresentation p;
    int const count = g.link_count();
    p.name = "CY";
    p.generators = detail::edge_names(count);
    auto adj = [&](int i, int j) {
      auto const& a = g.links[i - 1];
      auto const& b = g.links[j - 1];
      return a[0] == b[0] || a[0] == b[1] || a[1] == b[0] || a[1] == b[1];
    };
    detail::add_pair_relators(p, count, adj);
    for (auto& r : fork_relators(g)) {
      p.relators.push_back(std::move(r));
    }
    p.sort_relators();
    return p;
  }

  inline GroupPresentation cy_presentation(DegenerationComplex const& cx) {
    auto p = cy_presentation(dual_graph(cx));
    auto const& prm = cx.params();
    p.name = "CY(" + std::to_string(prm.m) + "," + std::to_string(prm.n) + ")";
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // gamma words
  ////////////////////////////////////////////////////////////////////////

  // For a cycle u_1..u_r (consecutive entries share a triangle, u_r and u_1
  // too): gamma_i = u_{i+2} ... u_r u_1 ... u_i for i <= r-2,
  // gamma_{r-1} = u_1 ... u_{r-1}, gamma_r = u_2 ... u_r.
  struct GammaWords {
    std::vector<int> cycle;
    std::vector<Word> gamma;     // gamma[i-1] = gamma_i
    std::vector<Word> elements;  // elements[j-2] = gamma_j gamma_1^-1, j >= 2

    Word const& gamma_at(int i) const {
      return gamma.at(i - 1);
    }
    Word const& element_at(int j) const {
      return elements.at(j - 2);
    }
  };

  inline GammaWords gamma_words(std::vector<int> const& cycle) {
    int const r = static_cast<int>(cycle.size());
    if (r < 3) {
      throw RangeError("cycle length must be >= 3, got " + std::to_string(r));
    }
    auto u = [&](int i) { return cycle[i - 1]; };
    GammaWords out;
    out.cycle = cycle;
    for (int i = 1; i <= r - 2; ++i) {
      Word w;
      for (int k = i + 2; k <= r; ++k) {
        w.push_back(u(k));
      }
      for (int k = 1; k <= i; ++k) {
        w.push_back(u(k));
      }
      out.gamma.push_back(w);
    }
    Word last1, last2;
    for (int k = 1; k <= r - 1; ++k) {
      last1.push_back(u(k));
    }
    for (int k = 2; k <= r; ++k) {
      last2.push_back(u(k));
    }
    out.gamma.push_back(last1);
    out.gamma.push_back(last2);
    Word inv1 = out.gamma[0].inverse();
    for (int j = 2; j <= r; ++j) {
      out.elements.push_back(out.gamma[j - 1] * inv1);
    }
    return out;
  }

  struct KernelElementSet {
    std::vector<GammaWords> cycles;  // one per H_k

    std::vector<Word> all_elements() const {
      std::vector<Word> out;
      for (auto const& c : cycles) {
        out.insert(out.end(), c.elements.begin(), c.elements.end());
      }
      return out;
    }
  };

  inline KernelElementSet kernel_elements(DegenerationComplex const& cx) {
    KernelElementSet out;
    for (auto const& h : cycle_inventory(cx).h_cycles) {
      out.cycles.push_back(gamma_words(h));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // E6 cycle relators
  ////////////////////////////////////////////////////////////////////////

  // The five-window chain of a hexagon: X_i = v_i ... v_{i+4} where v walks
  // the hexagon from b towards a.
  inline std::vector<Word> hexagon_chain_words(Hexagon const& h) {
    int const b = h.sorted[1];
    auto const& cyc = h.cyclic;
    int pos = static_cast<int>(std::find(cyc.begin(), cyc.end(), b) - cyc.begin());
    // cyclic order starts at a, so b is one step forward; walk backwards
    std::array<int, 6> v{};
    for (int i = 0; i < 6; ++i) {
      v[i] = cyc[((pos - i) % 6 + 6) % 6];
    }
    std::vector<Word> out;
    for (int i = 0; i < 6; ++i) {
      Word w;
      for (int k = 0; k < 5; ++k) {
        w.push_back(v[(i + k) % 6]);
      }
      out.push_back(w);
    }
    return out;
  }

  inline std::vector<Relator> e6_relators(CycleInventory const& inv,
                                          bool with_chain = false) {
    std::vector<Relator> out;
    for (auto const& h : inv.hexagons) {
      std::vector<int> cyc(h.cyclic.begin(), h.cyclic.end());
      auto gw = gamma_words(cyc);
      int const r = 6;
      std::string label = "V" + std::to_string(h.vertex);
      out.push_back({(gw.gamma_at(r - 1) * gw.gamma_at(r).inverse()).involutory(),
                     RelatorTag::e6cycle, label});
      if (with_chain) {
        auto chain = hexagon_chain_words(h);
        for (int i = 0; i + 1 < 6; ++i) {
          out.push_back({(chain[i] * chain[i + 1].inverse()).involutory(),
                         RelatorTag::e6cycle, label});
        }
      }
    }
    return out;
  }

  // C_Y(T) together with the hexagon cycle relators.
  inline GroupPresentation cy_e6_presentation(DegenerationComplex const& cx,
                                              bool with_chain = false) {
    auto p = cy_presentation(cx);
    for (auto& r : e6_relators(cycle_inventory(cx), with_chain)) {
      p.relators.push_back(std::move(r));
    }
    auto const& prm = cx.params();
    p.name = "CY/E6(" + std::to_string(prm.m) + "," + std::to_string(prm.n) + ")";
    p.sort_relators();
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // A_{t,n}
  ////////////////////////////////////////////////////////////////////////

  // Generator index of x_{ij} for symbol s (0-based), i,j in 1..n.
  inline int atn_generator(int n, int s, int i, int j) {
    return s * n * n + (i - 1) * n + j;
  }

  inline GroupPresentation a_tn_presentation(int t, int n) {
    if (t < 0 || n < 1) {
      throw RangeError("A_{t,n} needs t >= 0 and n >= 1");
    }
    GroupPresentation p;
    p.name = "A(" + std::to_string(t) + "," + std::to_string(n) + ")";
    for (int s = 0; s < t; ++s) {
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          p.generators.push_back("x" + std::to_string(s + 1) + "_"
                                 + std::to_string(i) + std::to_string(j));
        }
      }
    }
    auto x = [&](int s, int i, int j) { return atn_generator(n, s, i, j); };
    for (int s = 0; s < t; ++s) {
      for (int i = 1; i <= n; ++i) {
        p.relators.push_back({Word{x(s, i, i)}, RelatorTag::atn, "diag"});
      }
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          for (int k = 1; k <= n; ++k) {
            // x_ij x_jk = x_ik  and  x_jk x_ij x_ik = 1
            p.relators.push_back(
                {Word{x(s, i, j), x(s, j, k), -x(s, i, k)}, RelatorTag::atn,
                 "compose"});
            p.relators.push_back({Word{x(s, j, k), x(s, i, j), x(s, i, k)},
                                  RelatorTag::atn, "twist"});
          }
        }
      }
    }
    for (int s1 = 0; s1 < t; ++s1) {
      for (int s2 = 0; s2 < t; ++s2) {
        for (int i = 1; i <= n; ++i) {
          for (int j = 1; j <= n; ++j) {
            for (int k = 1; k <= n; ++k) {
              for (int l = 1; l <= n; ++l) {
                std::set<int> idx{i, j, k, l};
                if (idx.size() != 4) {
                  continue;
                }
                int a = x(s1, i, j), b = x(s2, k, l);
                p.relators.push_back(
                    {Word{a, b, -a, -b}, RelatorTag::atn, "commute"});
              }
            }
          }
        }
      }
    }
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // Syntactic cleanup
  ////////////////////////////////////////////////////////////////////////

  // Free reduction, involutory exponent normalisation (when every generator
  // carries an involution relator), removal of empty and duplicate relators.
  // No Tietze moves: the group is unchanged.
  inline GroupPresentation simplify(GroupPresentation const& in) {
    GroupPresentation out = in;
    bool const inv = in.involutory();
    std::vector<Relator> rels;
    std::set<std::vector<Letter>> seen;
    auto sorted = in.relators;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](Relator const& a, Relator const& b) {
                       return a.tag < b.tag;
                     });
    for (auto r : sorted) {
      Word w = r.word.cyclically_reduced();
      if (inv) {
        w = w.involutory();
      }
      if (w.empty()) {
        continue;
      }
      if (!seen.insert(w.letters()).second) {
        continue;
      }
      r.word = w;
      rels.push_back(std::move(r));
    }
    out.relators = std::move(rels);
    out.sort_relators();
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Interchange formats
  ////////////////////////////////////////////////////////////////////////

  enum class ExportFormat { gap, magma, json, plain };

  inline ExportFormat export_format_from_string(std::string const& s) {
    if (s == "gap" || s == "GAP-TEXT") {
      return ExportFormat::gap;
    }
    if (s == "magma" || s == "MAGMA-TEXT") {
      return ExportFormat::magma;
    }
    if (s == "json" || s == "JSON") {
      return ExportFormat::json;
    }
    if (s == "plain" || s == "PLAIN" || s == "text") {
      return ExportFormat::plain;
    }
    throw InputError("unknown export format '" + s + "'");
  }

  namespace detail {
    // Run-length rendering: x1*x2^2*x3^-1
    inline std::string render_product(Word const& w, std::string const& prefix,
                                      std::string const& one) {
      if (w.empty()) {
        return one;
      }
      std::ostringstream os;
      std::size_t i = 0;
      bool first = true;
      while (i < w.size()) {
        int g = generator_of(w[i]);
        int e = 0;
        std::size_t j = i;
        while (j < w.size() && generator_of(w[j]) == g
               && exponent_of(w[j]) == exponent_of(w[i])) {
          e += exponent_of(w[j]);
          ++j;
        }
        if (!first) {
          os << '*';
        }
        first = false;
        os << prefix << g;
        if (e != 1) {
          os << '^' << e;
        }
        i = j;
      }
      return os.str();
    }
  }  // namespace detail

  inline nlohmann::ordered_json to_json(GroupPresentation const& p) {
    nlohmann::ordered_json j;
    j["schema"] = "galcov-presentation/1";
    j["name"] = p.name;
    j["generators"] = p.generators;
    auto rels = nlohmann::ordered_json::array();
    for (auto const& r : p.relators) {
      nlohmann::ordered_json o;
      o["tag"] = to_string(r.tag);
      o["label"] = r.label;
      o["word"] = r.word.letters();
      rels.push_back(o);
    }
    j["relators"] = rels;
    return j;
  }

  inline GroupPresentation presentation_from_json(nlohmann::json const& j) {
    if (j.value("schema", "") != "galcov-presentation/1") {
      throw InputError("not a galcov-presentation/1 document");
    }
    GroupPresentation p;
    p.name = j.at("name").get<std::string>();
    p.generators = j.at("generators").get<std::vector<std::string>>();
    for (auto const& r : j.at("relators")) {
      p.relators.push_back(
          {Word(r.at("word").get<std::vector<Letter>>()),
           relator_tag_from_string(r.at("tag").get<std::string>()),
           r.at("label").get<std::string>()});
    }
    return p;
  }

  inline std::string export_presentation(GroupPresentation const& p,
                                         ExportFormat fmt) {
    std::ostringstream os;
    int const ng = p.generator_count();
    switch (fmt) {
      case ExportFormat::gap: {
        os << "# " << p.name << "\n";
        os << "F := FreeGroup(";
        for (int i = 1; i <= ng; ++i) {
          os << (i > 1 ? ", " : "") << "\"x" << i << "\"";
        }
        os << ");;\n";
        os << "rels := [\n";
        for (std::size_t i = 0; i < p.relators.size(); ++i) {
          os << "  " << detail::render_product(p.relators[i].word, "F.", "One(F)")
             << (i + 1 < p.relators.size() ? ",\n" : "\n");
        }
        os << "];;\n";
        os << "G := F / rels;;\n";
        break;
      }
      case ExportFormat::magma: {
        os << "// " << p.name << "\n";
        os << "F<";
        for (int i = 1; i <= ng; ++i) {
          os << (i > 1 ? "," : "") << "x" << i;
        }
        os << "> := FreeGroup(" << ng << ");\n";
        os << "G := quo< F |\n";
        for (std::size_t i = 0; i < p.relators.size(); ++i) {
          os << "  " << detail::render_product(p.relators[i].word, "x", "F!1")
             << (i + 1 < p.relators.size() ? ",\n" : "\n");
        }
        os << ">;\n";
        break;
      }
      case ExportFormat::json:
        os << to_json(p).dump(2) << "\n";
        break;
      case ExportFormat::plain:
        os << "# " << p.name << ": " << ng << " generators, "
           << p.relators.size() << " relators\n";
        for (auto const& r : p.relators) {
          os << to_string(r.tag);
          if (!r.label.empty()) {
            os << ' ' << r.label;
          }
          os << ": " << r.word.to_string() << "\n";
        }
        break;
    }
    return os.str();
  }

}  // namespace galcov

#endif  // GALCOV_PRESENTATION_HPP_
