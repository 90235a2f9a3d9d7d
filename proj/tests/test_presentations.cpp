#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "galcov/galcov.hpp"

using namespace galcov;

namespace {

  std::string slurp(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

  std::set<std::pair<int, int>> pairs_with(GroupPresentation const& p, RelatorTag tag) {
    std::set<std::pair<int, int>> out;
    for (auto const& r : p.with_tag(tag)) {
      out.insert({r.word[0], r.word[1]});
    }
    return out;
  }

}  // namespace

TEST(Words, ParseSeparatorsAndErrors) {
  EXPECT_EQ(Word::parse("1*2.-3, 4"), (Word{1, 2, -3, 4}));
  EXPECT_TRUE(Word::parse("").empty());
  EXPECT_THROW(Word::parse("1 x"), InputError);
  EXPECT_THROW(Word::parse("1 0"), InputError);
  EXPECT_THROW(Word::parse("3a"), InputError);
}

TEST(Presentations, RelatorCensus24) {
  auto p = g1_presentation(build_complex(2, 4));
  EXPECT_EQ(p.generator_count(), 20);
  EXPECT_EQ(p.count(RelatorTag::involution), 20u);
  // Shared-triangle enumeration gives 32 adjacent pairs, not 40.
  EXPECT_EQ(p.count(RelatorTag::triple), 32u);
  EXPECT_EQ(p.count(RelatorTag::commutator), 158u);
  EXPECT_EQ(p.count(RelatorTag::quintic), 4u);
  EXPECT_EQ(p.relators.size(), 214u);
}

TEST(Presentations, SmallestCase) {
  auto p = g1_presentation(build_complex(1, 2));
  EXPECT_EQ(p.generator_count(), 4);
  EXPECT_EQ(p.count(RelatorTag::involution), 4u);
  EXPECT_EQ(pairs_with(p, RelatorTag::triple),
            (std::set<std::pair<int, int>>{{1, 2}, {1, 4}, {2, 3}, {3, 4}}));
  EXPECT_EQ(pairs_with(p, RelatorTag::commutator),
            (std::set<std::pair<int, int>>{{1, 3}, {2, 4}}));
  EXPECT_EQ(p.count(RelatorTag::quintic), 0u);
}

TEST(Presentations, PairClassificationComplete) {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 2; n <= 6; ++n) {
      auto cx = build_complex(m, n);
      auto g1 = g1_presentation(cx);
      auto cy = cy_presentation(cx);
      std::size_t E = cx.params().edge_count();
      EXPECT_EQ(g1.count(RelatorTag::triple) + g1.count(RelatorTag::commutator),
                E * (E - 1) / 2);
      EXPECT_EQ(pairs_with(g1, RelatorTag::triple), pairs_with(cy, RelatorTag::triple));
      EXPECT_EQ(g1.count(RelatorTag::quintic), static_cast<std::size_t>(n * (m - 1)));
      EXPECT_EQ(cy.count(RelatorTag::fork), static_cast<std::size_t>(6 * n * (m - 1)));
    }
  }
}

TEST(Presentations, PrintedQuinticAtV6) {
  auto p = g1_presentation(build_complex(2, 4));
  auto q = p.with_tag(RelatorTag::quintic);
  auto it = std::find_if(q.begin(), q.end(), [](Relator const& r) { return r.label == "V6"; });
  ASSERT_NE(it, q.end());
  Word lhs = Word::parse("9 1 2 1 9"), rhs = Word::parse("10 15 14 15 10");
  EXPECT_EQ(it->word, (lhs * rhs.inverse()).involutory());
}

TEST(Presentations, CyMatchesG1OnCycleGraphs) {
  for (int n = 2; n <= 6; ++n) {
    auto cx = build_complex(1, n);
    auto g1 = g1_presentation(cx);
    auto cy = cy_presentation(cx);
    EXPECT_EQ(g1.relators, cy.relators);
  }
  auto cy22 = cy_presentation(build_complex(2, 2));
  EXPECT_EQ(cy22.count(RelatorTag::fork), 12u);
  auto g24 = g1_presentation(build_complex(2, 4));
  auto c24 = cy_presentation(build_complex(2, 4));
  EXPECT_EQ(c24.count(RelatorTag::fork), 24u);
  EXPECT_EQ(c24.relators.size() - 24, g24.relators.size() - 4);
}

TEST(Presentations, E6RelatorAtV6) {
  auto cx = build_complex(2, 4);
  auto inv = cycle_inventory(cx);
  auto rels = e6_relators(inv);
  ASSERT_EQ(rels.size(), 4u);
  auto it = std::find_if(rels.begin(), rels.end(),
                         [](Relator const& r) { return r.label == "V6"; });
  ASSERT_NE(it, rels.end());
  Word want = Word::parse("1 2 10 15 14") * Word::parse("2 10 15 14 9").inverse();
  EXPECT_EQ(it->word, want.involutory());
  EXPECT_EQ(e6_relators(inv, true).size(), 24u);
}

TEST(Presentations, E6RelatorsHaveEvenLength) {
  // the abelianization is Z/2 on the word length, so every relator is even
  for (int m = 2; m <= 4; ++m) {
    for (int n = 2; n <= 6; ++n) {
      auto cx = build_complex(m, n);
      for (auto const& r : e6_relators(cycle_inventory(cx), true)) {
        EXPECT_EQ(r.word.size() % 2, 0u) << r.word.to_string();
      }
    }
  }
}

TEST(Presentations, SeamChainInstance) {
  auto inv = cycle_inventory(build_complex(2, 4));
  auto h = *std::find_if(inv.hexagons.begin(), inv.hexagons.end(),
                         [](Hexagon const& x) { return x.vertex == 5; });
  EXPECT_EQ(h.cyclic, (std::array<int, 6>{7, 8, 9, 13, 20, 12}));
  auto chain = hexagon_chain_words(h);
  // b a d f e = a d f e c with a..f = 7 8 9 12 13 20
  EXPECT_EQ(chain[0], Word::parse("8 7 12 20 13"));
  EXPECT_EQ(chain[1], Word::parse("7 12 20 13 9"));
}

TEST(Presentations, GammaWords) {
  auto ke = kernel_elements(build_complex(2, 4));
  ASSERT_EQ(ke.cycles.size(), 2u);
  auto const& h1 = ke.cycles[0];
  EXPECT_EQ(h1.gamma_at(7), Word::parse("1 2 3 4 5 6 7"));
  EXPECT_EQ(h1.gamma_at(8), Word::parse("2 3 4 5 6 7 8"));
  EXPECT_EQ(h1.gamma_at(1), Word::parse("3 4 5 6 7 8 1"));
  EXPECT_EQ(ke.cycles[1].gamma_at(7), Word::parse("13 14 15 16 17 18 19"));
  auto all = ke.all_elements();
  EXPECT_EQ(all.size(), 14u);
  std::set<std::vector<Letter>> distinct;
  for (auto const& w : all) {
    distinct.insert(w.letters());
  }
  EXPECT_EQ(distinct.size(), 14u);
  for (auto const& g : h1.gamma) {
    EXPECT_EQ(g.size(), 7u);
  }
  for (auto const& e : h1.elements) {
    EXPECT_EQ(e.size(), 14u);
  }
  EXPECT_THROW(gamma_words({1, 2}), RangeError);
}

TEST(Presentations, ATnExamples) {
  auto t11 = simplify(a_tn_presentation(1, 1));
  EXPECT_EQ(t11.generator_count(), 1);
  EXPECT_TRUE(smith_normal_form(abelianize(t11)).is_trivial());

  auto t12 = a_tn_presentation(1, 2);
  EXPECT_EQ(t12.generator_count(), 4);
  auto inv = smith_normal_form(abelianize(t12));
  // the printed relations force 2-torsion
  EXPECT_EQ(inv.free_rank, 0);
  EXPECT_EQ(inv.to_string(), "Z/2");

  auto t22 = a_tn_presentation(2, 2);
  EXPECT_EQ(t22.generator_count(), 8);
  auto cross = std::count_if(t22.relators.begin(), t22.relators.end(),
                             [](Relator const& r) { return r.label == "commute"; });
  EXPECT_EQ(cross, 0);
  auto t14 = a_tn_presentation(1, 4);
  EXPECT_GT(t14.count(RelatorTag::atn), 0u);
}

TEST(Presentations, Simplify) {
  GroupPresentation p{"t", {"x1", "x2"}, {}};
  p.relators.push_back({Word{1, 1}, RelatorTag::involution, ""});
  p.relators.push_back({Word{1, 1}, RelatorTag::triple, ""});
  p.relators.push_back({Word{1, -1, 2}, RelatorTag::commutator, ""});
  auto s = simplify(p);
  ASSERT_EQ(s.relators.size(), 2u);
  EXPECT_EQ(s.relators[0].tag, RelatorTag::involution);
  EXPECT_EQ(s.relators[1].word, Word{2});

  auto g = g1_presentation(build_complex(2, 4));
  EXPECT_EQ(simplify(g), g);
  EXPECT_EQ(simplify(simplify(g)), simplify(g));
}

TEST(Presentations, GapGolden) {
  auto text = export_presentation(g1_presentation(build_complex(1, 2)), ExportFormat::gap);
  EXPECT_EQ(text, slurp(std::string(GALCOV_FIXTURES) + "/g1_1_2.gap"));
  EXPECT_NE(text.find("FreeGroup(\"x1\", \"x2\", \"x3\", \"x4\")"), std::string::npos);
}

TEST(Presentations, PlainGolden) {
  auto text = export_presentation(g1_presentation(build_complex(2, 4)), ExportFormat::plain);
  EXPECT_EQ(text, slurp(std::string(GALCOV_FIXTURES) + "/g1_2_4.txt"));
  EXPECT_NE(text.find("QUINTIC V6: 9 1 2 1 9 10 15 14 15 10\n"), std::string::npos);
}

TEST(Presentations, MagmaShape) {
  auto text = export_presentation(g1_presentation(build_complex(1, 2)), ExportFormat::magma);
  EXPECT_NE(text.find("F<x1,x2,x3,x4> := FreeGroup(4);"), std::string::npos);
  EXPECT_NE(text.find("x1^2"), std::string::npos);
}

TEST(Presentations, JsonRoundTrip) {
  for (auto const& p : {g1_presentation(build_complex(2, 3)),
                        cy_e6_presentation(build_complex(2, 3), true),
                        a_tn_presentation(2, 3)}) {
    auto back = presentation_from_json(nlohmann::json::parse(to_json(p).dump()));
    EXPECT_EQ(back, p);
  }
  EXPECT_THROW(export_format_from_string("latex"), InputError);
}
