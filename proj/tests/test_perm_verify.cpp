#include <gtest/gtest.h>

#include "galcov/galcov.hpp"

using namespace galcov;

TEST(PermVerify, TranspositionImages) {
  auto map = transposition_map(build_complex(1, 2));
  EXPECT_EQ(map.at(1).to_cycle_string(), "(1,2)");
  for (int m = 1; m <= 3; ++m) {
    for (int n = 2; n <= 5; ++n) {
      auto mp = transposition_map(build_complex(m, n));
      for (int g = 1; g <= mp.generator_count(); ++g) {
        EXPECT_FALSE(mp.at(g).is_identity());
        EXPECT_TRUE((mp.at(g) * mp.at(g)).is_identity());
      }
      EXPECT_TRUE(transitive(mp));
    }
  }
}

TEST(PermVerify, EvalWord) {
  auto map = transposition_map(build_complex(2, 4));
  EXPECT_TRUE(eval_word(Word{}, map).is_identity());
  for (int j = 1; j <= 20; ++j) {
    EXPECT_TRUE(eval_word(Word{j, j}, map).is_identity());
  }
  auto h1 = gamma_words(cycle_inventory(build_complex(2, 4)).h_cycles[0]);
  EXPECT_TRUE(kernel_membership(h1.gamma_at(7) * h1.gamma_at(8).inverse(), map));
  // left-to-right composition against a hand product
  auto p = map.at(1) * map.at(2) * map.at(9).inverse();
  EXPECT_EQ(eval_word(Word{1, 2, -9}, map), p);
  EXPECT_THROW(eval_word(Word{21}, map), InputError);
}

TEST(PermVerify, KernelMembershipExamples) {
  auto cx = build_complex(2, 4);
  auto map = transposition_map(cx);
  for (auto const& w : kernel_elements(cx).all_elements()) {
    EXPECT_TRUE(kernel_membership(w, map)) << w.to_string();
  }
  EXPECT_FALSE(kernel_membership(Word{1}, map));
  auto c13 = build_complex(1, 3);
  auto h = gamma_words(cycle_inventory(c13).h_cycles[0]);
  EXPECT_FALSE(kernel_membership(h.gamma_at(1), transposition_map(c13)));
}

TEST(PermVerify, EmittersPassOnGrid) {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 2; n <= 6; ++n) {
      auto cx = build_complex(m, n);
      auto map = transposition_map(cx);
      EXPECT_TRUE(verify_relators(g1_presentation(cx), map).pass);
      EXPECT_TRUE(verify_relators(cy_e6_presentation(cx, true), map).pass);
    }
  }
  auto r = verify_relators(g1_presentation(build_complex(2, 4)),
                           transposition_map(build_complex(2, 4)));
  EXPECT_EQ(r.checks.size(), 214u);
  EXPECT_EQ(r.failures(), 0u);
}

TEST(PermVerify, MutatedTripleIsCaught) {
  auto cx = build_complex(2, 4);
  auto p = g1_presentation(cx);
  // turn <1,2> into [1,2]
  for (auto& r : p.relators) {
    if (r.tag == RelatorTag::triple && r.word[0] == 1 && r.word[1] == 2) {
      r.word = Word{1, 2, 1, 2};
      r.tag = RelatorTag::commutator;
      r.label = "mutant";
    }
  }
  auto rep = verify_relators(p, transposition_map(cx));
  EXPECT_FALSE(rep.pass);
  ASSERT_EQ(rep.failures(), 1u);
  ASSERT_TRUE(rep.counterexample.has_value());
  EXPECT_EQ(*rep.counterexample, (Word{1, 2, 1, 2}));
  auto bad = std::find_if(rep.checks.begin(), rep.checks.end(),
                          [](RelatorCheck const& c) { return !c.pass; });
  EXPECT_EQ(bad->relator.label, "mutant");
  EXPECT_EQ(to_json(rep, true)["checks"].size(), 1u);
}

TEST(PermVerify, RelabelInvariance) {
  auto cx = build_complex(2, 3);
  auto map = transposition_map(cx);
  auto g1 = g1_presentation(cx);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto sigma = random_permutation(map.degree, seed);
    auto conj = relabel(map, sigma);
    EXPECT_TRUE(verify_relators(g1, conj).pass);
    EXPECT_TRUE(transitive(conj));
    for (auto const& w : kernel_elements(cx).all_elements()) {
      EXPECT_TRUE(kernel_membership(w, conj));
    }
  }
}

TEST(PermVerify, GeneratorCountMismatch) {
  auto p = g1_presentation(build_complex(2, 4));
  EXPECT_THROW(verify_relators(p, transposition_map(build_complex(2, 3))), InputError);
}

TEST(PermVerify, HomCountsHandChecked) {
  auto g = g1_presentation(build_complex(1, 2));
  // all generators identified mod commutators: two maps to C2
  EXPECT_EQ(hom_count(g, groups::cyclic(2)), 2u);
  EXPECT_EQ(hom_count(g, groups::cyclic(3)), 1u);
  // S3: trivial map, or transpositions with x1 = x3 and x2 = x4
  EXPECT_EQ(hom_count(g, groups::symmetric3()), 10u);
  EXPECT_EQ(hom_count(g, groups::trivial()), 1u);
}

TEST(PermVerify, HomCountsAgreeAcrossPresentations) {
  for (auto [m, n] : {std::pair{1, 2}, std::pair{1, 3}}) {
    auto cx = build_complex(m, n);
    auto g1 = g1_presentation(cx);
    auto ce = cy_e6_presentation(cx);
    for (auto const& grp : groups::all_up_to_order_8()) {
      EXPECT_EQ(hom_count(g1, grp), hom_count(ce, grp)) << grp.name();
    }
  }
}

TEST(PermVerify, HomCountBudget) {
  auto g = g1_presentation(build_complex(2, 4));
  EXPECT_THROW(hom_count(g, groups::dihedral8(), {100}), BudgetError);
}

TEST(PermVerify, GroupTables) {
  auto all = groups::all_up_to_order_8();
  EXPECT_EQ(all.size(), 14u);
  for (auto const& grp : all) {
    for (int a = 0; a < grp.order(); ++a) {
      EXPECT_EQ(grp.mul(a, grp.inv(a)), 0);
      for (int b = 0; b < grp.order(); ++b) {
        for (int c = 0; c < grp.order(); ++c) {
          ASSERT_EQ(grp.mul(grp.mul(a, b), c), grp.mul(a, grp.mul(b, c)));
        }
      }
    }
  }
  EXPECT_EQ(groups::by_name("S4").order(), 24);
  EXPECT_THROW(groups::by_name("A5"), InputError);
}
