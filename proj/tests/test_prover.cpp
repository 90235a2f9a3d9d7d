#include <gtest/gtest.h>

#include <random>

#include "galcov/galcov.hpp"

using namespace galcov;

namespace {

  struct Fixture24 {
    DegenerationComplex cx = build_complex(2, 4);
    MoveSet ms = MoveSet::from_presentation(g1_presentation(cx));
    GeneratorMap map = transposition_map(cx);
  };

}  // namespace

TEST(Prover, RulesAreSound) {
  for (auto [m, n] : {std::pair{2, 4}, std::pair{3, 3}, std::pair{2, 2}}) {
    auto cx = build_complex(m, n);
    auto map = transposition_map(cx);
    for (auto const& p : {g1_presentation(cx), cy_e6_presentation(cx, true)}) {
      auto ms = MoveSet::from_presentation(p);
      for (auto const& r : ms.rules()) {
        EXPECT_EQ(eval_word(r.lhs, map), eval_word(r.rhs, map)) << r.lhs.to_string();
      }
      // and under random relabellings of the points
      auto conj = relabel(map, random_permutation(map.degree, 11));
      for (auto const& r : ms.rules()) {
        EXPECT_EQ(eval_word(r.lhs, conj), eval_word(r.rhs, conj));
      }
    }
  }
}

TEST(Prover, IdenticalWords) {
  Fixture24 f;
  auto r = prove_equal(Word{1, 2, 3}, Word{1, 2, 3}, f.ms);
  ASSERT_TRUE(r.proven());
  EXPECT_TRUE(r.trace->steps.empty());
}

TEST(Prover, ChainEqualityAtV6) {
  Fixture24 f;
  auto r = prove_equal(Word::parse("2 1 9 14 15"), Word::parse("1 9 14 15 10"), f.ms);
  ASSERT_TRUE(r.proven());
  EXPECT_EQ(r.trace->replay(f.ms), Word::parse("1 9 14 15 10"));
  EXPECT_TRUE(trace_preserves_images(*r.trace, f.ms, f.map));
  EXPECT_LE(r.work, SearchOptions{}.budget);
}

TEST(Prover, QuinticShapesAgreeAtV5) {
  Fixture24 f;
  auto r = prove_equal(Word::parse("9 7 8 7 9"), Word::parse("7 8 9 8 7"), f.ms);
  ASSERT_TRUE(r.proven());
  EXPECT_TRUE(trace_preserves_images(*r.trace, f.ms, f.map));
  // only braids and commutations are needed
  for (auto const& s : r.trace->steps) {
    auto tag = f.ms.rule(s.rule).tag;
    EXPECT_TRUE(tag == RelatorTag::triple || tag == RelatorTag::commutator
                || tag == RelatorTag::involution);
  }
}

TEST(Prover, TraceReplayAndTamper) {
  Fixture24 f;
  auto r = prove_equal(Word::parse("2 1 9 14 15"), Word::parse("1 9 14 15 10"), f.ms);
  ASSERT_TRUE(r.proven());
  auto j = to_json(*r.trace, f.ms);
  auto back = trace_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(back.steps, r.trace->steps);
  EXPECT_EQ(back.replay(f.ms), r.trace->final);
  EXPECT_EQ(to_json(back, f.ms).dump(), j.dump());

  auto rev = r.trace->reversed(f.ms);
  EXPECT_EQ(rev.replay(f.ms), r.trace->initial);

  ASSERT_FALSE(back.steps.empty());
  back.steps.front().position += 1000;
  EXPECT_THROW(back.replay(f.ms), InputError);
  auto wrong = *r.trace;
  wrong.final = Word{1};
  EXPECT_THROW(wrong.replay(f.ms), InputError);
}

TEST(Prover, UnequalIsOnlyReportedFromImages) {
  Fixture24 f;
  SearchOptions tight;
  tight.budget = 200;
  auto r = prove_equal(Word{1, 2}, Word{2, 4}, f.ms, tight);
  EXPECT_EQ(r.status, ProofStatus::unknown);
  EXPECT_LE(r.work, tight.budget + 1);
  auto c = prove_equal_checked(Word{1, 2}, Word{2, 4}, f.ms, f.map, tight);
  EXPECT_EQ(c.status, ProofStatus::unequal);
  EXPECT_STREQ(to_string(c.status), "UNEQUAL");
}

TEST(Prover, AlphabetMismatch) {
  Fixture24 f;
  EXPECT_THROW(prove_equal(Word{1}, Word{21}, f.ms), InputError);
}

TEST(Prover, Waypoints) {
  Fixture24 f;
  auto r = prove_by_waypoints({Word::parse("2 1 9 14 15"), Word::parse("1 9 14 15 10"),
                               Word::parse("9 14 15 10 2")},
                              f.ms);
  ASSERT_TRUE(r.proven());
  EXPECT_EQ(r.trace->replay(f.ms), Word::parse("9 14 15 10 2"));
}

TEST(Prover, RandomConjugatesAreProven) {
  // w = x r x^-1 with r a braid relator side swap: w_lhs = w_rhs
  Fixture24 f;
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> letter(1, 20);
  int proven = 0;
  for (int trial = 0; trial < 20; ++trial) {
    auto const& rule = f.ms.rule(f.ms.braid_rule(1, 2));
    Word x{letter(rng), letter(rng)};
    Word a = x * rule.lhs * x.reversed();
    Word b = x * rule.rhs * x.reversed();
    auto r = prove_equal(a, b, f.ms);
    ASSERT_TRUE(r.proven());
    EXPECT_TRUE(trace_preserves_images(*r.trace, f.ms, f.map));
    ++proven;
  }
  EXPECT_EQ(proven, 20);
}

TEST(Coxeter, AffineLengthAndOrders) {
  AffineCoxeter w(4);
  auto f = w.identity();
  EXPECT_EQ(w.length(f), 0);
  for (int s : {1, 2, 3, 0, 1}) {
    w.right_multiply(f, s);
  }
  EXPECT_EQ(w.length(f), 5);
  EXPECT_EQ(w.order(1, 2), 3);
  EXPECT_EQ(w.order(0, 3), 3);
  EXPECT_EQ(w.order(1, 3), 2);
  EXPECT_THROW(AffineCoxeter(2), RangeError);
  // s_0 and s_1 are involutions
  auto g = w.identity();
  w.right_multiply(g, 0);
  w.right_multiply(g, 0);
  EXPECT_EQ(g, w.identity());
}

TEST(Coxeter, ReductionIsCanonical) {
  auto cx = build_complex(1, 3);
  auto ms = MoveSet::from_presentation(g1_presentation(cx));
  auto cyc = cycle_inventory(cx).h_cycles[0];
  CycleReducer red(cyc, ms);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pick(0, 5);
  for (int trial = 0; trial < 50; ++trial) {
    Word w;
    for (int k = 0; k < 12; ++k) {
      w.push_back(cyc[pick(rng)]);
    }
    auto t = red.reduce(w);
    EXPECT_EQ(t.replay(ms), t.final);
    AffineCoxeter cox(6);
    EXPECT_EQ(static_cast<long long>(t.final.size()), cox.length(red.element(w)));
    // equal elements give equal canonical words
    auto t2 = red.reduce(t.final);
    EXPECT_EQ(t2.final, t.final);
  }
}

TEST(Goals, ChainsOn24) {
  auto cx = build_complex(2, 4);
  ProverContext ctx(cx, {}, load_scripts(GALCOV_SCRIPTS));
  int proven = 0;
  for (auto const& h : cycle_inventory(cx).hexagons) {
    for (auto const& g : verify_chain(h, ctx)) {
      EXPECT_TRUE(g.proven()) << g.name;
      EXPECT_TRUE(g.images_preserved) << g.name;
      proven += g.proven();
    }
  }
  EXPECT_EQ(proven, 20);
}

TEST(Goals, PrintedForkDerivations) {
  auto cx = build_complex(2, 4);
  ProverContext ctx(cx);
  auto a = verify_fork_instance(13, 14, 9, ctx);
  EXPECT_TRUE(a.proven());
  EXPECT_TRUE(a.images_preserved);
  auto b = verify_fork_instance(1, 8, 9, ctx);
  EXPECT_TRUE(b.proven());
  EXPECT_TRUE(b.images_preserved);
  // a quintic is genuinely needed: G1 has no fork relators
  EXPECT_FALSE(b.relators_used(ctx.moves).empty());
  EXPECT_THROW(verify_fork_derivation(1, ctx), InputError);
}

TEST(Goals, GammaPairEndsAtLastBraid) {
  auto cx = build_complex(2, 4);
  ProverContext ctx(cx);
  auto gw = kernel_elements(cx).cycles[0];
  auto g = verify_gamma_commutation(gw, 7, 8, ctx);
  ASSERT_TRUE(g.proven());
  EXPECT_EQ(g.method, "coxeter");
  EXPECT_TRUE(g.images_preserved);
  EXPECT_TRUE(g.uses_braid(ctx.moves, 7, 8));

  auto c13 = build_complex(1, 3);
  ProverContext c2(c13);
  auto g13 = verify_gamma_commutation(kernel_elements(c13).cycles[0], 5, 6, c2);
  ASSERT_TRUE(g13.proven());
  EXPECT_TRUE(g13.uses_braid(c2.moves, 5, 6));
}

TEST(Goals, CrossCycleUsesCommutationsOnly) {
  auto cx = build_complex(2, 4);
  ProverContext ctx(cx);
  auto ke = kernel_elements(cx);
  auto g = verify_cross_cycle(ke.cycles[0].element_at(8), ke.cycles[1].element_at(8), ctx);
  ASSERT_TRUE(g.proven());
  EXPECT_EQ(g.trace->essential_steps(ctx.moves), 0u);
  EXPECT_TRUE(g.images_preserved);
}

TEST(Goals, ScriptsParse) {
  auto sc = load_scripts(GALCOV_SCRIPTS);
  ASSERT_FALSE(sc.empty());
  for (auto const& s : sc) {
    EXPECT_EQ(s.goal, "chain");
    EXPECT_GE(s.waypoints.size(), 2u);
  }
  EXPECT_THROW(load_scripts("/nonexistent/scripts.json"), InputError);
}
