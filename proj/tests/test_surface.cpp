#include <gtest/gtest.h>

#include "galcov/galcov.hpp"

using namespace galcov;

TEST(Census, SpecExamples) {
  auto c24 = singularity_census(build_complex(2, 4));
  EXPECT_EQ(c24.d, 584);
  EXPECT_EQ(c24.rho, 120);
  EXPECT_EQ(c24.b, 16);
  EXPECT_EQ(c24.h, 40);

  auto c22 = singularity_census(build_complex(2, 2));
  EXPECT_EQ(c22.d, 96);
  EXPECT_EQ(c22.double_incident_pairs, 1);

  auto c12 = singularity_census(build_complex(1, 2));
  EXPECT_EQ(c12.d, 8);
  EXPECT_EQ(c12.rho, 12);
}

TEST(Census, EnumerationMatchesClosedForms) {
  for (int m = 1; m <= 6; ++m) {
    for (int n = 2; n <= 8; ++n) {
      SCOPED_TRACE(std::to_string(m) + "x" + std::to_string(n));
      auto e = singularity_census(build_complex(m, n));
      EXPECT_EQ(e, census_closed_form(m, n));
      EXPECT_EQ(e.d, node_polynomial(m, n));
      EXPECT_EQ(e.rho, 24LL * m * n - 18LL * n);
      EXPECT_EQ(e.d, 4 * e.disjoint_pairs + 24LL * n * (m - 1));
    }
  }
}

TEST(Chern, SpecExamples) {
  auto c = chern_numbers(2, 4, ChernRoute::census);
  EXPECT_EQ(c.c1sq, factorial(16) * 289);
  EXPECT_EQ(c.c2, factorial(16) * 145);
  for (int m = 1; m <= 5; ++m) {
    auto k = chern_numbers(m, 2, ChernRoute::closed_form);
    EXPECT_EQ(k.c1sq, factorial(4 * m) * (36 * m * m - 60 * m + 25));
  }
  EXPECT_EQ(chern_numbers(1, 3, ChernRoute::census), chern_numbers(1, 3, ChernRoute::closed_form));
}

TEST(Chern, RoutesAgreeAndHirzebruch) {
  for (int m = 1; m <= 6; ++m) {
    for (int n = 2; n <= 8; ++n) {
      SCOPED_TRACE(std::to_string(m) + "x" + std::to_string(n));
      auto a = chern_numbers(m, n, ChernRoute::census);
      auto b = chern_numbers(m, n, ChernRoute::closed_form);
      EXPECT_EQ(a, b);
      long long h = 6LL * m * n - 2LL * n;
      EXPECT_EQ(a.c1sq * 4, factorial(2LL * m * n) * (h - 6) * (h - 6));
      auto t = index_tau(m, n);
      EXPECT_EQ(3 * t.tau, BigRational(a.c1sq) - 2 * BigRational(a.c2));
      EXPECT_EQ(t.sign, expected_sign(m, n));
      EXPECT_EQ(t.factor, tau_factor_closed_form(m, n));
    }
  }
}

TEST(Index, SpecExamples) {
  auto t12 = index_tau(1, 2);
  EXPECT_EQ(t12.tau, -8);
  EXPECT_EQ(t12.sign, Sign::negative);
  auto t23 = index_tau(2, 3);
  EXPECT_EQ(t23.tau, 0);
  EXPECT_EQ(t23.sign, Sign::zero);
  auto t35 = index_tau(3, 5);
  EXPECT_EQ(t35.sign, Sign::positive);
  EXPECT_EQ(t35.factor, 1);  // (15 - 15 + 3) / 3
}

TEST(Irregularity, SpecExamples) {
  auto r = irregularity_report(2, 4);
  EXPECT_EQ(r.q_bound, 15);
  EXPECT_EQ(r.h1_rank_bound, 30);
  EXPECT_EQ(r.subgroup_rank, 14);
  EXPECT_FALSE(r.benchmark_q.has_value());
  for (int n = 2; n <= 6; ++n) {
    auto b = irregularity_report(1, n);
    ASSERT_TRUE(b.benchmark_q.has_value());
    EXPECT_EQ(*b.benchmark_q, 2 * n - 1);
  }
  auto r12 = irregularity_report(1, 2);
  EXPECT_EQ(r12.subgroup_rank, 3);
  EXPECT_LE(r12.subgroup_rank, r12.h1_rank_bound);
}

TEST(Report, JsonAndTable) {
  auto j = to_json(surface_report(2, 4));
  EXPECT_EQ(j["schema"], "galcov-surface/1");
  EXPECT_EQ(j["c1sq_factored"], "16!*289");
  EXPECT_EQ(j["c2_factored"], "16!*145");
  EXPECT_EQ(j["tau_factored"], "-16!/3");
  EXPECT_EQ(to_json(surface_report(2, 3))["tau_factored"], "0");
  auto csv = surface_table({surface_report(2, 4)}, true);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "m,n,b,h,d,rho,c1sq-factor,c2-factor,tau-factor,sign");
  EXPECT_NE(csv.find("2,4,16,40,584,120,289,145,-1/3,NEGATIVE"), std::string::npos);
}

TEST(Report, RangeChecks) {
  EXPECT_THROW(index_tau(0, 3), RangeError);
  EXPECT_THROW(census_closed_form(1, 1), RangeError);
  EXPECT_THROW(irregularity_report(1, 1), RangeError);
}
