#include <gtest/gtest.h>

#include <map>

#include "test_support.hpp"

using namespace cayley2;

TEST(Factorize, Examples) {
  const auto p = params_from_rse(2, 0, 0);
  const auto x = theorem1_generating_set(p);

  auto f = factorize(p, x, {0, 4, 0});
  EXPECT_EQ(f.factors, (std::vector<GroupElement>{{0, 4, 1}, {0, 0, 1}}));
  EXPECT_FALSE(f.fallback);

  f = factorize(p, x, {1, 7, 0});
  EXPECT_EQ(f.factors, (std::vector<GroupElement>{{2, 6, 1}, {1, 7, 1}}));
  EXPECT_FALSE(f.fallback);

  for (const auto& g : x.elements()) {
    f = factorize(p, x, g);
    EXPECT_EQ(f.factors, std::vector<GroupElement>{g});
    EXPECT_EQ(f.proof_case, "X");
  }
}

TEST(Factorize, RejectsBadInput) {
  const auto p = params_from_rse(1, 0, 0);
  const auto x = theorem1_generating_set(p);
  EXPECT_THROW(factorize(p, x, identity(x.spec())), std::invalid_argument);
  EXPECT_THROW(factorize(p, x, {4, 0, 0}), std::invalid_argument);
  EXPECT_THROW(factorize(params_from_rse(2, 0, 0), x, {1, 0, 0}), std::invalid_argument);
}

// Totality holds for every parameter choice. The literal case formulas cover
// everything for even n; for odd n a fixed family of elements in the k = m
// class needs the X*X scan (see README).
TEST(FactorizeProperty, TotalForSmallParameters) {
  std::map<std::string, std::size_t> fallback_by_case;
  std::size_t fallbacks = 0;
  for (int r = 1; r <= 20; ++r)
    for (int s : {0, 1})
      for (int eps : {0, 1}) {
        const auto p = params_from_rse(r, s, eps);
        const auto x = theorem1_generating_set(p);
        const auto& spec = x.spec();
        for (const auto& g : enumerate(spec)) {
          if (g == identity(spec)) continue;
          const auto f = factorize(p, x, g);
          ASSERT_GE(f.factors.size(), 1u);
          ASSERT_LE(f.factors.size(), 2u);
          for (const auto& h : f.factors) ASSERT_TRUE(x.contains(h));
          ASSERT_EQ(product(spec, f.factors), g) << "r=" << r << " s=" << s << " eps=" << eps << " g=" << g;
          if (!f.fallback) continue;
          ++fallbacks;
          EXPECT_EQ(eps, 1) << "fallback for even n at " << g;
          EXPECT_EQ(g.flip, 1);
          EXPECT_EQ(spec.reduce(g.x + g.y) == p.m() || spec.reduce(g.x + g.y) == spec.reduce(-p.m()), true) << g;
          for (const auto& c : f.attempted_cases) ++fallback_by_case[c.substr(0, 6)];
        }
      }
  EXPECT_EQ(fallbacks, 1720u);
  for (const auto& [label, count] : fallback_by_case) EXPECT_TRUE(label == "II.b.3" || label == "II.b.4") << label;
}
