#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "test_support.hpp"

using namespace cayley2;

TEST(Params, DerivedQuantities) {
  auto p = params_from_rse(2, 0, 0);
  EXPECT_EQ(p.n(), 8);
  EXPECT_EQ(p.m(), 4);
  EXPECT_EQ(p.degree(), 16);
  EXPECT_EQ(p.order(), 128u);

  p = params_from_rse(1, 1, 0);
  EXPECT_EQ(p.n(), 6);
  EXPECT_EQ(p.m(), 3);
  EXPECT_EQ(p.degree(), 11);
  EXPECT_EQ(p.order(), 72u);

  p = params_from_rse(1, 1, 1);
  EXPECT_EQ(p.n(), 7);
  EXPECT_EQ(p.m(), 3);
  EXPECT_EQ(p.degree(), 14);
  EXPECT_EQ(p.order(), 98u);

  EXPECT_THROW(params_from_rse(0, 0, 0), std::invalid_argument);
  EXPECT_THROW(params_from_rse(1, 2, 0), std::invalid_argument);
  EXPECT_THROW(params_from_rse(1, 0, -1), std::invalid_argument);
}

TEST(Family, ExplicitSetForN8) {
  const auto x = theorem1_generating_set(params_from_rse(2, 0, 0));
  EXPECT_EQ(x.with_label(Label::A), (std::vector<GroupElement>{{0, 0, 1}, {1, 7, 1}, {2, 6, 1}}));
  EXPECT_EQ(x.with_label(Label::B), (std::vector<GroupElement>{{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}}));
  EXPECT_EQ(x.with_label(Label::C), (std::vector<GroupElement>{{4, 0, 0}, {3, 1, 0}, {2, 2, 0}}));
  EXPECT_EQ(x.degree(), 16u);
  EXPECT_TRUE(validate_set(x).empty());
}

TEST(Family, ExplicitAForN7) {
  const auto x = theorem1_generating_set(params_from_rse(1, 1, 1));
  EXPECT_EQ(x.with_label(Label::A), (std::vector<GroupElement>{{0, 0, 1}, {1, 6, 1}, {2, 5, 1}, {3, 4, 1}}));
}

TEST(FamilyProperty, PieceSizesAndDisjointness) {
  for (int r = 1; r <= 50; ++r)
    for (int s : {0, 1})
      for (int eps : {0, 1}) {
        const auto p = params_from_rse(r, s, eps);
        const auto x = theorem1_generating_set(p);
        const auto n = p.n(), m = p.m();
        ASSERT_EQ(n, 4 * r + 2 * s + eps);
        ASSERT_EQ(m, 2 * r + s);
        ASSERT_EQ(static_cast<Residue>(x.degree()), 2 * n - s + eps);
        ASSERT_EQ(2 * x.order(), static_cast<std::size_t>((p.degree() + s - eps) * (p.degree() + s - eps)));

        const auto a = x.with_label(Label::A);
        auto b = x.with_label(Label::B);
        const auto bi = x.with_label(Label::BInverse);
        b.insert(b.end(), bi.begin(), bi.end());
        auto c = x.with_label(Label::C);
        const auto ci = x.with_label(Label::CInverse);
        c.insert(c.end(), ci.begin(), ci.end());
        EXPECT_EQ(static_cast<Residue>(a.size()), m + 2 * eps - 1);
        EXPECT_EQ(static_cast<Residue>(b.size()), n - eps);
        EXPECT_EQ(static_cast<int>(c.size()), 2 * r + eps + 1);

        std::set<GroupElement> all(a.begin(), a.end());
        all.insert(b.begin(), b.end());
        all.insert(c.begin(), c.end());
        EXPECT_EQ(all.size(), x.degree()) << "pieces overlap at r=" << r << " s=" << s << " eps=" << eps;

        EXPECT_TRUE(validate_set(x).empty());
        for (const auto& g : x.elements()) EXPECT_TRUE(x.contains(inverse(x.spec(), g)));
      }
}

TEST(Padding, Examples) {
  const auto x = theorem1_generating_set(params_from_rse(2, 0, 0));
  const auto same = pad_to_degree(x, 16);
  EXPECT_TRUE(std::ranges::equal(same.elements(), x.elements()));

  const auto y = pad_to_degree(x, 17);
  ASSERT_EQ(y.degree(), 17u);
  EXPECT_EQ(y.elements().back(), (GroupElement{3, 5, 1}));
  EXPECT_EQ(y.labels()->back(), Label::Pad);

  const auto rec = record_set(16);
  const auto z = pad_to_degree(rec, 18);
  EXPECT_EQ(z.with_label(Label::Pad), (std::vector<GroupElement>{{1, 9, 1}, {2, 8, 1}}));
  EXPECT_TRUE(is_diameter_at_most_two(z));

  EXPECT_THROW(pad_to_degree(x, 15), std::invalid_argument);
}

TEST(Padding, SmallGroupsUseTheFlipZeroPool) {
  // In n = 4 the family set already holds three of the four flip-1 involutions.
  const GroupSpec s(4);
  GeneratorSetBuilder b(s);
  b.add({0, 0, 1}, Label::A);
  b.add({1, 3, 1}, Label::A);
  b.add({2, 2, 1}, Label::A);
  const auto x = std::move(b).build();
  const auto y = pad_to_degree(x, 5);
  EXPECT_EQ(y.with_label(Label::Pad), (std::vector<GroupElement>{{3, 1, 1}, {0, 2, 0}}));
  // Only 4 + 3 involutions exist in Gamma_4.
  EXPECT_THROW(pad_to_degree(x, 8), std::runtime_error);
}

TEST(PaddingProperty, CoverageIsMonotone) {
  for (int r = 1; r <= 3; ++r)
    for (int s : {0, 1})
      for (int eps : {0, 1}) {
        const auto x = theorem1_generating_set(params_from_rse(r, s, eps));
        const auto before = coverage(x);
        std::size_t available = 0;
        for (const auto& g : involution_pool(x.spec())) available += !x.contains(g);
        for (std::size_t extra = 1; extra <= std::min<std::size_t>(3, available); ++extra) {
          const auto y = pad_to_degree(x, x.degree() + extra);
          ASSERT_EQ(y.degree(), x.degree() + extra);
          EXPECT_TRUE(validate_set(y).empty());
          const auto after = coverage(y);
          // uncovered(y) is a subset of uncovered(x)
          for (const auto& g : after) EXPECT_TRUE(std::ranges::find(before, g) != before.end());
        }
      }
}

namespace {
// Orders per residue of d mod 8, written out independently of the library.
std::int64_t expected_order(std::int64_t d) {
  switch (d % 8) {
    case 0: return d * d / 2;
    case 1: return (d - 1) * (d - 1) / 2;
    case 2: return (d - 2) * (d - 2) / 2;
    case 3: return (d + 1) * (d + 1) / 2;
    case 4: return d * d / 2;
    case 5: return (d - 1) * (d - 1) / 2;
    case 6: return d * d / 2;
    default: return (d - 1) * (d - 1) / 2;
  }
}
}  // namespace

TEST(ForDegree, Examples) {
  auto rec = recipe_for_degree(16);
  EXPECT_EQ(rec.base, params_from_rse(2, 0, 0));
  EXPECT_EQ(rec.padding, 0);
  EXPECT_EQ(construct_for_degree(16).order(), 128u);

  rec = recipe_for_degree(19);
  EXPECT_EQ(rec.base, params_from_rse(2, 1, 0));
  EXPECT_EQ(rec.padding, 0);
  EXPECT_EQ(construct_for_degree(19).order(), 200u);

  rec = recipe_for_degree(10);
  EXPECT_EQ(rec.base, params_from_rse(1, 0, 0));
  EXPECT_EQ(rec.padding, 2);
  EXPECT_EQ(construct_for_degree(10).order(), 32u);

  EXPECT_THROW(construct_for_degree(7), std::invalid_argument);
  EXPECT_EQ(table1_order(16), 128);
  EXPECT_EQ(table1_order(19), 200);
  EXPECT_EQ(table1_order(15), 98);
}

TEST(ForDegreeProperty, OrdersFollowTheResidueTable) {
  for (int d = 8; d <= 200; ++d) {
    const auto x = construct_for_degree(d);
    ASSERT_EQ(x.degree(), static_cast<std::size_t>(d));
    EXPECT_EQ(static_cast<std::int64_t>(x.order()), expected_order(d)) << "d=" << d;
    EXPECT_EQ(table1_order(d), expected_order(d)) << "d=" << d;
    if (d <= 64) {
      EXPECT_TRUE(verify_report(x, false).passed()) << "d=" << d;
    }
  }
}
