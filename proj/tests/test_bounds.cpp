#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "test_support.hpp"

using namespace cayley2;

namespace {
// w(k, q) with the factor 2 pushed inside the min, which clears k^2/2.
std::int64_t integer_w(std::int64_t k, std::int64_t q) {
  return std::min(2 + 2 * k + k * k + 2 * q * (q - 1), 2 * q * (2 * k + 1));
}

struct Oracle {
  std::int64_t value;
  int k;
};

Oracle brute_w(int d) {
  Oracle best{-1, 0};
  for (int k = 1; k < d; ++k)
    if (const auto v = integer_w(k, d - k); v > best.value) best = {v, k};
  return best;
}
}  // namespace

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(7, 2).to_string(), "7/2");
  EXPECT_EQ(Rational(8, 2).to_string(), "4");
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_THROW(Rational(1, 0), std::invalid_argument);
}

TEST(Moore, Examples) {
  EXPECT_EQ(moore_bound(16, 2), 257u);
  EXPECT_EQ(moore_bound(2, 2), 5u);
  EXPECT_EQ(moore_bound(3, 2), 10u);
  EXPECT_EQ(moore_bound(3, 3), 22u);
  EXPECT_EQ(moore_bound(1, 4), 2u);
  EXPECT_THROW(moore_bound(0, 2), std::invalid_argument);
  EXPECT_THROW(moore_bound(1000, 8), std::overflow_error);
}

TEST(W, PairExamples) {
  EXPECT_EQ(w_kq(3, 7), Rational(98));
  EXPECT_EQ(w_kq(1, 1), Rational(5));
  EXPECT_EQ(w_kq(5, 11), Rational(242));
  EXPECT_THROW(w_kq(0, 3), std::invalid_argument);
}

TEST(W, DegreeExamples) {
  auto w = w_of_d(10);
  EXPECT_EQ(w.value, Rational(98));
  EXPECT_EQ(w.argmax_k, 3);
  w = w_of_d(16);
  EXPECT_EQ(w.value, Rational(242));
  EXPECT_EQ(w.argmax_k, 5);
  w = w_of_d(3);
  EXPECT_EQ(w.value, Rational(10));
  EXPECT_EQ(w.argmax_k, 2);
  EXPECT_THROW(w_of_d(2), std::invalid_argument);

  EXPECT_EQ(w_of_d_even(16), Rational(230));
  EXPECT_EQ(w_of_d_even(10), Rational(86));
}

TEST(BoundsProperty, AgreesWithBruteForceOracle) {
  for (int d = 3; d <= 500; ++d) {
    const auto w = w_of_d(d);
    const auto oracle = brute_w(d);
    ASSERT_EQ(w.value, Rational(oracle.value)) << "d=" << d;
    ASSERT_EQ(w.argmax_k, oracle.k) << "d=" << d;
  }
}

TEST(BoundsProperty, SubstitutedFormMatchesPairForm) {
  for (std::int64_t d = 3; d <= 500; ++d)
    for (std::int64_t k = 1; k < d; ++k) {
      const Rational first = Rational(3 * k * k, 2) + Rational(2 * k * (1 - d)) + Rational(d * d - d + 1);
      const Rational second(-2 * k * k + k * (2 * d - 1) + d);
      const Rational inner = Rational(2) * (first < second ? first : second);
      ASSERT_EQ(inner, w_kq(k, d - k)) << "d=" << d << " k=" << k;
    }
}

TEST(BoundsProperty, EvenRestrictionNeverExceedsFullMaximum) {
  std::vector<int> strict;
  for (int d = 3; d <= 500; ++d) {
    const auto even = w_of_d_even(d);
    Rational oracle(0);
    for (int l = 1; 2 * l < d; ++l) oracle = std::max(oracle, w_kq(2 * l, d - 2 * l));
    ASSERT_EQ(even, oracle) << "d=" << d;
    ASSERT_LE(even, w_of_d(d).value) << "d=" << d;
    if (even < w_of_d(d).value && d < 60) strict.push_back(d);
  }
  const std::vector<int> expected = {4,  5,  9,  10, 11, 14, 15, 16, 20, 21, 22, 25, 26, 27, 31,
                                     32, 33, 36, 37, 38, 42, 43, 47, 48, 49, 53, 54, 58, 59};
  EXPECT_EQ(strict, expected);
}

TEST(BoundsProperty, AsymptoticDominates) {
  EXPECT_NEAR(asymptotic_constant(), 0.9317725357, 1e-9);
  EXPECT_NEAR(asymptotic_bound(16), 248.779, 1e-3);
  for (int d = 3; d <= 10000; ++d) {
    const double w = w_of_d(d).value.to_double();
    ASSERT_LE(w, asymptotic_bound(d) * (1 + 1e-6)) << "d=" << d;
  }
  const double ratio = w_of_d(10000).value.to_double() / 1e8;
  EXPECT_GE(ratio, 0.9315);
  EXPECT_LE(ratio, 0.9318);
}

TEST(BoundsProperty, ConstructionsRespectTheBound) {
  for (int d = 8; d <= 120; ++d) {
    const auto order = static_cast<std::int64_t>(construct_for_degree(d).order());
    EXPECT_LE(Rational(order), w_of_d(d).value) << "d=" << d;
  }
  for (const auto& e : record_registry()) EXPECT_LE(Rational(e.order), w_of_d(e.degree).value);
}

TEST(Percentages, Examples) {
  EXPECT_EQ(format_percentage(200, 16), "77.82");
  EXPECT_EQ(format_percentage(392, 23), "73.96");
  EXPECT_EQ(format_percentage(1682, 57), "51.75");
  EXPECT_NEAR(moore_percentage(200, 16), 77.8210, 1e-4);
  EXPECT_EQ(format_percentage(1, 100), "0.00");
}

TEST(Percentages, PrintedColumnIsReproduced) {
  for (const auto& row : historical_table()) {
    std::int64_t best = 0;
    for (const auto& v : {row.eloz, row.ss, row.a, row.published_new})
      if (v) best = std::max(best, *v);
    if (row.degree == 36 || row.degree == 44 || row.degree == 52) {
      EXPECT_EQ(best, *row.a);
    }
    EXPECT_EQ(moore_percentage_hundredths(best, row.degree), row.printed_hundredths) << "d=" << row.degree;
    EXPECT_NEAR(moore_percentage(best, row.degree), row.printed_hundredths / 100.0, 0.01) << "d=" << row.degree;
  }
}

TEST(ComparisonTable, Rows) {
  auto row = comparison_row(16);
  EXPECT_EQ(row.best, 200);
  EXPECT_EQ(row.best_source, "record");
  EXPECT_EQ(row.percent, "77.82");

  row = comparison_row(36);
  EXPECT_EQ(row.best, 648);
  EXPECT_EQ(row.best_source, "family");
  EXPECT_EQ(row.percent, "49.96");

  row = comparison_row(54);
  EXPECT_EQ(row.best, 1568);
  EXPECT_EQ(row.percent, "53.75");

  row = comparison_row(44);
  EXPECT_EQ(row.best, 968);
  EXPECT_EQ(row.percent, "49.97");

  row = comparison_row(13);
  EXPECT_EQ(row.best, 112);
  EXPECT_EQ(row.best_source, "E.Loz");

  const auto rows = comparison_table(13, 57);
  ASSERT_EQ(rows.size(), 45u);
  for (const auto& r : rows) {
    const auto& h = *r.historical;
    EXPECT_EQ(moore_percentage_hundredths(r.best, r.degree), h.printed_hundredths) << "d=" << r.degree;
  }
  EXPECT_THROW(comparison_table(7, 10), std::invalid_argument);
  EXPECT_THROW(comparison_table(20, 19), std::invalid_argument);
}

TEST(Conjecture, Constants) {
  const std::vector<std::pair<int, int>> pairs = {{200, 16}, {288, 21}, {392, 23}, {512, 28}, {648, 31}};
  const std::vector<double> expected = {1, 3, 2, 4, 4};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    EXPECT_NEAR(conjecture_constant(pairs[i].first, pairs[i].second), expected[i], 1e-9);
    EXPECT_NEAR(conjecture_floor(pairs[i].second, expected[i]), pairs[i].first, 1e-9);
  }
}
