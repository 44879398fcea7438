#pragma once

// Upper bounds for diameter-two graphs and the per-degree order formulas.
//
// For a Cayley graph of diameter two over H x| Z_2 (H abelian) with k
// generators in the H coset and q in the other,
//
//   |G| <= w(k, q) = 2 min{ 1 + k + k^2/2 + q(q - 1), q(2k + 1) }.
//
// With d = k + q fixed, w(d) = max over 1 <= k < d of w(k, d - k), and
// asymptotically |G| <= 4(10 + sqrt 2)/49 (d + 0.34)^2.

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace cayley2 {

/// Exact rational with positive denominator in lowest terms.
class Rational {
 public:
  constexpr Rational(std::int64_t num = 0, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const auto g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr bool is_integer() const { return den_ == 1; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::int64_t floor() const { return num_ >= 0 ? num_ / den_ : -((-num_ + den_ - 1) / den_); }

  friend constexpr Rational operator+(Rational a, Rational b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend constexpr Rational operator*(Rational a, Rational b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
  friend constexpr bool operator==(Rational a, Rational b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend constexpr std::strong_ordering operator<=>(Rational a, Rational b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  std::string to_string() const {
    return is_integer() ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

/// 1 + d + d(d-1) + ... + d(d-1)^(k-1).
inline std::uint64_t moore_bound(std::uint64_t d, unsigned k) {
  if (d < 1 || k < 1) throw std::invalid_argument("moore_bound needs d >= 1 and k >= 1");
  std::uint64_t total = 1, term = d;
  for (unsigned i = 0; i < k; ++i) {
    if (total > UINT64_MAX - term) throw std::overflow_error("Moore bound overflows 64 bits");
    total += term;
    if (i + 1 < k) {
      if (d > 1 && term > UINT64_MAX / (d - 1)) throw std::overflow_error("Moore bound overflows 64 bits");
      term *= d - 1;
    }
  }
  return total;
}

inline Rational w_kq(std::int64_t k, std::int64_t q) {
  if (k < 1 || q < 1) throw std::invalid_argument("w(k, q) needs k >= 1 and q >= 1");
  const Rational same_coset = Rational(1 + k) + Rational(k * k, 2) + Rational(q * (q - 1));
  const Rational cross = Rational(q * (2 * k + 1));
  return Rational(2) * (same_coset < cross ? same_coset : cross);
}

struct WOfD {
  Rational value;
  int argmax_k = 0;
};

/// Maximum of w(k, d - k) over 1 <= k < d; ties go to the smaller k.
/// Doubling the first branch clears the k^2/2, so each candidate is
/// min{2 + 2k + k^2 + 2q(q-1), 2q(2k+1)} and the scan stays in integers.
inline WOfD w_of_d(int d) {
  if (d < 3) throw std::invalid_argument("w(d) needs d >= 3, got " + std::to_string(d));
  std::int64_t best = -1;
  int best_k = 0;
  for (std::int64_t k = 1; k < d; ++k) {
    const std::int64_t q = d - k;
    const std::int64_t v = std::min(2 + 2 * k + k * k + 2 * q * (q - 1), 2 * q * (2 * k + 1));
    if (v > best) {
      best = v;
      best_k = static_cast<int>(k);
    }
  }
  return {Rational(best), best_k};
}

/// The even-k restriction k = 2l, 1 <= l < d/2, evaluated via the l-form
/// 2 min{6l^2 + 4(1-d)l + d^2 - d + 1, -8l^2 + 2(2d-1)l + d}.
inline Rational w_of_d_even(int d) {
  if (d < 3) throw std::invalid_argument("w(d) needs d >= 3, got " + std::to_string(d));
  const std::int64_t dd = d;
  std::optional<Rational> best;
  for (std::int64_t l = 1; 2 * l < dd; ++l) {
    const std::int64_t first = 6 * l * l + 4 * (1 - dd) * l + dd * dd - dd + 1;
    const std::int64_t second = -8 * l * l + 2 * (2 * dd - 1) * l + dd;
    const Rational v(2 * std::min(first, second));
    if (!best || v > *best) best = v;
  }
  return *best;
}

inline double asymptotic_constant() { return 4.0 * (10.0 + std::sqrt(2.0)) / 49.0; }

inline double asymptotic_bound(int d) {
  if (d < 3) throw std::invalid_argument("asymptotic bound needs d >= 3");
  const double shifted = d + 0.34;
  return asymptotic_constant() * shifted * shifted;
}

/// Order of the padded parametric construction at degree d, by d mod 8.
inline std::int64_t table1_order(int d) {
  if (d < 8) throw std::invalid_argument("degree must be >= 8, got " + std::to_string(d));
  const std::int64_t dd = d;
  switch (d % 8) {
    case 0: case 4: case 6: return dd * dd / 2;
    case 1: case 5: case 7: return (dd - 1) * (dd - 1) / 2;
    case 2: return (dd - 2) * (dd - 2) / 2;
    default: return (dd + 1) * (dd + 1) / 2;
  }
}

/// 100 * order / (d^2 + 1), unrounded.
inline double moore_percentage(std::int64_t order, std::int64_t d) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  return 100.0 * static_cast<double>(order) / static_cast<double>(d * d + 1);
}

/// The percentage in hundredths of a percent, truncated toward zero
/// (the convention of the published record table).
inline std::int64_t moore_percentage_hundredths(std::int64_t order, std::int64_t d) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  return 10000 * order / (d * d + 1);
}

inline std::string format_percentage(std::int64_t order, std::int64_t d) {
  const auto h = moore_percentage_hundredths(order, d);
  const auto frac = h % 100;
  return std::to_string(h / 100) + "." + (frac < 10 ? "0" : "") + std::to_string(frac);
}

/// c such that order = (8/9)(d - c)^2.
inline double conjecture_constant(std::int64_t order, std::int64_t d) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  return static_cast<double>(d) - std::sqrt(9.0 * static_cast<double>(order) / 8.0);
}

inline double conjecture_floor(int d, double c) { return 8.0 / 9.0 * (d - c) * (d - c); }

struct BoundReport {
  int d = 0;
  std::uint64_t moore = 0;
  WOfD w;
  Rational w_even;
  double asymptotic = 0.0;
  std::optional<std::int64_t> table1;  // absent for d < 8
};

inline BoundReport bound_report(int d) {
  BoundReport r;
  r.d = d;
  r.moore = moore_bound(static_cast<std::uint64_t>(d), 2);
  r.w = w_of_d(d);
  r.w_even = w_of_d_even(d);
  r.asymptotic = asymptotic_bound(d);
  if (d >= 8) r.table1 = table1_order(d);
  return r;
}

}  // namespace cayley2
