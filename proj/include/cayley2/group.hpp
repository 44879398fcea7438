#pragma once

// Arithmetic in the semidirect product (Z_n x Z_n) x| Z_2.
//
// Elements are triples (x, y, flip). The non-trivial element of Z_2 acts by
// swapping coordinates, so
//
//   (x0, x1, 0) * (y0, y1, j) = (x0 + y0, x1 + y1, j)
//   (x0, x1, 1) * (y0, y1, j) = (x0 + y1, x1 + y0, 1 + j)
//
// with coordinates taken mod n. Every function here returns canonical
// elements (coordinates in [0, n)).

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cayley2 {

using Residue = std::int64_t;
using ElementIndex = std::size_t;

struct GroupElement {
  Residue x = 0;
  Residue y = 0;
  int flip = 0;

  friend constexpr bool operator==(const GroupElement&, const GroupElement&) = default;
  friend constexpr auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

inline std::string to_string(const GroupElement& g) {
  return "(" + std::to_string(g.x) + "," + std::to_string(g.y) + "," + std::to_string(g.flip) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const GroupElement& g) { return os << to_string(g); }

/// The group Gamma_n of order 2n^2.
class GroupSpec {
 public:
  explicit GroupSpec(Residue n) : n_(n) {
    if (n < 1) throw std::invalid_argument("group modulus must be >= 1, got " + std::to_string(n));
  }

  Residue n() const { return n_; }
  std::size_t order() const { return 2 * static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_); }

  Residue reduce(Residue v) const {
    v %= n_;
    return v < 0 ? v + n_ : v;
  }

  /// Builds a canonical element from arbitrary integer coordinates.
  GroupElement element(Residue x, Residue y, int flip) const {
    return {reduce(x), reduce(y), ((flip % 2) + 2) % 2};
  }

  bool is_canonical(const GroupElement& g) const {
    return g.x >= 0 && g.x < n_ && g.y >= 0 && g.y < n_ && (g.flip == 0 || g.flip == 1);
  }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  Residue n_;
};

inline GroupElement identity(const GroupSpec&) { return {0, 0, 0}; }

inline GroupElement multiply(const GroupSpec& spec, const GroupElement& g, const GroupElement& h) {
  if (g.flip == 0) return {spec.reduce(g.x + h.x), spec.reduce(g.y + h.y), h.flip};
  return {spec.reduce(g.x + h.y), spec.reduce(g.y + h.x), 1 - h.flip};
}

inline GroupElement inverse(const GroupSpec& spec, const GroupElement& g) {
  if (g.flip == 0) return {spec.reduce(-g.x), spec.reduce(-g.y), 0};
  return {spec.reduce(-g.y), spec.reduce(-g.x), 1};
}

/// True iff g is not the identity and g * g is the identity.
inline bool is_involution(const GroupSpec& spec, const GroupElement& g) {
  if (g == identity(spec)) return false;
  if (g.flip == 1) return spec.reduce(g.x + g.y) == 0;
  return spec.reduce(2 * g.x) == 0 && spec.reduce(2 * g.y) == 0;
}

/// Flip-major layout: flip * n^2 + x * n + y. The two cosets of Z_n^2 occupy
/// the lower and upper halves of [0, 2n^2).
inline ElementIndex element_index(const GroupSpec& spec, const GroupElement& g) {
  const auto n = static_cast<ElementIndex>(spec.n());
  return static_cast<ElementIndex>(g.flip) * n * n + static_cast<ElementIndex>(g.x) * n +
         static_cast<ElementIndex>(g.y);
}

inline GroupElement element_at(const GroupSpec& spec, ElementIndex idx) {
  const auto n = static_cast<ElementIndex>(spec.n());
  const int flip = static_cast<int>(idx / (n * n));
  const ElementIndex rest = idx % (n * n);
  return {static_cast<Residue>(rest / n), static_cast<Residue>(rest % n), flip};
}

/// All 2n^2 elements in element_index order.
inline std::vector<GroupElement> enumerate(const GroupSpec& spec) {
  std::vector<GroupElement> out;
  out.reserve(spec.order());
  for (int flip = 0; flip < 2; ++flip)
    for (Residue x = 0; x < spec.n(); ++x)
      for (Residue y = 0; y < spec.n(); ++y) out.push_back({x, y, flip});
  return out;
}

}  // namespace cayley2
