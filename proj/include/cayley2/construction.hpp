#pragma once

// The parametric diameter-two family over Gamma_n and degree padding.
//
// For r >= 1 and s, eps in {0, 1} put n = 4r + 2s + eps and m = 2r + s.
// The generating set is X = A u B u B^-1 u C u C^-1 with
//
//   A = { (i, -i, 1) : 0 <= i <= m + 2eps - 2 }   (involutions)
//   B = { (0, i, 1)  : 1 <= i <= m }
//   C = { (m - i, i, 0) : 0 <= i <= r }
//
// giving degree d = 2n - s + eps and order 2n^2 = (d + s - eps)^2 / 2.

#include <stdexcept>
#include <string>
#include <vector>

#include "generator_set.hpp"

namespace cayley2 {

struct ConstructionParams {
  int r = 1;
  int s = 0;
  int eps = 0;

  Residue n() const { return 4 * r + 2 * s + eps; }
  Residue m() const { return 2 * r + s; }
  std::size_t degree() const { return static_cast<std::size_t>(2 * n() - s + eps); }
  std::size_t order() const { return 2 * static_cast<std::size_t>(n() * n()); }
  GroupSpec spec() const { return GroupSpec(n()); }

  friend bool operator==(const ConstructionParams&, const ConstructionParams&) = default;
};

inline ConstructionParams params_from_rse(int r, int s, int eps) {
  if (r < 1) throw std::invalid_argument("r must be >= 1, got " + std::to_string(r));
  if (s != 0 && s != 1) throw std::invalid_argument("s must be 0 or 1");
  if (eps != 0 && eps != 1) throw std::invalid_argument("eps must be 0 or 1");
  return {r, s, eps};
}

/// The generators a(i), b(i), c(i) of the parametric family, reduced mod n.
struct FamilyGenerators {
  GroupSpec spec;
  Residue m;

  GroupElement a(Residue i) const { return spec.element(i, -i, 1); }
  GroupElement b(Residue i) const { return spec.element(0, i, 1); }
  GroupElement b_inv(Residue i) const { return spec.element(-i, 0, 1); }
  GroupElement c(Residue i) const { return spec.element(m - i, i, 0); }
  GroupElement c_inv(Residue i) const { return spec.element(-m + i, -i, 0); }
};

inline FamilyGenerators family_generators(const ConstructionParams& p) { return {p.spec(), p.m()}; }

inline GeneratorSet theorem1_generating_set(const ConstructionParams& p) {
  const auto gen = family_generators(p);
  const Residue m = p.m();
  GeneratorSetBuilder builder(gen.spec);
  for (Residue i = 0; i <= m + 2 * p.eps - 2; ++i) builder.add(gen.a(i), Label::A);
  for (Residue i = 1; i <= m; ++i) builder.add(gen.b(i), Label::B);
  for (Residue i = 1; i <= m; ++i) builder.add(gen.b_inv(i), Label::BInverse);
  for (Residue i = 0; i <= p.r; ++i) builder.add(gen.c(i), Label::C);
  for (Residue i = 0; i <= p.r; ++i) builder.add(gen.c_inv(i), Label::CInverse);
  return std::move(builder).build();
}

/// Candidate padding generators, in the fixed order used by pad_to_degree:
/// flip-1 involutions (j, -j, 1) for j = 0..n-1, then non-identity flip-0
/// involutions in element_index order.
inline std::vector<GroupElement> involution_pool(const GroupSpec& spec) {
  std::vector<GroupElement> pool;
  for (Residue j = 0; j < spec.n(); ++j) pool.push_back(spec.element(j, -j, 1));
  for (Residue x = 0; x < spec.n(); ++x)
    for (Residue y = 0; y < spec.n(); ++y) {
      const GroupElement g{x, y, 0};
      if (g != identity(spec) && is_involution(spec, g)) pool.push_back(g);
    }
  return pool;
}

/// Appends d_target - degree(x) involutions not already in x. Adding
/// generators can only enlarge {e} u X u X*X, so diameter <= 2 is preserved.
inline GeneratorSet pad_to_degree(const GeneratorSet& x, std::size_t d_target) {
  if (d_target < x.degree())
    throw std::invalid_argument("target degree " + std::to_string(d_target) + " is below current degree " +
                                std::to_string(x.degree()));
  std::size_t needed = d_target - x.degree();
  std::vector<GroupElement> extra;
  for (const auto& g : involution_pool(x.spec())) {
    if (needed == 0) break;
    if (x.contains(g)) continue;
    extra.push_back(g);
    --needed;
  }
  if (needed != 0)
    throw std::runtime_error("involution pool exhausted: cannot pad to degree " + std::to_string(d_target) +
                             " in Gamma_" + std::to_string(x.spec().n()));
  return x.with_appended(extra);
}

struct DegreeRecipe {
  ConstructionParams base;
  int padding = 0;
};

/// Base family member and padding count for degree d, chosen by d mod 8 so
/// that the resulting order matches the per-residue order formula.
inline DegreeRecipe recipe_for_degree(int d) {
  if (d < 8) throw std::invalid_argument("degree must be >= 8, got " + std::to_string(d));
  struct Row { int s, eps, padding; };
  static constexpr Row rows[8] = {{0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {1, 0, 0},
                                  {1, 0, 1}, {1, 0, 2}, {1, 1, 0}, {1, 1, 1}};
  const Row row = rows[d % 8];
  const int base_degree = d - row.padding;
  // base degree = 8r + 3s + 3eps
  const int r = (base_degree - 3 * row.s - 3 * row.eps) / 8;
  return {params_from_rse(r, row.s, row.eps), row.padding};
}

inline GeneratorSet construct_for_degree(int d) {
  const auto recipe = recipe_for_degree(d);
  return pad_to_degree(theorem1_generating_set(recipe.base), static_cast<std::size_t>(d));
}

}  // namespace cayley2
