#pragma once

// Constructive routing: write any element of Gamma_n as a product of at
// most two generators from the parametric family.
//
// The dispatch follows the case analysis of the diameter-two argument for
// the family in construction.hpp (m = 2r + s, all arithmetic mod n):
//
//   flip 0, y = -x       I.a    (x in [0, m]; larger x via the inverse)
//   flip 0, y != -x      I.b    1a, 1b, 1c, 2, 3 on a representative, mapped
//                               back through (i,j) -> (j,i), (-j,-i), (-i,-j)
//   flip 1, x + y = k    II.a   1 <= k <= m - 1, keyed by second coordinate
//                        II.b   k = m, keyed by first coordinate
//                        II.c   k = 0, keyed by first coordinate
//                        classes k > m are handled through the inverse.
//
// Each case formula is checked by re-multiplying; a candidate whose product
// differs from the target (or uses a non-generator) is skipped. When no case
// formula matches, the pair is found by scanning X x X and the result is
// flagged as a fallback, listing the case formulas that were tried.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "construction.hpp"

namespace cayley2 {

struct Factorization {
  std::vector<GroupElement> factors;
  std::string proof_case;
  bool fallback = false;
  std::vector<std::string> attempted_cases;  // case formulas whose product check failed
};

inline GroupElement product(const GroupSpec& spec, const std::vector<GroupElement>& factors) {
  GroupElement p = identity(spec);
  for (const auto& f : factors) p = multiply(spec, p, f);
  return p;
}

namespace detail {

struct Candidate {
  std::string label;
  std::vector<GroupElement> factors;
};

using Candidates = std::vector<Candidate>;

class CaseTable {
 public:
  explicit CaseTable(const ConstructionParams& p)
      : p_(p), spec_(p.spec()), gen_(family_generators(p)), n_(p.n()), m_(p.m()) {}

  Candidates candidates(const GroupElement& g) const {
    Candidates out;
    if (g.flip == 0) {
      if (red(g.x + g.y) == 0) {
        if (g.x <= m_) {
          part_ia(g.x, out);
        } else {
          Candidates inv;
          part_ia(red(-g.x), inv);
          for (auto& c : inv) out.push_back({c.label + " [inverse]", inverse_reversed(c.factors)});
        }
      } else {
        append_transformed(g.x, g.y, "", out, [](auto& f, auto&) { return f; });
        append_transformed(g.y, g.x, " [swap]", out, [](auto& f, auto&) {
          return std::vector<GroupElement>{f[1], f[0]};
        });
        append_transformed(red(-g.y), red(-g.x), " [neg-swap]", out, [](auto& f, auto& t) {
          return std::vector<GroupElement>{t.inv(f[0]), t.inv(f[1])};
        });
        append_transformed(red(-g.x), red(-g.y), " [neg]", out, [](auto& f, auto& t) {
          return std::vector<GroupElement>{t.inv(f[1]), t.inv(f[0])};
        });
      }
    } else {
      const Residue k = red(g.x + g.y);
      if (k <= m_) {
        part_ii(g.x, g.y, out);
      } else {
        const auto gi = inverse(spec_, g);
        Candidates inv;
        part_ii(gi.x, gi.y, inv);
        for (auto& c : inv) out.push_back({c.label + " [inverse class]", inverse_reversed(c.factors)});
      }
    }
    return out;
  }

  GroupElement inv(const GroupElement& g) const { return inverse(spec_, g); }

 private:
  Residue red(Residue v) const { return spec_.reduce(v); }

  std::vector<GroupElement> inverse_reversed(const std::vector<GroupElement>& f) const {
    std::vector<GroupElement> out;
    for (auto it = f.rbegin(); it != f.rend(); ++it) out.push_back(inv(*it));
    return out;
  }

  // (x, -x, 0) with 0 <= x <= m
  void part_ia(Residue x, Candidates& out) const {
    const auto& a = gen_;
    if (x <= m_ - 2) out.push_back({"I.a.1", {a.a(m_ - 2), a.a(m_ - 2 - x)}});
    if (p_.eps == 1) {
      if (x == m_ - 1) out.push_back({"I.a.2a", {a.a(m_), a.a(1)}});
      if (x == m_) out.push_back({"I.a.2a", {a.a(m_), a.a(0)}});
    } else {
      if (x == m_ - 1) out.push_back({"I.a.2b", {a.c_inv(p_.r), a.c_inv(p_.r - 1 + p_.s)}});
      if (x == m_) out.push_back({"I.a.2b", {a.b(m_), a.b(m_)}});
    }
  }

  // representative (i, j, 0), j != -i
  void part_ib(Residue i, Residue j, Candidates& out) const {
    const auto& a = gen_;
    if (i == 0 && 1 <= j && j <= m_ - 1) out.push_back({"I.b.1a", {a.b(m_), a.b_inv(m_ - j)}});
    if (i == 0 && j == m_) out.push_back({"I.b.1b", {a.b(m_), a.a(0)}});
    if (i == 0 && m_ + 1 <= j && j <= n_ - 1) {
      Candidates inv;
      part_ib(0, red(-j), inv);
      for (auto& c : inv) out.push_back({"I.b.1c", inverse_reversed(c.factors)});
    }
    if (1 <= i && i <= m_ && i <= j && j <= m_) out.push_back({"I.b.2", {a.b(j), a.b(i)}});
    if (1 <= i && i <= m_ - 2 + p_.eps && m_ + 1 <= j && j <= n_ - 1 - i)
      out.push_back({"I.b.3", {a.a(i), a.b_inv(red(-i - j))}});
  }

  template <typename Map>
  void append_transformed(Residue i, Residue j, const std::string& tag, Candidates& out, Map map) const {
    Candidates base;
    part_ib(i, j, base);
    for (auto& c : base) out.push_back({c.label + tag, map(c.factors, *this)});
  }

  // (x, y, 1) with k = x + y in [0, m]
  void part_ii(Residue x, Residue y, Candidates& out) const {
    const auto& a = gen_;
    const Residue k = red(x + y);
    const Residue r = p_.r, s = p_.s, eps = p_.eps;
    if (1 <= k && k <= m_ - 1) {
      // keyed by the second coordinate
      for (Residue j = 0; j <= r; ++j)
        if (y == j) out.push_back({"II.a.1", {a.c(j), a.b_inv(m_ - k)}});
      for (Residue j = 0; j <= r; ++j)
        if (y == red(m_ - j)) out.push_back({"II.a.2", {a.b_inv(m_ - k), a.c(j)}});
      for (Residue j = 0; j <= r; ++j)
        if (y == red(m_ + eps + j)) out.push_back({"II.a.3", {a.b_inv(m_ + eps - k), a.c_inv(j)}});
      for (Residue j = 0; j <= r; ++j)
        if (y == red(-j)) out.push_back({"II.a.4", {a.c_inv(j), a.b_inv(m_ + eps - k)}});
    } else if (k == m_) {
      // keyed by the first coordinate
      for (Residue i = 0; i <= r; ++i)
        if (x == i) out.push_back({"II.b.1", {a.a(0), a.c(i)}});
      for (Residue i = 0; i <= r; ++i)
        if (x == red(m_ - i)) out.push_back({"II.b.2", {a.c(i), a.a(0)}});
      for (Residue i = 0; i <= r; ++i)
        if (x == red(m_ + eps + i)) out.push_back({"II.b.3", {a.c_inv(i), a.a(0)}});
      for (Residue i = 0; i <= r; ++i)
        if (x == red(-i)) out.push_back({"II.b.4", {a.a(0), a.c_inv(i)}});
    } else if (k == 0) {
      if (eps == 0) {
        for (Residue i = 0; i <= r; ++i)
          if (x == i) out.push_back({"II.c.1a", {a.b(m_), a.c(i)}});
        for (Residue i = 0; i <= r; ++i)
          if (x == red(m_ - i)) out.push_back({"II.c.2a", {a.c(i), a.b(m_)}});
      } else if (x <= 2 * r + s) {
        out.push_back({"II.c.1,2b", {a.a(x)}});
      }
      for (Residue i = 0; i <= r; ++i)
        if (x == red(m_ + eps + i)) out.push_back({"II.c.3", {a.b_inv(m_), a.c(i)}});
      for (Residue i = 0; i <= r; ++i)
        if (x == red(-i)) out.push_back({"II.c.4", {a.b(m_), a.c_inv(i)}});
    }
  }

  ConstructionParams p_;
  GroupSpec spec_;
  FamilyGenerators gen_;
  Residue n_, m_;
};

}  // namespace detail

/// Factors g into one or two elements of x whose ordered product is g.
/// `x` must be theorem1_generating_set(p) (any superset also works).
inline Factorization factorize(const ConstructionParams& p, const GeneratorSet& x, const GroupElement& g) {
  const auto& spec = x.spec();
  if (spec.n() != p.n()) throw std::invalid_argument("generating set does not match construction parameters");
  if (!spec.is_canonical(g)) throw std::invalid_argument("non-canonical element " + to_string(g));
  if (g == identity(spec)) throw std::invalid_argument("the identity has no generator factorization");

  if (x.contains(g)) return {{g}, "X", false, {}};

  Factorization result;
  for (auto& c : detail::CaseTable(p).candidates(g)) {
    const bool members_ok = std::all_of(c.factors.begin(), c.factors.end(), [&](auto& f) { return x.contains(f); });
    if (members_ok && product(spec, c.factors) == g) {
      result.factors = std::move(c.factors);
      result.proof_case = std::move(c.label);
      return result;
    }
    result.attempted_cases.push_back(c.label);
  }

  result.fallback = true;
  result.proof_case = "brute-force";
  for (const auto& u : x.elements())
    for (const auto& v : x.elements())
      if (multiply(spec, u, v) == g) {
        result.factors = {u, v};
        return result;
      }
  throw std::runtime_error("element " + to_string(g) + " is not a product of at most two generators");
}

}  // namespace cayley2
