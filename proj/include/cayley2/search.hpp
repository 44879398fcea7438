#pragma once

// Seeded local search for diameter-two generating sets in Gamma_n.
//
// State: A (flip-1 involutions), B (flip-1 non-involutions, one canonical
// representative per {b, b^-1} pair) and C (by default the fixed pattern
// { (m - i, i, 0) : 0 <= i <= floor(n/4) }). The degree is
// |A| + 2|B| + |C u C^-1|. A move replaces one member by a uniformly drawn
// non-member of the same kind; the score is the number of elements outside
// {e} u X u X*X. Everything is driven by one xorshift64* stream, so a
// configuration always reproduces the same run.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "generator_set.hpp"
#include "verification.hpp"

namespace cayley2 {

/// xorshift64* (shifts 12, 25, 27; multiplier 2685821657736338717).
class XorShift64Star {
 public:
  explicit XorShift64Star(std::uint64_t seed) : state_(seed == 0 ? 1 : seed) {}

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 2685821657736338717ULL;
  }

  /// Uniform in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("empty range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do v = next();
    while (v >= limit);
    return v % bound;
  }

  /// Uniform in [0, 1) with 53 bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

enum class Strategy { HillClimb, Anneal };

struct SearchState {
  std::vector<GroupElement> a;
  std::vector<GroupElement> b;  // pair representatives
  std::vector<GroupElement> c;  // closed under inverses when expanded
};

struct SearchConfig {
  Residue n = 10;
  std::size_t target_degree = 16;
  std::uint64_t seed = 1;
  std::uint64_t budget = 10000;
  Strategy strategy = Strategy::HillClimb;
  double initial_temperature = 2.0;
  double decay = 0.9995;
  bool fix_c = true;
  std::optional<SearchState> initial_state;
};

struct SearchResult {
  std::optional<GeneratorSet> set;
  SearchState final_state;
  std::size_t best_score = 0;
  std::uint64_t iterations = 0;
  std::vector<std::size_t> accepted_scores;  // starts with the initial score
};

inline std::size_t score(const GeneratorSet& x) { return uncovered_count(x); }

/// The fixed C pattern { (m - i, i, 0) : 0 <= i <= floor(n/4) }, m = floor(n/2).
inline std::vector<GroupElement> pattern_c(const GroupSpec& spec) {
  std::vector<GroupElement> c;
  const Residue m = spec.n() / 2;
  for (Residue i = 0; i <= spec.n() / 4; ++i) {
    const auto g = spec.element(m - i, i, 0);
    if (g != identity(spec)) c.push_back(g);
  }
  return c;
}

namespace detail {

inline GroupElement pair_representative(const GroupSpec& spec, const GroupElement& g) {
  return std::min(g, inverse(spec, g));
}

struct SearchPools {
  std::vector<GroupElement> involutions_flip1;
  std::vector<GroupElement> pairs_flip1;
  std::vector<GroupElement> involutions_flip0;
  std::vector<GroupElement> pairs_flip0;

  explicit SearchPools(const GroupSpec& spec) {
    for (const auto& g : enumerate(spec)) {
      if (g == identity(spec)) continue;
      const bool inv = is_involution(spec, g);
      if (!inv && pair_representative(spec, g) != g) continue;
      if (g.flip == 1) (inv ? involutions_flip1 : pairs_flip1).push_back(g);
      else (inv ? involutions_flip0 : pairs_flip0).push_back(g);
    }
    // flip-1 involutions ordered as (j, -j, 1), j = 0, 1, ...
    std::sort(involutions_flip1.begin(), involutions_flip1.end());
  }
};

inline GeneratorSet expand_state(const GroupSpec& spec, const SearchState& s) {
  GeneratorSetBuilder builder(spec);
  for (const auto& g : s.a) builder.add(g, Label::A);
  for (const auto& g : s.b) builder.add_with_inverse(g, Label::B, Label::BInverse);
  for (const auto& g : s.c) builder.add_with_inverse(g, Label::C, Label::CInverse);
  return std::move(builder).build();
}

inline std::size_t closure_size(const GroupSpec& spec, const std::vector<GroupElement>& elems) {
  std::vector<GroupElement> all;
  for (const auto& g : elems) {
    all.push_back(g);
    all.push_back(inverse(spec, g));
  }
  std::sort(all.begin(), all.end());
  return static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
}

/// Replaces `slot` with a uniform draw from `pool` minus `taken`.
inline void resample(XorShift64Star& rng, const std::vector<GroupElement>& pool, std::vector<GroupElement>& members,
                     std::size_t slot, const std::vector<GroupElement>& taken) {
  std::vector<GroupElement> free;
  for (const auto& g : pool)
    if (std::find(taken.begin(), taken.end(), g) == taken.end()) free.push_back(g);
  if (free.empty()) return;
  members[slot] = free[rng.below(free.size())];
}

}  // namespace detail

/// Builds the starting state (or validates an injected one) and checks that
/// the degree accounting can be met. Throws std::invalid_argument otherwise.
inline SearchState initial_search_state(const SearchConfig& cfg) {
  const GroupSpec spec(cfg.n);
  const detail::SearchPools pools(spec);
  if (cfg.initial_state) {
    SearchState s = *cfg.initial_state;
    for (auto& g : s.a) {
      g = spec.element(g.x, g.y, g.flip);
      if (g.flip != 1 || !is_involution(spec, g)) throw std::invalid_argument("A member " + to_string(g) + " is not a flip-1 involution");
    }
    for (auto& g : s.b) {
      g = spec.element(g.x, g.y, g.flip);
      if (g.flip != 1 || is_involution(spec, g)) throw std::invalid_argument("B member " + to_string(g) + " is not a flip-1 non-involution");
      g = detail::pair_representative(spec, g);
    }
    if (cfg.fix_c || s.c.empty()) s.c = pattern_c(spec);
    const auto degree = detail::expand_state(spec, s).degree();
    if (degree != cfg.target_degree)
      throw std::invalid_argument("initial state has degree " + std::to_string(degree) + ", target is " +
                                  std::to_string(cfg.target_degree));
    return s;
  }

  SearchState s;
  s.c = pattern_c(spec);
  const std::size_t c_size = detail::closure_size(spec, s.c);
  if (cfg.target_degree < c_size + 1)
    throw std::invalid_argument("target degree " + std::to_string(cfg.target_degree) + " leaves no room beside |C u C^-1| = " +
                                std::to_string(c_size));
  const std::size_t rest = cfg.target_degree - c_size;
  const std::size_t a_count = rest % 2 == 1 ? 1 : 2;
  if (rest < a_count || a_count > pools.involutions_flip1.size())
    throw std::invalid_argument("degree parity cannot be met with the available involutions");
  const std::size_t b_count = (rest - a_count) / 2;
  if (b_count > pools.pairs_flip1.size())
    throw std::invalid_argument("not enough flip-1 generator pairs for target degree " +
                                std::to_string(cfg.target_degree));
  s.a.assign(pools.involutions_flip1.begin(), pools.involutions_flip1.begin() + static_cast<std::ptrdiff_t>(a_count));
  s.b.assign(pools.pairs_flip1.begin(), pools.pairs_flip1.begin() + static_cast<std::ptrdiff_t>(b_count));
  return s;
}

inline SearchResult search_generating_set(const SearchConfig& cfg) {
  const GroupSpec spec(cfg.n);
  const detail::SearchPools pools(spec);
  SearchState state = initial_search_state(cfg);

  SearchResult result;
  std::size_t current = score(detail::expand_state(spec, state));
  result.accepted_scores.push_back(current);
  result.best_score = current;

  XorShift64Star rng(cfg.seed);
  double temperature = cfg.initial_temperature;
  const std::size_t slots_ab = state.a.size() + state.b.size();
  const std::size_t slots = slots_ab + (cfg.fix_c ? 0 : state.c.size());

  std::uint64_t it = 0;
  for (; it < cfg.budget && current != 0 && slots > 0; ++it) {
    SearchState candidate = state;
    const std::size_t slot = rng.below(slots);
    if (slot < state.a.size()) {
      detail::resample(rng, pools.involutions_flip1, candidate.a, slot, state.a);
    } else if (slot < slots_ab) {
      detail::resample(rng, pools.pairs_flip1, candidate.b, slot - state.a.size(), state.b);
    } else {
      const std::size_t ci = slot - slots_ab;
      const auto& pool = is_involution(spec, state.c[ci]) ? pools.involutions_flip0 : pools.pairs_flip0;
      std::vector<GroupElement> taken;
      for (const auto& g : state.c) {
        taken.push_back(detail::pair_representative(spec, g));
        taken.push_back(g);
      }
      detail::resample(rng, pool, candidate.c, ci, taken);
    }
    const std::size_t s = score(detail::expand_state(spec, candidate));
    const double delta = static_cast<double>(s) - static_cast<double>(current);
    bool accept = false;
    if (cfg.strategy == Strategy::HillClimb) {
      accept = s < current;
    } else {
      accept = delta <= 0 || rng.unit() < std::exp(-delta / temperature);
      temperature *= cfg.decay;
    }
    if (accept) {
      state = std::move(candidate);
      current = s;
      result.accepted_scores.push_back(current);
      result.best_score = std::min(result.best_score, current);
    }
  }
  result.iterations = it;
  result.final_state = state;
  if (current == 0) result.set = detail::expand_state(spec, state);
  return result;
}

}  // namespace cayley2
