#pragma once

// Diameter-two certification for Cayley graphs over Gamma_n.
//
// A Cayley graph Cay(G, X) has diameter at most two iff every group element
// lies in {e} u X u X*X. coverage() checks that directly by marking a
// presence table over element_index for all |X|^2 ordered products.
// exact_diameter() layers a BFS from the identity; vertex transitivity makes
// the identity's eccentricity the diameter.

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "generator_set.hpp"

namespace cayley2 {

struct Violation {
  enum class Kind { UnitPresent, MissingInverse, Duplicate, NonCanonical };
  Kind kind;
  GroupElement element;
  std::string message;
};

/// One violation per offending element. Empty iff the set is unit-free,
/// inverse-closed, canonical and duplicate-free.
inline std::vector<Violation> validate_set(const GeneratorSet& x) {
  const auto& spec = x.spec();
  std::vector<Violation> out;
  std::vector<unsigned char> seen(spec.order(), 0);
  for (const auto& g : x.elements()) {
    if (!spec.is_canonical(g)) {
      out.push_back({Violation::Kind::NonCanonical, g, "non-canonical element " + to_string(g)});
      continue;
    }
    if (g == identity(spec)) out.push_back({Violation::Kind::UnitPresent, g, "unit present"});
    auto& s = seen[element_index(spec, g)];
    if (s) out.push_back({Violation::Kind::Duplicate, g, "duplicate element " + to_string(g)});
    s = 1;
  }
  for (const auto& g : x.elements()) {
    if (!spec.is_canonical(g)) continue;
    const auto gi = inverse(spec, g);
    if (!x.contains(gi))
      out.push_back({Violation::Kind::MissingInverse, g, "missing inverse " + to_string(gi) + " of " + to_string(g)});
  }
  return out;
}

namespace detail {

inline void mark_products(const GeneratorSet& x, std::size_t row_begin, std::size_t row_end,
                          std::vector<unsigned char>& table) {
  const auto& spec = x.spec();
  const auto elems = x.elements();
  for (std::size_t i = row_begin; i < row_end; ++i)
    for (const auto& h : elems) table[element_index(spec, multiply(spec, elems[i], h))] = 1;
}

/// Presence table of {e} u X u X*X. The first-factor rows are split across
/// `threads` workers with private tables, then OR-merged.
inline std::vector<unsigned char> reach_table(const GeneratorSet& x, unsigned threads) {
  const auto& spec = x.spec();
  std::vector<unsigned char> table(spec.order(), 0);
  table[element_index(spec, identity(spec))] = 1;
  for (const auto& g : x.elements()) table[element_index(spec, g)] = 1;

  const std::size_t rows = x.degree();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(rows, 1))));
  if (threads == 1) {
    mark_products(x, 0, rows, table);
    return table;
  }
  std::vector<std::vector<unsigned char>> partial(threads, std::vector<unsigned char>(spec.order(), 0));
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t b = rows * t / threads, e = rows * (t + 1) / threads;
      workers.emplace_back([&, b, e, t] { mark_products(x, b, e, partial[t]); });
    }
  }
  for (const auto& p : partial)
    for (std::size_t i = 0; i < table.size(); ++i) table[i] |= p[i];
  return table;
}

}  // namespace detail

/// Elements not in {e} u X u X*X, in element_index order.
inline std::vector<GroupElement> coverage(const GeneratorSet& x, unsigned threads = 1) {
  const auto table = detail::reach_table(x, threads);
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < table.size(); ++i)
    if (!table[i]) out.push_back(element_at(x.spec(), i));
  return out;
}

inline std::size_t uncovered_count(const GeneratorSet& x, unsigned threads = 1) {
  const auto table = detail::reach_table(x, threads);
  return static_cast<std::size_t>(std::count(table.begin(), table.end(), 0));
}

inline bool is_diameter_at_most_two(const GeneratorSet& x) { return uncovered_count(x) == 0; }

/// BFS eccentricity of `root` under right multiplication by X.
/// std::nullopt means some element is unreachable.
inline std::optional<int> eccentricity(const GeneratorSet& x, const GroupElement& root) {
  const auto& spec = x.spec();
  const std::size_t total = spec.order();
  std::vector<unsigned char> visited(total, 0);
  std::vector<GroupElement> frontier{root}, next;
  visited[element_index(spec, root)] = 1;
  std::size_t reached = 1;
  int depth = 0;
  while (reached < total && !frontier.empty()) {
    next.clear();
    for (const auto& g : frontier)
      for (const auto& h : x.elements()) {
        const auto p = multiply(spec, g, h);
        auto& v = visited[element_index(spec, p)];
        if (!v) {
          v = 1;
          next.push_back(p);
        }
      }
    if (next.empty()) break;
    ++depth;
    reached += next.size();
    frontier.swap(next);
  }
  if (reached < total) return std::nullopt;
  return depth;
}

/// Diameter of Cay(Gamma_n, X); std::nullopt when X does not generate.
inline std::optional<int> exact_diameter(const GeneratorSet& x) { return eccentricity(x, identity(x.spec())); }

struct DiameterFacts {
  bool at_most_two = false;
  std::size_t uncovered_count = 0;
  bool exact_computed = false;
  std::optional<int> exact;  // nullopt with exact_computed = disconnected
};

struct VerificationReport {
  std::size_t degree = 0;
  std::size_t order = 0;
  bool unit_free = false;
  bool inverse_closed = false;
  bool canonical_distinct = false;
  std::vector<Violation> violations;
  std::optional<DiameterFacts> diameter;  // absent when validation failed

  bool valid() const { return violations.empty(); }
  bool passed() const { return valid() && diameter && diameter->at_most_two; }
};

inline VerificationReport verify_report(const GeneratorSet& x, bool with_exact_diameter = true,
                                        unsigned threads = 1) {
  VerificationReport r;
  r.degree = x.degree();
  r.order = x.order();
  r.violations = validate_set(x);
  auto none_of_kind = [&](std::initializer_list<Violation::Kind> kinds) {
    return std::none_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) {
      return std::find(kinds.begin(), kinds.end(), v.kind) != kinds.end();
    });
  };
  r.unit_free = none_of_kind({Violation::Kind::UnitPresent});
  r.inverse_closed = none_of_kind({Violation::Kind::MissingInverse});
  r.canonical_distinct = none_of_kind({Violation::Kind::Duplicate, Violation::Kind::NonCanonical});
  if (!r.valid()) return r;

  DiameterFacts facts;
  facts.uncovered_count = uncovered_count(x, threads);
  facts.at_most_two = facts.uncovered_count == 0;
  if (with_exact_diameter) {
    facts.exact_computed = true;
    facts.exact = exact_diameter(x);
  }
  r.diameter = facts;
  return r;
}

inline void write_report(std::ostream& os, const VerificationReport& r, bool porcelain) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  if (porcelain) {
    os << "degree = " << r.degree << "\n"
       << "order = " << r.order << "\n"
       << "unit_free = " << b(r.unit_free) << "\n"
       << "inverse_closed = " << b(r.inverse_closed) << "\n";
    if (r.diameter) {
      os << "diameter_le_2 = " << b(r.diameter->at_most_two) << "\n"
         << "uncovered_count = " << r.diameter->uncovered_count << "\n";
      if (r.diameter->exact_computed)
        os << "exact_diameter = "
           << (r.diameter->exact ? std::to_string(*r.diameter->exact) : std::string("disconnected")) << "\n";
    }
    return;
  }
  os << "degree:          " << r.degree << "\n"
     << "order:           " << r.order << "\n"
     << "unit-free:       " << b(r.unit_free) << "\n"
     << "inverse-closed:  " << b(r.inverse_closed) << "\n";
  for (const auto& v : r.violations) os << "violation:       " << v.message << "\n";
  if (r.diameter) {
    os << "diameter <= 2:   " << b(r.diameter->at_most_two) << "\n"
       << "uncovered:       " << r.diameter->uncovered_count << "\n";
    if (r.diameter->exact_computed)
      os << "exact diameter:  "
         << (r.diameter->exact ? std::to_string(*r.diameter->exact) : std::string("disconnected")) << "\n";
  }
}

enum class GraphFormat { EdgeList, Dimacs };

inline GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edgelist") return GraphFormat::EdgeList;
  if (name == "dimacs") return GraphFormat::Dimacs;
  throw std::invalid_argument("unsupported graph format '" + std::string(name) + "' (expected edgelist|dimacs)");
}

/// Writes Cay(Gamma_n, X) with vertex ids from element_index. Edge list:
/// one "u v" line per edge, u < v. DIMACS: "p edge N M" then "e u v" with
/// 1-based ids (element_index + 1). Edges are sorted by (u, v).
inline std::size_t export_graph(const GeneratorSet& x, GraphFormat format, std::ostream& os) {
  if (!validate_set(x).empty()) throw std::invalid_argument("cannot export an invalid generating set");
  const auto& spec = x.spec();
  const std::size_t vertices = spec.order();
  const std::size_t edges = vertices * x.degree() / 2;
  if (format == GraphFormat::Dimacs) os << "p edge " << vertices << " " << edges << "\n";
  const std::size_t base = format == GraphFormat::Dimacs ? 1 : 0;
  std::vector<std::size_t> nbrs;
  std::size_t written = 0;
  for (std::size_t u = 0; u < vertices; ++u) {
    const auto g = element_at(spec, u);
    nbrs.clear();
    for (const auto& h : x.elements()) {
      const auto v = element_index(spec, multiply(spec, g, h));
      if (v > u) nbrs.push_back(v);
    }
    std::sort(nbrs.begin(), nbrs.end());
    for (auto v : nbrs) {
      if (format == GraphFormat::Dimacs) os << "e ";
      os << u + base << " " << v + base << "\n";
      ++written;
    }
  }
  return written;
}

}  // namespace cayley2
