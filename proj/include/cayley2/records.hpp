#pragma once

// Registry of the record diameter-two generating sets over Gamma_n.
//
// Each entry stores A and B as published. C is never stored: it is always
// { (m - i, i, 0) : 0 <= i <= r } with m = n/2 and r = floor(n/4).
// X = A u B u B^-1 u C u C^-1.

#include <algorithm>
#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "construction.hpp"

namespace cayley2 {

struct Triple {
  int x, y, flip;
};

struct RecordEntry {
  int n;
  int degree;
  int order;
  std::vector<Triple> a_set;
  std::vector<Triple> b_set;
  std::string source;
};

/// A correction to a published element: `printed` is replaced by `corrected`.
struct Erratum {
  int n;
  Triple printed;
  Triple corrected;
  std::string note;
};

inline const std::vector<RecordEntry>& record_registry() {
  static const std::vector<RecordEntry> registry = {
      {10, 16, 200, {{0, 0, 1}}, {{1, 0, 1}, {1, 3, 1}, {1, 7, 1}, {5, 0, 1}, {5, 2, 1}}, "record n=10 (verification script)"},
      {12, 21, 288, {{0, 0, 1}, {3, 9, 1}}, {{0, 1, 1}, {0, 2, 1}, {6, 9, 1}, {4, 0, 1}, {5, 0, 1}, {1, 5, 1}}, "record n=12"},
      {14, 23, 392, {{0, 0, 1}, {9, 5, 1}},
       {{0, 1, 1}, {0, 2, 1}, {3, 0, 1}, {12, 6, 1}, {5, 0, 1}, {7, 13, 1}, {4, 3, 1}}, "record n=14"},
      {16, 28, 512, {{0, 0, 1}, {1, 15, 1}, {2, 14, 1}},
       {{0, 1, 1}, {0, 2, 1}, {11, 8, 1}, {6, 14, 1}, {0, 5, 1}, {9, 13, 1}, {8, 15, 1}, {4, 4, 1}}, "record n=16"},
      {18, 31, 648, {{0, 0, 1}, {6, 12, 1}, {7, 11, 1}, {14, 4, 1}},
       {{0, 1, 1}, {2, 0, 1}, {6, 15, 1}, {1, 3, 1}, {8, 5, 1}, {17, 7, 1}, {13, 12, 1}, {11, 15, 1}, {6, 3, 1}},
       "record n=18"},
      {20, 37, 800, {{0, 0, 1}, {1, 19, 1}, {2, 18, 1}, {3, 17, 1}, {10, 10, 1}, {13, 7, 1}},
       {{0, 1, 1}, {5, 17, 1}, {0, 3, 1}, {9, 15, 1}, {6, 19, 1}, {17, 9, 1}, {11, 16, 1}, {3, 5, 1}, {0, 9, 1}, {3, 7, 1}},
       "record n=20"},
      {22, 40, 968, {{0, 0, 1}, {1, 21, 1}, {2, 20, 1}, {3, 19, 1}, {4, 18, 1}, {5, 17, 1}, {11, 11, 1}},
       {{0, 1, 1}, {9, 15, 1}, {3, 0, 1}, {11, 15, 1}, {9, 18, 1}, {2, 4, 1}, {19, 10, 1}, {3, 5, 1}, {14, 17, 1},
        {20, 12, 1}, {11, 0, 1}},
       "record n=22"},
      {24, 46, 1152,
       {{0, 0, 1}, {1, 23, 1}, {2, 22, 1}, {3, 21, 1}, {4, 20, 1}, {5, 19, 1}, {6, 18, 1}, {7, 17, 1}, {12, 12, 1}},
       {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {0, 5, 1}, {0, 6, 1}, {0, 7, 1}, {16, 16, 1}, {14, 19, 1}, {1, 9, 1},
        {14, 21, 1}, {12, 0, 1}},
       "record n=24"},
      {26, 49, 1352,
       {{0, 0, 1}, {1, 25, 1}, {2, 24, 1}, {3, 23, 1}, {4, 22, 1}, {5, 21, 1}, {6, 20, 1}, {7, 19, 1}, {8, 18, 1},
        {13, 13, 1}},
       {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {0, 5, 1}, {0, 6, 1}, {0, 7, 1}, {0, 8, 1}, {16, 19, 1}, {17, 19, 1},
        {3, 8, 1}, {3, 9, 1}, {13, 0, 1}},
       "record n=26"},
      {28, 54, 1568,
       {{0, 0, 1}, {1, 27, 1}, {2, 26, 1}, {3, 25, 1}, {4, 24, 1}, {5, 23, 1}, {6, 22, 1}, {7, 21, 1}, {8, 20, 1},
        {9, 19, 1}, {14, 14, 1}},
       {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {0, 5, 1}, {0, 6, 1}, {0, 7, 1}, {0, 8, 1}, {0, 9, 1}, {17, 21, 1},
        {18, 21, 1}, {3, 9, 1}, {3, 10, 1}, {14, 0, 1}},
       "record n=28"},
  };
  return registry;
}

/// As printed, the n=18 set leaves 24 flip-0 elements uncovered. Replacing
/// (8,5,1) by (8,15,1) is the only single-element change that restores
/// diameter two at degree 31.
inline const std::vector<Erratum>& record_errata() {
  static const std::vector<Erratum> errata = {
      {18, {8, 5, 1}, {8, 15, 1}, "printed B element (8,5,1) leaves 24 elements uncovered; (8,15,1) restores diameter 2"},
  };
  return errata;
}

/// Degrees at which a record (possibly padded) generating set is available.
inline constexpr std::array<int, 34> kRecordDegrees = {16, 17, 18, 21, 22, 23, 24, 25, 26, 27, 28, 29,
                                                       30, 31, 32, 33, 34, 35, 37, 38, 39, 40, 41, 42,
                                                       43, 46, 47, 48, 49, 50, 51, 54, 55, 56};

inline bool has_record(int degree) {
  return std::find(kRecordDegrees.begin(), kRecordDegrees.end(), degree) != kRecordDegrees.end();
}

/// Expands an entry into its full labelled generating set.
inline GeneratorSet expand_record(const RecordEntry& e, bool apply_errata = true) {
  const GroupSpec spec(e.n);
  const Residue m = e.n / 2;
  const Residue r = e.n / 4;
  auto fix = [&](Triple t) {
    if (apply_errata)
      for (const auto& err : record_errata())
        if (err.n == e.n && err.printed.x == t.x && err.printed.y == t.y && err.printed.flip == t.flip)
          return err.corrected;
    return t;
  };
  GeneratorSetBuilder builder(spec);
  for (auto t : e.a_set) {
    t = fix(t);
    builder.add(spec.element(t.x, t.y, t.flip), Label::A);
  }
  for (auto t : e.b_set) {
    t = fix(t);
    builder.add(spec.element(t.x, t.y, t.flip), Label::B);
  }
  for (auto t : e.b_set) {
    t = fix(t);
    builder.add(inverse(spec, spec.element(t.x, t.y, t.flip)), Label::BInverse);
  }
  for (Residue i = 0; i <= r; ++i) builder.add(spec.element(m - i, i, 0), Label::C);
  for (Residue i = 0; i <= r; ++i) builder.add(inverse(spec, spec.element(m - i, i, 0)), Label::CInverse);
  return std::move(builder).build();
}

/// Record entry with the largest registry degree not exceeding `degree`.
inline const RecordEntry& nearest_record_entry(int degree) {
  const RecordEntry* best = nullptr;
  for (const auto& e : record_registry())
    if (e.degree <= degree && (!best || e.degree > best->degree)) best = &e;
  if (!best) throw std::invalid_argument("no record construction for degree " + std::to_string(degree));
  return *best;
}

/// Record generating set for `degree`: a registry set verbatim, or the nearest
/// lower one padded with involutions.
inline GeneratorSet record_set(int degree) {
  if (!has_record(degree)) throw std::invalid_argument("no record construction for degree " + std::to_string(degree));
  const auto& entry = nearest_record_entry(degree);
  return pad_to_degree(expand_record(entry), static_cast<std::size_t>(degree));
}

}  // namespace cayley2
