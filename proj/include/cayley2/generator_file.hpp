#pragma once

// Plain-text generator file format.
//
//   # comment lines start with '#'
//   n 10
//   g 0 0 1
//   g 1 0 1
//   ...
//
// A '#' also starts a trailing comment. The first significant line gives
// the modulus, then one "g x y flip" line per element with 0 <= x, y < n and
// flip in {0, 1}. Duplicate elements are rejected. Inverse closure is not enforced here; callers either request
// automatic closure or let validate_set() report the missing inverses.

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "generator_set.hpp"

namespace cayley2 {

class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

inline GeneratorSet read_generator_file(std::istream& in, bool close_inverses = false) {
  std::optional<GroupSpec> spec;
  std::vector<GroupElement> elems;
  std::vector<unsigned char> seen;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(raw);
    std::string tag;
    ls >> tag;
    if (!spec) {
      long long n = 0;
      if (tag != "n" || !(ls >> n)) throw FormatError(line_no, "expected 'n <modulus>'");
      if (n < 1) throw FormatError(line_no, "modulus must be >= 1");
      spec.emplace(n);
      seen.assign(spec->order(), 0);
    } else {
      long long x = 0, y = 0;
      int flip = 0;
      if (tag != "g" || !(ls >> x >> y >> flip)) throw FormatError(line_no, "expected 'g <x> <y> <flip>'");
      if (x < 0 || x >= spec->n() || y < 0 || y >= spec->n() || (flip != 0 && flip != 1))
        throw FormatError(line_no, "element out of range for n = " + std::to_string(spec->n()));
      const GroupElement g{x, y, flip};
      auto& s = seen[element_index(*spec, g)];
      if (s) throw FormatError(line_no, "duplicate element " + to_string(g));
      s = 1;
      elems.push_back(g);
    }
    std::string trailing;
    if (ls >> trailing) throw FormatError(line_no, "unexpected trailing token '" + trailing + "'");
  }
  if (!spec) throw FormatError(line_no, "missing 'n <modulus>' line");
  if (close_inverses) {
    const std::size_t original = elems.size();
    for (std::size_t i = 0; i < original; ++i) {
      const auto gi = inverse(*spec, elems[i]);
      auto& s = seen[element_index(*spec, gi)];
      if (!s) {
        s = 1;
        elems.push_back(gi);
      }
    }
  }
  return GeneratorSet(*spec, std::move(elems));
}

inline GeneratorSet parse_generator_file(const std::string& text, bool close_inverses = false) {
  std::istringstream in(text);
  return read_generator_file(in, close_inverses);
}

inline void write_generator_file(std::ostream& os, const GeneratorSet& x,
                                 const std::vector<std::string>& comments = {}) {
  for (const auto& c : comments) os << "# " << c << "\n";
  os << "n " << x.spec().n() << "\n";
  const auto& labels = x.labels();
  for (std::size_t i = 0; i < x.degree(); ++i) {
    const auto& g = x.elements()[i];
    os << "g " << g.x << " " << g.y << " " << g.flip;
    if (labels) os << "  # " << label_name((*labels)[i]);
    os << "\n";
  }
}

}  // namespace cayley2
