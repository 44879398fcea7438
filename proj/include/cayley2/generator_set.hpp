#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "group.hpp"

namespace cayley2 {

/// Which piece of the A, B, B^-1, C, C^-1 decomposition an element came from.
enum class Label { A, B, BInverse, C, CInverse, Pad };

inline std::string_view label_name(Label l) {
  switch (l) {
    case Label::A: return "A";
    case Label::B: return "B";
    case Label::BInverse: return "B^-1";
    case Label::C: return "C";
    case Label::CInverse: return "C^-1";
    case Label::Pad: return "PAD";
  }
  return "?";
}

/// A list of elements of Gamma_n meant to generate a Cayley graph.
///
/// The container itself accepts anything so malformed input can be reported
/// by validate_set(); the construction routines only ever produce sets that are
/// unit-free, inverse-closed and duplicate-free.
class GeneratorSet {
 public:
  GeneratorSet(GroupSpec spec, std::vector<GroupElement> elements,
               std::optional<std::vector<Label>> labels = std::nullopt)
      : spec_(spec), elements_(std::move(elements)), labels_(std::move(labels)),
        members_(spec_.order(), 0) {
    if (labels_ && labels_->size() != elements_.size())
      throw std::invalid_argument("label count does not match element count");
    for (const auto& g : elements_)
      if (spec_.is_canonical(g)) members_[element_index(spec_, g)] = 1;
  }

  const GroupSpec& spec() const { return spec_; }
  std::span<const GroupElement> elements() const { return elements_; }
  const std::optional<std::vector<Label>>& labels() const { return labels_; }
  std::size_t degree() const { return elements_.size(); }
  std::size_t order() const { return spec_.order(); }

  bool contains(const GroupElement& g) const {
    return spec_.is_canonical(g) && members_[element_index(spec_, g)] != 0;
  }

  /// Elements carrying the given label, in insertion order.
  std::vector<GroupElement> with_label(Label l) const {
    std::vector<GroupElement> out;
    if (!labels_) return out;
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if ((*labels_)[i] == l) out.push_back(elements_[i]);
    return out;
  }

  /// Returns a copy with `extra` appended (labelled PAD when labels exist).
  GeneratorSet with_appended(std::span<const GroupElement> extra, Label l = Label::Pad) const {
    auto elems = elements_;
    elems.insert(elems.end(), extra.begin(), extra.end());
    std::optional<std::vector<Label>> labels;
    if (labels_) {
      labels = *labels_;
      labels->insert(labels->end(), extra.size(), l);
    }
    return GeneratorSet(spec_, std::move(elems), std::move(labels));
  }

 private:
  GroupSpec spec_;
  std::vector<GroupElement> elements_;
  std::optional<std::vector<Label>> labels_;
  std::vector<unsigned char> members_;
};

/// Accumulates a labelled, duplicate-free element list.
class GeneratorSetBuilder {
 public:
  explicit GeneratorSetBuilder(GroupSpec spec) : spec_(spec), seen_(spec.order(), 0) {}

  /// Adds g (reduced mod n) unless already present. Returns true if added.
  bool add(GroupElement g, Label l) {
    g = spec_.element(g.x, g.y, g.flip);
    auto& slot = seen_[element_index(spec_, g)];
    if (slot) return false;
    slot = 1;
    elements_.push_back(g);
    labels_.push_back(l);
    return true;
  }

  /// Adds g and its inverse (the inverse under `inverse_label`).
  void add_with_inverse(const GroupElement& g, Label l, Label inverse_label) {
    add(g, l);
    add(inverse(spec_, spec_.element(g.x, g.y, g.flip)), inverse_label);
  }

  GeneratorSet build() && { return GeneratorSet(spec_, std::move(elements_), std::move(labels_)); }

 private:
  GroupSpec spec_;
  std::vector<unsigned char> seen_;
  std::vector<GroupElement> elements_;
  std::vector<Label> labels_;
};

}  // namespace cayley2
