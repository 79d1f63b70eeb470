#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "group.hpp"

namespace qrz {

/// A multiset of group elements stored as one multiplicity per element index.
class Multiset {
 public:
  Multiset() = default;
  explicit Multiset(std::vector<std::size_t> counts);
  static Multiset from_elements(std::size_t order, std::span<const Element> elements);
  /// All |g| copies of one element.
  static Multiset constant(const FiniteGroup& g, Element a, std::size_t copies);

  std::span<const std::size_t> counts() const noexcept { return counts_; }
  std::size_t count(Element a) const { return counts_.at(a); }
  std::size_t total() const noexcept { return total_; }
  std::size_t universe() const noexcept { return counts_.size(); }

  /// Elements with nonzero multiplicity, increasing.
  std::vector<Element> support() const;
  /// Elements repeated by multiplicity, increasing.
  std::vector<Element> elements() const;

  friend bool operator==(const Multiset&, const Multiset&) = default;
  friend auto operator<=>(const Multiset& a, const Multiset& b) { return a.counts_ <=> b.counts_; }

 private:
  std::vector<std::size_t> counts_;
  std::size_t total_ = 0;
};

/// Throws ErrorCode::precondition unless A lives over g and |A| = |g|.
void require_decision_input(const FiniteGroup& g, const Multiset& a);

/// Number of multisets of the given size over `universe` elements, saturating
/// at SIZE_MAX.
std::size_t multiset_count(std::size_t universe, std::size_t size);

/// Visits every multiset of `size` elements over `universe` elements in
/// increasing lexicographic order of count vectors.
void for_each_multiset(std::size_t universe, std::size_t size, const std::function<void(const Multiset&)>& visit);

/// Multisets of `size` elements drawn from `support` only, same order.
std::vector<Multiset> multisets_supported_in(std::size_t universe, std::span<const Element> support, std::size_t size);

/// Product of the elements in increasing index order (right-to-left
/// accumulation, so the result is a_N ... a_1).
Element ordered_product(const FiniteGroup& g, const Multiset& a);

Multiset conjugate(const FiniteGroup& g, const Multiset& a, Element c);  // {c a c^-1}
Multiset inverted(const FiniteGroup& g, const Multiset& a);              // {a^-1}

}  // namespace qrz
