#include "multiset.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace qrz {

Multiset::Multiset(std::vector<std::size_t> counts)
    : counts_(std::move(counts)), total_(std::accumulate(counts_.begin(), counts_.end(), std::size_t{0})) {}

Multiset Multiset::from_elements(std::size_t order, std::span<const Element> elements) {
  std::vector<std::size_t> counts(order, 0);
  for (Element a : elements) {
    if (a >= order) fail(ErrorCode::precondition, "multiset element out of range");
    ++counts[a];
  }
  return Multiset(std::move(counts));
}

Multiset Multiset::constant(const FiniteGroup& g, Element a, std::size_t copies) {
  std::vector<std::size_t> counts(g.order(), 0);
  counts.at(a) = copies;
  return Multiset(std::move(counts));
}

std::vector<Element> Multiset::support() const {
  std::vector<Element> s;
  for (std::size_t i = 0; i < counts_.size(); ++i)
    if (counts_[i] > 0) s.push_back(static_cast<Element>(i));
  return s;
}

std::vector<Element> Multiset::elements() const {
  std::vector<Element> out;
  out.reserve(total_);
  for (std::size_t i = 0; i < counts_.size(); ++i) out.insert(out.end(), counts_[i], static_cast<Element>(i));
  return out;
}

void require_decision_input(const FiniteGroup& g, const Multiset& a) {
  if (a.universe() != g.order())
    fail(ErrorCode::precondition, "multiset is not over this group");
  if (a.total() != g.order())
    fail(ErrorCode::precondition, "multiset has " + std::to_string(a.total()) + " elements but |G| = " +
                                      std::to_string(g.order()));
}

std::size_t multiset_count(std::size_t universe, std::size_t size) {
  if (universe == 0) return size == 0 ? 1 : 0;
  // C(universe + size - 1, size), built incrementally so every step is exact.
  const std::size_t top = universe + size - 1;
  const std::size_t k = std::min(size, universe - 1);
  unsigned __int128 c = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    c = c * (top - k + i) / i;
    if (c > std::numeric_limits<std::size_t>::max()) return std::numeric_limits<std::size_t>::max();
  }
  return static_cast<std::size_t>(c);
}

namespace {

void enumerate(std::vector<std::size_t>& counts, std::size_t pos, std::size_t left,
               std::span<const Element> slots, const std::function<void(const Multiset&)>& visit) {
  if (pos + 1 == slots.size()) {
    counts[slots[pos]] = left;
    visit(Multiset(counts));
    counts[slots[pos]] = 0;
    return;
  }
  for (std::size_t c = 0; c <= left; ++c) {
    counts[slots[pos]] = c;
    enumerate(counts, pos + 1, left - c, slots, visit);
  }
  counts[slots[pos]] = 0;
}

}  // namespace

void for_each_multiset(std::size_t universe, std::size_t size, const std::function<void(const Multiset&)>& visit) {
  std::vector<Element> slots(universe);
  std::iota(slots.begin(), slots.end(), Element{0});
  if (slots.empty()) return;
  std::vector<std::size_t> counts(universe, 0);
  enumerate(counts, 0, size, slots, visit);
}

std::vector<Multiset> multisets_supported_in(std::size_t universe, std::span<const Element> support,
                                             std::size_t size) {
  std::vector<Multiset> out;
  if (support.empty()) return out;
  std::vector<std::size_t> counts(universe, 0);
  enumerate(counts, 0, size, support, [&](const Multiset& m) { out.push_back(m); });
  return out;
}

Element ordered_product(const FiniteGroup& g, const Multiset& a) {
  Element p = kIdentity;
  for (Element x : a.elements()) p = g.mul(x, p);
  return p;
}

Multiset conjugate(const FiniteGroup& g, const Multiset& a, Element c) {
  std::vector<std::size_t> counts(a.universe(), 0);
  for (std::size_t x = 0; x < a.universe(); ++x)
    counts[g.mul(g.mul(c, static_cast<Element>(x)), g.inv(c))] += a.counts()[x];
  return Multiset(std::move(counts));
}

Multiset inverted(const FiniteGroup& g, const Multiset& a) {
  std::vector<std::size_t> counts(a.universe(), 0);
  for (std::size_t x = 0; x < a.universe(); ++x) counts[g.inv(static_cast<Element>(x))] += a.counts()[x];
  return Multiset(std::move(counts));
}

}  // namespace qrz
