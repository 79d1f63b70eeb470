#pragma once

// Brute-force reference implementations used only by tests. They deliberately
// avoid the library's search code and work from the Cayley table alone.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "group.hpp"
#include "multiset.hpp"

namespace oracle {

using qrz::Element;
using qrz::FiniteGroup;
using Counts = std::vector<std::size_t>;

// Permutation of {1..n} as images, parsed from cycle notation like "(12)(34)".
inline std::vector<int> parse_cycles(const std::string& name, int n) {
  std::vector<int> img(n + 1);
  std::iota(img.begin(), img.end(), 0);
  if (name == "e") return img;
  std::vector<int> cycle;
  for (char c : name) {
    if (c == '(') {
      cycle.clear();
    } else if (c == ')') {
      for (std::size_t i = 0; i < cycle.size(); ++i) img[cycle[i]] = cycle[(i + 1) % cycle.size()];
    } else {
      cycle.push_back(c - '0');
    }
  }
  return img;
}

// (a o b)(i) = a(b(i)): b acts first.
inline std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

// All quotient multisets {phi(x) x^-1} over the n! permutations phi.
inline std::set<Counts> realizable_by_enumeration(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Element> phi(n);
  std::iota(phi.begin(), phi.end(), 0);
  std::set<Counts> out;
  do {
    Counts c(n, 0);
    for (Element x = 0; x < n; ++x) ++c[g.mul(phi[x], g.inv(x))];
    out.insert(c);
  } while (std::next_permutation(phi.begin(), phi.end()));
  return out;
}

// Whether some ordering a1..aN of the multiset has aN ... a1 = 1.
inline bool has_product_one_ordering(const FiniteGroup& g, const qrz::Multiset& a) {
  auto xs = a.elements();
  std::sort(xs.begin(), xs.end());
  do {
    Element p = qrz::kIdentity;
    for (Element x : xs) p = g.mul(x, p);
    if (p == qrz::kIdentity) return true;
  } while (std::next_permutation(xs.begin(), xs.end()));
  return false;
}

inline bool is_simple_product_one(const FiniteGroup& g, const std::vector<Element>& w) {
  if (w.empty()) return false;
  std::set<Element> seen{qrz::kIdentity};
  Element p = qrz::kIdentity;
  for (std::size_t k = 0; k < w.size(); ++k) {
    p = g.mul(w[k], p);
    if (k + 1 < w.size() && !seen.insert(p).second) return false;
  }
  return p == qrz::kIdentity;
}

// Every simple product-one word within `budget` of length <= max_len, keyed by
// its lexicographically smallest rotation; value = number of distinct rotations.
inline std::map<std::vector<Element>, std::size_t> simple_words_by_enumeration(const FiniteGroup& g,
                                                                             const Counts& budget,
                                                                             std::size_t max_len) {
  std::map<std::vector<Element>, std::size_t> out;
  std::vector<Element> w;
  std::vector<Element> alphabet;
  for (Element x = 0; x < budget.size(); ++x)
    if (budget[x]) alphabet.push_back(x);
  auto fits = [&] {
    Counts used(budget.size(), 0);
    for (Element x : w)
      if (++used[x] > budget[x]) return false;
    return true;
  };
  auto rec = [&](auto&& self) -> void {
    if (!w.empty() && fits() && is_simple_product_one(g, w)) {
      std::set<std::vector<Element>> rots;
      for (std::size_t k = 0; k < w.size(); ++k) {
        std::vector<Element> r(w.begin() + k, w.end());
        r.insert(r.end(), w.begin(), w.begin() + k);
        rots.insert(r);
      }
      out[*rots.begin()] = rots.size();
    }
    if (w.size() == max_len) return;
    for (Element x : alphabet) {
      w.push_back(x);
      self(self);
      w.pop_back();
    }
  };
  rec(rec);
  return out;
}

// Assigns each element of A to one of r blocks of size |h| and checks every
// block multiplies to 1 (h abelian, so order within a block is irrelevant).
inline bool zero_sum_partition_exists(const FiniteGroup& h, const qrz::Multiset& a, std::size_t r) {
  const auto xs = a.elements();
  const std::size_t size = h.order();
  if (xs.size() != r * size) return false;
  std::vector<std::size_t> fill(r, 0);
  std::vector<Element> prod(r, qrz::kIdentity);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == xs.size())
      return std::all_of(prod.begin(), prod.end(), [](Element p) { return p == qrz::kIdentity; });
    for (std::size_t b = 0; b < r; ++b) {
      if (fill[b] == size) continue;
      ++fill[b];
      const Element old = prod[b];
      prod[b] = h.mul(xs[i], old);
      if (self(self, i + 1)) return true;
      prod[b] = old;
      --fill[b];
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace oracle
