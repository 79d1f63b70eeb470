#pragma once

// Words over a finite group, their left partial products, and simple
// product-one words.
//
// For letters (g1, ..., gl) the left partial products are p0 = 1 and
// pj = gj * p(j-1). A word is simple product-one when pl = 1 and p0..p(l-1)
// are pairwise distinct; its partial-product set is {p0, ..., p(l-1)}.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "group.hpp"

namespace qrz {

using Word = std::vector<Element>;

/// (p0, ..., pl) for the given letters; p0 is the identity.
std::vector<Element> partial_products(const FiniteGroup& g, std::span<const Element> letters);

class SimpleWord {
 public:
  std::span<const Element> letters() const noexcept { return letters_; }
  std::span<const Element> partials() const noexcept { return partials_; }
  /// Sorted partial-product set, of size length().
  std::span<const Element> pset() const noexcept { return pset_; }
  std::size_t length() const noexcept { return letters_.size(); }

  /// Cyclic shift so that letter k becomes the first letter.
  SimpleWord rotated(const FiniteGroup& g, std::size_t k) const;

  friend bool operator==(const SimpleWord& a, const SimpleWord& b) { return a.letters_ == b.letters_; }
  friend std::strong_ordering operator<=>(const SimpleWord& a, const SimpleWord& b) {
    if (a.letters_.size() != b.letters_.size()) return a.letters_.size() <=> b.letters_.size();
    return a.letters_ <=> b.letters_;
  }

 private:
  friend struct SimpleWordAccess;
  std::vector<Element> letters_;
  std::vector<Element> partials_;
  std::vector<Element> pset_;
};

struct WordRejection {
  enum class Reason { empty, invalid_letter, repeated_partial, nontrivial_product };
  Reason reason;
  std::size_t index;  // first repeated partial, offending letter, or the word length
};

using SimpleCheck = std::variant<SimpleWord, WordRejection>;

SimpleCheck check_simple(const FiniteGroup& g, std::span<const Element> letters);

/// Like check_simple but throws ErrorCode::precondition on rejection.
SimpleWord require_simple(const FiniteGroup& g, std::span<const Element> letters);

const char* to_string(WordRejection::Reason r);

/// Lexicographically least rotation of the letter sequence.
SimpleWord canonical_rotation(const FiniteGroup& g, const SimpleWord& w);

/// Number of distinct rotations of the letter sequence.
std::size_t rotation_class_size(const SimpleWord& w);

struct EnumeratedWord {
  SimpleWord word;  // canonical rotation
  std::size_t rotation_class_size;
};

/// All simple product-one words whose letters fit within `budget` (a count per
/// element), reported once per rotation class, ordered by length and then
/// letters. max_len defaults to min(|G|, total budget).
std::vector<EnumeratedWord> enumerate_simple_words(const FiniteGroup& g,
                                                   std::span<const std::size_t> budget,
                                                   std::optional<std::size_t> max_len = std::nullopt);

}  // namespace qrz
