#pragma once

// Realizations and their independent verification.
//
// A realization of A is a permutation phi of G with A = {phi(x) x^-1}. Each
// cycle x0 -> x1 -> ... of phi reads as a simple product-one word whose
// partial-product set, right-translated by x0, is the cycle's vertex set.

#include <string>
#include <vector>

#include "multiset.hpp"
#include "words.hpp"

namespace qrz {

struct Tile {
  SimpleWord word;
  Element translate;
};

struct Realization {
  std::vector<Element> phi;  // phi[x] = image of x
  std::vector<Tile> cycles;
};

/// Splits phi into cycles started at their minimal vertex. Throws
/// ErrorCode::precondition if phi is not a permutation of g.
std::vector<Tile> permutation_to_words(const FiniteGroup& g, std::span<const Element> phi);

/// Rebuilds phi from tiles via phi(p(k-1) x) = p(k) x. Throws
/// ErrorCode::precondition if the translated partial-product sets overlap or
/// fail to cover g.
std::vector<Element> words_to_permutation(const FiniteGroup& g, std::span<const Tile> tiles);

/// The quotient multiset {phi(x) x^-1 : x in G}.
Multiset quotient_multiset(const FiniteGroup& g, std::span<const Element> phi);

enum class CertificateFailure {
  size_mismatch,        // phi or A not sized for the group
  not_a_permutation,    // phi is not a bijection
  multiset_mismatch,    // quotient multiset of phi differs from A
  word_not_simple,      // a stored word fails the simple product-one test
  tiles_overlap,        // translated partial-product sets intersect
  tiles_do_not_cover,   // translated partial-product sets miss an element
  cycle_mismatch,       // phi disagrees with a stored word along its tile
  header_mismatch,      // a certificate file names a different group or multiset
};

const char* to_string(CertificateFailure f);

struct CertificateCheck {
  struct Finding {
    CertificateFailure failure;
    std::string detail;
  };
  std::vector<Finding> findings;

  bool ok() const noexcept { return findings.empty(); }
  bool has(CertificateFailure f) const;
};

/// Recomputes every realization invariant from scratch using only the group
/// table; shares no code with the deciders.
CertificateCheck verify_certificate(const FiniteGroup& g, const Multiset& a, const Realization& cert);

}  // namespace qrz
