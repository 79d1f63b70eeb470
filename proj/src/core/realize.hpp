#pragma once

// Deciding quotient-realizability of a multiset A with |A| = |G|.
//
// Three deciders share the Verdict type:
//  - decide_matching searches for phi directly, one element at a time;
//  - decide_cycle_tiling grows cycles of phi, i.e. tiles of G by translated
//    partial-product sets of simple product-one words;
//  - decide_subgroup_reduction splits A, supported in H, into [G:H] blocks
//    that are each realizable in H.
// The first two are structurally unrelated searches and must agree.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "certificate.hpp"
#include "multiset.hpp"

namespace qrz {

enum class Status { realizable, not_realizable, obstruction_failed };
const char* to_string(Status s);

enum class Decider { matching, tiling, reduction };
const char* to_string(Decider d);

struct ObstructionResult {
  bool pass = true;
  Element image = kIdentity;  // multiplicity-weighted product in the abelianization
  std::string image_name;
};

ObstructionResult abelianization_obstruction(const FiniteGroup& g, const Multiset& a);
ObstructionResult abelianization_obstruction(const AbelianizationMap& ab, const Multiset& a);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::chrono::nanoseconds elapsed{0};
  bool exhausted = false;
};

struct Verdict {
  Status status = Status::not_realizable;
  Decider decider = Decider::matching;
  std::optional<Realization> certificate;
  SearchStats stats;
  std::optional<ObstructionResult> obstruction;
};

struct DeciderOptions {
  /// Run the abelianization obstruction first and stop on failure.
  bool check_obstruction = true;
  /// Abort with ErrorCode::budget after this many search nodes (0 = unlimited).
  std::uint64_t node_limit = 0;
  /// Optional cached abelianization of the ambient group.
  const AbelianizationMap* abelianization = nullptr;
};

Verdict decide_matching(const FiniteGroup& g, const Multiset& a, const DeciderOptions& opts = {});
Verdict decide_cycle_tiling(const FiniteGroup& g, const Multiset& a, const DeciderOptions& opts = {});

/// Requires support(A) inside H. Blocks are decided by decide_matching on H
/// and memoized by block multiset.
Verdict decide_subgroup_reduction(const FiniteGroup& g, const Subgroup& h, const Multiset& a,
                                  const DeciderOptions& opts = {});

struct OrderingResult {
  enum class Outcome { found, none, budget_exceeded };
  Outcome outcome = Outcome::none;
  std::vector<Element> ordering;  // a1..aN with aN ... a1 = 1
  std::uint64_t states = 0;
};

/// Memoized search over (remaining multiset, running product a_k ... a_1).
/// max_states = 0 means unlimited.
OrderingResult product_one_ordering(const FiniteGroup& g, const Multiset& a, std::uint64_t max_states = 0);

/// Partition of A (a multiset over the abelian group h) into r blocks of |h|
/// elements each with product 1; nullopt if none exists.
std::optional<std::vector<Multiset>> zero_sum_block_partition(const FiniteGroup& h, const Multiset& a,
                                                              std::size_t r);

}  // namespace qrz
