#pragma once

// Reproducible experiments over small groups. Each returns a report of
// claims (expected vs observed); rendering is left to the caller.

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "realize.hpp"

namespace qrz {

struct Claim {
  std::string label;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct ExperimentReport {
  std::string id;
  std::string group;
  std::vector<Claim> claims;
  std::chrono::nanoseconds elapsed{0};

  bool pass() const;
  void check(std::string label, std::string expected, std::string observed);
  void check(std::string label, bool expected, bool observed);
  void check(std::string label, std::size_t expected, std::size_t observed);
};

/// Simple product-one words over the two transpositions (12), (23) of S3.
ExperimentReport verify_s3_words();

/// {(12)x2, (23)x4} in S3: passes the obstruction, has a product-one
/// ordering, and both searches exhaust without a realization.
ExperimentReport verify_s3_counterexample();

/// {(12)xq, (23)x(6-q)} in S3 is realizable exactly for q in {0, 3, 6}.
ExperimentReport verify_s3_counting();

struct FamilyOptions {
  std::size_t max_order = 30;         // largest |S3 x K| attempted
  std::size_t direct_check_order = 12;  // also run decide_matching up to this order
};

/// S3 x K with 3 not dividing |K|: {s' x 2|K|, t' x 4|K|} is not realizable.
/// Throws ErrorCode::precondition when 3 divides |K| and ErrorCode::budget
/// when |S3 x K| exceeds max_order.
ExperimentReport verify_family(const GroupSpec& k, const FamilyOptions& opts = {});

struct HallOptions {
  std::size_t max_order = 8;
};

/// For abelian g: every multiset of size |g| is realizable iff its product is
/// the identity. Realizability is decided by search with the obstruction
/// filter disabled.
ExperimentReport verify_hall(const FiniteGroup& g, const HallOptions& opts = {});

/// decide_matching and decide_cycle_tiling agree (searches only, no
/// obstruction filter) on every multiset of size |g|, and every certificate
/// verifies.
ExperimentReport verify_decider_equivalence(const FiniteGroup& g);

/// decide_subgroup_reduction agrees with decide_matching on every multiset of
/// size |g| supported in h.
ExperimentReport verify_subgroup_reduction(const FiniteGroup& g, const Subgroup& h);

struct ClassificationRow {
  Multiset multiset;
  ObstructionResult obstruction;
  Status matching = Status::not_realizable;  // search verdict, obstruction not applied
  Status tiling = Status::not_realizable;
  bool certificate_ok = true;                // vacuous for non-realizable rows
  std::optional<Realization> certificate;    // from decide_matching
  std::uint64_t matching_nodes = 0;
  std::uint64_t tiling_nodes = 0;

  bool realizable() const { return matching == Status::realizable; }
  bool agree() const { return matching == tiling; }
};

struct Classification {
  std::string group;
  std::vector<ClassificationRow> rows;  // lexicographic order of count vectors

  std::size_t realizable() const;
  std::size_t obstruction_passes() const;
  std::size_t realizable_failing_obstruction() const;
  std::size_t disagreements() const;
  std::size_t certificate_failures() const;
};

struct ClassifyOptions {
  std::size_t max_multisets = 1'000'000;
  unsigned workers = 1;
};

/// Every multiset of size |g|. Throws ErrorCode::budget when there are more
/// than max_multisets.
Classification classify_multisets(const FiniteGroup& g, const ClassifyOptions& opts = {});

/// Realizable count among the 462 size-6 multisets over S3, recorded from the
/// first full classification and cross-checked against enumeration of all
/// 720 permutations.
inline constexpr std::size_t kS3RealizableCount = 146;

/// Classification of S3 plus determinism, obstruction necessity, certificate
/// re-verification and conjugation/inversion invariance.
ExperimentReport verify_s3_classification();

/// Experiment ids accepted by run_experiment, in default run order.
std::vector<std::string> experiment_ids();
std::vector<ExperimentReport> run_experiment(const std::string& id);

}  // namespace qrz
