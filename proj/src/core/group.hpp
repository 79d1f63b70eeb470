#pragma once

// Finite groups stored as complete Cayley tables over dense indices.
//
// Every group uses index 0 for the identity. Products compose right to left,
// so for permutation groups mul(a, b) applies b first and then a.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace qrz {

using Element = std::uint32_t;
inline constexpr Element kIdentity = 0;

class FiniteGroup {
 public:
  /// Validates `table` (row-major, n*n entries) against the group axioms and
  /// throws ErrorCode::invalid_group naming the first violated axiom.
  /// Associativity is checked exhaustively for n <= 64 and on 10,000
  /// pseudo-random triples above that.
  static FiniteGroup from_table(std::vector<Element> table, std::vector<std::string> names,
                                std::string spec = "");

  std::size_t order() const noexcept { return n_; }
  Element mul(Element a, Element b) const noexcept { return table_[a * n_ + b]; }
  Element inv(Element a) const noexcept { return inverse_[a]; }

  const std::string& name(Element a) const { return names_.at(a); }
  std::span<const std::string> names() const noexcept { return names_; }
  std::optional<Element> find(std::string_view name) const;

  /// Canonical spec string the group was built from (empty for ad hoc tables).
  const std::string& spec() const noexcept { return spec_; }

  bool is_abelian() const noexcept { return abelian_; }
  std::size_t element_order(Element a) const;

 private:
  FiniteGroup() = default;

  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> names_;
  std::string spec_;
  bool abelian_ = true;
};

/// Parsed group description; see parse_group_spec for the text syntax.
struct GroupSpec {
  enum class Kind { cyclic, symmetric, dihedral, quaternion, product, table };

  Kind kind = Kind::cyclic;
  std::size_t n = 1;
  std::shared_ptr<const GroupSpec> left, right;  // product factors
  std::string path;                              // table file

  std::string to_string() const;
};

/// Element order per constructor:
///  cyclic(n):    g^k at index k; names "e", "g", "g^2", ...
///  symmetric(n): identity, then by number of moved points, then by cycle
///                notation read as a digit sequence; names like "(12)(34)"
///  dihedral(n):  r^a s^b at index b*n + a with s r s = r^-1; names "e", "r",
///                "r^2", "s", "rs", "r^2s", ...
///  quaternion:   1, -1, i, -i, j, -j, k, -k
///  product(A,B): (a, b) at index a*|B| + b; names "(a,b)"
FiniteGroup build_group(const GroupSpec& spec);

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup symmetric_group(std::size_t n);
FiniteGroup dihedral_group(std::size_t n);
FiniteGroup quaternion_group();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Parent-indexed subgroup. Members are sorted, so members()[0] is the identity.
class Subgroup {
 public:
  static Subgroup from_members(const FiniteGroup& g, std::vector<Element> members);

  std::span<const Element> members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  std::size_t parent_order() const noexcept { return mask_.size(); }
  bool contains(Element a) const noexcept { return a < mask_.size() && mask_[a]; }
  std::size_t index_in_parent() const noexcept { return mask_.size() / members_.size(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  std::vector<Element> members_;
  std::vector<bool> mask_;
};

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Element> gens);
Subgroup whole_group(const FiniteGroup& g);

/// All subgroups, sorted by order and then by member list.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

struct CosetPartition {
  std::vector<std::vector<Element>> cosets;  // each sorted
  std::vector<Element> representatives;      // minimal index of each coset
  std::vector<std::size_t> coset_of;         // element -> coset number
};

/// Right cosets Hx, listed in order of their minimal element.
CosetPartition right_cosets(const FiniteGroup& g, const Subgroup& h);

/// A subgroup re-indexed as a standalone group. embedding[i] is the parent
/// element for local index i; local indices follow the sorted member order.
struct EmbeddedGroup {
  FiniteGroup group;
  std::vector<Element> embedding;
  std::vector<std::optional<Element>> local;  // parent element -> local index
};

EmbeddedGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h);

struct AbelianizationMap {
  FiniteGroup quotient;
  std::vector<Element> projection;  // parent element -> quotient element
  Subgroup commutator;
};

AbelianizationMap abelianization(const FiniteGroup& g);

}  // namespace qrz
