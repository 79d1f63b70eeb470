#pragma once

// Text syntax shared by the CLI and file formats.
//
//   group spec    cyclic:N | symmetric:N | dihedral:N | quaternion |
//                 product(SPEC,SPEC) | table:PATH
//   multiset      NAME*COUNT,NAME*COUNT,...   (a bare NAME means NAME*1)
//   word          (NAME,NAME,...)
//   element list  NAME,NAME,...
//
// Element names may themselves contain parentheses and commas, e.g.
// "((12),e)" in a direct product; separators are recognised only at
// parenthesis depth zero.

#include <string>
#include <string_view>
#include <vector>

#include "certificate.hpp"
#include "group.hpp"
#include "multiset.hpp"

namespace qrz {

GroupSpec parse_group_spec(std::string_view text);
FiniteGroup parse_and_build_group(std::string_view text);

Element parse_element(const FiniteGroup& g, std::string_view name);
std::vector<Element> parse_element_list(const FiniteGroup& g, std::string_view text);
Multiset parse_multiset(const FiniteGroup& g, std::string_view text);
Word parse_word(const FiniteGroup& g, std::string_view text);

std::string format_multiset(const FiniteGroup& g, const Multiset& a);
std::string format_word(const FiniteGroup& g, std::span<const Element> letters);
std::string format_elements(const FiniteGroup& g, std::span<const Element> elements);

/// Certificate file: line 1 the group spec, line 2 the multiset literal, then
/// one "TRANSLATE: WORD" line per cycle.
std::string write_certificate(const FiniteGroup& g, const Multiset& a, const Realization& cert);

struct CertificateText {
  std::string group_spec;
  std::string multiset;
  std::vector<std::pair<std::string, std::string>> cycles;  // translate, word literal
};

CertificateText read_certificate(std::string_view text);

/// Resolves cycle lines against g and rebuilds phi by walking each word from
/// its translate. Throws ErrorCode::precondition if a word is not simple
/// product-one. Overlapping or missing tiles do not throw: conflicting
/// entries keep the last write and uncovered entries hold the out-of-range
/// value |G|, so verify_certificate reports them.
Realization resolve_certificate(const FiniteGroup& g, const CertificateText& text);

}  // namespace qrz
