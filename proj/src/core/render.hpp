#pragma once

#include <optional>
#include <string>
#include <vector>

#include "experiments.hpp"
#include "realize.hpp"

namespace qrz {

enum class Format { text, json };
Format parse_format(std::string_view name);

std::string render_group(const FiniteGroup& g, Format f);
std::string render_verdict(const FiniteGroup& g, const Multiset& a, const Verdict& v,
                           const std::optional<OrderingResult>& ordering, Format f);
std::string render_words(const FiniteGroup& g, const std::vector<EnumeratedWord>& words, Format f);
std::string render_certificate_check(const CertificateCheck& check, Format f);
std::string render_reports(const std::vector<ExperimentReport>& reports, Format f);

/// One row per multiset: tab-separated text, or a JSON array.
std::string render_classification_table(const FiniteGroup& g, const Classification& c, Format f);
std::string render_classification_summary(const Classification& c, Format f);

}  // namespace qrz
