#include "render.hpp"

#include <json.hpp>
#include <sstream>

#include "parse.hpp"

namespace qrz {

using nlohmann::json;

namespace {

double millis(std::chrono::nanoseconds d) { return std::chrono::duration<double, std::milli>(d).count(); }

const char* human(Status s) {
  switch (s) {
    case Status::realizable: return "realizable";
    case Status::not_realizable: return "not realizable";
    case Status::obstruction_failed: return "obstruction failed";
  }
  return "unknown";
}

const char* outcome_name(OrderingResult::Outcome o) {
  switch (o) {
    case OrderingResult::Outcome::found: return "found";
    case OrderingResult::Outcome::none: return "none";
    case OrderingResult::Outcome::budget_exceeded: return "budget_exceeded";
  }
  return "unknown";
}

json names_of(const FiniteGroup& g, std::span<const Element> xs) {
  json out = json::array();
  for (Element x : xs) out.push_back(g.name(x));
  return out;
}

json certificate_json(const FiniteGroup& g, const Realization& cert) {
  json cycles = json::array();
  for (const auto& t : cert.cycles)
    cycles.push_back({{"translate", g.name(t.translate)}, {"word", names_of(g, t.word.letters())}});
  json phi = json::object();
  for (Element x = 0; x < cert.phi.size(); ++x) phi[g.name(x)] = g.name(cert.phi[x]);
  return {{"cycles", cycles}, {"phi", phi}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  fail(ErrorCode::parse, "unknown output format '" + std::string(name) + "'");
}

std::string render_group(const FiniteGroup& g, Format f) {
  const auto ab = abelianization(g);
  std::vector<Subgroup> subgroups;
  if (g.order() <= 24) subgroups = all_subgroups(g);

  // covers[i]: maximal proper subgroups of subgroup i.
  std::vector<std::vector<std::size_t>> covers(subgroups.size());
  auto contains = [&](std::size_t big, std::size_t small) {
    for (Element x : subgroups[small].members())
      if (!subgroups[big].contains(x)) return false;
    return true;
  };
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    for (std::size_t j = 0; j < subgroups.size(); ++j) {
      if (i == j || subgroups[j].order() >= subgroups[i].order() || !contains(i, j)) continue;
      bool maximal = true;
      for (std::size_t k = 0; k < subgroups.size() && maximal; ++k)
        if (k != i && k != j && subgroups[k].order() > subgroups[j].order() &&
            subgroups[k].order() < subgroups[i].order() && contains(i, k) && contains(k, j))
          maximal = false;
      if (maximal) covers[i].push_back(j);
    }

  if (f == Format::json) {
    json lattice = json::array();
    for (std::size_t i = 0; i < subgroups.size(); ++i)
      lattice.push_back({{"id", i}, {"order", subgroups[i].order()}, {"members", names_of(g, subgroups[i].members())},
                         {"covers", covers[i]}});
    json j = {{"group", g.spec()},
              {"order", g.order()},
              {"abelian", g.is_abelian()},
              {"elements", g.names()},
              {"abelianization_order", ab.quotient.order()},
              {"commutator_subgroup", names_of(g, ab.commutator.members())}};
    j["subgroups"] = g.order() <= 24 ? lattice : json(nullptr);
    return dump(j);
  }
  std::ostringstream out;
  out << "group: " << g.spec() << "\n"
      << "order: " << g.order() << "\n"
      << "abelian: " << (g.is_abelian() ? "yes" : "no") << "\n"
      << "elements:";
  for (const auto& nm : g.names()) out << ' ' << nm;
  out << "\nabelianization order: " << ab.quotient.order() << "\n"
      << "commutator subgroup: {" << format_elements(g, ab.commutator.members()) << "}\n";
  if (g.order() > 24) {
    out << "subgroup lattice: omitted for order > 24\n";
    return out.str();
  }
  out << "subgroups: " << subgroups.size() << "\n";
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    out << "  H" << i << " order " << subgroups[i].order() << " {" << format_elements(g, subgroups[i].members())
        << "}";
    if (!covers[i].empty()) {
      out << " covers";
      for (std::size_t j : covers[i]) out << " H" << j;
    }
    out << "\n";
  }
  return out.str();
}

std::string render_verdict(const FiniteGroup& g, const Multiset& a, const Verdict& v,
                           const std::optional<OrderingResult>& ordering, Format f) {
  if (f == Format::json) {
    json j = {{"group", g.spec()},
              {"multiset", format_multiset(g, a)},
              {"decider", to_string(v.decider)},
              {"status", to_string(v.status)},
              {"search_stats",
               {{"nodes", v.stats.nodes}, {"elapsed_ms", millis(v.stats.elapsed)}, {"exhausted", v.stats.exhausted}}}};
    j["obstruction_detail"] = v.obstruction ? json{{"pass", v.obstruction->pass}, {"image", v.obstruction->image_name}}
                                     : json(nullptr);
    j["certificate"] = v.certificate ? certificate_json(g, *v.certificate) : json(nullptr);
    if (ordering) {
      j["product_one_ordering"] = {{"outcome", outcome_name(ordering->outcome)},
                                   {"ordering", names_of(g, ordering->ordering)}};
    }
    return dump(j);
  }
  std::ostringstream out;
  out << "group: " << g.spec() << "\n"
      << "multiset: " << format_multiset(g, a) << "\n"
      << "decider: " << to_string(v.decider) << "\n"
      << "status: " << human(v.status) << "\n";
  if (v.obstruction)
    out << "obstruction: " << (v.obstruction->pass ? "pass" : "fail") << " (image " << v.obstruction->image_name
        << " in abelianization)\n";
  else
    out << "obstruction: not checked\n";
  if (ordering) {
    out << "product-one ordering: ";
    if (ordering->outcome == OrderingResult::Outcome::found)
      out << format_elements(g, ordering->ordering) << "\n";
    else
      out << outcome_name(ordering->outcome) << "\n";
  }
  out << "search: nodes=" << v.stats.nodes << " elapsed_ms=" << millis(v.stats.elapsed)
      << " exhausted=" << (v.stats.exhausted ? "yes" : "no") << "\n";
  if (v.certificate) {
    out << "certificate: " << v.certificate->cycles.size() << " cycle(s)\n";
    for (const auto& t : v.certificate->cycles)
      out << "  " << g.name(t.translate) << ": " << format_word(g, t.word.letters()) << "\n";
  }
  return out.str();
}

std::string render_words(const FiniteGroup& g, const std::vector<EnumeratedWord>& words, Format f) {
  if (f == Format::json) {
    json arr = json::array();
    for (const auto& w : words)
      arr.push_back({{"word", names_of(g, w.word.letters())},
                     {"length", w.word.length()},
                     {"rotation_class_size", w.rotation_class_size},
                     {"pset", names_of(g, w.word.pset())}});
    return dump({{"group", g.spec()}, {"words", arr}});
  }
  std::ostringstream out;
  out << "simple product-one words (up to rotation): " << words.size() << "\n";
  for (const auto& w : words)
    out << "  " << format_word(g, w.word.letters()) << "  length=" << w.word.length()
        << " rotations=" << w.rotation_class_size << " P={" << format_elements(g, w.word.pset()) << "}\n";
  return out.str();
}

std::string render_certificate_check(const CertificateCheck& check, Format f) {
  if (f == Format::json) {
    json findings = json::array();
    for (const auto& x : check.findings) findings.push_back({{"failure", to_string(x.failure)}, {"detail", x.detail}});
    return dump({{"pass", check.ok()}, {"findings", findings}});
  }
  if (check.ok()) return "certificate: pass\n";
  std::string out = "certificate: fail\n";
  for (const auto& x : check.findings) out += std::string("  ") + to_string(x.failure) + ": " + x.detail + "\n";
  return out;
}

std::string render_reports(const std::vector<ExperimentReport>& reports, Format f) {
  bool all = true;
  for (const auto& r : reports) all = all && r.pass();
  if (f == Format::json) {
    json arr = json::array();
    for (const auto& r : reports) {
      json claims = json::array();
      for (const auto& c : r.claims)
        claims.push_back({{"claim", c.label}, {"expected", c.expected}, {"observed", c.observed}, {"pass", c.pass}});
      arr.push_back({{"experiment", r.id},
                     {"group", r.group},
                     {"pass", r.pass()},
                     {"elapsed_ms", millis(r.elapsed)},
                     {"claims", claims}});
    }
    return dump({{"pass", all}, {"reports", arr}});
  }
  std::ostringstream out;
  for (const auto& r : reports) {
    out << "[" << (r.pass() ? "PASS" : "FAIL") << "] " << r.id << " on " << r.group << " (" << millis(r.elapsed)
        << " ms)\n";
    for (const auto& c : r.claims) {
      out << "    " << (c.pass ? "ok  " : "FAIL") << " " << c.label << ": " << c.observed;
      if (!c.pass || (!c.expected.empty() && c.expected != c.observed)) out << " (expected " << c.expected << ")";
      out << "\n";
    }
  }
  out << (all ? "all claims pass" : "some claims FAILED") << "\n";
  return out.str();
}

std::string render_classification_table(const FiniteGroup& g, const Classification& c, Format f) {
  if (f == Format::json) {
    json rows = json::array();
    for (const auto& r : c.rows) {
      json row = {{"multiset", format_multiset(g, r.multiset)},
                  {"obstruction", r.obstruction.pass ? "pass" : "fail"},
                  {"obstruction_image", r.obstruction.image_name},
                  {"matching", to_string(r.matching)},
                  {"tiling", to_string(r.tiling)},
                  {"certificate_ok", r.certificate_ok}};
      if (r.certificate) {
        json cycles = json::array();
        for (const auto& t : r.certificate->cycles)
          cycles.push_back({{"translate", g.name(t.translate)}, {"word", names_of(g, t.word.letters())}});
        row["certificate"] = cycles;
      }
      rows.push_back(std::move(row));
    }
    return dump({{"group", c.group}, {"rows", rows}});
  }
  std::ostringstream out;
  out << "multiset\tobstruction\tmatching\ttiling\tcertificate\n";
  for (const auto& r : c.rows) {
    out << format_multiset(g, r.multiset) << '\t' << (r.obstruction.pass ? "pass" : "fail") << '\t'
        << to_string(r.matching) << '\t' << to_string(r.tiling) << '\t';
    if (r.certificate) {
      bool first = true;
      for (const auto& t : r.certificate->cycles) {
        out << (first ? "" : " ") << g.name(t.translate) << ":" << format_word(g, t.word.letters());
        first = false;
      }
    } else {
      out << '-';
    }
    out << '\n';
  }
  return out.str();
}

std::string render_classification_summary(const Classification& c, Format f) {
  const std::size_t total = c.rows.size();
  if (f == Format::json)
    return dump({{"group", c.group},
                 {"multisets", total},
                 {"realizable", c.realizable()},
                 {"obstruction_pass", c.obstruction_passes()},
                 {"obstruction_pass_not_realizable", c.obstruction_passes() - (c.realizable() - c.realizable_failing_obstruction())},
                 {"realizable_failing_obstruction", c.realizable_failing_obstruction()},
                 {"decider_disagreements", c.disagreements()},
                 {"certificate_failures", c.certificate_failures()}});
  std::ostringstream out;
  out << "group: " << c.group << "\n"
      << "multisets: " << total << "\n"
      << "realizable: " << c.realizable() << "\n"
      << "obstruction pass: " << c.obstruction_passes() << "\n"
      << "obstruction pass but not realizable: "
      << c.obstruction_passes() - (c.realizable() - c.realizable_failing_obstruction()) << "\n"
      << "realizable failing obstruction: " << c.realizable_failing_obstruction() << "\n"
      << "decider disagreements: " << c.disagreements() << "\n"
      << "certificate failures: " << c.certificate_failures() << "\n";
  return out.str();
}

}  // namespace qrz
