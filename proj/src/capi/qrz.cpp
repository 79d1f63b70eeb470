#include "qrz/qrz.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "experiments.hpp"
#include "parse.hpp"
#include "render.hpp"

struct qrz_group {
  qrz::FiniteGroup group;
};

struct qrz_multiset {
  std::shared_ptr<const qrz::FiniteGroup> group;
  qrz::Multiset multiset;
};

struct qrz_verdict {
  std::shared_ptr<const qrz::FiniteGroup> group;
  qrz::Multiset multiset;
  qrz::Verdict verdict;
};

namespace {

thread_local std::string last_error;

qrz_status to_status(qrz::ErrorCode c) {
  switch (c) {
    case qrz::ErrorCode::parse: return QRZ_ERR_PARSE;
    case qrz::ErrorCode::invalid_group: return QRZ_ERR_INVALID_GROUP;
    case qrz::ErrorCode::precondition: return QRZ_ERR_PRECONDITION;
    case qrz::ErrorCode::budget: return QRZ_ERR_BUDGET;
    case qrz::ErrorCode::io: return QRZ_ERR_IO;
    case qrz::ErrorCode::internal: return QRZ_ERR_INTERNAL;
  }
  return QRZ_ERR_INTERNAL;
}

qrz_status set_error(qrz_status s, std::string what) {
  last_error = std::move(what);
  return s;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
qrz_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return QRZ_OK;
  } catch (const qrz::Error& e) {
    return set_error(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(QRZ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(QRZ_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw qrz::Error(qrz::ErrorCode::internal, what);
}

qrz::Format format_of(qrz_format f) {
  switch (f) {
    case QRZ_FORMAT_TEXT: return qrz::Format::text;
    case QRZ_FORMAT_JSON: return qrz::Format::json;
  }
  throw qrz::Error(qrz::ErrorCode::parse, "unknown output format");
}

std::shared_ptr<const qrz::FiniteGroup> share(const qrz_group* g) {
  return std::make_shared<const qrz::FiniteGroup>(g->group);
}

void check_same_group(const qrz_group* g, const qrz_multiset* a) {
  if (a->multiset.universe() != g->group.order() || a->group->names().size() != g->group.order() ||
      !std::equal(a->group->names().begin(), a->group->names().end(), g->group.names().begin()))
    throw qrz::Error(qrz::ErrorCode::precondition, "multiset was parsed against a different group");
}

std::size_t default_classify_budget() {
  if (const char* env = std::getenv("QRZ_CLASSIFY_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw qrz::Error(qrz::ErrorCode::parse, "QRZ_CLASSIFY_BUDGET must be a positive integer");
  }
  return 1'000'000;
}

}  // namespace

#define QRZ_REQUIRE_ARG(cond)                                                \
  do {                                                                       \
    if (!(cond)) return set_error(QRZ_ERR_ARGUMENT, "invalid argument: " #cond); \
  } while (0)

extern "C" {

QRZ_API const char* qrz_version(void) { return "0.1.0"; }

QRZ_API const char* qrz_last_error(void) { return last_error.c_str(); }

QRZ_API void qrz_string_free(char* s) { std::free(s); }

QRZ_API qrz_status qrz_group_create(const char* spec, qrz_group** out) {
  QRZ_REQUIRE_ARG(spec && out);
  *out = nullptr;
  return guarded([&] { *out = new qrz_group{qrz::parse_and_build_group(spec)}; });
}

QRZ_API void qrz_group_destroy(qrz_group* g) { delete g; }

QRZ_API size_t qrz_group_order(const qrz_group* g) { return g ? g->group.order() : 0; }

QRZ_API const char* qrz_group_element_name(const qrz_group* g, size_t index) {
  if (!g || index >= g->group.order()) return nullptr;
  return g->group.name(static_cast<qrz::Element>(index)).c_str();
}

QRZ_API size_t qrz_group_abelianization_order(const qrz_group* g) {
  if (!g) return 0;
  return qrz::abelianization(g->group).quotient.order();
}

QRZ_API qrz_status qrz_group_describe(const qrz_group* g, qrz_format f, char** out) {
  QRZ_REQUIRE_ARG(g && out);
  return guarded([&] { *out = copy_string(qrz::render_group(g->group, format_of(f))); });
}

QRZ_API qrz_status qrz_multiset_parse(const qrz_group* g, const char* literal, qrz_multiset** out) {
  QRZ_REQUIRE_ARG(g && literal && out);
  *out = nullptr;
  return guarded([&] { *out = new qrz_multiset{share(g), qrz::parse_multiset(g->group, literal)}; });
}

QRZ_API void qrz_multiset_destroy(qrz_multiset* a) { delete a; }

QRZ_API size_t qrz_multiset_total(const qrz_multiset* a) { return a ? a->multiset.total() : 0; }

QRZ_API qrz_status qrz_decide(const qrz_group* g, const qrz_multiset* a, const qrz_decide_options* opts,
                              qrz_verdict** out) {
  QRZ_REQUIRE_ARG(g && a && out);
  *out = nullptr;
  const qrz_decide_options defaults{QRZ_DECIDER_MATCHING, nullptr, 0, 0};
  if (!opts) opts = &defaults;
  return guarded([&] {
    check_same_group(g, a);
    qrz::DeciderOptions o;
    o.check_obstruction = opts->skip_obstruction == 0;
    o.node_limit = opts->node_limit;
    const auto& G = g->group;
    qrz::Verdict v;
    switch (opts->decider) {
      case QRZ_DECIDER_MATCHING: v = qrz::decide_matching(G, a->multiset, o); break;
      case QRZ_DECIDER_TILING: v = qrz::decide_cycle_tiling(G, a->multiset, o); break;
      case QRZ_DECIDER_REDUCTION: {
        if (!opts->subgroup_generators)
          throw qrz::Error(qrz::ErrorCode::precondition, "the reduction decider needs subgroup generators");
        const auto gens = qrz::parse_element_list(G, opts->subgroup_generators);
        v = qrz::decide_subgroup_reduction(G, qrz::subgroup_generated(G, gens), a->multiset, o);
        break;
      }
      default: throw qrz::Error(qrz::ErrorCode::parse, "unknown decider");
    }
    if (v.certificate) require(qrz::verify_certificate(G, a->multiset, *v.certificate).ok(),
                               "decider produced a certificate that fails verification");
    *out = new qrz_verdict{share(g), a->multiset, std::move(v)};
  });
}

QRZ_API void qrz_verdict_destroy(qrz_verdict* v) { delete v; }

QRZ_API qrz_realizability qrz_verdict_status(const qrz_verdict* v) {
  if (!v) return QRZ_NOT_REALIZABLE;
  switch (v->verdict.status) {
    case qrz::Status::realizable: return QRZ_REALIZABLE;
    case qrz::Status::not_realizable: return QRZ_NOT_REALIZABLE;
    case qrz::Status::obstruction_failed: return QRZ_OBSTRUCTION_FAILED;
  }
  return QRZ_NOT_REALIZABLE;
}

QRZ_API uint64_t qrz_verdict_nodes(const qrz_verdict* v) { return v ? v->verdict.stats.nodes : 0; }

QRZ_API int qrz_verdict_exhausted(const qrz_verdict* v) { return v && v->verdict.stats.exhausted ? 1 : 0; }

QRZ_API int qrz_verdict_obstruction_pass(const qrz_verdict* v) {
  if (!v || !v->verdict.obstruction) return -1;
  return v->verdict.obstruction->pass ? 1 : 0;
}

QRZ_API size_t qrz_verdict_cycle_count(const qrz_verdict* v) {
  return v && v->verdict.certificate ? v->verdict.certificate->cycles.size() : 0;
}

QRZ_API qrz_status qrz_verdict_render(const qrz_verdict* v, qrz_format f, uint64_t ordering_states, char** out) {
  QRZ_REQUIRE_ARG(v && out);
  return guarded([&] {
    std::optional<qrz::OrderingResult> ordering;
    if (ordering_states) ordering = qrz::product_one_ordering(*v->group, v->multiset, ordering_states);
    *out = copy_string(qrz::render_verdict(*v->group, v->multiset, v->verdict, ordering, format_of(f)));
  });
}

QRZ_API qrz_status qrz_verdict_certificate(const qrz_verdict* v, char** out) {
  QRZ_REQUIRE_ARG(v && out);
  return guarded([&] {
    if (!v->verdict.certificate) throw qrz::Error(qrz::ErrorCode::precondition, "verdict has no certificate");
    *out = copy_string(qrz::write_certificate(*v->group, v->multiset, *v->verdict.certificate));
  });
}

QRZ_API qrz_status qrz_product_one_ordering(const qrz_group* g, const qrz_multiset* a, uint64_t max_states,
                                            int* found, char** ordering) {
  QRZ_REQUIRE_ARG(g && a && found);
  return guarded([&] {
    check_same_group(g, a);
    const auto r = qrz::product_one_ordering(g->group, a->multiset, max_states);
    *found = r.outcome == qrz::OrderingResult::Outcome::found ? 1
             : r.outcome == qrz::OrderingResult::Outcome::none ? 0
                                                                 : -1;
    if (ordering) *ordering = copy_string(qrz::format_elements(g->group, r.ordering));
  });
}

QRZ_API qrz_status qrz_verify_certificate(const qrz_group* g, const qrz_multiset* a, const char* certificate_text,
                                          qrz_format f, int* pass, char** report) {
  QRZ_REQUIRE_ARG(g && a && certificate_text && pass);
  return guarded([&] {
    check_same_group(g, a);
    const auto& G = g->group;
    const auto text = qrz::read_certificate(certificate_text);
    qrz::CertificateCheck check;
    try {
      const auto cert = qrz::resolve_certificate(G, text);
      check = qrz::verify_certificate(G, a->multiset, cert);
    } catch (const qrz::Error& e) {
      if (e.code() != qrz::ErrorCode::precondition) throw;
      check.findings.push_back({qrz::CertificateFailure::word_not_simple, e.what()});
    }
    bool header_ok = true;
    try {
      header_ok = qrz::parse_multiset(G, text.multiset) == a->multiset;
    } catch (const qrz::Error&) {
      header_ok = false;
    }
    if (!header_ok)
      check.findings.push_back({qrz::CertificateFailure::header_mismatch,
                                "certificate records multiset '" + text.multiset + "'"});
    if (!G.spec().empty() && text.group_spec != G.spec())
      check.findings.push_back({qrz::CertificateFailure::header_mismatch,
                                "certificate records group '" + text.group_spec + "'"});
    *pass = check.ok() ? 1 : 0;
    if (report) *report = copy_string(qrz::render_certificate_check(check, format_of(f)));
  });
}

QRZ_API qrz_status qrz_words(const qrz_group* g, const char* budget, size_t max_len, qrz_format f, char** out) {
  QRZ_REQUIRE_ARG(g && budget && out);
  return guarded([&] {
    const auto b = qrz::parse_multiset(g->group, budget);
    std::optional<std::size_t> limit;
    if (max_len > 0) limit = max_len;
    *out = copy_string(qrz::render_words(g->group, qrz::enumerate_simple_words(g->group, b.counts(), limit),
                                         format_of(f)));
  });
}

QRZ_API qrz_status qrz_classify(const qrz_group* g, size_t max_multisets, unsigned workers, qrz_format f,
                                char** table, char** summary, size_t* realizable) {
  QRZ_REQUIRE_ARG(g);
  return guarded([&] {
    qrz::ClassifyOptions o;
    o.max_multisets = max_multisets ? max_multisets : default_classify_budget();
    o.workers = workers ? workers : 1;
    const auto c = qrz::classify_multisets(g->group, o);
    if (c.disagreements() != 0 || c.certificate_failures() != 0)
      throw qrz::Error(qrz::ErrorCode::internal, "deciders disagree or a certificate failed verification");
    if (table) *table = copy_string(qrz::render_classification_table(g->group, c, format_of(f)));
    if (summary) *summary = copy_string(qrz::render_classification_summary(c, format_of(f)));
    if (realizable) *realizable = c.realizable();
  });
}

QRZ_API qrz_status qrz_experiment_ids(char** out) {
  QRZ_REQUIRE_ARG(out);
  return guarded([&] {
    std::string s;
    for (const auto& id : qrz::experiment_ids()) s += id + "\n";
    *out = copy_string(s);
  });
}

QRZ_API qrz_status qrz_run_experiments(const char* id, qrz_format f, int* all_pass, char** out) {
  QRZ_REQUIRE_ARG(all_pass && out);
  return guarded([&] {
    const auto reports = qrz::run_experiment(id ? id : "all");
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.pass();
    *all_pass = ok ? 1 : 0;
    *out = copy_string(qrz::render_reports(reports, format_of(f)));
  });
}

}  // extern "C"
