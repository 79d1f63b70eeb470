#include "experiments.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>

#include "parse.hpp"

namespace qrz {

namespace {

using Clock = std::chrono::steady_clock;

struct S3 {
  FiniteGroup g = symmetric_group(3);
  Element s = *g.find("(12)");
  Element t = *g.find("(23)");
};

Multiset two_letter(const FiniteGroup& g, Element s, std::size_t qs, Element t, std::size_t qt) {
  std::vector<std::size_t> counts(g.order(), 0);
  counts[s] += qs;
  counts[t] += qt;
  return Multiset(std::move(counts));
}

DeciderOptions search_only() {
  DeciderOptions o;
  o.check_obstruction = false;
  return o;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string words_summary(const FiniteGroup& g, const std::vector<EnumeratedWord>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += format_word(g, w.word.letters());
  }
  return out.empty() ? "none" : out;
}

bool ordering_is_product_one(const FiniteGroup& g, const std::vector<Element>& ordering) {
  Element p = kIdentity;
  for (Element a : ordering) p = g.mul(a, p);
  return p == kIdentity;
}

void stamp(ExperimentReport& r, Clock::time_point start) { r.elapsed = Clock::now() - start; }

}  // namespace

bool ExperimentReport::pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

void ExperimentReport::check(std::string label, std::string expected, std::string observed) {
  const bool ok = expected == observed;
  claims.push_back({std::move(label), std::move(expected), std::move(observed), ok});
}

void ExperimentReport::check(std::string label, bool expected, bool observed) {
  check(std::move(label), yes_no(expected), yes_no(observed));
}

void ExperimentReport::check(std::string label, std::size_t expected, std::size_t observed) {
  check(std::move(label), std::to_string(expected), std::to_string(observed));
}

ExperimentReport verify_s3_words() {
  const auto start = Clock::now();
  const S3 s3;
  const auto& g = s3.g;
  ExperimentReport r{"s3-words", g.spec(), {}, {}};

  const auto words = enumerate_simple_words(g, two_letter(g, s3.s, 6, s3.t, 6).counts());
  r.check("rotation classes over {(12),(23)}", std::size_t{3}, words.size());

  std::size_t short_words = 0;
  for (const auto& w : words)
    if (w.word.length() >= 3 && w.word.length() <= 5) ++short_words;
  r.check("words of length 3-5", std::size_t{0}, short_words);

  auto find_class = [&](const Word& letters) -> const EnumeratedWord* {
    for (const auto& w : words)
      if (std::equal(w.word.letters().begin(), w.word.letters().end(), letters.begin(), letters.end())) return &w;
    return nullptr;
  };
  const Element ss[] = {s3.s};
  const Element tt[] = {s3.t};
  const auto* ws = find_class({s3.s, s3.s});
  r.check("((12),(12)) present", true, ws != nullptr);
  if (ws) {
    const auto gen = subgroup_generated(g, ss);
    r.check("P((12),(12)) = <(12)>", format_elements(g, gen.members()), format_elements(g, ws->word.pset()));
  }
  const auto* wt = find_class({s3.t, s3.t});
  r.check("((23),(23)) present", true, wt != nullptr);
  if (wt) {
    const auto gen = subgroup_generated(g, tt);
    r.check("P((23),(23)) = <(23)>", format_elements(g, gen.members()), format_elements(g, wt->word.pset()));
  }
  const auto* alt = find_class({s3.s, s3.t, s3.s, s3.t, s3.s, s3.t});
  r.check("alternating length-6 class present", true, alt != nullptr);
  if (alt) {
    r.check("alternating class size", std::size_t{2}, alt->rotation_class_size);
    r.check("alternating word covers S3", std::size_t{6}, alt->word.pset().size());
    const auto rev = canonical_rotation(g, require_simple(g, Word{s3.t, s3.s, s3.t, s3.s, s3.t, s3.s}));
    r.check("((23),(12),...) rotates to the same class", format_word(g, alt->word.letters()),
            format_word(g, rev.letters()));
  }

  const auto limited = enumerate_simple_words(g, two_letter(g, s3.s, 2, s3.t, 4).counts());
  r.check("words within {(12)x2,(23)x4}", "((12),(12)) ((23),(23))", words_summary(g, limited));
  stamp(r, start);
  return r;
}

ExperimentReport verify_s3_counterexample() {
  const auto start = Clock::now();
  const S3 s3;
  const auto& g = s3.g;
  const Multiset a = two_letter(g, s3.s, 2, s3.t, 4);
  ExperimentReport r{"s3-counterexample", g.spec(), {}, {}};

  r.check("abelianization obstruction passes", true, abelianization_obstruction(g, a).pass);
  const auto ordering = product_one_ordering(g, a);
  const bool found = ordering.outcome == OrderingResult::Outcome::found;
  r.check("product-one ordering exists", true, found);
  if (found) {
    r.check("ordering multiplies to 1", true, ordering_is_product_one(g, ordering.ordering));
    r.check("ordering", "(12),(12),(23),(23),(23),(23)", format_elements(g, ordering.ordering));
  }
  const auto m = decide_matching(g, a);
  r.check("matching decider", "not_realizable", to_string(m.status));
  r.check("matching search exhausted", true, m.stats.exhausted);
  const auto t = decide_cycle_tiling(g, a);
  r.check("tiling decider", "not_realizable", to_string(t.status));
  r.check("tiling search exhausted", true, t.stats.exhausted);
  r.check("available words", "((12),(12)) ((23),(23))", words_summary(g, enumerate_simple_words(g, a.counts())));

  // The only word decomposition is one coset of <(12)> and two of <(23)>;
  // no right coset of <(12)> equals a right coset of <(23)>.
  const Element gs[] = {s3.s};
  const Element gt[] = {s3.t};
  const auto cs = right_cosets(g, subgroup_generated(g, gs));
  const auto ct = right_cosets(g, subgroup_generated(g, gt));
  std::size_t shared = 0;
  for (const auto& x : cs.cosets)
    for (const auto& y : ct.cosets) shared += x == y;
  r.check("cosets shared by <(12)> and <(23)>", std::size_t{0}, shared);
  stamp(r, start);
  return r;
}

ExperimentReport verify_s3_counting() {
  const auto start = Clock::now();
  const S3 s3;
  const auto& g = s3.g;
  ExperimentReport r{"s3-counting", g.spec(), {}, {}};
  std::string realizable_q;
  for (std::size_t q = 0; q <= 6; ++q) {
    const Multiset a = two_letter(g, s3.s, q, s3.t, 6 - q);
    const auto m = decide_matching(g, a);
    const auto t = decide_cycle_tiling(g, a);
    const bool expected = q % 3 == 0;
    r.check("q=" + std::to_string(q) + " matching realizable", expected, m.status == Status::realizable);
    r.check("q=" + std::to_string(q) + " tiling realizable", expected, t.status == Status::realizable);
    if (m.status == Status::realizable) realizable_q += (realizable_q.empty() ? "" : ",") + std::to_string(q);
    if (q == 3 && t.certificate) r.check("q=3 realization cycles", std::size_t{1}, t.certificate->cycles.size());
    if (q == 0 && t.certificate) {
      const Element gt[] = {s3.t};
      const auto cosets = right_cosets(g, subgroup_generated(g, gt)).cosets;
      bool on_cosets = t.certificate->cycles.size() == 3;
      for (const auto& tile : t.certificate->cycles) {
        std::vector<Element> v;
        for (Element p : tile.word.pset()) v.push_back(g.mul(p, tile.translate));
        std::sort(v.begin(), v.end());
        on_cosets = on_cosets && std::find(cosets.begin(), cosets.end(), v) != cosets.end();
      }
      r.check("q=0 uses three 2-cycles on right cosets of <(23)>", true, on_cosets);
    }
  }
  r.check("realizable q", "0,3,6", realizable_q);
  stamp(r, start);
  return r;
}

ExperimentReport verify_family(const GroupSpec& kspec, const FamilyOptions& opts) {
  const auto start = Clock::now();
  const FiniteGroup k = build_group(kspec);
  const std::size_t m = k.order();
  if (m % 3 == 0)
    fail(ErrorCode::precondition, "|K| = " + std::to_string(m) + " is divisible by 3");
  if (6 * m > opts.max_order)
    fail(ErrorCode::budget, "|S3 x K| = " + std::to_string(6 * m) + " exceeds the configured order budget " +
                                std::to_string(opts.max_order));
  const FiniteGroup s3 = symmetric_group(3);
  const FiniteGroup g = direct_product(s3, k);
  const Element s = static_cast<Element>(*s3.find("(12)") * m);
  const Element t = static_cast<Element>(*s3.find("(23)") * m);
  const Multiset a = two_letter(g, s, 2 * m, t, 4 * m);
  ExperimentReport r{"family", g.spec(), {}, {}};

  r.check("|A| = |G|", g.order(), a.total());
  r.check("abelianization obstruction passes", true, abelianization_obstruction(g, a).pass);
  const auto ordering = product_one_ordering(g, a);
  r.check("product-one ordering exists", true,
          ordering.outcome == OrderingResult::Outcome::found && ordering_is_product_one(g, ordering.ordering));

  const Element gens[] = {s, t};
  const Subgroup h = subgroup_generated(g, gens);
  r.check("|H| for H = S3 x {1}", std::size_t{6}, h.order());
  const auto red = decide_subgroup_reduction(g, h, a);
  r.check("subgroup reduction decider", "not_realizable", to_string(red.status));
  if (g.order() <= opts.direct_check_order) {
    const auto direct = decide_matching(g, a);
    r.check("matching decider", "not_realizable", to_string(direct.status));
  }
  stamp(r, start);
  return r;
}

ExperimentReport verify_hall(const FiniteGroup& g, const HallOptions& opts) {
  const auto start = Clock::now();
  if (!g.is_abelian()) fail(ErrorCode::precondition, "Hall confirmation needs an abelian group");
  if (g.order() > opts.max_order)
    fail(ErrorCode::budget, "group order " + std::to_string(g.order()) + " exceeds Hall budget " +
                                std::to_string(opts.max_order));
  ExperimentReport r{"hall", g.spec(), {}, {}};
  std::size_t total = 0, product_one = 0, realizable = 0, mismatches = 0, bad_certs = 0;
  for_each_multiset(g.order(), g.order(), [&](const Multiset& a) {
    ++total;
    const bool zero_sum = ordered_product(g, a) == kIdentity;
    const auto v = decide_matching(g, a, search_only());
    const bool ok = v.status == Status::realizable;
    product_one += zero_sum;
    realizable += ok;
    mismatches += zero_sum != ok;
    if (ok && !verify_certificate(g, a, *v.certificate).ok()) ++bad_certs;
  });
  r.check("multisets checked", multiset_count(g.order(), g.order()), total);
  r.check("realizable count equals product-one count", product_one, realizable);
  r.check("realizable != product-one", std::size_t{0}, mismatches);
  r.check("certificate failures", std::size_t{0}, bad_certs);
  stamp(r, start);
  return r;
}

ExperimentReport verify_decider_equivalence(const FiniteGroup& g) {
  const auto start = Clock::now();
  ExperimentReport r{"decider-equivalence", g.spec(), {}, {}};
  std::size_t total = 0, disagreements = 0, bad_certs = 0, realizable = 0;
  for_each_multiset(g.order(), g.order(), [&](const Multiset& a) {
    ++total;
    const auto m = decide_matching(g, a, search_only());
    const auto t = decide_cycle_tiling(g, a, search_only());
    disagreements += m.status != t.status;
    realizable += m.status == Status::realizable;
    for (const auto* v : {&m, &t})
      if (v->certificate && !verify_certificate(g, a, *v->certificate).ok()) ++bad_certs;
  });
  r.check("multisets checked", multiset_count(g.order(), g.order()), total);
  r.check("matching/tiling disagreements", std::size_t{0}, disagreements);
  r.check("certificate failures", std::size_t{0}, bad_certs);
  r.claims.push_back({"realizable multisets", "", std::to_string(realizable), true});
  stamp(r, start);
  return r;
}

ExperimentReport verify_subgroup_reduction(const FiniteGroup& g, const Subgroup& h) {
  const auto start = Clock::now();
  ExperimentReport r{"subgroup-reduction", g.spec() + " H=<" + format_elements(g, h.members()) + ">", {}, {}};
  std::size_t disagreements = 0, bad_certs = 0, realizable = 0;
  const auto multisets = multisets_supported_in(g.order(), h.members(), g.order());
  for (const auto& a : multisets) {
    const auto red = decide_subgroup_reduction(g, h, a, search_only());
    const auto direct = decide_matching(g, a, search_only());
    disagreements += red.status != direct.status;
    realizable += red.status == Status::realizable;
    if (red.certificate && !verify_certificate(g, a, *red.certificate).ok()) ++bad_certs;
  }
  r.check("multisets supported in H", multiset_count(h.order(), g.order()), multisets.size());
  r.check("reduction/matching disagreements", std::size_t{0}, disagreements);
  r.check("certificate failures", std::size_t{0}, bad_certs);
  r.claims.push_back({"realizable multisets", "", std::to_string(realizable), true});
  stamp(r, start);
  return r;
}

std::size_t Classification::realizable() const {
  return std::count_if(rows.begin(), rows.end(), [](const auto& x) { return x.realizable(); });
}
std::size_t Classification::obstruction_passes() const {
  return std::count_if(rows.begin(), rows.end(), [](const auto& x) { return x.obstruction.pass; });
}
std::size_t Classification::realizable_failing_obstruction() const {
  return std::count_if(rows.begin(), rows.end(), [](const auto& x) { return x.realizable() && !x.obstruction.pass; });
}
std::size_t Classification::disagreements() const {
  return std::count_if(rows.begin(), rows.end(), [](const auto& x) { return !x.agree(); });
}
std::size_t Classification::certificate_failures() const {
  return std::count_if(rows.begin(), rows.end(), [](const auto& x) { return !x.certificate_ok; });
}

Classification classify_multisets(const FiniteGroup& g, const ClassifyOptions& opts) {
  const std::size_t count = multiset_count(g.order(), g.order());
  if (count > opts.max_multisets)
    fail(ErrorCode::budget, std::to_string(count) + " multisets exceed the classification budget of " +
                                std::to_string(opts.max_multisets));
  std::vector<Multiset> inputs;
  inputs.reserve(count);
  for_each_multiset(g.order(), g.order(), [&](const Multiset& a) { inputs.push_back(a); });

  const AbelianizationMap ab = abelianization(g);
  DeciderOptions search = search_only();
  search.abelianization = &ab;

  Classification out{g.spec(), std::vector<ClassificationRow>(inputs.size())};
  auto classify_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      ClassificationRow& row = out.rows[i];
      row.multiset = inputs[i];
      row.obstruction = abelianization_obstruction(ab, inputs[i]);
      auto m = decide_matching(g, inputs[i], search);
      const auto t = decide_cycle_tiling(g, inputs[i], search);
      row.matching = m.status;
      row.tiling = t.status;
      row.matching_nodes = m.stats.nodes;
      row.tiling_nodes = t.stats.nodes;
      for (const Verdict* v : {static_cast<const Verdict*>(&m), &t})
        if (v->certificate && !verify_certificate(g, inputs[i], *v->certificate).ok()) row.certificate_ok = false;
      row.certificate = std::move(m.certificate);
    }
  };
  // Rows are written in place, so the merge order is the input order
  // regardless of how the range is split.
  const unsigned workers = std::max(1u, std::min<unsigned>(opts.workers, static_cast<unsigned>(inputs.size())));
  if (workers == 1) {
    classify_range(0, inputs.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (inputs.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t b = std::min(inputs.size(), w * chunk), e = std::min(inputs.size(), b + chunk);
      pool.emplace_back(classify_range, b, e);
    }
    for (auto& th : pool) th.join();
  }
  return out;
}

ExperimentReport verify_s3_classification() {
  const auto start = Clock::now();
  const S3 s3;
  const auto& g = s3.g;
  ExperimentReport r{"s3-classification", g.spec(), {}, {}};
  const auto table = classify_multisets(g);
  r.check("multisets", std::size_t{462}, table.rows.size());
  r.check("matching/tiling disagreements", std::size_t{0}, table.disagreements());
  r.check("certificate failures", std::size_t{0}, table.certificate_failures());
  r.check("realizable rows failing the obstruction", std::size_t{0}, table.realizable_failing_obstruction());

  std::map<Multiset, bool> realizable;
  for (const auto& row : table.rows) realizable.emplace(row.multiset, row.realizable());
  std::size_t conj = 0, inv = 0;
  for (const auto& [a, ok] : realizable) {
    for (Element c = 0; c < g.order(); ++c) conj += realizable.at(conjugate(g, a, c)) != ok;
    inv += realizable.at(inverted(g, a)) != ok;
  }
  r.check("conjugation invariance violations", std::size_t{0}, conj);
  r.check("inversion invariance violations", std::size_t{0}, inv);

  const auto again = classify_multisets(g);
  bool same = again.rows.size() == table.rows.size();
  for (std::size_t i = 0; same && i < table.rows.size(); ++i) {
    const auto &x = table.rows[i], &y = again.rows[i];
    same = x.multiset == y.multiset && x.matching == y.matching && x.tiling == y.tiling &&
           x.obstruction.image == y.obstruction.image && x.matching_nodes == y.matching_nodes &&
           x.certificate.has_value() == y.certificate.has_value() &&
           (!x.certificate || x.certificate->phi == y.certificate->phi);
  }
  r.check("second run identical", true, same);

  const Multiset counterexample = two_letter(g, s3.s, 2, s3.t, 4);
  const auto it = std::find_if(table.rows.begin(), table.rows.end(),
                               [&](const auto& row) { return row.multiset == counterexample; });
  r.check("{(12)x2,(23)x4}: obstruction pass, not realizable", true,
          it != table.rows.end() && it->obstruction.pass && !it->realizable());
  r.check("realizable multisets", kS3RealizableCount, table.realizable());
  stamp(r, start);
  return r;
}

std::vector<std::string> experiment_ids() {
  return {"s3-words",          "s3-counterexample",   "s3-counting",        "family",
          "hall",              "decider-equivalence", "subgroup-reduction", "s3-classification"};
}

std::vector<ExperimentReport> run_experiment(const std::string& id) {
  if (id == "all") {
    std::vector<ExperimentReport> all;
    for (const auto& x : experiment_ids()) {
      auto part = run_experiment(x);
      all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return all;
  }
  if (id == "s3-words") return {verify_s3_words()};
  if (id == "s3-counterexample") return {verify_s3_counterexample()};
  if (id == "s3-counting") return {verify_s3_counting()};
  if (id == "s3-classification") return {verify_s3_classification()};
  if (id == "family") {
    std::vector<ExperimentReport> out;
    for (const char* k : {"cyclic:1", "cyclic:2", "cyclic:4", "cyclic:5", "product(cyclic:2,cyclic:2)"})
      out.push_back(verify_family(parse_group_spec(k)));
    ExperimentReport pre{"family", "product(symmetric:3,cyclic:3)", {}, {}};
    std::string observed = "accepted";
    try {
      verify_family(parse_group_spec("cyclic:3"));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::precondition) observed = "rejected";
    }
    pre.check("K = C3 violates 3 not dividing |K|", "rejected", observed);
    out.push_back(std::move(pre));
    return out;
  }
  if (id == "hall") {
    std::vector<ExperimentReport> out;
    for (const char* spec : {"cyclic:2", "cyclic:3", "cyclic:4", "cyclic:5", "cyclic:6", "cyclic:7", "cyclic:8",
                             "product(cyclic:2,cyclic:2)", "product(cyclic:2,cyclic:4)",
                             "product(cyclic:2,product(cyclic:2,cyclic:2))"})
      out.push_back(verify_hall(parse_and_build_group(spec)));
    return out;
  }
  if (id == "decider-equivalence") {
    std::vector<ExperimentReport> out;
    for (const char* spec : {"cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "dihedral:2", "symmetric:3"})
      out.push_back(verify_decider_equivalence(parse_and_build_group(spec)));
    return out;
  }
  if (id == "subgroup-reduction") {
    const S3 s3;
    const Element t[] = {s3.t};
    const Element st[] = {s3.g.mul(s3.s, s3.t)};
    return {verify_subgroup_reduction(s3.g, subgroup_generated(s3.g, t)),
            verify_subgroup_reduction(s3.g, subgroup_generated(s3.g, st))};
  }
  fail(ErrorCode::parse, "unknown experiment '" + id + "'");
}

}  // namespace qrz
