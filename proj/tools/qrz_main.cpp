// qrz command-line frontend. Talks to the library only through qrz/qrz.h.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "qrz/qrz.h"

namespace {

enum Exit : int {
  kRealizable = 0,
  kUsage = 1,
  kNotRealizable = 2,
  kObstructionFailed = 3,
  kDisagreement = 4,
};

struct Failure {
  std::string message;
};

struct GroupDeleter {
  void operator()(qrz_group* g) const { qrz_group_destroy(g); }
};
struct MultisetDeleter {
  void operator()(qrz_multiset* a) const { qrz_multiset_destroy(a); }
};
struct VerdictDeleter {
  void operator()(qrz_verdict* v) const { qrz_verdict_destroy(v); }
};
using GroupPtr = std::unique_ptr<qrz_group, GroupDeleter>;
using MultisetPtr = std::unique_ptr<qrz_multiset, MultisetDeleter>;
using VerdictPtr = std::unique_ptr<qrz_verdict, VerdictDeleter>;

void ok(qrz_status s) {
  if (s != QRZ_OK) throw Failure{qrz_last_error()};
}

// Takes ownership of a library string.
std::string take(char* s) {
  if (!s) return {};
  std::string out(s);
  qrz_string_free(s);
  return out;
}

GroupPtr make_group(const std::string& spec) {
  qrz_group* g = nullptr;
  ok(qrz_group_create(spec.c_str(), &g));
  return GroupPtr(g);
}

MultisetPtr make_multiset(const qrz_group* g, const std::string& literal) {
  qrz_multiset* a = nullptr;
  ok(qrz_multiset_parse(g, literal.c_str(), &a));
  return MultisetPtr(a);
}

void print(const std::string& s) {
  std::cout << s;
  if (!s.empty() && s.back() != '\n') std::cout << '\n';
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{"cannot open '" + path + "' for writing"};
  out << content;
  if (!out) throw Failure{"failed writing '" + path + "'"};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int exit_for(qrz_realizability r) {
  switch (r) {
    case QRZ_REALIZABLE: return kRealizable;
    case QRZ_NOT_REALIZABLE: return kNotRealizable;
    case QRZ_OBSTRUCTION_FAILED: return kObstructionFailed;
  }
  return kUsage;
}

struct CheckArgs {
  std::string spec, multiset, decider = "matching", subgroup, cert_out;
  bool cross_check = false;
  bool skip_obstruction = false;
  std::uint64_t node_limit = 0;
  std::uint64_t ordering_states = 1'000'000;
};

int run_check(const CheckArgs& args, qrz_format fmt, bool verbose) {
  auto g = make_group(args.spec);
  auto a = make_multiset(g.get(), args.multiset);

  qrz_decide_options opts{QRZ_DECIDER_MATCHING, nullptr, args.skip_obstruction ? 1 : 0, args.node_limit};
  if (args.decider == "tiling") opts.decider = QRZ_DECIDER_TILING;
  else if (args.decider == "reduction") opts.decider = QRZ_DECIDER_REDUCTION;
  if (!args.subgroup.empty()) opts.subgroup_generators = args.subgroup.c_str();

  qrz_verdict* raw = nullptr;
  ok(qrz_decide(g.get(), a.get(), &opts, &raw));
  VerdictPtr v(raw);

  char* text = nullptr;
  ok(qrz_verdict_render(v.get(), fmt, args.ordering_states, &text));
  print(take(text));
  if (verbose)
    std::cerr << "search nodes: " << qrz_verdict_nodes(v.get())
              << (qrz_verdict_exhausted(v.get()) ? " (exhausted)" : "") << '\n';

  const qrz_realizability status = qrz_verdict_status(v.get());
  if (!args.cert_out.empty()) {
    if (status != QRZ_REALIZABLE) throw Failure{"no certificate to write: input is not realizable"};
    char* cert = nullptr;
    ok(qrz_verdict_certificate(v.get(), &cert));
    write_file(args.cert_out, take(cert));
  }

  if (args.cross_check) {
    qrz_decide_options other = opts;
    other.decider = opts.decider == QRZ_DECIDER_TILING ? QRZ_DECIDER_MATCHING : QRZ_DECIDER_TILING;
    other.subgroup_generators = nullptr;
    qrz_verdict* raw2 = nullptr;
    ok(qrz_decide(g.get(), a.get(), &other, &raw2));
    VerdictPtr v2(raw2);
    const char* other_name = other.decider == QRZ_DECIDER_TILING ? "tiling" : "matching";
    if (qrz_verdict_status(v2.get()) != status) {
      std::cerr << "cross-check failed: " << other_name << " decider disagrees\n";
      return kDisagreement;
    }
    if (verbose) std::cerr << "cross-check: " << other_name << " decider agrees\n";
  }
  return exit_for(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quotient-realizability of multisets in finite groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qrz_version()));

  std::string format = "text";
  bool verbose = false;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("-v,--verbose", verbose, "Report search statistics on stderr");

  std::string spec;
  auto* group_cmd = app.add_subcommand("group", "Describe a group");
  group_cmd->add_option("SPEC", spec, "Group spec")->required();

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Decide quotient-realizability of a multiset");
  check_cmd->add_option("SPEC", check.spec, "Group spec")->required();
  check_cmd->add_option("-A,--multiset", check.multiset, "Multiset literal, e.g. \"(12)*2,(23)*4\"")->required();
  check_cmd->add_option("--decider", check.decider, "Decision procedure")
      ->check(CLI::IsMember({"matching", "tiling", "reduction"}))
      ->capture_default_str();
  check_cmd->add_option("--subgroup", check.subgroup, "Generators of H for the reduction decider");
  check_cmd->add_flag("--cross-check", check.cross_check, "Also run the other search decider; exit 4 on disagreement");
  check_cmd->add_flag("--no-obstruction", check.skip_obstruction, "Search even if the obstruction fails");
  check_cmd->add_option("--node-limit", check.node_limit, "Abort the search after this many nodes (0 = none)");
  check_cmd->add_option("--ordering-states", check.ordering_states,
                        "State budget for the product-one ordering search (0 = skip)")
      ->capture_default_str();
  check_cmd->add_option("--cert-out", check.cert_out, "Write the certificate to FILE");

  std::string budget;
  std::size_t max_len = 0;
  auto* words_cmd = app.add_subcommand("words", "List simple product-one words within a budget");
  words_cmd->add_option("SPEC", spec, "Group spec")->required();
  words_cmd->add_option("--budget", budget, "Multiset of available letters")->required();
  words_cmd->add_option("--max-len", max_len, "Longest word length (default min(|G|, budget size))");

  std::string table_path;
  std::size_t max_multisets = 0;
  unsigned workers = 1;
  auto* classify_cmd = app.add_subcommand("classify", "Classify every multiset of size |G|");
  classify_cmd->add_option("SPEC", spec, "Group spec")->required();
  classify_cmd->add_option("-o,--output", table_path, "Table file (default classification.tsv or .json)");
  classify_cmd->add_option("--max-multisets", max_multisets,
                           "Refuse groups with more multisets (default QRZ_CLASSIFY_BUDGET or 1000000)");
  classify_cmd->add_option("-j,--workers", workers, "Worker threads")->capture_default_str();

  std::string experiment = "all";
  bool list = false;
  auto* paper_cmd = app.add_subcommand("verify-paper", "Run the reproduction experiments");
  paper_cmd->add_option("--experiment", experiment, "Experiment id or 'all'")->capture_default_str();
  paper_cmd->add_flag("--list", list, "List experiment ids");

  std::string multiset, cert_path;
  auto* cert_cmd = app.add_subcommand("verify-cert", "Check a certificate file independently");
  cert_cmd->add_option("SPEC", spec, "Group spec")->required();
  cert_cmd->add_option("-A,--multiset", multiset, "Multiset literal")->required();
  cert_cmd->add_option("--cert", cert_path, "Certificate file")->required();

  // Format may be given before or after the subcommand.
  for (auto* sub : {group_cmd, check_cmd, words_cmd, classify_cmd, paper_cmd, cert_cmd})
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }
  const qrz_format fmt = format == "json" ? QRZ_FORMAT_JSON : QRZ_FORMAT_TEXT;

  try {
    if (*group_cmd) {
      auto g = make_group(spec);
      char* out = nullptr;
      ok(qrz_group_describe(g.get(), fmt, &out));
      print(take(out));
      return 0;
    }
    if (*check_cmd) return run_check(check, fmt, verbose);
    if (*words_cmd) {
      auto g = make_group(spec);
      char* out = nullptr;
      ok(qrz_words(g.get(), budget.c_str(), max_len, fmt, &out));
      print(take(out));
      return 0;
    }
    if (*classify_cmd) {
      auto g = make_group(spec);
      char *table = nullptr, *summary = nullptr;
      ok(qrz_classify(g.get(), max_multisets, workers, fmt, &table, &summary, nullptr));
      const std::string summary_text = take(summary);
      if (table_path.empty()) table_path = fmt == QRZ_FORMAT_JSON ? "classification.json" : "classification.tsv";
      write_file(table_path, take(table));
      print(summary_text);
      if (fmt == QRZ_FORMAT_TEXT) std::cout << "table written to " << table_path << '\n';
      return 0;
    }
    if (*paper_cmd) {
      if (list) {
        char* ids = nullptr;
        ok(qrz_experiment_ids(&ids));
        print(take(ids));
        return 0;
      }
      int all_pass = 0;
      char* out = nullptr;
      ok(qrz_run_experiments(experiment.c_str(), fmt, &all_pass, &out));
      print(take(out));
      return all_pass ? 0 : kNotRealizable;
    }
    if (*cert_cmd) {
      auto g = make_group(spec);
      auto a = make_multiset(g.get(), multiset);
      const std::string text = read_file(cert_path);
      int pass = 0;
      char* report = nullptr;
      ok(qrz_verify_certificate(g.get(), a.get(), text.c_str(), fmt, &pass, &report));
      print(take(report));
      return pass ? 0 : kNotRealizable;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return kUsage;
  }
  return kUsage;
}
