#include "parse.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace qrz {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on `sep` at parenthesis depth zero.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t begin = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (s[i] == sep && depth == 0) {
      parts.push_back(trim(s.substr(begin, i - begin)));
      begin = i + 1;
    }
    if (depth < 0) fail(ErrorCode::parse, "unbalanced ')' in '" + std::string(s) + "'");
  }
  if (depth != 0) fail(ErrorCode::parse, "unbalanced '(' in '" + std::string(s) + "'");
  parts.push_back(trim(s.substr(begin)));
  return parts;
}

std::size_t parse_count(std::string_view token, std::string_view context) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end)
    fail(ErrorCode::parse, "expected a non-negative integer, got '" + std::string(token) + "' in '" +
                               std::string(context) + "'");
  return value;
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec spec = parse_spec();
    skip_space();
    if (pos_ != text_.size()) error("unexpected trailing text");
    return spec;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::parse, "group spec: " + what + " at '" + std::string(text_.substr(pos_)) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(std::string_view lit) {
    skip_space();
    if (text_.substr(pos_, lit.size()) != lit) return false;
    pos_ += lit.size();
    return true;
  }

  std::size_t number() {
    skip_space();
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (begin == pos_) error("expected a number");
    return parse_count(text_.substr(begin, pos_ - begin), text_);
  }

  GroupSpec parse_spec() {
    GroupSpec spec;
    if (consume("cyclic:")) {
      spec.kind = GroupSpec::Kind::cyclic;
      spec.n = number();
    } else if (consume("symmetric:")) {
      spec.kind = GroupSpec::Kind::symmetric;
      spec.n = number();
    } else if (consume("dihedral:")) {
      spec.kind = GroupSpec::Kind::dihedral;
      spec.n = number();
    } else if (consume("quaternion")) {
      spec.kind = GroupSpec::Kind::quaternion;
    } else if (consume("product(")) {
      spec.kind = GroupSpec::Kind::product;
      spec.left = std::make_shared<GroupSpec>(parse_spec());
      if (!consume(",")) error("expected ','");
      spec.right = std::make_shared<GroupSpec>(parse_spec());
      if (!consume(")")) error("expected ')'");
    } else if (consume("table:")) {
      spec.kind = GroupSpec::Kind::table;
      const std::size_t begin = pos_;
      while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')') ++pos_;
      spec.path = std::string(trim(text_.substr(begin, pos_ - begin)));
      if (spec.path.empty()) error("expected a table path");
    } else {
      error("unknown group kind");
    }
    return spec;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpec parse_group_spec(std::string_view text) { return SpecParser(text).parse(); }

FiniteGroup parse_and_build_group(std::string_view text) { return build_group(parse_group_spec(text)); }

Element parse_element(const FiniteGroup& g, std::string_view name) {
  name = trim(name);
  if (auto e = g.find(name)) return *e;
  fail(ErrorCode::parse, "unknown element '" + std::string(name) + "'");
}

std::vector<Element> parse_element_list(const FiniteGroup& g, std::string_view text) {
  std::vector<Element> out;
  if (trim(text).empty()) return out;
  for (auto token : split_top(text, ',')) out.push_back(parse_element(g, token));
  return out;
}

Multiset parse_multiset(const FiniteGroup& g, std::string_view text) {
  std::vector<std::size_t> counts(g.order(), 0);
  if (trim(text).empty()) fail(ErrorCode::parse, "empty multiset literal");
  for (auto term : split_top(text, ',')) {
    if (term.empty()) fail(ErrorCode::parse, "empty term in multiset '" + std::string(text) + "'");
    auto pieces = split_top(term, '*');
    if (pieces.size() > 2) fail(ErrorCode::parse, "too many '*' in term '" + std::string(term) + "'");
    const Element a = parse_element(g, pieces[0]);
    counts[a] += pieces.size() == 2 ? parse_count(pieces[1], term) : 1;
  }
  return Multiset(std::move(counts));
}

Word parse_word(const FiniteGroup& g, std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    fail(ErrorCode::parse, "word literal must be parenthesised: '" + std::string(text) + "'");
  const auto inner = text.substr(1, text.size() - 2);
  Word w = parse_element_list(g, inner);
  if (w.empty()) fail(ErrorCode::parse, "empty word literal");
  return w;
}

std::string format_multiset(const FiniteGroup& g, const Multiset& a) {
  std::string out;
  for (std::size_t x = 0; x < a.universe(); ++x) {
    if (a.counts()[x] == 0) continue;
    if (!out.empty()) out += ',';
    out += g.name(static_cast<Element>(x)) + "*" + std::to_string(a.counts()[x]);
  }
  return out;
}

std::string format_elements(const FiniteGroup& g, std::span<const Element> elements) {
  std::string out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) out += ',';
    out += g.name(elements[i]);
  }
  return out;
}

std::string format_word(const FiniteGroup& g, std::span<const Element> letters) {
  return "(" + format_elements(g, letters) + ")";
}

std::string write_certificate(const FiniteGroup& g, const Multiset& a, const Realization& cert) {
  if (g.spec().empty()) fail(ErrorCode::precondition, "group has no spec string to record in a certificate");
  std::string out = g.spec() + "\n" + format_multiset(g, a) + "\n";
  for (const auto& t : cert.cycles) out += g.name(t.translate) + ": " + format_word(g, t.word.letters()) + "\n";
  return out;
}

CertificateText read_certificate(std::string_view text) {
  CertificateText cert;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = trim(line);
    if (lineno == 1) {
      cert.group_spec = std::string(body);
    } else if (lineno == 2) {
      cert.multiset = std::string(body);
    } else if (!body.empty()) {
      // Translate names can contain ':' only inside parentheses.
      auto parts = split_top(body, ':');
      if (parts.size() != 2)
        fail(ErrorCode::parse, "certificate line " + std::to_string(lineno) + ": expected 'TRANSLATE: WORD'");
      cert.cycles.emplace_back(std::string(parts[0]), std::string(parts[1]));
    }
  }
  if (lineno < 2) fail(ErrorCode::parse, "certificate needs a group spec line and a multiset line");
  return cert;
}

Realization resolve_certificate(const FiniteGroup& g, const CertificateText& text) {
  Realization cert;
  const auto n = static_cast<Element>(g.order());
  cert.phi.assign(n, n);
  for (std::size_t j = 0; j < text.cycles.size(); ++j) {
    const Element translate = parse_element(g, text.cycles[j].first);
    const Word letters = parse_word(g, text.cycles[j].second);
    auto checked = check_simple(g, letters);
    if (auto* r = std::get_if<WordRejection>(&checked))
      fail(ErrorCode::precondition, "certificate cycle " + std::to_string(j + 1) +
                                        ": word is not simple product-one (" + to_string(r->reason) + ")");
    auto word = std::get<SimpleWord>(std::move(checked));
    const auto p = word.partials();
    for (std::size_t k = 1; k < p.size(); ++k) cert.phi[g.mul(p[k - 1], translate)] = g.mul(p[k], translate);
    cert.cycles.push_back({std::move(word), translate});
  }
  return cert;
}

}  // namespace qrz
