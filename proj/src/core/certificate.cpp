#include "certificate.hpp"

#include <algorithm>

namespace qrz {

std::vector<Tile> permutation_to_words(const FiniteGroup& g, std::span<const Element> phi) {
  const std::size_t n = g.order();
  if (phi.size() != n) fail(ErrorCode::precondition, "permutation has wrong length");
  std::vector<char> hit(n, 0);
  for (Element y : phi) {
    if (y >= n || hit[y]) fail(ErrorCode::precondition, "map is not a permutation of the group");
    hit[y] = 1;
  }
  std::vector<Tile> tiles;
  std::vector<char> done(n, 0);
  for (Element x0 = 0; x0 < n; ++x0) {
    if (done[x0]) continue;
    Word letters;
    Element x = x0;
    do {
      done[x] = 1;
      letters.push_back(g.mul(phi[x], g.inv(x)));
      x = phi[x];
    } while (x != x0);
    tiles.push_back({require_simple(g, letters), x0});
  }
  return tiles;
}

std::vector<Element> words_to_permutation(const FiniteGroup& g, std::span<const Tile> tiles) {
  const std::size_t n = g.order();
  constexpr Element unset = static_cast<Element>(-1);
  std::vector<Element> phi(n, unset);
  for (const Tile& t : tiles) {
    if (t.translate >= n) fail(ErrorCode::precondition, "tile translate out of range");
    const auto p = t.word.partials();
    for (std::size_t k = 1; k < p.size(); ++k) {
      const Element from = g.mul(p[k - 1], t.translate);
      if (phi[from] != unset)
        fail(ErrorCode::precondition, "tiles overlap at element '" + g.name(from) + "'");
      phi[from] = g.mul(p[k], t.translate);
    }
  }
  for (Element x = 0; x < n; ++x)
    if (phi[x] == unset) fail(ErrorCode::precondition, "tiles do not cover element '" + g.name(x) + "'");
  return phi;
}

Multiset quotient_multiset(const FiniteGroup& g, std::span<const Element> phi) {
  std::vector<std::size_t> counts(g.order(), 0);
  for (Element x = 0; x < phi.size(); ++x) ++counts.at(g.mul(phi[x], g.inv(x)));
  return Multiset(std::move(counts));
}

const char* to_string(CertificateFailure f) {
  switch (f) {
    case CertificateFailure::size_mismatch: return "size mismatch";
    case CertificateFailure::not_a_permutation: return "phi is not a permutation";
    case CertificateFailure::multiset_mismatch: return "quotient multiset differs from A";
    case CertificateFailure::word_not_simple: return "word is not simple product-one";
    case CertificateFailure::tiles_overlap: return "tiles overlap";
    case CertificateFailure::tiles_do_not_cover: return "tiles do not cover the group";
    case CertificateFailure::cycle_mismatch: return "phi disagrees with a cycle word";
    case CertificateFailure::header_mismatch: return "certificate header does not match the input";
  }
  return "unknown";
}

bool CertificateCheck::has(CertificateFailure f) const {
  return std::any_of(findings.begin(), findings.end(), [f](const Finding& x) { return x.failure == f; });
}

CertificateCheck verify_certificate(const FiniteGroup& g, const Multiset& a, const Realization& cert) {
  CertificateCheck out;
  auto report = [&](CertificateFailure f, std::string detail) { out.findings.push_back({f, std::move(detail)}); };
  const std::size_t n = g.order();
  if (cert.phi.size() != n || a.universe() != n || a.total() != n) {
    report(CertificateFailure::size_mismatch, "expected a permutation and multiset of size " + std::to_string(n));
    return out;
  }

  bool bijective = true;
  {
    std::vector<char> hit(n, 0);
    for (Element y : cert.phi) {
      if (y >= n || hit[y]) {
        bijective = false;
        break;
      }
      hit[y] = 1;
    }
  }
  if (!bijective) {
    report(CertificateFailure::not_a_permutation, "phi repeats an image or leaves the group");
  } else {
    std::vector<std::size_t> quotients(n, 0);
    for (Element x = 0; x < n; ++x) ++quotients[g.mul(cert.phi[x], g.inv(x))];
    for (Element x = 0; x < n; ++x)
      if (quotients[x] != a.counts()[x]) {
        report(CertificateFailure::multiset_mismatch,
               "'" + g.name(x) + "' occurs " + std::to_string(quotients[x]) + " times among quotients, " +
                   std::to_string(a.counts()[x]) + " times in A");
        break;
      }
  }

  std::vector<std::size_t> cover(n, 0);
  std::vector<std::size_t> letters(n, 0);
  bool overlap_reported = false;
  for (std::size_t j = 0; j < cert.cycles.size(); ++j) {
    const Tile& t = cert.cycles[j];
    const auto w = t.word.letters();
    const std::string where = "cycle " + std::to_string(j + 1);
    if (t.translate >= n || w.empty() ||
        std::any_of(w.begin(), w.end(), [n](Element x) { return x >= n; })) {
      report(CertificateFailure::word_not_simple, where + " has an empty word or an out-of-range element");
      continue;
    }
    std::vector<Element> p{kIdentity};
    for (Element x : w) p.push_back(g.mul(x, p.back()));
    std::vector<char> seen(n, 0);
    bool simple = p.back() == kIdentity;
    for (std::size_t k = 0; k + 1 < p.size() && simple; ++k) {
      simple = !seen[p[k]];
      seen[p[k]] = 1;
    }
    if (!simple) {
      report(CertificateFailure::word_not_simple, where);
      continue;
    }
    for (Element x : w) ++letters[x];
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
      const Element v = g.mul(p[k], t.translate);
      if (++cover[v] > 1 && !overlap_reported) {
        report(CertificateFailure::tiles_overlap, where + " revisits '" + g.name(v) + "'");
        overlap_reported = true;
      }
      if (bijective && cert.phi[v] != g.mul(p[k + 1], t.translate))
        report(CertificateFailure::cycle_mismatch, where + " at '" + g.name(v) + "'");
    }
  }
  for (Element x = 0; x < n; ++x)
    if (cover[x] == 0) {
      report(CertificateFailure::tiles_do_not_cover, "'" + g.name(x) + "' lies in no tile");
      break;
    }
  if (!out.has(CertificateFailure::word_not_simple) &&
      !std::equal(letters.begin(), letters.end(), a.counts().begin()))
    report(CertificateFailure::multiset_mismatch, "cycle words do not use the letters of A");
  return out;
}

}  // namespace qrz
