#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "parse.hpp"
#include "realize.hpp"

using namespace qrz;

namespace {

Tile tile(const FiniteGroup& g, Word w, Element x) { return {require_simple(g, w), x}; }

Realization realization(const FiniteGroup& g, std::vector<Element> phi) {
  auto cycles = permutation_to_words(g, phi);
  return {std::move(phi), std::move(cycles)};
}

}  // namespace

TEST_CASE("identity permutation gives loop words") {
  const auto g = symmetric_group(3);
  std::vector<Element> id{0, 1, 2, 3, 4, 5};
  const auto tiles = permutation_to_words(g, id);
  REQUIRE(tiles.size() == 6);
  for (Element x = 0; x < 6; ++x) {
    CHECK(tiles[x].translate == x);
    CHECK(tiles[x].word.letters().size() == 1);
    CHECK(tiles[x].word.letters()[0] == kIdentity);
  }
  const auto one = cyclic_group(1);
  const std::vector<Tile> loop{tile(one, {kIdentity}, kIdentity)};
  CHECK(words_to_permutation(one, loop) == std::vector<Element>{0});
}

TEST_CASE("three 2-cycles on the right cosets of <t>") {
  const auto g = symmetric_group(3);
  const Element s = *g.find("(12)"), t = *g.find("(23)");
  const Element st = g.mul(s, t);
  const std::vector<Tile> tiles{tile(g, {t, t}, kIdentity), tile(g, {t, t}, s), tile(g, {t, t}, st)};
  const auto phi = words_to_permutation(g, tiles);
  CHECK(quotient_multiset(g, phi) == Multiset::constant(g, t, 6));
  CHECK(verify_certificate(g, Multiset::constant(g, t, 6), {phi, tiles}).ok());

  // ts lies in the coset of s, so these translates overlap.
  const std::vector<Tile> clash{tile(g, {t, t}, kIdentity), tile(g, {t, t}, s), tile(g, {t, t}, g.mul(t, s))};
  CHECK_THROWS_AS(words_to_permutation(g, clash), Error);
  const std::vector<Tile> overlap{tile(g, {s, s}, kIdentity), tile(g, {t, t}, kIdentity)};
  CHECK_THROWS_AS(words_to_permutation(g, overlap), Error);
  const std::vector<Tile> partial{tile(g, {t, t}, kIdentity)};
  CHECK_THROWS_AS(words_to_permutation(g, partial), Error);
}

TEST_CASE("the 6-cycle reads as the alternating word") {
  const auto g = symmetric_group(3);
  const Element s = *g.find("(12)"), t = *g.find("(23)");
  const std::vector<Tile> tiles{tile(g, {s, t, s, t, s, t}, kIdentity)};
  const auto phi = words_to_permutation(g, tiles);
  const auto back = permutation_to_words(g, phi);
  REQUIRE(back.size() == 1);
  CHECK(back[0].translate == kIdentity);
  CHECK(canonical_rotation(g, back[0].word) == canonical_rotation(g, tiles[0].word));
}

TEST_CASE("random permutations round-trip through words") {
  std::mt19937 rng(20240611);
  for (const auto& g : {symmetric_group(3), dihedral_group(4), quaternion_group(), cyclic_group(9),
                        direct_product(symmetric_group(3), cyclic_group(2)), dihedral_group(6)}) {
    std::vector<Element> phi(g.order());
    std::iota(phi.begin(), phi.end(), 0);
    for (int trial = 0; trial < 50; ++trial) {
      std::shuffle(phi.begin(), phi.end(), rng);
      const auto tiles = permutation_to_words(g, phi);
      REQUIRE(words_to_permutation(g, tiles) == phi);
      const auto a = quotient_multiset(g, phi);
      REQUIRE(verify_certificate(g, a, {phi, tiles}).ok());
      std::size_t covered = 0;
      for (const auto& t : tiles) covered += t.word.length();
      CHECK(covered == g.order());
    }
  }
}

TEST_CASE("verify_certificate reports each kind of defect") {
  const auto g = symmetric_group(3);
  const Element s = *g.find("(12)"), t = *g.find("(23)");
  const std::vector<Element> id{0, 1, 2, 3, 4, 5};
  CHECK(verify_certificate(g, Multiset::constant(g, kIdentity, 6), realization(g, id)).ok());
  CHECK(verify_certificate(g, Multiset::constant(g, t, 6), realization(g, id)).has(CertificateFailure::multiset_mismatch));

  auto good = decide_matching(g, Multiset::constant(g, t, 6)).certificate.value();
  const auto a = Multiset::constant(g, t, 6);
  REQUIRE(verify_certificate(g, a, good).ok());

  auto bad = good;
  bad.phi[0] = bad.phi[1];
  CHECK(verify_certificate(g, a, bad).has(CertificateFailure::not_a_permutation));

  bad = good;
  bad.phi.pop_back();
  CHECK(verify_certificate(g, a, bad).has(CertificateFailure::size_mismatch));

  bad = good;
  bad.cycles.pop_back();
  CHECK(verify_certificate(g, a, bad).has(CertificateFailure::tiles_do_not_cover));

  bad = good;
  bad.cycles.push_back(bad.cycles.front());
  CHECK(verify_certificate(g, a, bad).has(CertificateFailure::tiles_overlap));

  bad = good;
  bad.cycles[0] = tile(g, {s, s}, bad.cycles[0].translate);
  const auto c = verify_certificate(g, a, bad);
  CHECK(c.has(CertificateFailure::cycle_mismatch));
  CHECK(c.has(CertificateFailure::multiset_mismatch));
}

TEST_CASE("certificate files round-trip") {
  const auto g = parse_and_build_group("product(symmetric:3,cyclic:2)");
  const auto s = *g.find("((12),e)"), t = *g.find("((23),e)");
  std::vector<std::size_t> counts(12, 0);
  counts[s] = 6;
  counts[t] = 6;
  const Multiset a(counts);
  const auto v = decide_matching(g, a);
  REQUIRE(v.status == Status::realizable);
  const auto text = write_certificate(g, a, *v.certificate);
  const auto parsed = read_certificate(text);
  CHECK(parsed.group_spec == "product(symmetric:3,cyclic:2)");
  CHECK(parse_multiset(g, parsed.multiset) == a);
  const auto back = resolve_certificate(g, parsed);
  CHECK(back.phi == v.certificate->phi);
  CHECK(verify_certificate(g, a, back).ok());
}

TEST_CASE("tampered certificate files are caught") {
  const auto g = parse_and_build_group("symmetric:3");
  const auto a = parse_multiset(g, "(23)*6");
  const std::string overlapping = "symmetric:3\n(23)*6\ne: ((23),(23))\n(12): ((23),(23))\n(132): ((23),(23))\n";
  const auto r = resolve_certificate(g, read_certificate(overlapping));
  const auto c = verify_certificate(g, a, r);
  CHECK_FALSE(c.ok());
  CHECK(c.has(CertificateFailure::tiles_overlap));

  const std::string not_simple = "symmetric:3\n(23)*6\ne: ((23),(12))\n";
  CHECK_THROWS_AS(resolve_certificate(g, read_certificate(not_simple)), Error);
  CHECK_THROWS_AS(read_certificate("symmetric:3\n"), Error);
  CHECK_THROWS_AS(read_certificate("symmetric:3\n(23)*6\nno colon here\n"), Error);
}
