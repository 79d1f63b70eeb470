#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "oracles.hpp"
#include "parse.hpp"

using namespace qrz;

namespace {

Element el(const FiniteGroup& g, const char* name) {
  auto x = g.find(name);
  REQUIRE_MESSAGE(x.has_value(), name);
  return *x;
}

void check_group_axioms(const FiniteGroup& g) {
  const auto n = g.order();
  for (Element a = 0; a < n; ++a) {
    CHECK(g.mul(kIdentity, a) == a);
    CHECK(g.mul(a, kIdentity) == a);
    CHECK(g.mul(a, g.inv(a)) == kIdentity);
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
  }
}

std::string error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("symmetric groups multiply like permutations composed right to left") {
  for (int n = 2; n <= 4; ++n) {
    const auto g = symmetric_group(n);
    std::size_t fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    REQUIRE(g.order() == fact);
    CHECK(g.name(kIdentity) == "e");
    std::vector<std::vector<int>> perm;
    for (const auto& nm : g.names()) perm.push_back(oracle::parse_cycles(nm, n));
    for (Element a = 0; a < g.order(); ++a)
      for (Element b = 0; b < g.order(); ++b) REQUIRE(perm[g.mul(a, b)] == oracle::compose(perm[a], perm[b]));
  }
  const auto s3 = symmetric_group(3);
  CHECK(s3.mul(el(s3, "(12)"), el(s3, "(23)")) == el(s3, "(123)"));
  CHECK(s3.mul(el(s3, "(23)"), el(s3, "(12)")) == el(s3, "(132)"));
}

TEST_CASE("S3 element set") {
  const auto g = symmetric_group(3);
  std::set<std::string> names(g.names().begin(), g.names().end());
  CHECK(names == std::set<std::string>{"e", "(12)", "(23)", "(13)", "(123)", "(132)"});
}

TEST_CASE("constructed groups satisfy the axioms") {
  check_group_axioms(cyclic_group(1));
  check_group_axioms(cyclic_group(7));
  check_group_axioms(dihedral_group(4));
  check_group_axioms(quaternion_group());
  check_group_axioms(direct_product(symmetric_group(3), cyclic_group(2)));
  CHECK(cyclic_group(1).order() == 1);
  CHECK(dihedral_group(5).order() == 10);
  CHECK(quaternion_group().order() == 8);
  CHECK(direct_product(symmetric_group(3), cyclic_group(2)).order() == 12);
}

TEST_CASE("canonical names") {
  const auto c4 = cyclic_group(4);
  CHECK(c4.name(1) == "g");
  CHECK(c4.name(3) == "g^3");
  CHECK(c4.find("1") == kIdentity);
  const auto p = direct_product(cyclic_group(2), cyclic_group(3));
  CHECK(p.name(kIdentity) == "(e,e)");
  CHECK(p.find("(g,g^2)").has_value());
  CHECK(quaternion_group().find("-k").has_value());
  CHECK(dihedral_group(3).find("rs").has_value());
}

TEST_CASE("element orders in D4 and Q8") {
  const auto d4 = dihedral_group(4);
  const auto q8 = quaternion_group();
  std::map<std::size_t, int> d, q;
  for (Element a = 0; a < 8; ++a) {
    ++d[d4.element_order(a)];
    ++q[q8.element_order(a)];
  }
  CHECK(d == std::map<std::size_t, int>{{1, 1}, {2, 5}, {4, 2}});
  CHECK(q == std::map<std::size_t, int>{{1, 1}, {2, 1}, {4, 6}});
  CHECK_FALSE(d4.is_abelian());
  CHECK_FALSE(q8.is_abelian());
}

TEST_CASE("from_table names the first violated axiom") {
  const std::vector<std::string> two{"a", "b"};
  CHECK(error_of([&] { FiniteGroup::from_table({1, 0, 0, 1}, two); }).find("identity") != std::string::npos);
  CHECK(error_of([&] { FiniteGroup::from_table({0, 1, 1, 1}, two); }).find("Latin") != std::string::npos);
  CHECK(error_of([&] { FiniteGroup::from_table({0, 1, 1}, two); }).find("table has") != std::string::npos);
  CHECK(error_of([&] { FiniteGroup::from_table({0, 1, 1, 0}, {"a", "a"}); }).find("duplicate") != std::string::npos);
  // Smallest loop that is not a group.
  const std::vector<Element> loop{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK(error_of([&] { FiniteGroup::from_table(loop, {"e", "a", "b", "c", "d"}); }).find("associativity") !=
        std::string::npos);
  try {
    FiniteGroup::from_table(loop, {"e", "a", "b", "c", "d"});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_group);
  }
}

TEST_CASE("table files") {
  const std::string path = "qrz_test_c3_table.txt";
  {
    std::ofstream out(path);
    out << "3\n0 1 2\n1 2 0\n2 0 1\n1 x y\n";
  }
  const auto g = parse_and_build_group("table:" + path);
  CHECK(g.order() == 3);
  CHECK(g.mul(1, 1) == 2);
  CHECK(g.spec() == "table:" + path);
  {
    std::ofstream out(path);
    out << "2\n0 1\n1 1\ne a\n";
  }
  CHECK_THROWS_AS(parse_and_build_group("table:" + path), Error);
  std::remove(path.c_str());
  try {
    parse_and_build_group("table:/nonexistent/qrz.txt");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::io);
  }
}

TEST_CASE("subgroup generation") {
  const auto g = symmetric_group(3);
  const Element s = el(g, "(12)"), st = el(g, "(123)");
  const std::vector<Element> gs{s};
  const auto h = subgroup_generated(g, gs);
  CHECK(h.order() == 2);
  CHECK(std::vector<Element>(h.members().begin(), h.members().end()) == std::vector<Element>{kIdentity, s});
  const std::vector<Element> gst{st};
  CHECK(subgroup_generated(g, gst).order() == 3);
  CHECK(subgroup_generated(g, std::span<const Element>{}).order() == 1);
  const std::vector<Element> both{s, st};
  CHECK(subgroup_generated(g, both) == whole_group(g));
  CHECK_THROWS_AS(Subgroup::from_members(g, {kIdentity, s, st}), Error);
}

TEST_CASE("subgroup counts") {
  CHECK(all_subgroups(symmetric_group(3)).size() == 6);
  CHECK(all_subgroups(symmetric_group(4)).size() == 30);
  CHECK(all_subgroups(quaternion_group()).size() == 6);
  CHECK(all_subgroups(dihedral_group(4)).size() == 10);
  CHECK(all_subgroups(direct_product(cyclic_group(2), cyclic_group(2))).size() == 5);
  CHECK(all_subgroups(cyclic_group(12)).size() == 6);
  CHECK(all_subgroups(cyclic_group(1)).size() == 1);
}

TEST_CASE("right cosets") {
  const auto g = symmetric_group(3);
  const Element s = el(g, "(12)"), t = el(g, "(23)");
  const std::vector<Element> gt{t};
  const auto h = subgroup_generated(g, gt);
  const auto cp = right_cosets(g, h);
  REQUIRE(cp.cosets.size() == 3);
  for (const auto& c : cp.cosets) CHECK(c.size() == 2);
  // Hs = {s, ts}
  const auto& hs = cp.cosets[cp.coset_of[s]];
  CHECK(std::find(hs.begin(), hs.end(), g.mul(t, s)) != hs.end());
  for (std::size_t i = 0; i < cp.cosets.size(); ++i) {
    const Element rep = cp.representatives[i];
    for (Element y : cp.cosets[i]) CHECK(h.contains(g.mul(y, g.inv(rep))));
  }
  CHECK(right_cosets(g, whole_group(g)).cosets.size() == 1);
}

TEST_CASE("abelianization orders") {
  CHECK(abelianization(symmetric_group(3)).quotient.order() == 2);
  CHECK(abelianization(symmetric_group(4)).quotient.order() == 2);
  CHECK(abelianization(quaternion_group()).quotient.order() == 4);
  CHECK(abelianization(dihedral_group(4)).quotient.order() == 4);
  CHECK(abelianization(direct_product(symmetric_group(3), cyclic_group(2))).quotient.order() == 4);
  const auto c6 = cyclic_group(6);
  const auto ab = abelianization(c6);
  CHECK(ab.quotient.order() == 6);
  CHECK(ab.commutator.order() == 1);
}

TEST_CASE("abelianization projection is a homomorphism") {
  for (const auto& g : {symmetric_group(4), dihedral_group(5), quaternion_group(),
                        direct_product(symmetric_group(3), cyclic_group(4))}) {
    const auto ab = abelianization(g);
    REQUIRE(ab.quotient.is_abelian());
    for (Element a = 0; a < g.order(); ++a)
      for (Element b = 0; b < g.order(); ++b)
        REQUIRE(ab.projection[g.mul(a, b)] == ab.quotient.mul(ab.projection[a], ab.projection[b]));
    // Kernel is exactly the commutator subgroup.
    for (Element a = 0; a < g.order(); ++a) CHECK((ab.projection[a] == kIdentity) == ab.commutator.contains(a));
  }
}

TEST_CASE("subgroup_as_group embeds") {
  const auto g = symmetric_group(4);
  const auto v4 = Subgroup::from_members(
      g, {kIdentity, el(g, "(12)(34)"), el(g, "(13)(24)"), el(g, "(14)(23)")});
  const auto emb = subgroup_as_group(g, v4);
  CHECK(emb.group.order() == 4);
  CHECK(emb.group.is_abelian());
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b)
      CHECK(emb.embedding[emb.group.mul(a, b)] == g.mul(emb.embedding[a], emb.embedding[b]));
}
