#include <doctest.h>

#include "parse.hpp"
#include "render.hpp"

#include <json.hpp>

using namespace qrz;

namespace {

std::string parse_error(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse);
    return e.what();
  }
  FAIL("expected a parse error");
  return "";
}

}  // namespace

TEST_CASE("group specs") {
  CHECK(parse_and_build_group("cyclic:5").order() == 5);
  CHECK(parse_and_build_group("symmetric:4").order() == 24);
  CHECK(parse_and_build_group("dihedral:4").order() == 8);
  CHECK(parse_and_build_group("quaternion").order() == 8);
  CHECK(parse_and_build_group(" product( cyclic:2 , product(cyclic:2,cyclic:2) ) ").order() == 8);
  CHECK(parse_group_spec("product(symmetric:3,cyclic:2)").to_string() == "product(symmetric:3,cyclic:2)");
  CHECK(parse_and_build_group("product(symmetric:3,cyclic:2)").spec() == "product(symmetric:3,cyclic:2)");

  CHECK(parse_error([] { parse_group_spec("cylic:3"); }).find("cylic") != std::string::npos);
  CHECK(parse_error([] { parse_group_spec("cyclic:x"); }).find("x") != std::string::npos);
  parse_error([] { parse_group_spec("product(cyclic:2)"); });
  parse_error([] { parse_group_spec("cyclic:2 junk"); });
  try {
    parse_and_build_group("symmetric:6");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::precondition);
  }
}

TEST_CASE("multiset literals") {
  const auto g = symmetric_group(3);
  const auto a = parse_multiset(g, "(12)*2,(23)*4");
  CHECK(a.count(*g.find("(12)")) == 2);
  CHECK(a.count(*g.find("(23)")) == 4);
  CHECK(a.total() == 6);
  CHECK(parse_multiset(g, "(12), (12) ,(23)*4") == a);
  CHECK(format_multiset(g, a) == "(12)*2,(23)*4");
  CHECK(parse_multiset(g, format_multiset(g, a)) == a);
  CHECK(parse_error([&] { parse_multiset(g, "(12)*2,(45)*4"); }).find("(45)") != std::string::npos);
  CHECK(parse_error([&] { parse_multiset(g, "(12)*two"); }).find("two") != std::string::npos);
  parse_error([&] { parse_multiset(g, ""); });
  parse_error([&] { parse_multiset(g, "(12)*2,,(23)"); });
  parse_error([&] { parse_multiset(g, "(12*2"); });

  const auto p = direct_product(symmetric_group(3), cyclic_group(2));
  const auto b = parse_multiset(p, "((12),g)*3,((23),e)*9");
  CHECK(b.total() == 12);
}

TEST_CASE("word literals") {
  const auto g = symmetric_group(3);
  const auto w = parse_word(g, "((12),(23),(12),(23),(12),(23))");
  CHECK(w.size() == 6);
  CHECK(format_word(g, w) == "((12),(23),(12),(23),(12),(23))");
  parse_error([&] { parse_word(g, "(12),(23)"); });
  parse_error([&] { parse_word(g, "()"); });
}

TEST_CASE("JSON verdicts carry documented fields") {
  const auto g = parse_and_build_group("symmetric:3");
  const auto a = parse_multiset(g, "(23)*6");
  const auto v = decide_matching(g, a);
  const auto r = product_one_ordering(g, a);
  const auto j = nlohmann::json::parse(render_verdict(g, a, v, r, Format::json));
  CHECK(j["status"] == "realizable");
  CHECK(j["group"] == "symmetric:3");
  CHECK(j["certificate"]["cycles"].size() == 3);
  CHECK(j.contains("search_stats"));
  CHECK(j.contains("obstruction_detail"));
  CHECK(j["obstruction_detail"]["pass"] == true);

  const auto n = parse_multiset(g, "(12)*2,(23)*4");
  const auto jn = nlohmann::json::parse(render_verdict(g, n, decide_matching(g, n), std::nullopt, Format::json));
  CHECK(jn["status"] == "not_realizable");
  CHECK(jn["certificate"].is_null());
}

TEST_CASE("JSON experiment reports have one record per claim") {
  const auto j = nlohmann::json::parse(render_reports({verify_s3_counting()}, Format::json));
  CHECK(j["pass"] == true);
  const auto& r = j["reports"];
  REQUIRE(r.is_array());
  REQUIRE(r[0].contains("claims"));
  CHECK(r[0]["experiment"] == "s3-counting");
  for (const auto& c : r[0]["claims"]) {
    CHECK(c.contains("claim"));
    CHECK(c.contains("expected"));
    CHECK(c.contains("observed"));
    CHECK(c["pass"] == true);
  }
  CHECK_THROWS_AS(parse_format("yaml"), Error);
}
