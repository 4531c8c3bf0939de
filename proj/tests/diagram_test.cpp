#include <doctest.h>

#include <random>

#include "heegaard/diagram.hpp"
#include "support/random_diagram.hpp"

using namespace heegaard;

namespace {

constexpr const char* kS3 =
    "# the standard torus\n"
    "genus 1\n"
    "alpha 1: c1\n"
    "\n"
    "beta 1: c2   # meridian\n"
    "x p: a1 b1 k=1 l=1 sign=+\n";

ParseError parse_failure(const std::string& text) {
  try {
    parse_diagram(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError(ParseError::Kind::syntax, 0, "");
}

}  // namespace

TEST_CASE("parse the minimal sphere diagram") {
  const auto d = parse_diagram(std::string_view(kS3));
  CHECK(d.genus == 1);
  CHECK(d.alpha[0] == parse_word("c1"));
  CHECK(d.beta[0] == parse_word("c2"));
  REQUIRE(d.points.size() == 1);
  CHECK(d.points[0] == IntersectionPoint{"p", 1, 1, 1, 1, 1});
}

TEST_CASE("curves may come in any order") {
  const auto d = parse_diagram(std::string_view(
      "genus 2\nbeta 2: c4\nalpha 2: c3\nbeta 1: c2\nalpha 1: c1\n"
      "x b: a2 b2 k=0 l=1 sign=-\nx a: a1 b1 k=1 l=0 sign=+\n"));
  CHECK(d.alpha[1] == parse_word("c3"));
  CHECK(d.beta[0] == parse_word("c2"));
  CHECK(d.points[0].label == "a");
  CHECK(d.points[1].sign == -1);
}

TEST_CASE("syntax errors carry the line number") {
  auto e = parse_failure("genus 1\nalpha 1: c1\nbeta 1 c2\n");
  CHECK(e.kind() == ParseError::Kind::syntax);
  CHECK(e.line() == 3);

  e = parse_failure("alpha 1: c1\n");
  CHECK(e.kind() == ParseError::Kind::syntax);
  CHECK(e.line() == 1);

  e = parse_failure("genus 1\nalpha 1: c1 d2\nbeta 1: c2\n");
  CHECK(e.kind() == ParseError::Kind::syntax);
  CHECK(e.line() == 2);

  e = parse_failure("genus 1\nalpha 1: c1\nbeta 1: c2\nx p: a1 b1 k=1 l=1 sign=*\n");
  CHECK(e.line() == 4);

  e = parse_failure("");
  CHECK(e.kind() == ParseError::Kind::syntax);
}

TEST_CASE("semantic errors carry the line number") {
  auto e = parse_failure(
      "genus 2\nalpha 1: c1\nalpha 2: c3\nbeta 1: c2\nbeta 2: c4\nx p: a3 b1 k=0 l=0 sign=+\n");
  CHECK(e.kind() == ParseError::Kind::semantic);
  CHECK(e.line() == 6);
  CHECK(std::string(e.what()).find("line 6") != std::string::npos);

  e = parse_failure("genus 1\nalpha 1: c1\nbeta 1: c2\nx p: a1 b1 k=1 l=1 sign=+\nx p: a1 b1 k=0 l=0 sign=-\n");
  CHECK(e.kind() == ParseError::Kind::semantic);
  CHECK(e.line() == 5);

  e = parse_failure("genus 1\nalpha 1: c1\n");
  CHECK(e.kind() == ParseError::Kind::semantic);
  CHECK(e.line() == 3);

  e = parse_failure("genus 1\nalpha 1: c3\nbeta 1: c2\n");
  CHECK(e.kind() == ParseError::Kind::semantic);
  CHECK(e.line() == 2);

  e = parse_failure("genus 1\nalpha 1: c1\nalpha 1: c2\nbeta 1: c2\n");
  CHECK(e.line() == 3);

  e = parse_failure("genus 1\nalpha 1: c1\nbeta 1: c2\nx p: a1 b1 k=2 l=0 sign=+\n");
  CHECK(e.kind() == ParseError::Kind::semantic);
  CHECK(e.line() == 4);

  e = parse_failure("genus 1\nalpha 1:\nbeta 1: c2\n");
  CHECK(e.kind() == ParseError::Kind::semantic);

  e = parse_failure("genus 0\n");
  CHECK(e.kind() == ParseError::Kind::semantic);

  e = parse_failure("genus 1\ngenus 1\n");
  CHECK(e.line() == 2);
}

TEST_CASE("serialization is canonical") {
  const auto d = parse_diagram(std::string_view(
      "genus 1\nbeta 1: c2\nalpha 1: c1\nx z: a1 b1 k=1 l=1 sign=+\nx a: a1 b1 k=0 l=0 sign=-\n"));
  CHECK(serialize_diagram(d) ==
        "genus 1\nalpha 1: c1\nbeta 1: c2\nx a: a1 b1 k=0 l=0 sign=-\nx z: a1 b1 k=1 l=1 sign=+\n");
  auto shuffled = d;
  std::swap(shuffled.points[0], shuffled.points[1]);
  CHECK(shuffled == d);
  CHECK(serialize_diagram(shuffled) == serialize_diagram(d));
}

TEST_CASE("parse and serialize are inverse on random diagrams") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = testing::random_diagram(rng);
    const std::string text = serialize_diagram(d);
    const auto back = parse_diagram(text);
    CHECK(back == d);
    CHECK(serialize_diagram(back) == text);
  }
}

TEST_CASE("validate reports reduction problems") {
  HeegaardDiagram d = parse_diagram(std::string_view("genus 1\nalpha 1: c1\nbeta 1: c1 -c1 c2\n"));
  auto w = validate(d);
  REQUIRE(w.size() == 1);
  CHECK(w[0].kind == Warning::Kind::beta_not_freely_reduced);
  CHECK(w[0].message.find("not freely reduced") != std::string::npos);

  d = parse_diagram(std::string_view("genus 1\nalpha 1: c1\nbeta 1: c1 c2 -c1\n"));
  w = validate(d);
  REQUIRE(w.size() == 1);
  CHECK(w[0].kind == Warning::Kind::beta_not_cyclically_reduced);
  CHECK(w[0].message.find("not cyclically reduced") != std::string::npos);

  d = parse_diagram(std::string_view("genus 1\nalpha 1: c2 -c2 c1\nbeta 1: c2\n"));
  w = validate(d);
  REQUIRE(w.size() == 1);
  CHECK(w[0].kind == Warning::Kind::alpha_not_freely_reduced);

  d = parse_diagram(std::string_view(
      "genus 1\nalpha 1: c1\nbeta 1: c2\nx a: a1 b1 k=1 l=1 sign=+\nx b: a1 b1 k=1 l=1 sign=-\n"));
  w = validate(d);
  REQUIRE(w.size() == 1);
  CHECK(w[0].kind == Warning::Kind::duplicate_position);
}

TEST_CASE("check_diagram rejects hand-built invalid diagrams") {
  HeegaardDiagram d = fixture("s3");
  d.points[0].prefix = 5;
  CHECK_THROWS_AS(check_diagram(d), InvalidDiagram);
  d = fixture("s3");
  d.beta.clear();
  CHECK_THROWS_AS(check_diagram(d), InvalidDiagram);
  d = fixture("s3");
  d.points.push_back(d.points[0]);
  CHECK_THROWS_AS(check_diagram(d), InvalidDiagram);
  d = fixture("s3");
  d.alpha[0] = parse_word("c5");
  CHECK_THROWS_AS(check_diagram(d), InvalidDiagram);
}
