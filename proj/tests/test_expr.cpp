#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "wnlie/expr.hpp"
#include "wnlie/random.hpp"

using namespace wnlie;

namespace {
size_t error_position(const std::string& text, int n) {
  try {
    parse_derivation(text, n);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("expected a parse error for: " << text);
  return 0;
}
}  // namespace

TEST_CASE("parser fixtures", "[expr]") {
  Derivation d = parse_derivation("x1^2 d1 - 2/3*x1*x2 d2", 2);
  Derivation expect(2);
  expect.coefficient(1) = Polynomial::term(Monomial{2, 0}, 1);
  expect.coefficient(2) = Polynomial::term(Monomial{1, 1}, Rational(-2, 3));
  CHECK(d == expect);

  CHECK(parse_derivation("d1 + d2 + d3", 3) ==
        Derivation::partial(3, 1) + Derivation::partial(3, 2) + Derivation::partial(3, 3));
  CHECK(parse_derivation("E", 3) == euler(3));
  CHECK(parse_derivation("x1*(x1 d1 + x2 d2)", 2) == parse_derivation("x1 E", 2));
}

TEST_CASE("whitespace and separators are insignificant", "[expr]") {
  CHECK(parse_derivation("2/3*x1^2*x2 d1", 2) == parse_derivation(" 2 / 3 x1 ^ 2 x2 d 1 ", 2));
  CHECK(parse_derivation("x1x2 d1", 2) == parse_derivation("x1*x2 d1", 2));
  CHECK(parse_derivation("3d1", 2) == parse_derivation("3 * d1", 2));
  CHECK(parse_derivation("x1^2d2", 2) == parse_derivation("x1^2 d2", 2));
}

TEST_CASE("signs combine across terms", "[expr]") {
  CHECK(parse_derivation("-d1", 2) == -Derivation::partial(2, 1));
  CHECK(parse_derivation("+d1", 2) == Derivation::partial(2, 1));
  CHECK(parse_derivation("-x1 d1 + x1 d1", 2).is_zero());
  CHECK(parse_derivation("d1 - 2 d1", 2) == -Derivation::partial(2, 1));
  CHECK(parse_derivation("-2*(x1 d2)", 2) ==
        Rational(-2) * Derivation::term(Monomial{1, 0}, 2, 1));
}

TEST_CASE("zero parses and formats both ways", "[expr]") {
  CHECK(parse_derivation("0", 2).is_zero());
  CHECK(parse_derivation("0 d1", 2).is_zero());
  CHECK(Derivation::zero(2).str() == "0");
  CHECK(parse_derivation(Derivation::zero(2).str(), 2).is_zero());
}

TEST_CASE("formatting round-trips through the parser", "[expr]") {
  std::vector<std::pair<std::string, int>> corpus = {
      {"x1^2 d1 - 2/3*x1*x2 d2", 2},
      {"d1 + d2 + d3", 3},
      {"E", 2},
      {"x1 E", 3},
      {"7/2 d2", 2},
      {"x1*(x1 d1 + x2 d2) - x2^4 d1", 2},
      {"0", 3},
  };
  for (const auto& [text, n] : corpus) {
    Derivation d = parse_derivation(text, n);
    CHECK(parse_derivation(d.str(), n) == d);
  }
  Rng rng(808);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + trial % 3;
    Derivation d = rng.derivation(n, 3, 5);
    CHECK(parse_derivation(d.str(), n) == d);
  }
}

TEST_CASE("errors carry a position", "[expr]") {
  CHECK(error_position("x3 d1", 2) == 1);
  CHECK(error_position("d0", 2) == 1);
  CHECK(error_position("d1 x", 2) == 3);
  CHECK_THROWS_AS(parse_derivation("x3 d1", 2), ParseError);
  CHECK_THROWS_WITH(parse_derivation("x3 d1", 2),
                    Catch::Matchers::ContainsSubstring("variable index out of range"));
  CHECK_THROWS_WITH(parse_derivation("x1^^2 d1", 2),
                    Catch::Matchers::ContainsSubstring("malformed exponent"));
  CHECK_THROWS_WITH(parse_derivation("x1^5000 d1", 2),
                    Catch::Matchers::ContainsSubstring("malformed exponent"));
  CHECK_THROWS_AS(parse_derivation("x1*(", 2), ParseError);
  CHECK_THROWS_AS(parse_derivation("x1*(x1 d1", 2), ParseError);
  CHECK_THROWS_AS(parse_derivation("x1 d1 +", 2), ParseError);
  CHECK_THROWS_AS(parse_derivation("", 2), ParseError);
  CHECK_THROWS_AS(parse_derivation("x1", 2), ParseError);
  CHECK_THROWS_AS(parse_derivation("99999999999 d1", 2), ParseError);
  CHECK_THROWS_AS(parse_derivation("1/0 d1", 2), ParseError);
}
