#include <doctest.h>

#include "thetaring/certificate.hpp"
#include "thetaring/quotient.hpp"

using namespace thetaring;

namespace {

IntPoly Z(const char* text) { return parse_polynomial<Integer>(text, {}); }

Certificate x_cubed() {
  Certificate c{2, 1, 2, Z("x^3"), {}};
  c.cofactors.push_back({0, Z("y")});
  c.cofactors.push_back({1, Z("x")});
  return c;
}

}  // namespace

TEST_CASE("verification") {
  CHECK(verify_certificate(x_cubed()));
  Certificate bad = x_cubed();
  bad.cofactors[0].cofactor = bad.cofactors[0].cofactor + IntPoly::constant({}, 1);
  CHECK_FALSE(verify_certificate(bad));
  Certificate empty{3, 2, 3, IntPoly{}, {}};
  CHECK(verify_certificate(empty));
  // 4*x^3 vanishes mod 4 on its own
  Certificate torsion{2, 1, 2, Z("4*x^3"), {}};
  CHECK(verify_certificate(torsion));
  Certificate out_of_range = x_cubed();
  out_of_range.cofactors[0].generator = 7;
  CHECK_FALSE(verify_certificate(out_of_range));
}

TEST_CASE("text format") {
  const char* text =
      "format = thetaring-certificate/1\n"
      "p = 2\n"
      "e = 1\n"
      "m = 2\n"
      "target = x^3\n"
      "cofactors = [\n"
      "  { generator = 0, cofactor = y }\n"
      "  { generator = 1, cofactor = x }\n"
      "]\n";
  CHECK(format_certificate(x_cubed()) == text);
  CHECK(parse_certificate(text) == x_cubed());
  std::string commented = std::string("# produced by hand\n\n") + text;
  CHECK(parse_certificate(commented) == x_cubed());
  CHECK_THROWS_AS(parse_certificate("p = 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_certificate("format = other/1\np = 2\ne = 1\nm = 2\ntarget = 0\ncofactors = [\n]\n"),
                  std::invalid_argument);
  std::string unterminated(text);
  unterminated.resize(unterminated.size() - 2);
  CHECK_THROWS_AS(parse_certificate(unterminated), std::invalid_argument);
}

TEST_CASE("round trip of produced certificates") {
  ExampleRing ring(3);
  for (unsigned e : {1u, 2u}) {
    auto result = ring.verify_nilpotence(e, e + 1);
    REQUIRE(result.certificate);
    Certificate back = parse_certificate(format_certificate(*result.certificate));
    CHECK(back == *result.certificate);
    CHECK(verify_certificate(back));
  }
}
