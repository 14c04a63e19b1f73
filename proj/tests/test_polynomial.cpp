#include <doctest.h>

#include <vector>

#include "thetaring/polynomial.hpp"
#include "thetaring/sampler.hpp"

using namespace thetaring;

namespace {

IntPoly Z(const char* text) { return parse_polynomial<Integer>(text, {}); }

// Oracle: dense schoolbook product on a coefficient grid.
std::vector<std::vector<long>> dense(const IntPoly& f, unsigned size) {
  std::vector<std::vector<long>> g(size, std::vector<long>(size, 0));
  for (const auto& [m, c] : f.terms()) g[m.x][m.y] = c.get_si();
  return g;
}

std::vector<std::vector<long>> dense_product(const std::vector<std::vector<long>>& a,
                                             const std::vector<std::vector<long>>& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<long>> r(2 * n, std::vector<long>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) r[i + k][j + l] += a[i][j] * b[k][l];
  return r;
}

}  // namespace

TEST_CASE("text format renders in descending graded order") {
  IntPoly f = IntPoly::monomial({}, {4, 0}) - IntPoly::monomial({}, {2, 1}, 4) + IntPoly::monomial({}, {0, 2}, 2);
  CHECK(to_string(f) == "x^4 - 4*x^2*y + 2*y^2");
  CHECK(to_string(IntPoly{}) == "0");
  CHECK(to_string(-IntPoly::x({})) == "-x");
  CHECK(to_string(IntPoly::constant({}, -3)) == "-3");
  CHECK(to_string(Z("y + x + 1")) == "x + y + 1");
  CHECK(to_string(Z("x*y^3 + x^3")) == "x*y^3 + x^3");
  CHECK(to_string(parse_polynomial<Integer>("s^2 - 2*t", {}, kST), kST) == "s^2 - 2*t");
}

TEST_CASE("parser round trip and errors") {
  for (const char* text : {"x^4 - 4*x^2*y + 2*y^2", "-x", "7", "x*y", "-3*x^2*y^5 + y - 1"})
    CHECK(to_string(Z(text)) == text);
  LocalPoly q = parse_polynomial<LocalizedRational>("1/3*x - 2/5", LocalRing{2});
  CHECK(to_string(q) == "1/3*x - 2/5");
  CHECK(to_string(parse_polynomial<Residue>("3*x + 9", ResidueRing(2, 3))) == "3*x + 1");
  CHECK(Z("x + x") == Z("2*x"));
  CHECK(Z("x - x").is_zero());
  CHECK_THROWS_AS(Z(""), std::invalid_argument);
  CHECK_THROWS_AS(Z("x +"), std::invalid_argument);
  CHECK_THROWS_AS(Z("2*"), std::invalid_argument);
  CHECK_THROWS_AS(Z("z"), std::invalid_argument);
  CHECK_THROWS_AS(Z("1/2*x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial<LocalizedRational>("1/2*x", LocalRing{2}), std::domain_error);
}

TEST_CASE("arithmetic") {
  CHECK((Z("x + y") * Z("x - y")) == Z("x^2 - y^2"));
  CHECK(power(Z("x"), 0) == Z("1"));
  CHECK(power(Z("x^2 - 2*y"), 2) == Z("x^4 - 4*x^2*y + 4*y^2"));
  CHECK(power(Z("x + 1"), 3) == Z("x^3 + 3*x^2 + 3*x + 1"));
  CHECK_THROWS_AS(parse_polynomial<Residue>("x", ResidueRing(2, 2)) + parse_polynomial<Residue>("x", ResidueRing(2, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial<LocalizedRational>("x", LocalRing{2}) *
                      parse_polynomial<LocalizedRational>("x", LocalRing{3}),
                  std::invalid_argument);
}

TEST_CASE("multiplication agrees with a dense schoolbook oracle") {
  PolynomialSampler sampler(3, 5);
  for (int t = 0; t < 100; ++t) {
    IntPoly f = sampler.integral(), g = sampler.integral();
    auto expected = dense_product(dense(f, 5), dense(g, 5));
    IntPoly fg = f * g;
    for (unsigned i = 0; i < 10; ++i)
      for (unsigned j = 0; j < 10; ++j) CHECK(fg.coefficient({i, j}) == expected[i][j]);
  }
}

TEST_CASE("substitute") {
  const unsigned p = 3;
  IntPoly sx = IntPoly::monomial({}, {p, 0}) - IntPoly::monomial({}, {0, 1}, 3);
  IntPoly sy = IntPoly::monomial({}, {0, p});
  CHECK(substitute(Z("x"), sx, sy) == Z("x^3 - 3*y"));
  CHECK(substitute(Z("x^2 - 2*y + 5"), Z("x"), Z("y")) == Z("x^2 - 2*y + 5"));
  CHECK(substitute(Z("x*y"), Z("x^2"), Z("y^2")) == Z("x^2*y^2"));
  CHECK(substitute(Z("x^3 + y"), Z("y"), Z("0")) == Z("y^3"));

  PolynomialSampler sampler(2, 9);
  for (int t = 0; t < 200; ++t) {
    IntPoly f = sampler.integral(), g = sampler.integral(), a = sampler.integral(), b = sampler.integral();
    CHECK(substitute(f * g, a, b) == substitute(f, a, b) * substitute(g, a, b));
    CHECK(substitute(f + g, a, b) == substitute(f, a, b) + substitute(g, a, b));
  }
}

TEST_CASE("frobenius_decompose") {
  auto grid = frobenius_decompose(Z("x^3"), 2);
  CHECK(grid.at(1, 0) == Z("x"));
  CHECK(grid.at(0, 0).is_zero());
  CHECK(grid.at(0, 1).is_zero());
  CHECK(grid.at(1, 1).is_zero());

  auto grid2 = frobenius_decompose(Z("x^3*y^2"), 2);
  CHECK(grid2.at(1, 0) == Z("x*y"));

  for (unsigned p : {2u, 3u, 5u}) {
    PolynomialSampler sampler(p, 17);
    for (int t = 0; t < 200; ++t) {
      IntPoly f = sampler.integral() * sampler.integral();
      CHECK(frobenius_recompose(frobenius_decompose(f, p), IntegerRing{}) == f);

      // uniqueness: decomposing an explicit combination recovers its parts
      FrobeniusGrid<Integer> parts{p, {}};
      for (unsigned i = 0; i < p * p; ++i) parts.parts.push_back(i % 3 == 0 ? sampler.integral() : IntPoly{});
      IntPoly combined = frobenius_recompose(parts, IntegerRing{});
      auto back = frobenius_decompose(combined, p);
      for (unsigned i = 0; i < p * p; ++i) CHECK(back.parts[i] == parts.parts[i]);

      IntPoly g = sampler.integral();
      auto rho = frobenius_decompose(expand_exponents(g, p), p);
      CHECK(rho.at(0, 0) == g);
    }
  }
}

TEST_CASE("map_coefficients") {
  ResidueRing mod2(2, 1), mod4(2, 2), mod8(2, 3);
  CHECK(to_residue(Z("x^2 - 2*y"), mod2) == parse_polynomial<Residue>("x^2", mod2));
  CHECK(to_residue(Z("4*x"), mod4).is_zero());
  LocalPoly third = parse_polynomial<LocalizedRational>("1/3*x", LocalRing{2});
  CHECK(to_residue(third, mod8) == parse_polynomial<Residue>("3*x", mod8));

  PolynomialSampler sampler(2, 23);
  for (int t = 0; t < 200; ++t) {
    LocalPoly f = sampler.local(), g = sampler.local();
    CHECK(to_residue(f + g, mod8) == to_residue(f, mod8) + to_residue(g, mod8));
    CHECK(to_residue(f * g, mod8) == to_residue(f, mod8) * to_residue(g, mod8));
  }
}
