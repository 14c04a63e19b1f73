#ifndef THETARING_POLYNOMIAL_HPP
#define THETARING_POLYNOMIAL_HPP

#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thetaring/coefficients.hpp"

namespace thetaring {

/// Exponent pair of a bivariate monomial. The first variable is rendered as
/// x (or s), the second as y (or t).
struct Monomial {
  unsigned x = 0;
  unsigned y = 0;

  unsigned degree() const { return x + y; }
  Monomial operator*(const Monomial& o) const { return {x + o.x, y + o.y}; }
  bool operator==(const Monomial&) const = default;
};

/// Graded lexicographic, descending, with the first variable ranked higher.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.x > b.x;
  }
};

struct VariableNames {
  std::string first = "x";
  std::string second = "y";
};

inline const VariableNames kXY{"x", "y"};
inline const VariableNames kST{"s", "t"};

template <class C>
class Polynomial {
 public:
  using traits = coefficient_traits<C>;
  using coefficient_type = C;
  using ring_type = typename traits::ring_type;
  using term_map = std::map<Monomial, C, GrlexDescending>;

  explicit Polynomial(ring_type ring = {}) : ring_(std::move(ring)) {}

  static Polynomial constant(const ring_type& ring, const C& c) { return monomial(ring, {}, c); }
  static Polynomial constant(const ring_type& ring, long c) {
    return constant(ring, traits::from_integer(ring, Integer(c)));
  }
  static Polynomial monomial(const ring_type& ring, Monomial m, const C& c) {
    Polynomial f(ring);
    f.add_term(m, c);
    return f;
  }
  static Polynomial monomial(const ring_type& ring, Monomial m, long c = 1) {
    return monomial(ring, m, traits::from_integer(ring, Integer(c)));
  }
  static Polynomial x(const ring_type& ring) { return monomial(ring, {1, 0}); }
  static Polynomial y(const ring_type& ring) { return monomial(ring, {0, 1}); }

  const ring_type& ring() const { return ring_; }
  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  C coefficient(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? traits::zero(ring_) : it->second;
  }

  /// Leading term in the graded order; undefined on zero.
  const std::pair<const Monomial, C>& leading() const { return *terms_.begin(); }

  unsigned degree_x() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.x);
    return d;
  }
  unsigned degree_y() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.y);
    return d;
  }
  unsigned total_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

  /// Adds c*m, keeping the canonical form (no zero coefficients).
  void add_term(Monomial m, const C& c) {
    if (traits::is_zero(c)) return;
    require_ring(traits::ring_of(c));
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    require_ring(o.ring_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    require_ring(o.ring_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial operator-() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
    return r;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_ring(b.ring_);
    Polynomial r(a.ring_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const C& c) const {
    Polynomial r(ring_);
    for (const auto& [m, d] : terms_) r.add_term(m, d * c);
    return r;
  }
  Polynomial shifted(Monomial by) const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m * by, c);
    return r;
  }

  bool operator==(const Polynomial& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }

 private:
  void require_ring(const ring_type& r) const {
    if (!(r == ring_)) throw std::invalid_argument("mismatched coefficient rings");
  }

  ring_type ring_;
  term_map terms_;
};

template <class C>
Polynomial<C> power(const Polynomial<C>& f, unsigned k) {
  Polynomial<C> result = Polynomial<C>::constant(f.ring(), 1);
  Polynomial<C> base = f;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

/// f(sx, sy). Horner in the first variable; powers of sy are cached.
template <class C>
Polynomial<C> substitute(const Polynomial<C>& f, const Polynomial<C>& sx, const Polynomial<C>& sy) {
  if (!(f.ring() == sx.ring()) || !(f.ring() == sy.ring()))
    throw std::invalid_argument("mismatched coefficient rings");
  const auto& ring = f.ring();
  if (f.is_zero()) return Polynomial<C>(ring);

  std::map<unsigned, Polynomial<C>, std::greater<>> by_x;  // x-degree -> coefficient in the second variable
  for (const auto& [m, c] : f.terms()) {
    auto [it, _] = by_x.try_emplace(m.x, ring);
    it->second.add_term({0, m.y}, c);
  }

  std::vector<Polynomial<C>> sy_powers{Polynomial<C>::constant(ring, 1)};
  auto sy_power = [&](unsigned j) -> const Polynomial<C>& {
    while (sy_powers.size() <= j) sy_powers.push_back(sy_powers.back() * sy);
    return sy_powers[j];
  };
  auto evaluate_column = [&](const Polynomial<C>& column) {
    Polynomial<C> r(ring);
    for (const auto& [m, c] : column.terms()) r += sy_power(m.y).scaled(c);
    return r;
  };

  Polynomial<C> acc(ring);
  unsigned current = by_x.begin()->first;
  for (const auto& [deg, column] : by_x) {
    for (; current > deg; --current) acc = acc * sx;
    acc += evaluate_column(column);
  }
  for (; current > 0; --current) acc = acc * sx;
  return acc;
}

/// rho: first variable -> first^p, second -> second^p.
template <class C>
Polynomial<C> expand_exponents(const Polynomial<C>& g, unsigned p) {
  Polynomial<C> r(g.ring());
  for (const auto& [m, c] : g.terms()) r.add_term({m.x * p, m.y * p}, c);
  return r;
}

/// The p x p components f_{km} with f = sum x^k y^m rho(f_{km}).
template <class C>
struct FrobeniusGrid {
  unsigned p = 0;
  std::vector<Polynomial<C>> parts;  // index k * p + m

  const Polynomial<C>& at(unsigned k, unsigned m) const { return parts.at(k * p + m); }
};

template <class C>
FrobeniusGrid<C> frobenius_decompose(const Polynomial<C>& f, unsigned p) {
  if (p < 2) throw std::invalid_argument("frobenius_decompose needs p >= 2");
  FrobeniusGrid<C> grid{p, std::vector<Polynomial<C>>(p * p, Polynomial<C>(f.ring()))};
  for (const auto& [m, c] : f.terms())
    grid.parts[(m.x % p) * p + (m.y % p)].add_term({m.x / p, m.y / p}, c);
  return grid;
}

template <class C>
Polynomial<C> frobenius_recompose(const FrobeniusGrid<C>& grid, const typename Polynomial<C>::ring_type& ring) {
  Polynomial<C> r(ring);
  for (unsigned k = 0; k < grid.p; ++k)
    for (unsigned m = 0; m < grid.p; ++m) r += expand_exponents(grid.at(k, m), grid.p).shifted({k, m});
  return r;
}

/// Coefficient-wise ring change; terms mapping to zero are dropped.
template <class To, class From, class Fn>
Polynomial<To> map_coefficients(const Polynomial<From>& f, const typename Polynomial<To>::ring_type& ring, Fn&& fn) {
  Polynomial<To> r(ring);
  for (const auto& [m, c] : f.terms()) r.add_term(m, fn(c));
  return r;
}

inline Polynomial<Residue> to_residue(const Polynomial<Integer>& f, const ResidueRing& ring) {
  return map_coefficients<Residue>(f, ring, [&](const Integer& c) { return reduce_mod(c, ring); });
}
inline Polynomial<Residue> to_residue(const Polynomial<LocalizedRational>& f, const ResidueRing& ring) {
  return map_coefficients<Residue>(f, ring, [&](const LocalizedRational& c) { return reduce_mod(c, ring); });
}
inline Polynomial<LocalizedRational> to_local(const Polynomial<Integer>& f, const LocalRing& ring) {
  return map_coefficients<LocalizedRational>(f, ring, [&](const Integer& c) { return LocalizedRational(ring, c); });
}
/// Lifts residues to their representatives in [0, p^m).
inline Polynomial<Integer> lift(const Polynomial<Residue>& f) {
  return map_coefficients<Integer>(f, IntegerRing{}, [](const Residue& c) { return thetaring::lift(c); });
}

// ---------------------------------------------------------------------------
// Text format: "c*x^i*y^j" terms in descending graded order, unit
// coefficients and zero exponents omitted, e.g. "x^4 - 4*x^2*y + 2*y^2".
// ---------------------------------------------------------------------------

template <class C>
std::string to_string(const Polynomial<C>& f, const VariableNames& names = kXY) {
  using traits = coefficient_traits<C>;
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool negative = traits::is_negative(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string factors;
    auto append = [&](const std::string& v, unsigned e) {
      if (e == 0) return;
      if (!factors.empty()) factors += "*";
      factors += v;
      if (e > 1) factors += "^" + std::to_string(e);
    };
    append(names.first, m.x);
    append(names.second, m.y);

    std::string mag = traits::magnitude_string(c);
    if (factors.empty())
      out += mag;
    else if (mag == "1")
      out += factors;
    else
      out += mag + "*" + factors;
  }
  return out;
}

namespace detail {

class PolynomialLexer {
 public:
  PolynomialLexer(std::string_view text, const VariableNames& names) : text_(text), names_(names) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool peek_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  Integer number() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }
  unsigned small_number() {
    Integer n = number();
    if (!n.fits_uint_p()) fail("exponent too large");
    return static_cast<unsigned>(n.get_ui());
  }
  /// 0 for the first variable, 1 for the second, -1 if none matches.
  int variable() {
    skip_space();
    for (int v = 0; v < 2; ++v) {
      const std::string& name = v == 0 ? names_.first : names_.second;
      if (text_.substr(pos_, name.size()) == name) {
        std::size_t end = pos_ + name.size();
        if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) continue;
        pos_ = end;
        return v;
      }
    }
    return -1;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

 private:
  std::string_view text_;
  const VariableNames& names_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the text format. Coefficients may be integers or fractions "a/b";
/// repeated monomials are summed.
template <class C>
Polynomial<C> parse_polynomial(std::string_view text, const typename Polynomial<C>::ring_type& ring,
                               const VariableNames& names = kXY) {
  using traits = coefficient_traits<C>;
  detail::PolynomialLexer lex(text, names);
  Polynomial<C> f(ring);
  if (lex.done()) lex.fail("empty input");
  bool first = true;
  while (!lex.done()) {
    bool negative = false;
    if (lex.accept('-'))
      negative = true;
    else if (!first && !lex.accept('+'))
      lex.fail("expected '+' or '-'");
    first = false;

    Integer num = 1, den = 1;
    Monomial m;
    bool want_variable = true;
    bool after_star = false;
    if (lex.peek_digit()) {
      num = lex.number();
      if (lex.accept('/')) den = lex.number();
      want_variable = after_star = lex.accept('*');
    }
    while (want_variable) {
      int v = lex.variable();
      if (v < 0) lex.fail(after_star ? "expected a variable after '*'" : "expected a term");
      unsigned e = 1;
      if (lex.accept('^')) e = lex.small_number();
      (v == 0 ? m.x : m.y) += e;
      want_variable = after_star = lex.accept('*');
    }
    if (negative) num = -num;
    f.add_term(m, traits::from_fraction(ring, num, den));
  }
  return f;
}

}  // namespace thetaring

#endif  // THETARING_POLYNOMIAL_HPP
