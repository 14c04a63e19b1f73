#include "thetaring/certificate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace thetaring {

std::vector<IntPoly> certificate_generators(const ThetaContext& theta, unsigned e) {
  std::vector<IntPoly> gens;
  for (unsigned n = 0; n <= e; ++n) gens.push_back(theta.F(n).scaled(ipow(theta.prime(), e - n)));
  const auto pe = static_cast<unsigned>(ipow(theta.prime(), e).get_ui());
  gens.push_back(IntPoly::monomial({}, {0, pe}));
  return gens;
}

bool verify_certificate(const Certificate& c) {
  if (!is_prime(c.p) || c.e == 0 || c.m == 0) return false;
  ThetaContext theta(c.p);
  const std::vector<IntPoly> gens = certificate_generators(theta, c.e);
  IntPoly diff = c.target;
  for (const auto& term : c.cofactors) {
    if (term.generator >= gens.size()) return false;
    diff -= term.cofactor * gens[term.generator];
  }
  const Integer modulus = ipow(c.p, c.m);
  return std::all_of(diff.terms().begin(), diff.terms().end(), [&](const auto& t) {
    return mpz_divisible_p(t.second.get_mpz_t(), modulus.get_mpz_t()) != 0;
  });
}

std::string format_certificate(const Certificate& c) {
  std::ostringstream out;
  out << "format = thetaring-certificate/1\n";
  out << "p = " << c.p << "\n";
  out << "e = " << c.e << "\n";
  out << "m = " << c.m << "\n";
  out << "target = " << to_string(c.target) << "\n";
  out << "cofactors = [\n";
  for (const auto& term : c.cofactors)
    out << "  { generator = " << term.generator << ", cofactor = " << to_string(term.cofactor) << " }\n";
  out << "]\n";
  return out.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::pair<std::string_view, std::string_view> split_key_value(std::string_view line, int line_no) {
  auto eq = line.find('=');
  if (eq == std::string_view::npos)
    throw std::invalid_argument("certificate line " + std::to_string(line_no) + ": expected 'key = value'");
  return {trim(line.substr(0, eq)), trim(line.substr(eq + 1))};
}

unsigned long parse_unsigned(std::string_view s, std::string_view key) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
    throw std::invalid_argument("certificate: bad value for '" + std::string(key) + "'");
  return std::stoul(std::string(s));
}

}  // namespace

Certificate parse_certificate(std::string_view text) {
  Certificate c;
  bool seen_format = false, seen_p = false, seen_e = false, seen_m = false, seen_target = false,
       seen_cofactors = false;
  bool in_list = false;
  std::string target_text;
  int line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    if (in_list) {
      if (line == "]") {
        in_list = false;
        continue;
      }
      if (line.front() != '{' || line.back() != '}')
        throw std::invalid_argument("certificate line " + std::to_string(line_no) + ": expected '{ ... }'");
      std::string_view body = trim(line.substr(1, line.size() - 2));
      auto comma = body.find(',');
      if (comma == std::string_view::npos)
        throw std::invalid_argument("certificate line " + std::to_string(line_no) + ": expected two fields");
      auto [k1, v1] = split_key_value(body.substr(0, comma), line_no);
      auto [k2, v2] = split_key_value(body.substr(comma + 1), line_no);
      if (k1 != "generator" || k2 != "cofactor")
        throw std::invalid_argument("certificate line " + std::to_string(line_no) + ": expected generator, cofactor");
      c.cofactors.push_back({static_cast<unsigned>(parse_unsigned(v1, k1)), parse_polynomial<Integer>(v2, {})});
      continue;
    }

    auto [key, value] = split_key_value(line, line_no);
    if (key == "format") {
      if (value != "thetaring-certificate/1") throw std::invalid_argument("certificate: unsupported format");
      seen_format = true;
    } else if (key == "p") {
      c.p = parse_unsigned(value, key);
      seen_p = true;
    } else if (key == "e") {
      c.e = static_cast<unsigned>(parse_unsigned(value, key));
      seen_e = true;
    } else if (key == "m") {
      c.m = static_cast<unsigned>(parse_unsigned(value, key));
      seen_m = true;
    } else if (key == "target") {
      c.target = parse_polynomial<Integer>(value, {});
      seen_target = true;
    } else if (key == "cofactors") {
      if (value != "[") throw std::invalid_argument("certificate: expected '[' after cofactors");
      in_list = true;
      seen_cofactors = true;
    } else {
      throw std::invalid_argument("certificate: unknown key '" + std::string(key) + "'");
    }
  }
  if (in_list) throw std::invalid_argument("certificate: unterminated cofactor list");
  if (!(seen_format && seen_p && seen_e && seen_m && seen_target && seen_cofactors))
    throw std::invalid_argument("certificate: missing required key");
  return c;
}

}  // namespace thetaring
