#include "thetaring/driver.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>

#include "thetaring/certificate.hpp"
#include "thetaring/quotient.hpp"
#include "thetaring/sampler.hpp"

namespace thetaring {

namespace {

SuiteRecord suite(std::string name, std::uint64_t p) {
  SuiteRecord s;
  s.name = std::move(name);
  s.p = p;
  return s;
}

const std::vector<std::uint64_t> kDefaultPrimes{2, 3, 5};
const std::vector<unsigned> kDefaultExponents{1, 2};

std::uint64_t checked_power(std::uint64_t p, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > UINT64_MAX / p) return UINT64_MAX;
    r *= p;
  }
  return r;
}

VerdictRecord record(std::string check, bool ok, std::string reason = {}) {
  return {std::move(check), ok ? Verdict::pass : Verdict::fail, ok ? std::string{} : std::move(reason)};
}

void tally(SuiteRecord& suite, bool ok, const std::string& failure) {
  if (ok) {
    ++suite.passed;
  } else {
    ++suite.failed;
    if (suite.failures.size() < 10) suite.failures.push_back(failure);
  }
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

void RunConfig::validate() const {
  for (auto p : primes)
    if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
  for (auto e : exponents)
    if (e < 1) throw UsageError("e must be at least 1");
  if (trials < 1) throw UsageError("trial count must be at least 1");
}

std::vector<std::uint64_t> RunConfig::prime_list() const {
  std::vector<std::uint64_t> ps = primes.empty() ? kDefaultPrimes : primes;
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

std::vector<std::pair<std::uint64_t, unsigned>> RunConfig::grid() const {
  std::set<std::pair<std::uint64_t, unsigned>> cells;
  if (primes.empty() && exponents.empty()) {
    for (auto p : kDefaultPrimes)
      for (auto e : kDefaultExponents) cells.insert({p, e});
    cells.insert({2, 3});
  } else {
    for (auto p : prime_list())
      for (auto e : exponents.empty() ? kDefaultExponents : exponents) cells.insert({p, e});
  }
  return {cells.begin(), cells.end()};
}

// ---------------------------------------------------------------------------

bool Report::passed() const {
  for (const auto& c : cells)
    for (const auto& v : c.verdicts)
      if (v.verdict == Verdict::fail) return false;
  for (const auto& s : suites)
    if (s.failed > 0) return false;
  return true;
}

std::string Report::to_machine() const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = "thetaring-report/1";
  j["command"] = command;
  j["note"] = "membership is decided over Z/p^m; these are finite-modulus instances of statements over Z_(p)";
  j["passed"] = passed();
  ordered_json jcells = ordered_json::array();
  for (const auto& c : cells) {
    ordered_json jc;
    jc["p"] = c.p;
    jc["e"] = c.e;
    ordered_json jv = ordered_json::array();
    for (const auto& v : c.verdicts)
      jv.push_back({{"check", v.check}, {"verdict", to_string(v.verdict)}, {"reason", v.reason}});
    jc["verdicts"] = jv;
    jc["certificates"] = c.certificates;
    jcells.push_back(jc);
  }
  j["cells"] = jcells;
  ordered_json jsuites = ordered_json::array();
  for (const auto& s : suites)
    jsuites.push_back({{"suite", s.name},
                       {"p", s.p},
                       {"passed", s.passed},
                       {"failed", s.failed},
                       {"skipped", s.skipped},
                       {"failures", s.failures},
                       {"skip_reason", s.skip_reason}});
  j["suites"] = jsuites;
  return j.dump(2) + "\n";
}

std::string Report::to_table() const {
  std::ostringstream out;
  unsigned pass = 0, fail = 0, skip = 0;
  out << "thetaring " << command << "\n";
  if (!cells.empty()) {
    out << "membership is decided over Z/p^m (finite-modulus instances)\n";
    out << std::left << std::setw(4) << "p" << std::setw(4) << "e" << std::setw(44) << "check"
        << "verdict\n";
  }
  for (const auto& c : cells) {
    for (const auto& v : c.verdicts) {
      out << std::left << std::setw(4) << c.p << std::setw(4) << c.e << std::setw(44) << v.check << to_string(v.verdict);
      if (!v.reason.empty()) out << "  (" << v.reason << ")";
      out << "\n";
      (v.verdict == Verdict::pass ? pass : v.verdict == Verdict::fail ? fail : skip)++;
    }
    out << std::left << std::setw(4) << c.p << std::setw(4) << c.e << "time " << std::fixed << std::setprecision(2)
        << c.seconds << " s\n";
  }
  if (!suites.empty())
    out << std::left << std::setw(4) << "p" << std::setw(28) << "suite" << std::setw(8) << "pass" << std::setw(8)
        << "fail"
        << "skipped\n";
  for (const auto& s : suites) {
    out << std::left << std::setw(4) << s.p << std::setw(28) << s.name << std::setw(8) << s.passed << std::setw(8)
        << s.failed << s.skipped;
    if (!s.skip_reason.empty()) out << "  (" << s.skip_reason << ")";
    out << "\n";
    for (const auto& f : s.failures) out << "    " << f << "\n";
    pass += s.passed;
    fail += s.failed;
    skip += s.skipped;
  }
  out << "summary: " << pass << " pass, " << fail << " fail, " << skip << " skipped\n";
  return out.str();
}

void write_report(const Report& report, const RunConfig& config) {
  if (config.out_report.empty()) return;
  std::ofstream out(config.out_report, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write report to " + config.out_report);
  out << report.to_machine();
}

// ---------------------------------------------------------------------------

Report cmd_axioms(const RunConfig& config) {
  config.validate();
  Report report;
  report.command = "axioms";
  for (auto p : config.prime_list()) {
    ThetaContext theta(p);
    PolynomialSampler sampler(p, config.seed);
    SuiteRecord axioms = suite("axioms", p), prop1 = suite("prop1", p), frobenius = suite("frobenius-congruence", p);
    for (unsigned t = 0; t < config.trials; ++t) {
      LocalPoly f = sampler.local();
      LocalPoly g = sampler.local();
      LocalPoly b = sampler.local();
      try {
        AxiomReport r = theta.check_axioms(f, g);
        std::string failure;
        for (const auto& c : r.checks)
          if (!c.holds) failure += c.name + ": " + c.lhs + " != " + c.rhs + "; ";
        tally(axioms, r.all_hold(), "f = " + to_string(f) + ", g = " + to_string(g) + ": " + failure);
        tally(prop1, theta.check_prop1(b), "b = " + to_string(b));
        tally(frobenius, theta.check_frobenius_congruence(f) && theta.check_frobenius_congruence(g),
              "f = " + to_string(f) + ", g = " + to_string(g));
      } catch (const FrobeniusCongruenceError& err) {
        tally(frobenius, false, std::string(err.what()) + " for f = " + to_string(f) + ", g = " + to_string(g));
      }
    }
    report.suites.push_back(std::move(axioms));
    report.suites.push_back(std::move(prop1));
    report.suites.push_back(std::move(frobenius));
  }
  return report;
}

namespace {

std::string write_certificate_file(const RunConfig& config, const Certificate& cert, const std::string& label,
                                   VerdictRecord& verdict) {
  if (config.out_certs.empty()) return {};
  std::filesystem::create_directories(config.out_certs);
  std::ostringstream name;
  name << "cert_p" << cert.p << "_e" << cert.e << "_m" << cert.m << "_" << label << ".txt";
  std::filesystem::path path = std::filesystem::path(config.out_certs) / name.str();
  {
    std::ofstream out(path, std::ios::binary);
    out << format_certificate(cert);
  }
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  bool reread_ok = false;
  try {
    Certificate back = parse_certificate(buffer.str());
    reread_ok = back == cert && verify_certificate(back);
  } catch (const std::exception&) {
  }
  if (!reread_ok) {
    verdict.verdict = Verdict::fail;
    verdict.reason = "certificate file " + name.str() + " failed verification when re-read";
  }
  return name.str();
}

CellRecord verify_cell(const RunConfig& config, std::uint64_t p, unsigned e) {
  CellRecord cell{p, e, {}, {}, 0};
  const std::uint64_t span = checked_power(p, 2 * e);
  if (span > config.span_limit) {
    cell.verdicts.push_back({"all checks", Verdict::skipped,
                             "span p^(2e) = " + std::to_string(span) + " exceeds span limit " +
                                 std::to_string(config.span_limit)});
    return cell;
  }
  const auto start = std::chrono::steady_clock::now();
  ExampleRing ring(p);
  const unsigned n = ring.nilpotence_exponent(e);
  const unsigned m0 = e + 1;

  std::vector<unsigned> moduli{m0};
  if (config.extra_precision > 0) moduli.push_back(m0 + config.extra_precision);
  for (unsigned m : moduli) {
    VerificationResult r = ring.verify_nilpotence(e, m);
    VerdictRecord v = record("nilpotence x^" + std::to_string(n) + " in J, m=" + std::to_string(m), r.holds,
                             r.detail);
    if (r.certificate) {
      std::string file = write_certificate_file(config, *r.certificate, "nilpotence", v);
      if (!file.empty()) cell.certificates.push_back(file);
    }
    cell.verdicts.push_back(std::move(v));
  }

  VerificationResult sharp = ring.verify_sharpness(e);
  cell.verdicts.push_back(
      record("sharpness x^" + std::to_string(n - 1) + " not in J, m=" + std::to_string(m0), sharp.holds, sharp.detail));

  VerificationResult stable = ring.check_theta_stability(e, m0);
  cell.verdicts.push_back(record("theta-stability, m=" + std::to_string(m0), stable.holds, stable.detail));

  for (unsigned k = 0; k <= e; ++k) {
    VerificationResult r = ring.verify_prop2(e, m0, k);
    cell.verdicts.push_back(record("p^(e-k) psi^k(x) in J, k=" + std::to_string(k), r.holds, r.detail));
  }
  for (unsigned k = 0; k + 1 <= e; ++k) {
    VerificationResult r = ring.verify_prop3(e, m0, k);
    cell.verdicts.push_back(record("x^E - psi^k(x)^E_k in J, k=" + std::to_string(k), r.holds, r.detail));
  }
  VerificationResult torsion = ring.verify_torsion_powers(e, m0);
  cell.verdicts.push_back(record("torsion powers, m=" + std::to_string(m0), torsion.holds, torsion.detail));

  cell.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return cell;
}

}  // namespace

Report cmd_verify(const RunConfig& config) {
  config.validate();
  Report report;
  report.command = "verify";
  for (const auto& [p, e] : config.grid()) report.cells.push_back(verify_cell(config, p, e));
  return report;
}

Report cmd_fn_check(const RunConfig& config) {
  config.validate();
  Report report;
  report.command = "fn-check";
  for (auto p : config.prime_list()) {
    ThetaContext theta(p);
    SuiteRecord substitution = suite("F_n substitution", p), congruence = suite("F_n power congruence", p),
                diagonal = suite("F_e diagonal identity", p);
    unsigned top = 0;
    while (checked_power(p, top + 1) <= config.degree_cap) ++top;
    if (top == 0) {
      for (SuiteRecord* s : {&substitution, &congruence, &diagonal}) {
        ++s->skipped;
        s->skip_reason = "degree cap admits only n = 0";
      }
    } else {
      for (unsigned n = 1; n <= top; ++n) {
        tally(substitution, theta.check_F_substitution(n), "n = " + std::to_string(n));
        tally(congruence, theta.check_F_power_congruence(n), "n = " + std::to_string(n));
      }
      for (unsigned e = 0; e <= top; ++e) tally(diagonal, theta.F_diagonal_identity(e), "e = " + std::to_string(e));
    }
    report.suites.push_back(std::move(substitution));
    report.suites.push_back(std::move(congruence));
    report.suites.push_back(std::move(diagonal));
  }
  return report;
}

Integer cmd_bound(const Integer& n) { return nilpotence_bound(n); }

}  // namespace thetaring
