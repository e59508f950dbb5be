#include "hzeta/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "hzeta/analysis.hpp"
#include "hzeta/errors.hpp"
#include "hzeta/exact/bernoulli.hpp"
#include "hzeta/kernels.hpp"
#include "hzeta/serialize.hpp"
#include "hzeta/verification.hpp"
#include "hzeta/zeros.hpp"

namespace hzeta::cli {
namespace {

// Thrown for well-formed command lines with unusable values.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const ParseError&) {
    throw UsageError(flag + ": expected p/q or a decimal, got '" + text + "'");
  }
}

struct Common {
  std::string format;
  bool json() const { return format == "json"; }
};

void add_format(CLI::App* cmd, Common& c, const std::string& fallback) {
  c.format = fallback;
  cmd->add_option("--format", c.format, "Output encoding")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

std::string signed_word(int s) { return s > 0 ? "> 0" : (s < 0 ? "< 0" : "= 0"); }

// ---------------------------------------------------------------------------

int cmd_bern(int n, const std::optional<std::string>& at, const Common& c, std::ostream& out) {
  if (n < 0) throw UsageError("--n must be >= 0");
  const auto un = static_cast<unsigned>(n);
  const RationalPoly p = bernoulli_poly(un);
  if (at) {
    const Rational x = parse_rational("--at", *at);
    const Rational v = p(x);
    if (c.json()) {
      Json j;
      j["n"] = n;
      j["at"] = to_json(x);
      j["value"] = to_json(v);
      out << dump(j) << '\n';
    } else {
      out << v << '\n';
    }
    return kExitOk;
  }
  if (c.json()) {
    Json j;
    j["n"] = n;
    j["B_n"] = to_json(bernoulli_number(un));
    j["poly"] = to_json(p);
    out << dump(j) << '\n';
  } else {
    out << "B_" << n << " = " << bernoulli_number(un) << '\n';
    out << "B_" << n << "(x) = " << p.to_string("x") << '\n';
  }
  return kExitOk;
}

int cmd_coeffs(int N, const Common& c, std::ostream& out) {
  if (N < 1) throw UsageError("--N must be >= 1");
  const auto& fam = build_coefficient_family(N);
  if (c.json()) {
    out << dump(to_json(fam)) << '\n';
  } else {
    for (int m = 0; m <= N; ++m)
      out << "C_{" << N << "," << m << "}(a) = " << fam[m].to_string("a") << '\n';
  }
  return kExitOk;
}

int cmd_roots(int N, const Common& c, std::ostream& out, std::ostream& err) {
  if (N < 2 || N > 4) throw UsageError("--N must be 2, 3 or 4");
  const OrderingResult res = ordering_check(N);
  if (c.json()) {
    out << dump(to_json(res)) << '\n';
  } else {
    out << "0";
    for (const auto& r : res.roots) out << " < " << r.label();
    out << " < 1\n";
    for (const auto& r : res.roots)
      out << "  " << r.label() << " in [" << r.root.lo.to_decimal(12) << ", " << r.root.hi.to_decimal(12)
          << "]\n";
    out << "chain " << (res.holds ? "certified" : "FAILS") << '\n';
  }
  if (!res.holds) {
    err << "ordering chain fails: " << res.witness << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_tables(int N, std::optional<int> m, const std::optional<std::string>& tol, const Common& c,
               std::ostream& out) {
  if (N < 1 || N > 4) throw UsageError("--N must be between 1 and 4");
  if (m && (*m < 0 || *m > N)) throw UsageError("--m must lie in 0..N");
  const Rational tolerance = tol ? parse_rational("--tol", *tol) : default_isolation_tolerance();
  if (tolerance.sign() <= 0) throw UsageError("--tol must be positive");
  std::vector<int> ms;
  if (m)
    ms.push_back(*m);
  else
    for (int k = 0; k <= N; ++k) ms.push_back(k);

  Json all = Json::array();
  bool certified = true;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const SignTable t = sign_table(N, ms[i], Rational(0), Rational(1), tolerance);
    for (const auto& s : t.segments) certified = certified && s.certified;
    if (c.json()) {
      all.push_back(to_json(t));
    } else {
      if (i) out << '\n';
      out << render_sign_table(t);
    }
  }
  if (c.json()) out << dump(ms.size() == 1 ? all.front() : all) << '\n';
  return certified ? kExitOk : kExitFailure;
}

int cmd_zero(int N, const std::string& a_text, const Common& c, std::ostream& out, std::ostream& err) {
  if (N < 0) throw UsageError("--N must be >= 0");
  const Rational a = parse_rational("--a", a_text);
  if (a.sign() <= 0 || a >= Rational(1)) throw UsageError("--a must lie in (0,1)");
  ZeroReport z;
  try {
    z = locate_zero(N, a);
  } catch (const SignZero& e) {
    err << e.what() << '\n';
    return kExitFailure;
  }
  if (c.json()) {
    out << dump(to_json(z)) << '\n';
  } else if (z.exists) {
    out.precision(15);
    out << "zero of zeta(s, " << a << ") in (" << -N << ", " << -N + 1 << "): " << z.zero << '\n'
        << "bracket [" << z.bracket.first << ", " << z.bracket.second << "]\n"
        << "residual " << z.residual << ", d/ds " << z.derivative << '\n';
  }
  if (!z.exists) {
    const int s = bernoulli_poly(static_cast<unsigned>(N))(a).sign() *
                  bernoulli_poly(static_cast<unsigned>(N + 1))(a).sign();
    err << "predicate fails: B_" << N << "(a) B_" << N + 1 << "(a) " << signed_word(s) << " at a = " << a
        << ", so zeta(s, a) has no zero in (" << -N << ", " << -N + 1 << ")\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_scan(int nmax, const std::string& step_text, const Common& c, std::ostream& out) {
  if (nmax < 0) throw UsageError("--nmax must be >= 0");
  const Rational step = parse_rational("--a-step", step_text);
  if (step.sign() <= 0 || step >= Rational(1)) throw UsageError("--a-step must lie in (0,1)");
  const auto rows = theorem_scan(nmax, parameter_grid(step));
  bool ok = true;
  for (const auto& row : rows) {
    const bool agrees = !row.boundary && row.count == (row.predicate ? 1 : 0);
    ok = ok && agrees;
    if (c.json()) {
      Json j;
      j["N"] = row.N;
      j["a"] = to_json(row.a);
      j["predicate"] = row.boundary ? Json(nullptr) : Json(row.predicate);
      j["count"] = row.count;
      j["zero"] = row.zero ? float_json(row.zero->zero) : Json(nullptr);
      j["agrees"] = agrees;
      out << dump(j) << '\n';
    } else {
      out << "N=" << row.N << " a=" << row.a << " predicate=" << (row.predicate ? 1 : 0)
          << " count=" << row.count;
      if (row.zero) out << " zero=" << row.zero->zero;
      out << (agrees ? "" : "  MISMATCH") << '\n';
    }
  }
  return ok ? kExitOk : kExitFailure;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opt, const Common& c, std::ostream& out) {
  std::vector<std::string> names;
  if (suite == "all")
    names = {"theorem1", "corollary", "mellin", "lemma"};
  else
    names = {suite};
  bool ok = true;
  Json arr = Json::array();
  for (const auto& name : names) {
    const SuiteResult r = run_suite(name, opt);
    ok = ok && r.passed;
    if (c.json()) {
      Json j;
      j["suite"] = r.name;
      j["passed"] = r.passed;
      j["cases"] = r.cases;
      j["failures"] = r.failures;
      Json w;
      for (const auto& [k, v] : r.worst) w[k] = float_json(v);
      j["worst"] = std::move(w);
      j["notes"] = r.failure_notes;
      arr.push_back(std::move(j));
    } else {
      out << r.name << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.cases << " cases, " << r.failures
          << " failures)\n";
      for (const auto& [k, v] : r.worst) out << "  " << k << " = " << v << '\n';
      for (const auto& n : r.failure_notes) out << "  ! " << n << '\n';
    }
  }
  if (c.json()) out << dump(names.size() == 1 ? arr.front() : arr) << '\n';
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Real zeros of the Hurwitz zeta function", "hzeta"};
  app.require_subcommand(1);

  // bern
  int n = 0;
  std::optional<std::string> at;
  Common bern_c;
  auto* bern = app.add_subcommand("bern", "Bernoulli number B_n, polynomial B_n(x), or B_n(at)");
  bern->add_option("--n", n, "Index n")->required();
  bern->add_option("--at", at, "Evaluation point (p/q or decimal)");
  add_format(bern, bern_c, "text");

  // coeffs
  int N = 0;
  Common coeffs_c;
  auto* coeffs = app.add_subcommand("coeffs", "Coefficient polynomials C_{N,m}(a) of P_N(a,x)");
  coeffs->add_option("--N", N, "N >= 1")->required();
  add_format(coeffs, coeffs_c, "json");

  // roots
  Common roots_c;
  auto* roots = app.add_subcommand("roots", "Certified ordering of the roots of C_{N,m} in (0,1)");
  roots->add_option("--N", N, "N in {2,3,4}")->required();
  add_format(roots, roots_c, "text");

  // tables
  std::optional<int> m;
  std::optional<std::string> tol;
  Common tables_c;
  auto* tables = app.add_subcommand("tables", "Sign tables of C_{N,m} and C_{N,m}' on (0,1)");
  tables->add_option("--N", N, "N in 1..4")->required();
  tables->add_option("--m", m, "Single m (default: all)");
  tables->add_option("--tol", tol, "Isolation width (default 1e-9)");
  add_format(tables, tables_c, "text");

  // zero
  std::string a_text;
  Common zero_c;
  auto* zero = app.add_subcommand("zero", "Locate the real zero of zeta(s,a) in (-N,-N+1)");
  zero->add_option("--N", N, "Interval index N >= 0")->required();
  zero->add_option("--a", a_text, "Parameter a in (0,1)")->required();
  add_format(zero, zero_c, "json");

  // scan
  int nmax = 4;
  std::string step_text = "0.001";
  Common scan_c;
  auto* scan = app.add_subcommand("scan", "Zero counts on (-N,-N+1) for N = 0..nmax over an a-grid");
  scan->add_option("--nmax", nmax, "Largest N")->capture_default_str();
  scan->add_option("--a-step", step_text, "Grid step for a")->capture_default_str();
  add_format(scan, scan_c, "json");

  // verify
  std::string suite;
  SuiteOptions opt;
  std::string verify_step = "0.001";
  Common verify_c;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "theorem1, corollary, mellin, lemma or all")
      ->required()
      ->check(CLI::IsMember({"theorem1", "corollary", "mellin", "lemma", "all"}));
  verify->add_option("--nmax", opt.nmax, "Largest N (theorem1)")->capture_default_str();
  verify->add_option("--mmax", opt.mmax, "Largest M (corollary)")->capture_default_str();
  verify->add_option("--a-step", verify_step, "Grid step for a")->capture_default_str();
  add_format(verify, verify_c, "text");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*bern) return cmd_bern(n, at, bern_c, out);
    if (*coeffs) return cmd_coeffs(N, coeffs_c, out);
    if (*roots) return cmd_roots(N, roots_c, out, err);
    if (*tables) return cmd_tables(N, m, tol, tables_c, out);
    if (*zero) return cmd_zero(N, a_text, zero_c, out, err);
    if (*scan) return cmd_scan(nmax, step_text, scan_c, out);
    if (*verify) {
      if (opt.nmax < 0 || opt.mmax < 0) throw UsageError("--nmax and --mmax must be >= 0");
      opt.a_step = parse_rational("--a-step", verify_step);
      if (opt.a_step.sign() <= 0 || opt.a_step >= Rational(1)) throw UsageError("--a-step must lie in (0,1)");
      return cmd_verify(suite, opt, verify_c, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace hzeta::cli
