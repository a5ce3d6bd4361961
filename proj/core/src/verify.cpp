#include "pfmsf/verify.hpp"

#include <algorithm>
#include <chrono>

#include "pfmsf/grassmann.hpp"
#include "pfmsf/orthogonal.hpp"
#include "pfmsf/pfaffian.hpp"
#include "pfmsf/uea.hpp"

namespace pfmsf {

namespace {

using Outcome = std::pair<bool, std::string>;

std::string truncate(std::string s) {
  if (s.size() > 240) s = s.substr(0, 240) + "...";
  return s;
}

template <class T>
Outcome equal_or_diff(const T& lhs, const T& rhs) {
  if (lhs == rhs) return {true, "0"};
  return {false, truncate((lhs - rhs).to_string())};
}

Outcome from_identity(const IdentityCheck& c) { return {c.holds, c.residual}; }

std::string tag(const std::string& key, int value) { return key + "=" + std::to_string(value); }

std::string pq_tag(int p, int q) { return "p=" + std::to_string(p) + ",q=" + std::to_string(q); }

std::vector<std::pair<int, int>> colourings(int size) {
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p <= size; ++p) out.emplace_back(p, size - p);
  return out;
}

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

void VerificationReport::append(std::vector<CheckResult> more) {
  for (auto& c : more) checks.push_back(std::move(c));
}

void VerificationReport::sort() {
  std::stable_sort(checks.begin(), checks.end(), [](const CheckResult& l, const CheckResult& r) { return l.id < r.id; });
}

CheckResult run_check(std::string id, const std::function<Outcome()>& fn) {
  CheckResult result;
  result.id = std::move(id);
  const auto start = std::chrono::steady_clock::now();
  try {
    auto [ok, residual] = fn();
    result.passed = ok;
    result.residual = std::move(residual);
  } catch (const Error& e) {
    result.passed = false;
    result.residual = std::string("error: ") + e.what();
  }
  result.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<CheckResult> msf_checks(int p, int q) {
  const std::string base = "msf/" + pq_tag(p, q);
  std::vector<CheckResult> out;
  out.push_back(run_check(base + "/expansion", [p, q] {
    const MsfVerification v = verify_msf(static_cast<std::size_t>(p), static_cast<std::size_t>(q));
    return equal_or_diff(v.pfaffian_side, v.minor_sum_side);
  }));
  out.push_back(run_check(base + "/matchings", [p, q] {
    const auto xj = generic_anti_alternating(static_cast<std::size_t>(p), static_cast<std::size_t>(q)).times_j();
    return equal_or_diff(pfaffian(xj), pfaffian_definitional(xj));
  }));
  out.push_back(run_check(base + "/top-form", [p, q] {
    const TopFormPfaffian<MultiPoly> t = pfaffian_via_top_form(build_commutative_forms(p, q));
    return equal_or_diff(t.value, t.reference);
  }));
  return out;
}

std::vector<CheckResult> ncmsf_checks(int n) {
  const std::string base = "ncmsf/" + tag("n", n);
  const CanonicalX x = build_canonical_x(n);
  const UEAElement pf = nc_pfaffian(x.full);
  std::vector<CheckResult> out;
  out.push_back(run_check(base + "/expansion", [&] { return equal_or_diff(pf, nc_msf_rhs(n)); }));
  out.push_back(run_check(base + "/unrestricted-sum", [&] { return equal_or_diff(pf, nc_pfaffian_unrestricted(x.full)); }));
  out.push_back(run_check(base + "/top-form", [n] {
    const TopFormPfaffian<UEAElement> t = pfaffian_via_top_form(build_uea_forms(n));
    return equal_or_diff(t.value, t.reference);
  }));
  out.push_back(run_check(base + "/symbol", [&] {
    const auto commutative = pfaffian(generic_anti_alternating(static_cast<std::size_t>(n), static_cast<std::size_t>(n)).times_j());
    return equal_or_diff(abelianize(pf).homogeneous_part(static_cast<unsigned>(n)), commutative);
  }));
  return out;
}

std::vector<CheckResult> central_checks(int n) {
  const std::string base = "central/" + tag("n", n);
  const UEAElement pf = nc_pfaffian(build_canonical_x(n).full);
  std::vector<CheckResult> out;
  out.push_back(run_check(base + "/commutators", [&]() -> Outcome {
    const CentralityReport r = centrality_check(pf, n);
    if (r.central()) return {true, "0"};
    const auto& [g, c] = r.failures.front();
    return {false, truncate("[" + g.name() + ", Pf] = " + c.to_pretty_string())};
  }));
  out.push_back(run_check(base + "/eigenvalue", [&] {
    const HighestWeight w = HighestWeight::symbolic(n);
    return equal_or_diff(hc_coefficient(pf, w), eigenvalue_product(w, n));
  }));
  return out;
}

std::vector<CheckResult> uea_forms_checks(int n) {
  const std::string base = "forms/uea/" + tag("n", n);
  const Forms<UEAElement> f = build_uea_forms(n);
  std::vector<CheckResult> out;
  out.push_back(run_check(base + "/decomposition", [&] {
    return equal_or_diff(f.omega, f.theta_prime + f.xi * Rational(2) + f.theta);
  }));
  out.push_back(run_check(base + "/sl2", [&]() -> Outcome {
    const Sl2Report r = check_sl2(f);
    for (const IdentityCheck* c : {&r.theta_theta_prime, &r.theta_xi, &r.theta_prime_xi})
      if (!c->holds) return from_identity(*c);
    return {true, "0"};
  }));
  const int u_max = std::max(2, n);
  for (int r = 0; r <= n; ++r)
    for (int u = -1; u <= u_max; ++u)
      out.push_back(run_check(base + "/xi-power/" + tag("r", r) + "/" + tag("u", u),
                              [&f, r, u] { return from_identity(check_xi_power_formula(f, Rational(u), r)); }));
  for (int u = -1; u <= u_max; ++u)
    out.push_back(run_check(base + "/eta/" + tag("u", u), [&f, u] { return from_identity(check_eta_anticommute(f, Rational(u))); }));
  for (int s = 0; s <= n; ++s)
    out.push_back(run_check(base + "/theta-power/" + tag("s", s), [&f, s] { return from_identity(check_theta_powers(f, s, s)); }));
  for (int m = 0; m <= n; ++m)
    out.push_back(run_check(base + "/trinomial/" + tag("m", m), [&f, m] { return from_identity(check_trinomial(f, m)); }));
  out.push_back(run_check(base + "/top-degree", [&]() -> Outcome {
    const auto top = power(f.omega, n);
    if (!(top * f.omega).is_zero()) return {false, "Omega^(n+1) != 0"};
    return {true, "0"};
  }));
  return out;
}

std::vector<CheckResult> commutative_forms_checks(int p, int q) {
  const std::string base = "forms/commutative/" + pq_tag(p, q);
  const Forms<MultiPoly> f = build_commutative_forms(p, q);
  std::vector<CheckResult> out;
  out.push_back(run_check(base + "/decomposition", [&] {
    return equal_or_diff(f.omega, f.theta_prime + f.xi * Rational(2) + f.theta);
  }));
  for (int h = 0; h <= std::min(p, q); ++h)
    out.push_back(run_check(base + "/xi-power/" + tag("h", h), [&f, h] { return from_identity(check_xi_power_formula(f, h)); }));
  for (int s = 0; s <= f.n; ++s)
    out.push_back(run_check(base + "/theta-power/" + tag("s", s), [&f, s] { return from_identity(check_theta_powers(f, s, s)); }));
  for (int m = 0; m <= f.n; ++m)
    out.push_back(run_check(base + "/trinomial/" + tag("m", m), [&f, m] { return from_identity(check_trinomial(f, m)); }));
  return out;
}

std::vector<CheckResult> copfaffian_symbolic_checks(int max_size) {
  std::vector<CheckResult> out;
  for (int size = 2; size <= max_size; size += 2)
    out.push_back(run_check("copfaffian/symbolic/" + tag("size", size), [size]() -> Outcome {
      const auto report = copfaffian_expansion_check(generic_alternating(static_cast<std::size_t>(size)));
      if (report.holds()) return {true, "0"};
      const auto bad = std::count_if(report.residuals.begin(), report.residuals.end(),
                                     [](const auto& r) { return !r.residual.is_zero(); });
      return {false, "expansion fails at " + std::to_string(bad) + " entries"};
    }));
  return out;
}

std::vector<CheckResult> copfaffian_random_checks(std::uint64_t seed, int count, std::size_t size) {
  TestPointGenerator gen(seed);
  std::vector<AlternatingMatrix<Rational>> samples;
  for (int k = 0; k < count; ++k) samples.push_back(gen.alternating(size));
  CheckResult r = run_check("copfaffian/seeded/size=" + std::to_string(size), [&]() -> Outcome {
    for (std::size_t k = 0; k < samples.size(); ++k) {
      if (!copfaffian_expansion_check(samples[k]).holds()) return {false, "sample " + std::to_string(k) + " fails"};
    }
    return {true, "0"};
  });
  return {r};
}

std::vector<CheckResult> minor_inverse_random_checks(std::uint64_t seed, int count, std::size_t min_size, std::size_t max_size) {
  TestPointGenerator gen(seed);
  std::vector<CheckResult> out;
  for (std::size_t size = min_size; size <= max_size; size += 2) {
    std::vector<AlternatingMatrix<Rational>> samples;
    const std::size_t sizes = (max_size - min_size) / 2 + 1;
    const std::size_t index = (size - min_size) / 2;
    const int share = static_cast<int>(static_cast<std::size_t>(count) / sizes + (index < static_cast<std::size_t>(count) % sizes ? 1 : 0));
    for (int k = 0; k < share; ++k) samples.push_back(gen.invertible_alternating(size));
    out.push_back(run_check("minor-inverse/seeded/size=" + std::to_string(size), [&samples, size]() -> Outcome {
      const IndexSet all = IndexSet::range(1, static_cast<int>(size));
      std::size_t tested = 0;
      for (std::size_t k = 0; k < samples.size(); ++k)
        for (std::size_t even = 0; even <= size; even += 2)
          for (const IndexSet& subset : subsets_of_size(all, even)) {
            const MinorInverseSides sides = iw06_relation_check(samples[k], subset);
            if (!sides.holds()) {
              return {false, "sample " + std::to_string(k) + ", I=" + subset.to_string() + ": " + sides.lhs.to_string() +
                                 " != " + sides.rhs.to_string()};
            }
            ++tested;
          }
      return {true, "0 (" + std::to_string(samples.size()) + " matrices, " + std::to_string(tested) + " index sets)"};
    }));
  }
  return out;
}

std::vector<CheckResult> equivariance_checks(std::uint64_t seed, int count, const Matrix<Rational>& s, const std::string& label) {
  TestPointGenerator gen(seed);
  std::vector<std::pair<AlternatingMatrix<Rational>, Matrix<Rational>>> samples;
  for (int k = 0; k < count; ++k) {
    Matrix<Rational> g = gen.orthogonal_element(s);
    samples.emplace_back(gen.alternating(s.rows()), std::move(g));
  }
  std::vector<CheckResult> out;
  out.push_back(run_check("equivariance/" + label + "/orthogonal", [&]() -> Outcome {
    for (std::size_t k = 0; k < samples.size(); ++k)
      if (!preserves_form(samples[k].second, s)) return {false, "sample " + std::to_string(k) + " is not orthogonal"};
    return {true, "0"};
  }));
  out.push_back(run_check("equivariance/" + label + "/pfaffian", [&]() -> Outcome {
    for (std::size_t k = 0; k < samples.size(); ++k) {
      const EquivarianceSides sides = equivariance_check(samples[k].first, samples[k].second);
      if (!sides.holds()) {
        return {false, "sample " + std::to_string(k) + ": " + sides.lhs.to_string() + " != " + sides.rhs.to_string()};
      }
    }
    return {true, "0"};
  }));
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"msf", "ncmsf", "central", "forms", "all"};
  return names;
}

namespace {

std::vector<int> uea_sizes(const SuiteOptions& o) {
  if (o.n) {
    if (*o.n < 1) throw DomainError("--n must be positive");
    if (*o.n > kUeaMaxN && !o.force) {
      throw BoundError("n = " + std::to_string(*o.n) + " exceeds the default bound n <= " + std::to_string(kUeaMaxN) +
                       "; pass --force to run it anyway");
    }
    return {*o.n};
  }
  return {1, 2, 3};
}

std::vector<std::pair<int, int>> commutative_shapes(const SuiteOptions& o, std::vector<int> default_sizes) {
  if (o.pq) {
    const auto [p, q] = *o.pq;
    if (p < 0 || q < 0 || (p + q) % 2 != 0 || p + q == 0) throw ShapeError("--pq needs p + q even and positive");
    if (p + q > kCommutativeMaxSize && !o.force) {
      throw BoundError("p + q = " + std::to_string(p + q) + " exceeds the default bound " +
                       std::to_string(kCommutativeMaxSize) + "; pass --force to run it anyway");
    }
    return {*o.pq};
  }
  if (o.n) {
    if (2 * *o.n > kCommutativeMaxSize && !o.force) {
      throw BoundError("p + q = " + std::to_string(2 * *o.n) + " exceeds the default bound " +
                       std::to_string(kCommutativeMaxSize) + "; pass --force to run it anyway");
    }
    default_sizes = {2 * *o.n};
  }
  std::vector<std::pair<int, int>> out;
  for (int size : default_sizes)
    for (const auto& pq : colourings(size)) out.push_back(pq);
  return out;
}

void run_msf(VerificationReport& report, const SuiteOptions& o) {
  for (const auto& [p, q] : commutative_shapes(o, {2, 4, 6})) report.append(msf_checks(p, q));
  const int trials = std::max(1, o.random_trials);
  report.append(copfaffian_random_checks(o.seed, trials, 6));
  report.append(minor_inverse_random_checks(o.seed + 1, trials, 4, 6));
  report.append(equivariance_checks(o.seed + 2, trials, Matrix<Rational>::anti_identity(4), "J4"));
}

void run_ncmsf(VerificationReport& report, const SuiteOptions& o) {
  for (int n : uea_sizes(o)) report.append(ncmsf_checks(n));
}

void run_central(VerificationReport& report, const SuiteOptions& o) {
  for (int n : uea_sizes(o)) report.append(central_checks(n));
}

void run_forms(VerificationReport& report, const SuiteOptions& o) {
  if (!o.pq) {
    for (int n : uea_sizes(o)) report.append(uea_forms_checks(n));
  }
  for (const auto& [p, q] : commutative_shapes(o, {2, 4, 6, 8})) report.append(commutative_forms_checks(p, q));
}

}  // namespace

VerificationReport run_suite(std::string_view suite, const SuiteOptions& options) {
  VerificationReport report;
  report.suite = std::string(suite);
  if (suite == "msf") {
    run_msf(report, options);
  } else if (suite == "ncmsf") {
    run_ncmsf(report, options);
  } else if (suite == "central") {
    run_central(report, options);
  } else if (suite == "forms") {
    run_forms(report, options);
  } else if (suite == "all") {
    run_msf(report, options);
    run_ncmsf(report, options);
    run_central(report, options);
    run_forms(report, options);
  } else {
    throw DomainError("unknown suite '" + std::string(suite) + "'");
  }
  report.sort();
  return report;
}

}  // namespace pfmsf
