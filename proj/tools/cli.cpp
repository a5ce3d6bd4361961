#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "pfmsf/grassmann.hpp"
#include "pfmsf/matrix_io.hpp"
#include "pfmsf/pfaffian.hpp"
#include "pfmsf/uea.hpp"
#include "pfmsf/verify.hpp"

namespace pfmsf::cli {

namespace {

struct PfaffianArgs {
  std::string file;
  std::string ring = "poly";
  std::string method = "expansion";
};

struct VerifyArgs {
  std::string suite = "all";
  int n = 0;
  std::vector<int> pq;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string format = "text";
  bool force = false;
  int trials = 10;
};

struct EigenvalueArgs {
  int n = 0;
  std::string lambda;
  bool symbolic = false;
  std::string via = "pfaffian";
  bool force = false;
};

struct FormsArgs {
  int n = 1;
  std::string mode = "uea";
  std::string form = "omega";
  int power = 1;
  bool force = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int cmd_pfaffian(const PfaffianArgs& a, std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    text = read_file(a.file);
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  try {
    const EntryRing ring = a.ring == "rational" ? EntryRing::kRational : EntryRing::kPolynomial;
    const MatrixFile file = parse_matrix_file(text, ring);
    if (a.method == "msf") {
      if (file.layout == MatrixLayout::kAlternating) {
        err << "error: --method msf needs a coloured or anti-alternating matrix\n";
        return kUsage;
      }
      const auto x = file.layout == MatrixLayout::kColoured
                         ? AntiAlternatingMatrix<MultiPoly>::from_blocks(file.p, file.q, file.a, file.b_upper, file.c_upper)
                         : AntiAlternatingMatrix<MultiPoly>::from_full(file.a, file.n, file.n);
      out << msf_rhs(x).to_string() << "\n";
      return kOk;
    }
    if (ring == EntryRing::kRational) {
      const auto m = rational_alternating_from_file(file);
      out << (a.method == "matchings" ? pfaffian_definitional(m) : pfaffian(m)).to_string() << "\n";
    } else {
      const auto m = alternating_from_file(file);
      out << (a.method == "matchings" ? pfaffian_definitional(m) : pfaffian(m)).to_string() << "\n";
    }
    return kOk;
  } catch (const ParseError& e) {
    err << a.file << ":" << e.line() << ":" << e.column() << ": parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const ShapeError& e) {
    err << a.file << ": shape error";
    if (e.row() != 0) err << " at cell (" << e.row() << "," << e.col() << ")";
    err << ": " << e.what() << "\n";
    return kShape;
  } catch (const DomainError& e) {
    err << a.file << ": error: " << e.what() << "\n";
    return kUsage;
  }
}

void print_text(const VerificationReport& report, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& c : report.checks) width = std::max(width, c.id.size());
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << c.id << "  "
        << std::right << std::fixed << std::setprecision(1) << std::setw(9) << c.millis << " ms";
    if (!c.passed || c.residual != "0") out << "  residual: " << c.residual;
    out << "\n";
  }
  out << "suite " << report.suite << ": " << (report.passed() ? "PASS" : "FAIL") << " (" << report.checks.size()
      << " checks, " << report.failures() << " failed)\n";
}

void print_json(const VerificationReport& report, std::uint64_t seed, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["suite"] = report.suite;
  doc["status"] = report.passed() ? "pass" : "fail";
  doc["seed"] = seed;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    doc["checks"].push_back({{"id", c.id}, {"status", c.passed ? "pass" : "fail"}, {"residual", c.residual}, {"millis", c.millis}});
  }
  out << doc.dump(2) << "\n";
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  SuiteOptions options;
  if (a.n != 0) options.n = a.n;
  if (!a.pq.empty()) options.pq = std::make_pair(a.pq[0], a.pq[1]);
  options.force = a.force;
  options.random_trials = a.trials;
  options.seed = a.seed;
  if (!a.seed_given) {
    options.seed = 1;
    if (const char* env = std::getenv("PFMSF_SEED")) {
      try {
        options.seed = std::stoull(env);
      } catch (const std::exception&) {
        err << "error: PFMSF_SEED must be a nonnegative integer\n";
        return kUsage;
      }
    }
  }
  if (a.force) err << "warning: --force lifts the default size bounds; large runs can take a long time\n";
  try {
    const VerificationReport report = run_suite(a.suite, options);
    if (a.format == "json") {
      print_json(report, options.seed, out);
    } else {
      print_text(report, out);
    }
    return report.passed() ? kOk : kVerificationFailed;
  } catch (const BoundError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

std::vector<Rational> parse_lambda(const std::string& text) {
  std::vector<Rational> values;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    try {
      values.push_back(Rational::parse(item));
    } catch (const ParseError& e) {
      throw ParseError("bad weight component '" + item + "': " + e.what(), start + 1);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return values;
}

int cmd_eigenvalue(const EigenvalueArgs& a, std::ostream& out, std::ostream& err) {
  if (a.n < 1) {
    err << "error: --n must be positive\n";
    return kUsage;
  }
  if (a.n > kUeaMaxN && !a.force) {
    err << "error: n = " << a.n << " exceeds the default bound n <= " << kUeaMaxN << "; pass --force to run it anyway\n";
    return kUsage;
  }
  if (a.symbolic == !a.lambda.empty()) {
    err << "error: give exactly one of --lambda and --symbolic\n";
    return kUsage;
  }
  HighestWeight weight = HighestWeight::symbolic(a.n);
  if (!a.symbolic) {
    std::vector<Rational> values;
    try {
      values = parse_lambda(a.lambda);
    } catch (const ParseError& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
    if (values.size() != static_cast<std::size_t>(a.n)) {
      err << "error: --lambda has " << values.size() << " components, expected " << a.n << "\n";
      return kUsage;
    }
    weight = HighestWeight::numeric(std::move(values));
  }
  const bool want_pf = a.via != "product";
  const bool want_product = a.via != "pfaffian";
  MultiPoly via_pf;
  if (want_pf) via_pf = hc_coefficient(nc_pfaffian(build_canonical_x(a.n).full), weight);
  const std::string product_text = eigenvalue_product_factored(weight, a.n);
  if (!want_product) {
    out << via_pf.to_string() << "\n";
    return kOk;
  }
  if (!want_pf) {
    out << product_text << "\n";
    return kOk;
  }
  const bool equal = via_pf == eigenvalue_product(weight, a.n);
  out << via_pf.to_string() << (equal ? " = " : " != ") << product_text << "\n";
  return equal ? kOk : kVerificationFailed;
}

template <class C>
const GrassmannElement<C>& pick_form(const Forms<C>& f, const std::string& name) {
  if (name == "xi") return f.xi;
  if (name == "theta") return f.theta;
  if (name == "theta-prime") return f.theta_prime;
  if (name == "tau") return f.tau;
  return f.omega;
}

int cmd_forms(const FormsArgs& a, std::ostream& out, std::ostream& err) {
  const int bound = a.mode == "uea" ? kUeaMaxN : kCommutativeMaxSize / 2;
  if (a.n < 1 || (a.n > bound && !a.force)) {
    err << "error: --n must lie in [1, " << bound << "] for mode " << a.mode << " (pass --force to exceed)\n";
    return kUsage;
  }
  if (a.power < 0) {
    err << "error: --power must be nonnegative\n";
    return kUsage;
  }
  if (a.mode == "uea") {
    out << power(pick_form(build_uea_forms(a.n), a.form), a.power).to_string() << "\n";
  } else {
    out << power(pick_form(build_commutative_forms(a.n, a.n), a.form), a.power).to_string() << "\n";
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Pfaffians, minor summation formulae and central elements of U(o(2n))", "pfmsf"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "pfmsf 0.1.0");

  PfaffianArgs pf_args;
  auto* pf = app.add_subcommand("pfaffian", "Pfaffian of the matrix in FILE");
  pf->add_option("file", pf_args.file, "matrix file")->required();
  pf->add_option("--ring", pf_args.ring, "entry ring")->check(CLI::IsMember({"rational", "poly"}));
  pf->add_option("--method", pf_args.method, "expansion (default), matchings, or msf")
      ->check(CLI::IsMember({"expansion", "matchings", "msf"}));

  VerifyArgs v_args;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", v_args.suite, "suite name")->check(CLI::IsMember(suite_names()));
  verify->add_option("--n", v_args.n, "rank n of o(2n)");
  verify->add_option("--pq", v_args.pq, "colouring p q")->expected(2);
  verify->add_option("--seed", v_args.seed, "seed for random test points (default: $PFMSF_SEED or 1)");
  verify->add_option("--format", v_args.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--trials", v_args.trials, "random samples per seeded check")->check(CLI::PositiveNumber);
  verify->add_flag("--force", v_args.force, "lift the default size bounds");

  EigenvalueArgs e_args;
  auto* eig = app.add_subcommand("eigenvalue", "eigenvalue of Pf(X) on the highest weight vector");
  eig->add_option("--n", e_args.n, "rank n")->required();
  auto* lambda = eig->add_option("--lambda", e_args.lambda, "comma separated weight, e.g. \"3,1\"");
  auto* symbolic = eig->add_flag("--symbolic", e_args.symbolic, "use lam[1..n]");
  lambda->excludes(symbolic);
  eig->add_option("--via", e_args.via, "pfaffian, product, or both")->check(CLI::IsMember({"pfaffian", "product", "both"}));
  eig->add_flag("--force", e_args.force, "lift the default size bound");

  FormsArgs f_args;
  auto* forms = app.add_subcommand("forms", "print a power of one of the 2-forms");
  forms->add_option("--n", f_args.n, "rank n");
  forms->add_option("--mode", f_args.mode, "uea or commutative")->check(CLI::IsMember({"uea", "commutative"}));
  forms->add_option("--form", f_args.form, "omega, xi, theta, theta-prime or tau")
      ->check(CLI::IsMember({"omega", "xi", "theta", "theta-prime", "tau"}));
  forms->add_option("--power", f_args.power, "exponent");
  forms->add_flag("--force", f_args.force, "lift the default size bound");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  v_args.seed_given = verify->count("--seed") > 0;

  if (pf->parsed()) return cmd_pfaffian(pf_args, out, err);
  if (verify->parsed()) return cmd_verify(v_args, out, err);
  if (eig->parsed()) return cmd_eigenvalue(e_args, out, err);
  return cmd_forms(f_args, out, err);
}

}  // namespace pfmsf::cli
