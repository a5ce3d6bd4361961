#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pfmsf/errors.hpp"
#include "pfmsf/matrix.hpp"

namespace pfmsf {

struct CheckResult {
  std::string id;
  bool passed = false;
  std::string residual;  // "0" on success
  double millis = 0.0;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;  // sorted by id

  bool passed() const;
  std::size_t failures() const;
  void append(std::vector<CheckResult> more);
  void sort();
};

/// A request outside the default size bounds.
class BoundError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kUeaMaxN = 3;
inline constexpr int kCommutativeMaxSize = 8;

struct SuiteOptions {
  std::optional<int> n;                   // default: every n up to the bound
  std::optional<std::pair<int, int>> pq;  // default: p + q in {2, 4, 6}
  std::uint64_t seed = 1;
  bool force = false;
  int random_trials = 10;
};

/// Times fn and turns a thrown pfmsf::Error into a failed check.
CheckResult run_check(std::string id, const std::function<std::pair<bool, std::string>()>& fn);

// Building blocks shared by the command line and the acceptance suite.
std::vector<CheckResult> msf_checks(int p, int q);
std::vector<CheckResult> ncmsf_checks(int n);
std::vector<CheckResult> central_checks(int n);
std::vector<CheckResult> uea_forms_checks(int n);
std::vector<CheckResult> commutative_forms_checks(int p, int q);
std::vector<CheckResult> copfaffian_symbolic_checks(int max_size);
std::vector<CheckResult> copfaffian_random_checks(std::uint64_t seed, int count, std::size_t size);
/// Each matrix is tested on every even-size subset of its indices.
std::vector<CheckResult> minor_inverse_random_checks(std::uint64_t seed, int count, std::size_t min_size, std::size_t max_size);
std::vector<CheckResult> equivariance_checks(std::uint64_t seed, int count, const Matrix<Rational>& s, const std::string& label);

/// msf, ncmsf, central, forms or all. Throws BoundError outside the default
/// bounds unless forced and DomainError on an unknown suite.
VerificationReport run_suite(std::string_view suite, const SuiteOptions& options);

const std::vector<std::string>& suite_names();

}  // namespace pfmsf
