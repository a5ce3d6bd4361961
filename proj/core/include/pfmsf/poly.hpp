#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pfmsf/rational.hpp"

namespace pfmsf {

/// A commutative indeterminate. Names of the form a[i,j], b[i,j], c[i,j],
/// x[i,j] and lam[i] are recognised structurally; anything else is interned
/// and ordered by spelling.
///
/// Variable order: lam[*] < x[*] < the a/b/c family < other names. Within the
/// a/b/c family the order is the PBW order of the o(2n) generators:
/// lowering (c, then a[i,j] with i>j), Cartan (a[i,i]), raising (a[i,j] with
/// i<j, then b).
class Var {
 public:
  static Var named(std::string_view name);
  static Var a(int i, int j);
  static Var b(int i, int j);
  static Var c(int i, int j);
  static Var x(int i, int j);
  static Var lam(int i);

  std::string name() const;

  friend bool operator==(const Var& lhs, const Var& rhs) { return lhs.key_ == rhs.key_ && lhs.other_ == rhs.other_; }
  friend std::strong_ordering operator<=>(const Var& lhs, const Var& rhs);

 private:
  Var(std::uint64_t key, const std::string* other) : key_(key), other_(other) {}

  std::uint64_t key_ = 0;
  const std::string* other_ = nullptr;  // interned spelling for unstructured names
};

/// Sparse exponent vector, sorted by variable, no zero exponents.
using Monomial = std::vector<std::pair<Var, unsigned>>;

unsigned degree(const Monomial& m);
Monomial multiply(const Monomial& lhs, const Monomial& rhs);

/// Graded reverse-lexicographic comparison; true when lhs prints before rhs.
struct MonomialOrder {
  bool operator()(const Monomial& lhs, const Monomial& rhs) const;
};

/// Sparse multivariate polynomial with rational coefficients.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  MultiPoly() = default;
  explicit MultiPoly(const Rational& constant);
  explicit MultiPoly(const Var& v);
  MultiPoly(const Monomial& m, const Rational& coeff);

  /// Grammar: [sign] term {(+|-) term}; term := factor {* factor};
  /// factor := integer[/integer] | name[^k]. Names may carry a bracketed
  /// index suffix like a[1,2].
  static MultiPoly parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  unsigned degree() const;
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  std::vector<Var> variables() const;

  /// Homogeneous part of the given total degree.
  MultiPoly homogeneous_part(unsigned deg) const;

  /// Exact substitution. Throws DomainError listing every unassigned name.
  Rational evaluate(const std::map<Var, Rational>& assignment) const;
  Rational evaluate(const std::map<std::string, Rational>& assignment) const;

  std::string to_string() const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Rational& s);

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend MultiPoly operator*(MultiPoly lhs, const Rational& s) { return lhs *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly rhs) { return rhs *= s; }
  friend MultiPoly operator-(MultiPoly x) { return x *= Rational(-1); }
  friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) { return lhs.terms_ == rhs.terms_; }

  void add_term(const Monomial& m, const Rational& coeff);

 private:
  Terms terms_;
};

}  // namespace pfmsf
