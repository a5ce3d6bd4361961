#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pfmsf/matrix.hpp"
#include "pfmsf/pfaffian.hpp"
#include "pfmsf/poly.hpp"
#include "pfmsf/rational.hpp"

namespace pfmsf {

enum class GeneratorKind : std::uint8_t { kC = 0, kA = 1, kB = 2 };
enum class GeneratorClass : std::uint8_t { kLowering = 0, kCartan = 1, kRaising = 2 };

/// Canonical basis element of o(2n): a[i,j] = X_{i,j}, b[i,j] = X_{i,-j} and
/// c[i,j] = X_{-j,i} with i<j for b and c.
///
/// The total order is the PBW order: every lowering generator (c, then a[i,j]
/// with i>j) precedes every Cartan generator a[i,i], which precedes every
/// raising generator (a[i,j] with i<j, then b). Inside a class generators
/// are ordered by (kind, i, j) with c < a < b.
class Generator {
 public:
  static Generator a(int i, int j);
  static Generator b(int i, int j);
  static Generator c(int i, int j);

  GeneratorKind kind() const { return static_cast<GeneratorKind>((key_ >> 16) & 0xff); }
  GeneratorClass generator_class() const { return static_cast<GeneratorClass>(key_ >> 24); }
  int row() const { return static_cast<int>((key_ >> 8) & 0xff); }
  int col() const { return static_cast<int>(key_ & 0xff); }
  std::uint32_t key() const { return key_; }

  /// (i, j) with this generator equal to X_{i,j}, signed indices.
  std::pair<int, int> signed_indices() const;
  std::string name() const;
  Var as_variable() const;

  friend bool operator==(Generator, Generator) = default;
  friend auto operator<=>(Generator lhs, Generator rhs) { return lhs.key_ <=> rhs.key_; }

 private:
  explicit Generator(std::uint32_t key) : key_(key) {}
  std::uint32_t key_;
};

/// The n(2n-1) canonical generators in PBW order.
std::vector<Generator> canonical_basis(int n);

/// X_{i,j} for signed i, j: nothing when j = -i, otherwise a sign and a
/// canonical generator (X_{-j,-i} = -X_{i,j}).
struct SignedGenerator {
  int sign;
  Generator generator;
};
std::optional<SignedGenerator> canonical_entry(int i, int j);

/// Weakly increasing word of generators.
using PBWMonomial = std::vector<Generator>;

struct PBWOrder {
  bool operator()(const PBWMonomial& lhs, const PBWMonomial& rhs) const;
};

/// Element of U(o(2n)) in the PBW basis with rational coefficients.
class UEAElement {
 public:
  using Terms = std::map<PBWMonomial, Rational, PBWOrder>;

  UEAElement() = default;
  explicit UEAElement(const Rational& scalar);
  explicit UEAElement(Generator g);
  /// Normal-orders the product of the given word.
  static UEAElement from_word(std::span<const Generator> word, const Rational& coeff = Rational(1));

  /// Inverse of to_string(). Factors within a term may come in any order;
  /// the term is normal ordered on input.
  static UEAElement parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  unsigned degree() const;
  Rational coefficient(const PBWMonomial& m) const;

  /// "coeff * c[1,2]^1 a[1,1]^2 b[1,2]^1 + ..." with factors in PBW order.
  std::string to_string() const;
  /// Polynomial-style rendering, e.g. "a[1,1]*a[2,2] + a[2,2] - a[2,1]*a[1,2]".
  std::string to_pretty_string() const;

  UEAElement& operator+=(const UEAElement& rhs);
  UEAElement& operator-=(const UEAElement& rhs);
  UEAElement& operator*=(const Rational& s);

  friend UEAElement operator+(UEAElement lhs, const UEAElement& rhs) { return lhs += rhs; }
  friend UEAElement operator-(UEAElement lhs, const UEAElement& rhs) { return lhs -= rhs; }
  friend UEAElement operator-(UEAElement x) { return x *= Rational(-1); }
  friend UEAElement operator*(const UEAElement& lhs, const UEAElement& rhs);
  friend UEAElement operator*(UEAElement lhs, const Rational& s) { return lhs *= s; }
  friend UEAElement operator*(const Rational& s, UEAElement rhs) { return rhs *= s; }
  friend bool operator==(const UEAElement& lhs, const UEAElement& rhs) { return lhs.terms_ == rhs.terms_; }

  void add_term(const PBWMonomial& m, const Rational& coeff);

 private:
  Terms terms_;
};

/// The element X_{i,j} for signed indices in [-n, n].
UEAElement generator(int i, int j, int n);

/// [g, h] from the o(2n) commutation relations, as a combination of
/// canonical generators.
UEAElement bracket(Generator g, Generator h);

/// PBW expansion of the product of a word of generators.
UEAElement normal_order(std::span<const Generator> word);

/// gh - hg, normal ordered.
UEAElement commutator(const UEAElement& x, const UEAElement& y);

/// The canonical matrix X = (X_{i,j}) over U(o(2n)) and its colouring blocks.
struct CanonicalX {
  int n = 0;
  Matrix<UEAElement> full;          // position-indexed 2n x 2n
  Matrix<UEAElement> a;             // a_{i,j}
  AlternatingMatrix<UEAElement> b;  // b_{i,j} = X_{i,-j}
  AlternatingMatrix<UEAElement> c;  // c_{i,j} = X_{-j,i}
};

CanonicalX build_canonical_x(int n);

/// Pfaffian of M J_{2n} using the ordered-pair sum
/// (1/n!) sum_{sigma(2i-1) < sigma(2i)} sgn(sigma) A_{s1,s2} ... A_{s(2n-1),s(2n)}.
/// Throws ShapeError unless M J_{2n} is alternating.
UEAElement nc_pfaffian(const Matrix<UEAElement>& m);

/// Same Pfaffian from the full (2n)! sum with prefactor 1/(2^n n!).
UEAElement nc_pfaffian_unrestricted(const Matrix<UEAElement>& m);

/// Column determinant of the minor a[rows, cols] with the diagonal shift
/// top_shift - (t-1) added to entry (s,t) whenever rows[s] == cols[t].
UEAElement shifted_column_determinant(const Matrix<UEAElement>& a, const IndexSet& rows, const IndexSet& cols,
                                      const Rational& top_shift);

/// sum over I, J in [n], |I| = |J| = 2k, of
/// sgn(I^c, I) sgn(J^c, J) det(a[I^c, J^c] + rho(|J^c|)) Pf(c_J) Pf(b_I).
UEAElement nc_msf_rhs(int n);

struct CentralityReport {
  std::vector<std::pair<Generator, UEAElement>> failures;  // generator, [g, z]
  bool central() const { return failures.empty(); }
};

CentralityReport centrality_check(const UEAElement& z, int n);

/// Highest weight, numeric or symbolic in lam[1..n].
class HighestWeight {
 public:
  static HighestWeight numeric(std::vector<Rational> lambda);
  static HighestWeight symbolic(int n);

  int rank() const { return rank_; }
  bool is_symbolic() const { return symbolic_; }
  MultiPoly component(int i) const;

 private:
  int rank_ = 0;
  bool symbolic_ = false;
  std::vector<Rational> values_;
};

/// Coefficient of v_lambda in z v_lambda: keeps the monomials built only from
/// Cartan generators and evaluates a[i,i] at lambda_i.
MultiPoly hc_coefficient(const UEAElement& z, const HighestWeight& weight);

/// prod_{i=1}^{n} (lambda_i + n - i). Throws DomainError on rank mismatch.
MultiPoly eigenvalue_product(const HighestWeight& weight, int n);

/// The same product as an unexpanded string, e.g. "(lam[1]+2)*(lam[2]+1)*lam[3]".
std::string eigenvalue_product_factored(const HighestWeight& weight, int n);

/// Sends every generator to the commuting indeterminate of the same name.
MultiPoly abelianize(const UEAElement& z);

}  // namespace pfmsf
