#pragma once

#include <cstdint>
#include <random>

#include "pfmsf/matrix.hpp"
#include "pfmsf/pfaffian.hpp"

namespace pfmsf {

/// g = (I - Y)(I + Y)^{-1}. Requires Y in o(S) and I + Y invertible.
Matrix<Rational> cayley_orthogonal(const Matrix<Rational>& y, const Matrix<Rational>& s);

/// tg S g == S.
bool preserves_form(const Matrix<Rational>& g, const Matrix<Rational>& s);

struct EquivarianceSides {
  Rational lhs;  // Pf(g A tg)
  Rational rhs;  // det(g) Pf(A)
  bool holds() const { return lhs == rhs; }
};

EquivarianceSides equivariance_check(const AlternatingMatrix<Rational>& a, const Matrix<Rational>& g);

struct MembershipReport {
  bool in_algebra = false;          // tX S + S X == 0
  bool right_inverse_alternating = false;  // X S^{-1} alternating
  bool agree() const { return in_algebra == right_inverse_alternating; }
};

/// Throws DomainError when S is singular.
MembershipReport lie_algebra_membership_check(const Matrix<Rational>& x, const Matrix<Rational>& s);

/// Which product turns a matrix of o(S) into an alternating one. The two
/// agree for S = J_{2n} since J_{2n} is its own inverse.
enum class RealizationProduct { kTimesS, kTimesSInverse };

/// Pf(X S) or Pf(X S^{-1}); throws ShapeError if that product is not alternating.
Rational realization_pfaffian(const Matrix<Rational>& x, const Matrix<Rational>& s, RealizationProduct product);

/// The matrix of generators X_{i,j} = E_{i,j} - S^{-1} tE_{i,j} S of o(S),
/// each entry a 2n x 2n rational matrix. Checks that (X S)_{i,j} + (S tX)_{i,j}
/// vanishes for every i, j.
bool generator_matrix_alternating(const Matrix<Rational>& s);

/// For g in O(S): g X_{i,j} g^{-1} == sum_{a,b} (tg)_{i,a} X_{a,b} (tg^{-1})_{b,j}.
bool adjoint_action_check(const Matrix<Rational>& s, const Matrix<Rational>& g);

/// Seeded test points. Entries are integers drawn uniformly from [-9, 9].
class TestPointGenerator {
 public:
  explicit TestPointGenerator(std::uint64_t seed) : rng_(seed) {}

  Rational small_integer();
  AlternatingMatrix<Rational> alternating(std::size_t size);
  /// Alternating with nonzero Pfaffian.
  AlternatingMatrix<Rational> invertible_alternating(std::size_t size);
  /// Random Y = A S in o(S), A alternating, redrawn until I + Y is invertible.
  Matrix<Rational> lie_algebra_element(const Matrix<Rational>& s);
  /// Cayley image of a random element of o(S).
  Matrix<Rational> orthogonal_element(const Matrix<Rational>& s);

 private:
  std::mt19937_64 rng_;
};

}  // namespace pfmsf
