#include <gtest/gtest.h>

#include "pfmsf/orthogonal.hpp"
#include "pfmsf/pfaffian.hpp"

using namespace pfmsf;

namespace {

MultiPoly P(const char* text) { return MultiPoly::parse(text); }

Matrix<Rational> rational_matrix(std::size_t rows, std::size_t cols, std::initializer_list<long> values) {
  Matrix<Rational> m(rows, cols);
  auto it = values.begin();
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(*it++);
  return m;
}

const Matrix<Rational> kTridiagonalS = rational_matrix(4, 4, {2, 1, 0, 0, 1, 3, 1, 0, 0, 1, 4, 1, 0, 0, 1, 5});

}  // namespace

TEST(AlternatingMatrix, RejectsAsymmetricEntries) {
  Matrix<Rational> m(2, 2);
  m(0, 1) = 1;
  m(1, 0) = 1;
  try {
    AlternatingMatrix<Rational> a(m);
    FAIL();
  } catch (const ShapeError& e) {
    EXPECT_EQ(e.row(), 2u);
    EXPECT_EQ(e.col(), 1u);
  }
  Matrix<Rational> d(2, 2);
  d(1, 1) = 3;
  EXPECT_THROW(AlternatingMatrix<Rational>{d}, ShapeError);
}

TEST(Pfaffian, SmallCases) {
  EXPECT_EQ(pfaffian(AlternatingMatrix<Rational>(Matrix<Rational>(0, 0))), Rational(1));
  EXPECT_EQ(pfaffian_definitional(AlternatingMatrix<Rational>(Matrix<Rational>(0, 0))), Rational(1));
  EXPECT_EQ(pfaffian(AlternatingMatrix<Rational>::from_upper(2, {5})), Rational(5));
  EXPECT_EQ(pfaffian_definitional(AlternatingMatrix<MultiPoly>::from_upper(2, {P("x")})), P("x"));
  EXPECT_EQ(pfaffian_definitional(generic_alternating(4)), P("x[1,2]*x[3,4] - x[1,3]*x[2,4] + x[1,4]*x[2,3]"));
  EXPECT_THROW(pfaffian(generic_alternating(3)), ShapeError);
  EXPECT_THROW(pfaffian_definitional(generic_alternating(5)), ShapeError);
}

TEST(Pfaffian, RecursiveMatchesMatchingSum) {
  for (std::size_t size = 0; size <= 8; size += 2) {
    const auto a = generic_alternating(size);
    EXPECT_EQ(pfaffian(a), pfaffian_definitional(a)) << size;
  }
  TestPointGenerator gen(21);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = gen.alternating(8);
    EXPECT_EQ(pfaffian(a), pfaffian_definitional(a));
  }
}

TEST(Pfaffian, SquareIsDeterminant) {
  TestPointGenerator gen(4);
  for (std::size_t size = 2; size <= 8; size += 2)
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = gen.alternating(size);
      const Rational pf = pfaffian(a);
      EXPECT_EQ(pf * pf, determinant(a.matrix()));
    }
  const auto a = generic_alternating(4);
  const MultiPoly pf = pfaffian(a);
  EXPECT_EQ(pf * pf, column_determinant(a.matrix()));
}

TEST(CofactorPfaffian, Examples) {
  const auto a4 = generic_alternating(4);
  EXPECT_TRUE(cofactor_pfaffian(a4, 2, 2).is_zero());
  EXPECT_EQ(cofactor_pfaffian(generic_alternating(2), 1, 2), MultiPoly(Rational(1)));
  EXPECT_EQ(cofactor_pfaffian(a4, 1, 3), P("-x[2,4]"));
  EXPECT_THROW(cofactor_pfaffian(a4, 0, 1), DomainError);
  EXPECT_THROW(cofactor_pfaffian(a4, 1, 5), DomainError);
}

TEST(CofactorPfaffian, AntisymmetricAndExpands) {
  for (std::size_t size = 2; size <= 6; size += 2) {
    const auto a = generic_alternating(size);
    const auto gamma = copfaffian_matrix(a);
    for (int i = 1; i <= static_cast<int>(size); ++i)
      for (int j = 1; j <= static_cast<int>(size); ++j) EXPECT_EQ(gamma.entry(j, i), -gamma.entry(i, j));
    EXPECT_TRUE(copfaffian_expansion_check(a).holds()) << size;
  }
  TestPointGenerator gen(100);
  for (int trial = 0; trial < 20; ++trial) EXPECT_TRUE(copfaffian_expansion_check(gen.alternating(8)).holds());
}

TEST(MinorInverseRelation, Examples) {
  TestPointGenerator gen(9);
  const auto a4 = gen.invertible_alternating(4);
  const MinorInverseSides full = iw06_relation_check(a4, IndexSet::range(1, 4));
  EXPECT_EQ(full.lhs, Rational(1));
  EXPECT_TRUE(full.holds());
  const MinorInverseSides empty = iw06_relation_check(a4, {});
  EXPECT_EQ(empty.lhs, pfaffian(a4).inverse());
  EXPECT_TRUE(empty.holds());
  const auto a6 = gen.invertible_alternating(6);
  EXPECT_TRUE(iw06_relation_check(a6, {1, 2}).holds());
  EXPECT_THROW(iw06_relation_check(a6, {1}), DomainError);
  EXPECT_THROW(iw06_relation_check(AlternatingMatrix<Rational>(Matrix<Rational>(4, 4)), {1, 2}), DomainError);
}

TEST(AntiAlternatingMatrix, BlocksRoundTrip) {
  const auto x = generic_anti_alternating(2, 4);
  const auto y = AntiAlternatingMatrix<MultiPoly>::from_full(x.full(), 2, 4);
  EXPECT_EQ(y.full(), x.full());
  // X(-k,-l) = -a_{l,k} and b_{i,k} at (i, 2n+1-k).
  const Matrix<MultiPoly> full = x.full();
  EXPECT_EQ(full(5, 5), P("-a[1,1]"));
  EXPECT_EQ(full(0, 4), P("b[1,2]"));
  EXPECT_EQ(full(4, 0), P("c[1,2]"));
  EXPECT_TRUE(full(0, 5).is_zero());
  // tX J + J X = 0.
  const auto j = Matrix<MultiPoly>::anti_identity(6);
  Matrix<MultiPoly> t(6, 6);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) t(r, c) = full(c, r);
  EXPECT_TRUE((t * j + j * full).is_zero());
}

TEST(AntiAlternatingMatrix, FromFullNamesViolatedCell) {
  Matrix<Rational> m(4, 4);
  m(0, 3) = 1;  // b_{1,1} must vanish
  try {
    AntiAlternatingMatrix<Rational>::from_full(m, 2, 2);
    FAIL();
  } catch (const ShapeError& e) {
    EXPECT_EQ(e.row(), 1u);
    EXPECT_EQ(e.col(), 4u);
  }
  EXPECT_THROW(AntiAlternatingMatrix<Rational>::from_full(Matrix<Rational>(4, 4), 1, 2), ShapeError);
}

TEST(Msf, Examples) {
  EXPECT_EQ(msf_rhs(generic_anti_alternating(1, 1)), P("a[1,1]"));
  const MultiPoly square = msf_rhs(generic_anti_alternating(2, 2));
  EXPECT_EQ(square.to_string(), "a[1,1]*a[2,2] - a[2,1]*a[1,2] + c[1,2]*b[1,2]");
  EXPECT_EQ(pfaffian(generic_anti_alternating(2, 2).times_j()).to_string(), square.to_string());
  // p=1, q=3 expanded by hand from the matching sum.
  EXPECT_EQ(msf_rhs(generic_anti_alternating(1, 3)), P("a[1,1]*c[2,3] - a[1,2]*c[1,3] + a[1,3]*c[1,2]"));
}

TEST(Msf, HoldsForAllSmallColourings) {
  for (std::size_t size = 2; size <= 6; size += 2)
    for (std::size_t p = 0; p <= size; ++p) {
      const MsfVerification v = verify_msf(p, size - p);
      EXPECT_TRUE(v.holds()) << p << "," << size - p;
    }
}

TEST(Orthogonal, CayleyExamples) {
  const auto j2 = Matrix<Rational>::anti_identity(2);
  EXPECT_EQ(cayley_orthogonal(Matrix<Rational>(2, 2), j2), Matrix<Rational>::identity(2));
  Matrix<Rational> y(2, 2);
  y(0, 0) = Rational(1, 3);
  y(1, 1) = Rational(-1, 3);
  const Matrix<Rational> g = cayley_orthogonal(y, j2);
  EXPECT_EQ(g(0, 0), Rational(1, 2));
  EXPECT_EQ(g(1, 1), Rational(2));
  EXPECT_TRUE(g(0, 1).is_zero());
  EXPECT_TRUE(preserves_form(g, j2));
  Matrix<Rational> bad(2, 2);
  bad(0, 1) = 1;
  EXPECT_THROW(cayley_orthogonal(bad, j2), DomainError);
  Matrix<Rational> singular(2, 2);
  singular(0, 0) = -1;
  singular(1, 1) = 1;
  EXPECT_THROW(cayley_orthogonal(singular, j2), DomainError);
}

TEST(Orthogonal, RandomCayleyImagesPreserveForm) {
  TestPointGenerator gen(31);
  for (const auto& s : {Matrix<Rational>::anti_identity(4), Matrix<Rational>::anti_identity(6), kTridiagonalS})
    for (int trial = 0; trial < 10; ++trial) EXPECT_TRUE(preserves_form(gen.orthogonal_element(s), s));
}

TEST(Orthogonal, Equivariance) {
  TestPointGenerator gen(2);
  const auto a = gen.alternating(4);
  const EquivarianceSides id = equivariance_check(a, Matrix<Rational>::identity(4));
  EXPECT_EQ(id.lhs, pfaffian(a));
  EXPECT_TRUE(id.holds());
  const auto a2 = AlternatingMatrix<Rational>::from_upper(2, {7});
  const EquivarianceSides swap = equivariance_check(a2, Matrix<Rational>::anti_identity(2));
  EXPECT_EQ(swap.lhs, Rational(-7));
  EXPECT_TRUE(swap.holds());
  for (const auto& s : {Matrix<Rational>::anti_identity(4), Matrix<Rational>::anti_identity(8), kTridiagonalS})
    for (int trial = 0; trial < 5; ++trial)
      EXPECT_TRUE(equivariance_check(gen.alternating(s.rows()), gen.orthogonal_element(s)).holds());
}

TEST(Orthogonal, Membership) {
  const auto j2 = Matrix<Rational>::anti_identity(2);
  EXPECT_TRUE(lie_algebra_membership_check(Matrix<Rational>(2, 2), j2).in_algebra);
  Matrix<Rational> h(2, 2);
  h(0, 0) = 3;
  h(1, 1) = -3;
  const MembershipReport diag = lie_algebra_membership_check(h, j2);
  EXPECT_TRUE(diag.in_algebra);
  EXPECT_TRUE(diag.agree());
  Matrix<Rational> b11(4, 4);
  b11(0, 3) = 1;
  const MembershipReport r = lie_algebra_membership_check(b11, Matrix<Rational>::anti_identity(4));
  EXPECT_FALSE(r.in_algebra);
  EXPECT_TRUE(r.agree());
  TestPointGenerator gen(8);
  for (int trial = 0; trial < 10; ++trial) {
    const MembershipReport m = lie_algebra_membership_check(gen.lie_algebra_element(kTridiagonalS), kTridiagonalS);
    EXPECT_TRUE(m.in_algebra);
    EXPECT_TRUE(m.agree());
  }
  EXPECT_THROW(lie_algebra_membership_check(h, Matrix<Rational>(2, 2)), DomainError);
}

TEST(Orthogonal, RealizationAndGeneratorMatrix) {
  const auto j4 = Matrix<Rational>::anti_identity(4);
  TestPointGenerator gen(12);
  const Matrix<Rational> x = gen.lie_algebra_element(j4);
  EXPECT_EQ(realization_pfaffian(x, j4, RealizationProduct::kTimesS),
            realization_pfaffian(x, j4, RealizationProduct::kTimesSInverse));
  const Matrix<Rational> y = gen.lie_algebra_element(kTridiagonalS);
  EXPECT_NO_THROW(realization_pfaffian(y, kTridiagonalS, RealizationProduct::kTimesSInverse));
  EXPECT_TRUE(generator_matrix_alternating(j4));
  EXPECT_TRUE(generator_matrix_alternating(kTridiagonalS));
  for (const auto& s : {j4, kTridiagonalS}) EXPECT_TRUE(adjoint_action_check(s, gen.orthogonal_element(s)));
}

TEST(Determinant, ColumnDeterminantMatchesElimination) {
  TestPointGenerator gen(77);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix<Rational> m(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) m(r, c) = gen.small_integer();
    EXPECT_EQ(column_determinant(m), determinant(m));
  }
}
