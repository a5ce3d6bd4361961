#include "pfmsf/orthogonal.hpp"

namespace pfmsf {

namespace {

using RMatrix = Matrix<Rational>;

void require_square_pair(const RMatrix& x, const RMatrix& s) {
  if (!x.square() || !s.square() || x.rows() != s.rows()) throw ShapeError("matrix sizes do not match");
}

bool is_alternating(const RMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (m(j, i) != -m(i, j)) return false;
  return true;
}

RMatrix unit(std::size_t size, std::size_t i, std::size_t j) {
  RMatrix e(size, size);
  e(i, j) = Rational(1);
  return e;
}

}  // namespace

Matrix<Rational> cayley_orthogonal(const Matrix<Rational>& y, const Matrix<Rational>& s) {
  require_square_pair(y, s);
  if (!(y.transpose() * s + s * y).is_zero()) throw DomainError("Y is not in o(S)");
  const RMatrix id = RMatrix::identity(y.rows());
  return (id - y) * inverse(id + y);
}

bool preserves_form(const Matrix<Rational>& g, const Matrix<Rational>& s) { return g.transpose() * s * g == s; }

EquivarianceSides equivariance_check(const AlternatingMatrix<Rational>& a, const Matrix<Rational>& g) {
  if (!g.square() || g.rows() != a.size()) throw ShapeError("matrix sizes do not match");
  EquivarianceSides sides;
  sides.lhs = pfaffian(AlternatingMatrix<Rational>(g * a.matrix() * g.transpose()));
  sides.rhs = determinant(g) * pfaffian(a);
  return sides;
}

MembershipReport lie_algebra_membership_check(const Matrix<Rational>& x, const Matrix<Rational>& s) {
  require_square_pair(x, s);
  MembershipReport report;
  report.in_algebra = (x.transpose() * s + s * x).is_zero();
  report.right_inverse_alternating = is_alternating(x * inverse(s));
  return report;
}

Rational realization_pfaffian(const Matrix<Rational>& x, const Matrix<Rational>& s, RealizationProduct product) {
  require_square_pair(x, s);
  const RMatrix m = product == RealizationProduct::kTimesS ? x * s : x * inverse(s);
  return pfaffian(AlternatingMatrix<Rational>(m));
}

bool generator_matrix_alternating(const Matrix<Rational>& s) {
  const std::size_t size = s.rows();
  const RMatrix s_inv = inverse(s);
  std::vector<RMatrix> gens(size * size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) gens[i * size + j] = unit(size, i, j) - s_inv * unit(size, j, i) * s;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      RMatrix sum(size, size);
      for (std::size_t k = 0; k < size; ++k) {
        if (!s(k, j).is_zero()) sum += s(k, j) * gens[i * size + k];
        if (!s(i, k).is_zero()) sum += s(i, k) * gens[j * size + k];
      }
      if (!sum.is_zero()) return false;
    }
  return true;
}

bool adjoint_action_check(const Matrix<Rational>& s, const Matrix<Rational>& g) {
  require_square_pair(g, s);
  const std::size_t size = s.rows();
  const RMatrix s_inv = inverse(s);
  const RMatrix g_inv = inverse(g);
  const RMatrix gt = g.transpose();
  const RMatrix gt_inv = g_inv.transpose();
  std::vector<RMatrix> gens(size * size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) gens[i * size + j] = unit(size, i, j) - s_inv * unit(size, j, i) * s;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      const RMatrix lhs = g * gens[i * size + j] * g_inv;
      RMatrix rhs(size, size);
      for (std::size_t a = 0; a < size; ++a) {
        if (gt(i, a).is_zero()) continue;
        for (std::size_t b = 0; b < size; ++b) {
          const Rational w = gt(i, a) * gt_inv(b, j);
          if (!w.is_zero()) rhs += w * gens[a * size + b];
        }
      }
      if (!(lhs == rhs)) return false;
    }
  return true;
}

Rational TestPointGenerator::small_integer() {
  std::uniform_int_distribution<int> dist(-9, 9);
  return Rational(dist(rng_));
}

AlternatingMatrix<Rational> TestPointGenerator::alternating(std::size_t size) {
  std::vector<Rational> upper;
  for (std::size_t k = 0; k < size * (size ? size - 1 : 0) / 2; ++k) upper.push_back(small_integer());
  return AlternatingMatrix<Rational>::from_upper(size, upper);
}

AlternatingMatrix<Rational> TestPointGenerator::invertible_alternating(std::size_t size) {
  while (true) {
    auto a = alternating(size);
    if (!pfaffian(a).is_zero()) return a;
  }
}

Matrix<Rational> TestPointGenerator::lie_algebra_element(const Matrix<Rational>& s) {
  const RMatrix id = RMatrix::identity(s.rows());
  while (true) {
    RMatrix y = alternating(s.rows()).matrix() * s;
    if (!determinant(id + y).is_zero()) return y;
  }
}

Matrix<Rational> TestPointGenerator::orthogonal_element(const Matrix<Rational>& s) {
  return cayley_orthogonal(lie_algebra_element(s), s);
}

}  // namespace pfmsf
