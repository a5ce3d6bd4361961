#include "pfmsf/pfaffian.hpp"

namespace pfmsf {

MinorInverseSides iw06_relation_check(const AlternatingMatrix<Rational>& a, const IndexSet& subset) {
  if (subset.size() % 2 != 0) throw DomainError("index set " + subset.to_string() + " has odd size");
  const IndexSet all = IndexSet::range(1, static_cast<int>(a.size()));
  if (!subset.is_subset_of(all)) throw DomainError("index set " + subset.to_string() + " out of range");
  const Rational pf = pfaffian(a);
  if (pf.is_zero()) throw DomainError("matrix is singular (Pf = 0)");
  const IndexSet rest = subset.complement(all);

  Matrix<Rational> scaled = copfaffian_matrix(a).matrix();
  const Rational inv = pf.inverse();
  for (std::size_t i = 0; i < scaled.rows(); ++i)
    for (std::size_t j = 0; j < scaled.cols(); ++j) scaled(i, j) *= inv;

  MinorInverseSides sides;
  sides.lhs = pfaffian(a.principal(subset)) * inv;
  sides.rhs = Rational(split_sign(all, subset, rest)) * pfaffian(AlternatingMatrix<Rational>(scaled).principal(rest));
  return sides;
}

AntiAlternatingMatrix<MultiPoly> generic_anti_alternating(std::size_t p, std::size_t q) {
  Matrix<MultiPoly> a(p, q);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) a(i, j) = MultiPoly(Var::a(static_cast<int>(i + 1), static_cast<int>(j + 1)));
  std::vector<MultiPoly> b_upper, c_upper;
  for (std::size_t i = 1; i <= p; ++i)
    for (std::size_t j = i + 1; j <= p; ++j) b_upper.emplace_back(Var::b(static_cast<int>(i), static_cast<int>(j)));
  for (std::size_t i = 1; i <= q; ++i)
    for (std::size_t j = i + 1; j <= q; ++j) c_upper.emplace_back(Var::c(static_cast<int>(i), static_cast<int>(j)));
  return AntiAlternatingMatrix<MultiPoly>::from_blocks(p, q, a, b_upper, c_upper);
}

AlternatingMatrix<MultiPoly> generic_alternating(std::size_t size) {
  std::vector<MultiPoly> upper;
  for (std::size_t i = 1; i <= size; ++i)
    for (std::size_t j = i + 1; j <= size; ++j) upper.emplace_back(Var::x(static_cast<int>(i), static_cast<int>(j)));
  return AlternatingMatrix<MultiPoly>::from_upper(size, upper);
}

MsfVerification verify_msf(std::size_t p, std::size_t q) {
  const auto x = generic_anti_alternating(p, q);
  MsfVerification v;
  v.p = p;
  v.q = q;
  v.pfaffian_side = pfaffian(x.times_j());
  v.minor_sum_side = msf_rhs(x);
  return v;
}

}  // namespace pfmsf
