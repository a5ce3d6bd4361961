#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "pfmsf/index_set.hpp"
#include "pfmsf/matrix.hpp"
#include "pfmsf/poly.hpp"
#include "pfmsf/ring.hpp"

namespace pfmsf {

/// Square matrix with A(j,i) = -A(i,j) and zero diagonal. Odd sizes are
/// representable; the Pfaffian routines reject them.
template <Ring R>
class AlternatingMatrix {
 public:
  AlternatingMatrix() = default;

  /// Throws ShapeError naming the first offending cell (1-based).
  explicit AlternatingMatrix(Matrix<R> m) : m_(std::move(m)) {
    if (!m_.square()) throw ShapeError("alternating matrix must be square");
    for (std::size_t i = 0; i < m_.rows(); ++i) {
      if (!m_(i, i).is_zero()) throw ShapeError("nonzero diagonal entry", i + 1, i + 1);
      for (std::size_t j = i + 1; j < m_.cols(); ++j) {
        if (!(m_(j, i) == -m_(i, j))) throw ShapeError("entry is not the negative of its transpose", j + 1, i + 1);
      }
    }
  }

  /// Builds from the strict upper triangle listed row by row:
  /// (1,2), (1,3), ..., (1,m), (2,3), ...
  static AlternatingMatrix from_upper(std::size_t size, const std::vector<R>& upper) {
    if (upper.size() != size * (size - (size ? 1 : 0)) / 2) throw ShapeError("wrong number of upper-triangle entries");
    Matrix<R> m(size, size);
    std::size_t k = 0;
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = i + 1; j < size; ++j) {
        m(i, j) = upper[k];
        m(j, i) = -upper[k];
        ++k;
      }
    AlternatingMatrix a;
    a.m_ = std::move(m);
    return a;
  }

  std::size_t size() const { return m_.rows(); }
  /// 1-based entry access.
  const R& entry(int i, int j) const { return m_(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)); }
  const Matrix<R>& matrix() const { return m_; }

  AlternatingMatrix principal(const IndexSet& set) const {
    AlternatingMatrix a;
    a.m_ = m_.principal_submatrix(set);
    return a;
  }

 private:
  Matrix<R> m_;
};

namespace detail {

template <Ring R>
void require_even(const AlternatingMatrix<R>& a) {
  if (a.size() % 2 != 0) throw ShapeError("Pfaffian of an odd-size matrix (" + std::to_string(a.size()) + ")");
}

template <Ring R>
void enumerate_matchings(const AlternatingMatrix<R>& a, std::vector<int>& seq, std::vector<bool>& used, R& total) {
  const int size = static_cast<int>(a.size());
  int first = 0;
  while (first < size && used[static_cast<std::size_t>(first)]) ++first;
  if (first == size) {
    R term = ring_one<R>();
    for (std::size_t k = 0; k < seq.size(); k += 2) term = term * a.entry(seq[k] + 1, seq[k + 1] + 1);
    total = permutation_sign(seq) > 0 ? total + term : total - term;
    return;
  }
  used[static_cast<std::size_t>(first)] = true;
  for (int partner = first + 1; partner < size; ++partner) {
    if (used[static_cast<std::size_t>(partner)]) continue;
    if (a.entry(first + 1, partner + 1).is_zero()) continue;
    used[static_cast<std::size_t>(partner)] = true;
    seq.push_back(first);
    seq.push_back(partner);
    enumerate_matchings(a, seq, used, total);
    seq.resize(seq.size() - 2);
    used[static_cast<std::size_t>(partner)] = false;
  }
  used[static_cast<std::size_t>(first)] = false;
}

template <Ring R>
R row_expansion(const AlternatingMatrix<R>& a, const std::vector<int>& rows) {
  if (rows.empty()) return ring_one<R>();
  R total{};
  const int first = rows[0];
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const R& entry = a.entry(first, rows[k]);
    if (entry.is_zero()) continue;
    std::vector<int> rest;
    rest.reserve(rows.size() - 2);
    for (std::size_t t = 1; t < rows.size(); ++t)
      if (t != k) rest.push_back(rows[t]);
    const R term = entry * row_expansion(a, rest);
    total = k % 2 == 1 ? total + term : total - term;
  }
  return total;
}

}  // namespace detail

/// Sum over perfect matchings {i1<j1}, ..., {im<jm} with i1<i2<...<im of
/// sgn(i1 j1 ... im jm) A(i1,j1)...A(im,jm). Pf of the empty matrix is 1.
template <Ring R>
R pfaffian_definitional(const AlternatingMatrix<R>& a) {
  detail::require_even(a);
  std::vector<int> seq;
  std::vector<bool> used(a.size(), false);
  R total{};
  if (a.size() == 0) return ring_one<R>();
  detail::enumerate_matchings(a, seq, used, total);
  return total;
}

/// Recursive expansion along the first row.
template <Ring R>
R pfaffian(const AlternatingMatrix<R>& a) {
  detail::require_even(a);
  std::vector<int> rows(a.size());
  std::iota(rows.begin(), rows.end(), 1);
  return detail::row_expansion(a, rows);
}

/// gamma_{i,j}(A): signed Pfaffian of A with rows/columns i and j removed,
/// (-1)^{i+j-1} for i<j, (-1)^{i+j} for i>j, zero on the diagonal.
template <Ring R>
R cofactor_pfaffian(const AlternatingMatrix<R>& a, int i, int j) {
  detail::require_even(a);
  const int size = static_cast<int>(a.size());
  if (i < 1 || j < 1 || i > size || j > size) {
    throw DomainError("cofactor index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  }
  if (i == j) return R{};
  const IndexSet rest = IndexSet::range(1, size).without(i).without(j);
  const R minor = pfaffian(a.principal(rest));
  const int exponent = i < j ? i + j - 1 : i + j;
  return exponent % 2 == 0 ? minor : -minor;
}

/// The co-Pfaffian matrix (gamma_{i,j}(A)).
template <Ring R>
AlternatingMatrix<R> copfaffian_matrix(const AlternatingMatrix<R>& a) {
  const std::size_t size = a.size();
  std::vector<R> upper;
  for (std::size_t i = 1; i <= size; ++i)
    for (std::size_t j = i + 1; j <= size; ++j)
      upper.push_back(cofactor_pfaffian(a, static_cast<int>(i), static_cast<int>(j)));
  return AlternatingMatrix<R>::from_upper(size, upper);
}

template <Ring R>
struct ExpansionResidual {
  int i = 0;
  int j = 0;
  R residual;
};

template <Ring R>
struct CoPfaffianReport {
  std::vector<ExpansionResidual<R>> residuals;  // one per (i,j), row-major

  bool holds() const {
    for (const auto& r : residuals)
      if (!r.residual.is_zero()) return false;
    return true;
  }
};

/// Residuals of delta_{i,j} Pf(A) - sum_k A(i,k) gamma_{j,k}(A) for every (i,j).
template <Ring R>
CoPfaffianReport<R> copfaffian_expansion_check(const AlternatingMatrix<R>& a) {
  detail::require_even(a);
  const int size = static_cast<int>(a.size());
  const R pf = pfaffian(a);
  std::vector<std::vector<R>> gamma(static_cast<std::size_t>(size), std::vector<R>(static_cast<std::size_t>(size)));
  for (int j = 1; j <= size; ++j)
    for (int k = 1; k <= size; ++k)
      gamma[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)] = cofactor_pfaffian(a, j, k);
  CoPfaffianReport<R> report;
  for (int i = 1; i <= size; ++i)
    for (int j = 1; j <= size; ++j) {
      R sum{};
      for (int k = 1; k <= size; ++k) sum = sum + a.entry(i, k) * gamma[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)];
      R residual = (i == j ? pf : R{}) - sum;
      report.residuals.push_back({i, j, std::move(residual)});
    }
  return report;
}

struct MinorInverseSides {
  Rational lhs;  // Pf(A_I) / Pf(A)
  Rational rhs;  // sgn(I, complement) Pf((co-Pfaffian / Pf(A)) restricted to the complement)
  bool holds() const { return lhs == rhs; }
};

/// Relation between principal sub-Pfaffians of A and of its normalised
/// co-Pfaffian matrix. Throws DomainError when Pf(A) = 0 or |I| is odd.
MinorInverseSides iw06_relation_check(const AlternatingMatrix<Rational>& a, const IndexSet& subset);

/// Matrix of o(2n) written in the (p,q) block colouring
///
///   X = [ a   b            ]
///       [ c   -J_q a^t J_p ]
///
/// with a of size p x q and the parameter matrices (b_{i,j}) (p x p) and
/// (c_{i,j}) (q x q) alternating; b sits at X(i,-j) and c at X(-j,i).
template <Ring R>
class AntiAlternatingMatrix {
 public:
  /// b_upper and c_upper list the strict upper triangles row by row.
  static AntiAlternatingMatrix from_blocks(std::size_t p, std::size_t q, const Matrix<R>& a, const std::vector<R>& b_upper,
                                           const std::vector<R>& c_upper) {
    if ((p + q) % 2 != 0 || p + q == 0) throw ShapeError("p + q must be positive and even");
    if (a.rows() != p || a.cols() != q) throw ShapeError("block a must be p x q");
    AntiAlternatingMatrix x;
    x.p_ = p;
    x.q_ = q;
    x.a_ = a;
    x.b_ = AlternatingMatrix<R>::from_upper(p, b_upper);
    x.c_ = AlternatingMatrix<R>::from_upper(q, c_upper);
    return x;
  }

  /// Splits a full 2n x 2n anti-alternating matrix. Throws ShapeError naming
  /// the first cell with X(-j,-i) != -X(i,j).
  static AntiAlternatingMatrix from_full(const Matrix<R>& full, std::size_t p, std::size_t q) {
    const std::size_t size = p + q;
    if (size % 2 != 0 || size == 0) throw ShapeError("p + q must be positive and even");
    if (full.rows() != size || full.cols() != size) throw ShapeError("matrix size does not match p + q");
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) {
        const R& mirror = full(size - 1 - j, size - 1 - i);
        if (!(mirror == -full(i, j))) throw ShapeError("matrix is not anti-alternating", i + 1, j + 1);
      }
    Matrix<R> a(p, q);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < q; ++j) a(i, j) = full(i, j);
    std::vector<R> b_upper, c_upper;
    // b_{i,k} = X(i, -k) lives at position (i, size+1-k); c_{j,k} = X(-k, j).
    for (std::size_t i = 1; i <= p; ++i)
      for (std::size_t k = i + 1; k <= p; ++k) b_upper.push_back(full(i - 1, size - k));
    for (std::size_t j = 1; j <= q; ++j)
      for (std::size_t k = j + 1; k <= q; ++k) c_upper.push_back(full(size - k, j - 1));
    return from_blocks(p, q, a, b_upper, c_upper);
  }

  std::size_t p() const { return p_; }
  std::size_t q() const { return q_; }
  std::size_t half_size() const { return (p_ + q_) / 2; }
  const Matrix<R>& a() const { return a_; }
  const AlternatingMatrix<R>& b() const { return b_; }
  const AlternatingMatrix<R>& c() const { return c_; }

  /// The reconstructed 2n x 2n matrix X.
  Matrix<R> full() const {
    const std::size_t size = p_ + q_;
    Matrix<R> x(size, size);
    for (std::size_t i = 1; i <= p_; ++i)
      for (std::size_t j = 1; j <= q_; ++j) {
        x(i - 1, j - 1) = a_(i - 1, j - 1);
        // X(-j,-i) = -a_{i,j}
        x(size - j, size - i) = -a_(i - 1, j - 1);
      }
    for (std::size_t i = 1; i <= p_; ++i)
      for (std::size_t k = 1; k <= p_; ++k) x(i - 1, size - k) = b_.entry(static_cast<int>(i), static_cast<int>(k));
    for (std::size_t j = 1; j <= q_; ++j)
      for (std::size_t k = 1; k <= q_; ++k) x(size - k, j - 1) = c_.entry(static_cast<int>(j), static_cast<int>(k));
    return x;
  }

  /// X J_{2n}, the alternating matrix whose Pfaffian is Pf(X).
  AlternatingMatrix<R> times_j() const { return AlternatingMatrix<R>(full() * Matrix<R>::anti_identity(p_ + q_)); }

 private:
  std::size_t p_ = 0;
  std::size_t q_ = 0;
  Matrix<R> a_;
  AlternatingMatrix<R> b_;
  AlternatingMatrix<R> c_;
};

/// Generic symbolic colouring: a[i,j], and b[i,j], c[i,j] for i<j.
AntiAlternatingMatrix<MultiPoly> generic_anti_alternating(std::size_t p, std::size_t q);

/// Generic symbolic alternating matrix with entries x[i,j] above the diagonal.
AlternatingMatrix<MultiPoly> generic_alternating(std::size_t size);

/// Minor summation side of the commutative formula:
/// sum over I in [p], J in [q] with |I^c| = |J^c| = 2k + (p mod 2) of
/// sgn(I^c, I) sgn(J^c, J) det(a[I^c, J^c]) Pf(b_I) Pf(c_J).
template <Ring R>
R msf_rhs(const AntiAlternatingMatrix<R>& x) {
  const IndexSet rows = IndexSet::range(1, static_cast<int>(x.p()));
  const IndexSet cols = IndexSet::range(1, static_cast<int>(x.q()));
  const std::size_t limit = std::min(x.p(), x.q());
  R total{};
  for (std::size_t minor = x.p() % 2; minor <= limit; minor += 2) {
    const auto row_minors = subsets_of_size(rows, minor);
    const auto col_minors = subsets_of_size(cols, minor);
    for (const auto& ibar : row_minors) {
      const IndexSet i_set = ibar.complement(rows);
      const R pf_b = pfaffian(x.b().principal(i_set));
      if (pf_b.is_zero()) continue;
      const int sign_i = split_sign(rows, ibar, i_set);
      for (const auto& jbar : col_minors) {
        const IndexSet j_set = jbar.complement(cols);
        const R pf_c = pfaffian(x.c().principal(j_set));
        if (pf_c.is_zero()) continue;
        const R det = column_determinant(x.a().submatrix(ibar, jbar));
        const R term = det * pf_b * pf_c;
        total = sign_i * split_sign(cols, jbar, j_set) > 0 ? total + term : total - term;
      }
    }
  }
  return total;
}

struct MsfVerification {
  std::size_t p = 0;
  std::size_t q = 0;
  MultiPoly pfaffian_side;
  MultiPoly minor_sum_side;
  bool holds() const { return pfaffian_side == minor_sum_side; }
};

/// Pf(X J) against msf_rhs(X) as a polynomial identity for generic X.
MsfVerification verify_msf(std::size_t p, std::size_t q);

}  // namespace pfmsf
