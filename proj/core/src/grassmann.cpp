#include "pfmsf/grassmann.hpp"

namespace pfmsf {

namespace {

using UG = GrassmannElement<UEAElement>;
using PG = GrassmannElement<MultiPoly>;

template <Ring C>
typename GrassmannElement<C>::Mask minor_mask(const Forms<C>& f, const IndexSet& rows, const IndexSet& cols) {
  typename GrassmannElement<C>::Mask mask = 0;
  for (int i : rows.elements()) mask |= GrassmannElement<C>::slot(i);
  for (int j : cols.elements()) mask |= GrassmannElement<C>::slot(2 * f.n + 1 - j);
  return mask;
}

Rational multinomial(int m, int x, int y, int z) {
  return factorial(m) / (factorial(x) * factorial(y) * factorial(z));
}

}  // namespace

Forms<UEAElement> build_uea_forms(int n) {
  CanonicalX x = build_canonical_x(n);
  return build_forms(std::move(x.full), n, n, std::move(x.a), std::move(x.b), std::move(x.c));
}

Forms<MultiPoly> build_commutative_forms(int p, int q) {
  if (p < 0 || q < 0) throw ShapeError("colouring sizes must be nonnegative");
  const auto x = generic_anti_alternating(static_cast<std::size_t>(p), static_cast<std::size_t>(q));
  return build_forms(x.full(), p, q, x.a(), x.b(), x.c());
}

Sl2Report check_sl2(const Forms<UEAElement>& f) {
  Sl2Report report;
  report.theta_theta_prime = compare(commutator(f.theta, f.theta_prime), f.tau * f.xi * Rational(4));
  report.theta_xi = compare(commutator(f.theta, f.xi), f.tau * f.theta * Rational(2));
  report.theta_prime_xi = compare(commutator(f.theta_prime, f.xi), f.tau * f.theta_prime * Rational(-2));
  return report;
}

IdentityCheck check_xi_power_formula(const Forms<UEAElement>& f, const Rational& u, int r) {
  const Rational top = u + Rational(r - 1);
  const UG lhs = xi_shifted_power(f, top, r);
  UG rhs(f.n);
  const auto subsets = subsets_of_size(IndexSet::range(1, f.n), static_cast<std::size_t>(r));
  for (const IndexSet& rows : subsets)
    for (const IndexSet& cols : subsets)
      rhs.add_term(minor_mask(f, rows, cols), shifted_column_determinant(f.a, rows, cols, top));
  return compare(lhs, rhs * factorial(r));
}

IdentityCheck check_xi_power_formula(const Forms<MultiPoly>& f, int h) {
  if (h < 0 || h > std::min(f.p, f.q)) throw DomainError("xi power needs 0 <= h <= min(p, q)");
  const PG lhs = power(f.xi, h);
  PG rhs(f.n);
  const auto row_sets = subsets_of_size(IndexSet::range(1, f.p), static_cast<std::size_t>(h));
  const auto col_sets = subsets_of_size(IndexSet::range(1, f.q), static_cast<std::size_t>(h));
  for (const IndexSet& rows : row_sets)
    for (const IndexSet& cols : col_sets) rhs.add_term(minor_mask(f, rows, cols), column_determinant(f.a.submatrix(rows, cols)));
  return compare(lhs, rhs * factorial(h));
}

IdentityCheck check_eta_anticommute(const Forms<UEAElement>& f, const Rational& u) {
  auto eta = [&f](int j, const Rational& shift) {
    UG out(f.n);
    for (int i = 1; i <= f.n; ++i) {
      UEAElement entry = f.a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
      if (i == j) entry += UEAElement(shift);
      out += f.e_row(i).times(entry);
    }
    return out;
  };
  const UG zero(f.n);
  for (int i = 1; i <= f.n; ++i)
    for (int j = i; j <= f.n; ++j) {
      const UG sum = eta(i, u + Rational(1)) * eta(j, u) + eta(j, u + Rational(1)) * eta(i, u);
      IdentityCheck c = compare(sum, zero);
      if (!c.holds) {
        c.residual = "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + "): " + c.residual;
        return c;
      }
    }
  return {true, "0"};
}

IdentityCheck check_trinomial(const Forms<UEAElement>& f, int m) {
  if (m < 0 || m > f.n) throw DomainError("trinomial needs 0 <= m <= n");
  std::vector<UG> theta_powers{UG::one(f.n)}, theta_prime_powers{UG::one(f.n)};
  for (int k = 1; k <= m; ++k) {
    theta_powers.push_back(theta_powers.back() * f.theta);
    theta_prime_powers.push_back(theta_prime_powers.back() * f.theta_prime);
  }
  UG rhs(f.n);
  for (int p = 0; p <= m; ++p)
    for (int q = 0; p + q <= m; ++q) {
      const int r = m - p - q;
      const Rational scale = multinomial(m, p, q, r) * power(Rational(2), r);
      const UG xi = xi_shifted_power(f, Rational(q - p + r - 1), r);
      rhs += xi * theta_prime_powers[static_cast<std::size_t>(p)] * theta_powers[static_cast<std::size_t>(q)] * scale;
    }
  return compare(power(f.omega, m), rhs);
}

IdentityCheck check_trinomial(const Forms<MultiPoly>& f, int m) {
  if (m < 0 || m > f.n) throw DomainError("trinomial needs 0 <= m <= n");
  std::vector<PG> xi_powers{PG::one(f.n)}, theta_powers{PG::one(f.n)}, theta_prime_powers{PG::one(f.n)};
  for (int k = 1; k <= m; ++k) {
    xi_powers.push_back(xi_powers.back() * f.xi);
    theta_powers.push_back(theta_powers.back() * f.theta);
    theta_prime_powers.push_back(theta_prime_powers.back() * f.theta_prime);
  }
  PG rhs(f.n);
  for (int h = 0; h <= m; ++h)
    for (int s = 0; h + s <= m; ++s) {
      const int t = m - h - s;
      const Rational scale = multinomial(m, h, s, t) * power(Rational(2), h);
      rhs += xi_powers[static_cast<std::size_t>(h)] * theta_powers[static_cast<std::size_t>(s)] *
             theta_prime_powers[static_cast<std::size_t>(t)] * scale;
    }
  return compare(power(f.omega, m), rhs);
}

TopFormPfaffian<UEAElement> pfaffian_via_top_form(const Forms<UEAElement>& f) {
  const Rational scale = (power(Rational(2), f.n) * factorial(f.n)).inverse();
  return {top_coefficient(power(f.omega, f.n)) * scale, nc_pfaffian(f.full)};
}

TopFormPfaffian<MultiPoly> pfaffian_via_top_form(const Forms<MultiPoly>& f) {
  const Rational scale = (power(Rational(2), f.n) * factorial(f.n)).inverse();
  const auto size = static_cast<std::size_t>(2 * f.n);
  const AlternatingMatrix<MultiPoly> xj(f.full * Matrix<MultiPoly>::anti_identity(size));
  return {top_coefficient(power(f.omega, f.n)) * scale, pfaffian(xj)};
}

}  // namespace pfmsf
