#include <gtest/gtest.h>

#include <random>

#include "pfmsf/grassmann.hpp"

using namespace pfmsf;

namespace {

using UG = GrassmannElement<UEAElement>;
using PG = GrassmannElement<MultiPoly>;

template <class C>
GrassmannElement<C> random_element(std::mt19937_64& rng, int n, const std::vector<C>& coefficients) {
  std::uniform_int_distribution<std::uint64_t> mask(0, (std::uint64_t{1} << (2 * n)) - 1);
  std::uniform_int_distribution<std::size_t> pick(0, coefficients.size() - 1);
  GrassmannElement<C> x(n);
  for (int t = 0; t < 4; ++t) x.add_term(mask(rng), coefficients[pick(rng)]);
  return x;
}

}  // namespace

TEST(Grassmann, GeneratorRelations) {
  const PG e1 = PG::generator(2, 1), e2 = PG::generator(2, 2);
  EXPECT_TRUE((e1 * e1).is_zero());
  EXPECT_EQ(e2 * e1, -(e1 * e2));
  for (int n = 1; n <= 4; ++n)
    for (int i = -n; i <= n; ++i)
      for (int j = -n; j <= n; ++j) {
        if (i == 0 || j == 0) continue;
        const PG ei = PG::generator(n, i), ej = PG::generator(n, j);
        if (i == j) {
          EXPECT_TRUE((ei * ej).is_zero());
        } else {
          EXPECT_EQ(ei * ej, -(ej * ei));
        }
      }
}

TEST(Grassmann, CoefficientsKeepFactorOrder) {
  const UEAElement b = UEAElement(Generator::b(1, 2)), c = UEAElement(Generator::c(1, 2));
  const UG x = UG::generator(2, 1).times(b);
  const UG y = UG::generator(2, -1).times(c);
  const UG product = x * y;
  EXPECT_EQ(product, (UG::generator(2, 1) * UG::generator(2, -1)).times(b * c));
  EXPECT_NE(product, (UG::generator(2, 1) * UG::generator(2, -1)).times(c * b));
}

TEST(Grassmann, AmbientMismatch) {
  EXPECT_THROW(PG::generator(2, 1) * PG::generator(3, 1), DomainError);
  EXPECT_THROW(PG(0), DomainError);
}

TEST(Grassmann, Associativity) {
  std::mt19937_64 rng(41);
  const std::vector<MultiPoly> polys{MultiPoly::parse("x"), MultiPoly::parse("2*y - 1"), MultiPoly::parse("x*y")};
  std::vector<UEAElement> ueas;
  for (Generator g : canonical_basis(2)) ueas.emplace_back(g);
  ueas.emplace_back(Rational(3));
  for (int trial = 0; trial < 50; ++trial) {
    const PG x = random_element(rng, 3, polys), y = random_element(rng, 3, polys), z = random_element(rng, 3, polys);
    EXPECT_EQ((x * y) * z, x * (y * z));
    const UG u = random_element(rng, 2, ueas), v = random_element(rng, 2, ueas), w = random_element(rng, 2, ueas);
    EXPECT_EQ((u * v) * w, u * (v * w));
  }
}

TEST(Forms, RankOne) {
  const auto f = build_uea_forms(1);
  EXPECT_TRUE(f.theta.is_zero());
  EXPECT_TRUE(f.theta_prime.is_zero());
  EXPECT_EQ(f.omega, (UG::generator(1, 1) * UG::generator(1, -1)).times(UEAElement(Generator::a(1, 1))) * Rational(2));
  EXPECT_EQ(f.omega.to_string(), "2*a[1,1] e[1]e[-1]");
}

TEST(Forms, TauAndDecomposition) {
  const auto f = build_uea_forms(2);
  EXPECT_EQ(f.tau, UG::generator(2, 1) * UG::generator(2, -1) + UG::generator(2, 2) * UG::generator(2, -2));
  EXPECT_EQ(f.tau.to_string(), "e[1]e[-1] + e[2]e[-2]");
  for (int n = 1; n <= 3; ++n) {
    const auto u = build_uea_forms(n);
    EXPECT_TRUE((u.omega - (u.theta_prime + u.xi * Rational(2) + u.theta)).is_zero());
    const auto c = build_commutative_forms(n, n);
    EXPECT_TRUE((c.omega - (c.theta_prime + c.xi * Rational(2) + c.theta)).is_zero());
  }
}

TEST(Forms, XiShiftedPower) {
  const auto f = build_uea_forms(2);
  EXPECT_EQ(xi_shifted_power(f, Rational(7), 0), UG::one(2));
  EXPECT_EQ(xi_shifted_power(f, Rational(3), 1), f.xi + f.tau * Rational(3));
  EXPECT_EQ(xi_shifted_power(f, Rational(1), 2), (f.xi + f.tau) * f.xi);
  EXPECT_THROW(xi_shifted_power(f, Rational(0), 3), DomainError);
  EXPECT_TRUE(check_xi_power_formula(f, Rational(0), 2).holds);
  EXPECT_TRUE(check_xi_power_formula(f, Rational(0), 0).holds);
  const auto g = build_uea_forms(3);
  for (int r = 1; r <= 3; ++r)
    for (int u : {0, 1, -1}) EXPECT_TRUE(check_xi_power_formula(g, Rational(u), r).holds) << r << " " << u;
}

TEST(Forms, XiPowerNeedsTheShift) {
  // Without the shift the n=2, r=2 identity fails: the ordinary power differs.
  const auto f = build_uea_forms(2);
  EXPECT_NE(power(f.xi, 2), xi_shifted_power(f, Rational(1), 2));
}

TEST(Forms, Sl2AndEta) {
  for (int n = 1; n <= 3; ++n) EXPECT_TRUE(check_sl2(build_uea_forms(n)).holds()) << n;
  EXPECT_TRUE(check_eta_anticommute(build_uea_forms(1), Rational(4)).holds);
  EXPECT_TRUE(check_eta_anticommute(build_uea_forms(2), Rational(0)).holds);
  EXPECT_TRUE(check_eta_anticommute(build_uea_forms(3), Rational(5)).holds);
}

TEST(Forms, ThetaPowers) {
  const auto f = build_uea_forms(2);
  EXPECT_EQ(power(f.theta, 0), UG::one(2));
  EXPECT_EQ(f.theta, (UG::generator(2, 1) * UG::generator(2, 2)).times(UEAElement(Generator::b(1, 2))) * Rational(2));
  EXPECT_TRUE(check_theta_powers(f, 1, 1).holds);
  EXPECT_TRUE(check_theta_powers(build_commutative_forms(4, 4), 2, 2).holds);
  EXPECT_TRUE(check_theta_powers(build_uea_forms(3), 1, 1).holds);
}

TEST(Forms, Trinomial) {
  for (int m = 0; m <= 2; ++m) {
    EXPECT_TRUE(check_trinomial(build_uea_forms(2), m).holds) << m;
    EXPECT_TRUE(check_trinomial(build_commutative_forms(2, 2), m).holds) << m;
  }
  const auto f = build_uea_forms(2);
  EXPECT_EQ(power(f.omega, 1), f.theta_prime + f.xi * Rational(2) + f.theta);
  EXPECT_THROW(check_trinomial(f, 3), DomainError);
}

TEST(Forms, TopForm) {
  EXPECT_TRUE(top_coefficient(PG(2)).is_zero());
  const auto f1 = build_uea_forms(1);
  EXPECT_EQ(top_coefficient(f1.omega), UEAElement(Generator::a(1, 1)) * Rational(2));
  const auto f2 = build_uea_forms(2);
  EXPECT_EQ(top_coefficient(power(f2.omega, 2)), nc_pfaffian(f2.full) * Rational(8));
  for (int n = 1; n <= 3; ++n) {
    const auto f = build_uea_forms(n);
    const auto route = pfaffian_via_top_form(f);
    EXPECT_TRUE(route.agrees()) << n;
    EXPECT_TRUE((power(f.omega, n) * f.omega).is_zero());
  }
  const auto t13 = pfaffian_via_top_form(build_commutative_forms(1, 3));
  EXPECT_TRUE(t13.agrees());
  EXPECT_EQ(t13.value, msf_rhs(generic_anti_alternating(1, 3)));
}

TEST(Forms, CommutativeColourings) {
  for (int p = 0; p <= 6; ++p) {
    const auto f = build_commutative_forms(p, 6 - p);
    for (int h = 0; h <= std::min(p, 6 - p); ++h) EXPECT_TRUE(check_xi_power_formula(f, h).holds);
    for (int m = 0; m <= 3; ++m) EXPECT_TRUE(check_trinomial(f, m).holds);
  }
}
