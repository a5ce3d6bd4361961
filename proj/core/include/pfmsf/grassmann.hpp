#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pfmsf/errors.hpp"
#include "pfmsf/index_set.hpp"
#include "pfmsf/matrix.hpp"
#include "pfmsf/pfaffian.hpp"
#include "pfmsf/poly.hpp"
#include "pfmsf/ring.hpp"
#include "pfmsf/uea.hpp"

namespace pfmsf {

inline std::string coefficient_text(const Rational& c) { return c.to_string(); }
inline std::string coefficient_text(const MultiPoly& c) { return c.to_string(); }
inline std::string coefficient_text(const UEAElement& c) { return c.to_pretty_string(); }

/// Exterior algebra on the 2n slots e_1..e_n, e_{-n}..e_{-1} (slot order is
/// position order) with coefficients on the right of the generator word.
/// A term is stored under the bitmask of its slots, its generators written
/// in ascending position order.
template <Ring C>
class GrassmannElement {
 public:
  using Mask = std::uint64_t;
  using Terms = std::map<Mask, C>;

  GrassmannElement() = default;
  explicit GrassmannElement(int n) : n_(n) {
    if (n < 1 || n > 32) throw DomainError("Grassmann ambient n must lie in [1, 32]");
  }

  static GrassmannElement scalar(int n, const C& c) { return monomial(n, 0, c); }
  static GrassmannElement one(int n) { return scalar(n, ring_one<C>()); }

  static GrassmannElement monomial(int n, Mask mask, const C& c) {
    GrassmannElement x(n);
    if (mask >> (2 * n) != 0) throw DomainError("mask outside the 2n slots");
    x.add_term(mask, c);
    return x;
  }

  /// Bit of the slot at 1-based position.
  static Mask slot(int position) { return Mask{1} << (position - 1); }

  /// e_i for a signed index i.
  static GrassmannElement generator(int n, int signed_index) {
    return monomial(n, slot(SignedIndex(signed_index, n).position()), ring_one<C>());
  }

  int n() const { return n_; }
  Mask full_mask() const { return n_ == 32 ? ~Mask{0} : (Mask{1} << (2 * n_)) - 1; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  C coefficient(Mask mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? C() : it->second;
  }

  void add_term(Mask mask, const C& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mask, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Sign of e_A e_B relative to e_{A u B}: one factor -1 per pair a in A,
  /// b in B with a after b.
  static int shuffle_sign(Mask a, Mask b) {
    int inversions = 0;
    while (b != 0) {
      const int bit = std::countr_zero(b);
      b &= b - 1;
      inversions += std::popcount(a >> bit >> 1);
    }
    return inversions % 2 == 0 ? 1 : -1;
  }

  GrassmannElement& operator+=(const GrassmannElement& rhs) {
    adopt_ambient(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
  }
  GrassmannElement& operator-=(const GrassmannElement& rhs) {
    adopt_ambient(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
  }
  GrassmannElement& operator*=(const Rational& s) {
    Terms scaled;
    if (!s.is_zero())
      for (const auto& [m, c] : terms_) scaled.emplace(m, c * ring_scalar<C>(s));
    terms_ = std::move(scaled);
    return *this;
  }

  friend GrassmannElement operator+(GrassmannElement lhs, const GrassmannElement& rhs) { return lhs += rhs; }
  friend GrassmannElement operator-(GrassmannElement lhs, const GrassmannElement& rhs) { return lhs -= rhs; }
  friend GrassmannElement operator-(GrassmannElement x) { return x *= Rational(-1); }
  friend GrassmannElement operator*(GrassmannElement x, const Rational& s) { return x *= s; }
  friend GrassmannElement operator*(const Rational& s, GrassmannElement x) { return x *= s; }

  /// Exterior product; the coefficient of the left factor multiplies on the left.
  friend GrassmannElement operator*(const GrassmannElement& x, const GrassmannElement& y) {
    if (x.n_ != y.n_) throw DomainError("Grassmann ambient mismatch");
    GrassmannElement out(x.n_);
    for (const auto& [ma, u] : x.terms_)
      for (const auto& [mb, v] : y.terms_) {
        if ((ma & mb) != 0) continue;
        C product = u * v;
        if (shuffle_sign(ma, mb) < 0) product = -product;
        out.add_term(ma | mb, product);
      }
    return out;
  }

  /// Multiplies every coefficient on the right by c.
  GrassmannElement times(const C& c) const {
    GrassmannElement out(n_);
    for (const auto& [m, u] : terms_) out.add_term(m, u * c);
    return out;
  }

  friend bool operator==(const GrassmannElement& lhs, const GrassmannElement& rhs) {
    return lhs.terms_ == rhs.terms_ && (lhs.terms_.empty() || lhs.n_ == rhs.n_);
  }

  /// "coeff e[1]e[-1] + ..." with signed slot labels.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Mask, const C*>> ordered;
    for (const auto& [m, c] : terms_) ordered.emplace_back(m, &c);
    std::sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
      if (std::popcount(l.first) != std::popcount(r.first)) return std::popcount(l.first) < std::popcount(r.first);
      const Mask differ = l.first ^ r.first;
      return (l.first & differ & (~differ + 1)) != 0;
    });
    std::string out;
    for (const auto& [m, c] : ordered) {
      std::string coeff = coefficient_text(*c);
      bool negative = false;
      const bool compound = coeff.find(" + ") != std::string::npos || coeff.find(" - ") != std::string::npos;
      if (!compound && coeff.front() == '-') {
        negative = true;
        coeff.erase(0, 1);
      }
      if (compound) coeff = "(" + coeff + ")";
      std::string word;
      for (int pos = 1; pos <= 2 * n_; ++pos)
        if ((m & slot(pos)) != 0) word += "e[" + std::to_string(SignedIndex::from_position(pos, n_).value()) + "]";
      std::string term;
      if (word.empty()) {
        term = coeff;
      } else {
        term = coeff == "1" ? word : coeff + " " + word;
      }
      if (out.empty()) {
        out = negative ? "-" + term : term;
      } else {
        out += (negative ? " - " : " + ") + term;
      }
    }
    return out;
  }

 private:
  void adopt_ambient(const GrassmannElement& rhs) {
    if (n_ == 0) {
      n_ = rhs.n_;
    } else if (rhs.n_ != 0 && rhs.n_ != n_) {
      throw DomainError("Grassmann ambient mismatch");
    }
  }

  int n_ = 0;
  Terms terms_;
};

template <Ring C>
GrassmannElement<C> commutator(const GrassmannElement<C>& x, const GrassmannElement<C>& y) {
  return x * y - y * x;
}

template <Ring C>
GrassmannElement<C> power(const GrassmannElement<C>& x, int m) {
  if (m < 0) throw DomainError("negative power");
  GrassmannElement<C> out = GrassmannElement<C>::one(x.n());
  for (int k = 0; k < m; ++k) out = out * x;
  return out;
}

/// Coefficient of e_1...e_n e_{-n}...e_{-1}.
template <Ring C>
C top_coefficient(const GrassmannElement<C>& x) {
  if (x.n() == 0) return C();
  return x.coefficient(x.full_mask());
}

/// The 2-forms attached to an anti-alternating matrix with colouring (p, q).
template <Ring C>
struct Forms {
  int n = 0;
  int p = 0;
  int q = 0;
  Matrix<C> full;
  Matrix<C> a;
  AlternatingMatrix<C> b;
  AlternatingMatrix<C> c;
  GrassmannElement<C> omega;
  GrassmannElement<C> xi;
  GrassmannElement<C> theta;
  GrassmannElement<C> theta_prime;
  GrassmannElement<C> tau;

  /// e_i, i in [p].
  GrassmannElement<C> e_row(int i) const { return unit(i); }
  /// e_{-j}, j in [q].
  GrassmannElement<C> e_col(int j) const { return unit(2 * n + 1 - j); }

  GrassmannElement<C> unit(int position) const {
    return GrassmannElement<C>::monomial(n, GrassmannElement<C>::slot(position), ring_one<C>());
  }
};

template <Ring C>
Forms<C> build_forms(Matrix<C> full, int p, int q, Matrix<C> a, AlternatingMatrix<C> b, AlternatingMatrix<C> c) {
  if (p < 0 || q < 0 || (p + q) % 2 != 0 || p + q == 0) throw ShapeError("colouring needs p + q even and positive");
  Forms<C> f;
  f.n = (p + q) / 2;
  f.p = p;
  f.q = q;
  const int size = p + q;
  using G = GrassmannElement<C>;
  f.omega = G(f.n);
  f.xi = G(f.n);
  f.theta = G(f.n);
  f.theta_prime = G(f.n);
  f.tau = G(f.n);
  for (int r = 1; r <= size; ++r)
    for (int s = 1; s <= size; ++s)
      f.omega += (f.unit(r) * f.unit(size + 1 - s)).times(full(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(s - 1)));
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= q; ++j)
      f.xi += (f.e_row(i) * f.e_col(j)).times(a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)));
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= p; ++j)
      if (i != j) f.theta += (f.e_row(i) * f.e_row(j)).times(b.entry(i, j));
  for (int i = 1; i <= q; ++i)
    for (int j = 1; j <= q; ++j)
      if (i != j) f.theta_prime += (f.e_col(j) * f.e_col(i)).times(c.entry(i, j));
  for (int i = 1; i <= f.n; ++i) f.tau += f.unit(i) * f.unit(size + 1 - i);
  f.full = std::move(full);
  f.a = std::move(a);
  f.b = std::move(b);
  f.c = std::move(c);
  return f;
}

/// Forms of the canonical matrix X over U(o(2n)).
Forms<UEAElement> build_uea_forms(int n);

/// Forms of the generic commuting anti-alternating matrix with colouring (p, q).
Forms<MultiPoly> build_commutative_forms(int p, int q);

/// Outcome of one identity: holds, or a printed LHS - RHS.
struct IdentityCheck {
  bool holds = false;
  std::string residual;
};

template <Ring C>
IdentityCheck compare(const GrassmannElement<C>& lhs, const GrassmannElement<C>& rhs) {
  if (lhs == rhs) return {true, "0"};
  std::string diff = (lhs - rhs).to_string();
  if (diff.size() > 240) diff = diff.substr(0, 240) + "...";
  return {false, diff};
}

/// Xi(u) = Xi + u tau.
template <Ring C>
GrassmannElement<C> xi_shifted(const Forms<C>& f, const Rational& u) {
  return f.xi + f.tau * u;
}

/// Xi^{(r)}(u) = Xi(u) Xi(u-1) ... Xi(u-r+1).
template <Ring C>
GrassmannElement<C> xi_shifted_power(const Forms<C>& f, const Rational& u, int r) {
  if (r < 0 || r > f.n) throw DomainError("xi power needs 0 <= r <= n");
  GrassmannElement<C> out = GrassmannElement<C>::one(f.n);
  for (int k = 0; k < r; ++k) out = out * xi_shifted(f, u - Rational(k));
  return out;
}

/// sum over |I| = k of e_I Pf(b_I) (sign of e_{-J} Pf(c_J) when columns is set).
template <Ring C>
GrassmannElement<C> pfaffian_minor_form(const Forms<C>& f, int k, bool columns) {
  const int universe = columns ? f.q : f.p;
  GrassmannElement<C> out(f.n);
  for (const IndexSet& s : subsets_of_size(IndexSet::range(1, universe), static_cast<std::size_t>(k))) {
    typename GrassmannElement<C>::Mask mask = 0;
    for (int x : s.elements()) mask |= GrassmannElement<C>::slot(columns ? 2 * f.n + 1 - x : x);
    const C pf = pfaffian(columns ? f.c.principal(s) : f.b.principal(s));
    out.add_term(mask, pf);
  }
  return out;
}

/// Theta^s = 2^s s! sum e_I Pf(b_I) and Theta'^t = 2^t t! sum e_{-J} Pf(c_J).
template <Ring C>
IdentityCheck check_theta_powers(const Forms<C>& f, int s, int t) {
  if (s < 0 || t < 0) throw DomainError("negative power");
  if (2 * s <= f.p) {
    const Rational scale = power(Rational(2), s) * factorial(s);
    IdentityCheck c = compare(power(f.theta, s), pfaffian_minor_form(f, 2 * s, false) * scale);
    if (!c.holds) return c;
  } else if (!power(f.theta, s).is_zero()) {
    return {false, "Theta^" + std::to_string(s) + " should vanish"};
  }
  if (2 * t <= f.q) {
    const Rational scale = power(Rational(2), t) * factorial(t);
    return compare(power(f.theta_prime, t), pfaffian_minor_form(f, 2 * t, true) * scale);
  }
  if (!power(f.theta_prime, t).is_zero()) return {false, "Theta'^" + std::to_string(t) + " should vanish"};
  return {true, "0"};
}

struct Sl2Report {
  IdentityCheck theta_theta_prime;  // [Theta, Theta'] = 4 tau Xi
  IdentityCheck theta_xi;           // [Theta, Xi] = 2 tau Theta
  IdentityCheck theta_prime_xi;     // [Theta', Xi] = -2 tau Theta'
  bool holds() const { return theta_theta_prime.holds && theta_xi.holds && theta_prime_xi.holds; }
};

Sl2Report check_sl2(const Forms<UEAElement>& f);

/// Xi^{(r)}(u+r-1) = r! sum e_I e_{-J} det(a^I_J + shift) with the shifted
/// column determinant.
IdentityCheck check_xi_power_formula(const Forms<UEAElement>& f, const Rational& u, int r);

/// Xi^h = h! sum e_I e_{-J} det(a^I_J) for commuting entries.
IdentityCheck check_xi_power_formula(const Forms<MultiPoly>& f, int h);

/// eta_i(u+1) eta_j(u) + eta_j(u+1) eta_i(u) = 0 for all i, j, where
/// eta_j(u) = sum_i e_i (a_{i,j} + u delta_{i,j}).
IdentityCheck check_eta_anticommute(const Forms<UEAElement>& f, const Rational& u);

/// Shifted trinomial expansion of Omega^m.
IdentityCheck check_trinomial(const Forms<UEAElement>& f, int m);

/// Unshifted trinomial expansion of Omega^m for commuting entries.
IdentityCheck check_trinomial(const Forms<MultiPoly>& f, int m);

template <Ring C>
struct TopFormPfaffian {
  C value;      // top_coefficient(Omega^n) / (2^n n!)
  C reference;  // Pfaffian from the restricted sum or the commutative expansion
  bool agrees() const { return value == reference; }
};

TopFormPfaffian<UEAElement> pfaffian_via_top_form(const Forms<UEAElement>& f);
TopFormPfaffian<MultiPoly> pfaffian_via_top_form(const Forms<MultiPoly>& f);

}  // namespace pfmsf
