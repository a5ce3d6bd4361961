#pragma once

#include <concepts>

#include "pfmsf/rational.hpp"

namespace pfmsf {

/// Coefficient rings used throughout: Rational, MultiPoly, UEAElement.
/// Multiplication need not commute; every routine documents the order in
/// which it multiplies.
template <class R>
concept Ring = std::copyable<R> && std::default_initializable<R> && requires(const R& x, const R& y, const Rational& s) {
  { x + y } -> std::convertible_to<R>;
  { x - y } -> std::convertible_to<R>;
  { x * y } -> std::convertible_to<R>;
  { -x } -> std::convertible_to<R>;
  { x == y } -> std::convertible_to<bool>;
  { x.is_zero() } -> std::convertible_to<bool>;
  R(s);
};

template <Ring R>
R ring_scalar(const Rational& s) {
  return R(s);
}

template <Ring R>
R ring_one() {
  return R(Rational(1));
}

}  // namespace pfmsf
