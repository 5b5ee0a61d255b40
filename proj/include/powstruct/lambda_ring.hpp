#pragma once

#include <concepts>
#include <optional>

#include "powstruct/rational.hpp"

namespace powstruct {

// A commutative Q-algebra with Adams operations. Constants are built from a
// prototype element (`x.constant(q)`) so that context such as a variable
// alphabet or a generator bound travels with every value.
template <typename R>
concept LambdaRing = std::regular<R> && requires(const R& a, const R& b, const Rational& q, int k) {
  { a + b } -> std::same_as<R>;
  { a - b } -> std::same_as<R>;
  { a * b } -> std::same_as<R>;
  { -a } -> std::same_as<R>;
  { a * q } -> std::same_as<R>;
  { a.constant(q) } -> std::same_as<R>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { adams(a, k) } -> std::same_as<R>;
  { try_inverse(a) } -> std::same_as<std::optional<R>>;
};

template <LambdaRing R>
R zero_like(const R& x) {
  return x.constant(Rational(0));
}

template <LambdaRing R>
R one_like(const R& x) {
  return x.constant(Rational(1));
}

}  // namespace powstruct
