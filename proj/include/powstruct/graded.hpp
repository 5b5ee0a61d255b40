#pragma once

#include <map>
#include <optional>

#include "powstruct/rational.hpp"

namespace powstruct {

/// Finitely supported element of a graded Q-algebra with one generator per
/// degree; Psi_k scales the degree-j component by k^j.
class GradedElement {
public:
  using ComponentMap = std::map<int, Rational>;

  GradedElement() = default;
  static GradedElement homogeneous(int degree, const Rational& c);

  GradedElement constant(const Rational& c) const { return homogeneous(0, c); }

  const ComponentMap& components() const { return components_; }
  Rational component(int degree) const;
  bool is_zero() const { return components_.empty(); }
  /// Sum of all components (the generator evaluated at 1).
  Rational total() const;

  GradedElement& operator+=(const GradedElement& other);
  GradedElement& operator*=(const Rational& c);

  friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
  friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a += -b; }
  friend GradedElement operator*(const GradedElement& a, const GradedElement& b);
  friend GradedElement operator*(GradedElement a, const Rational& c) { return a *= c; }
  GradedElement operator-() const;

  friend bool operator==(const GradedElement&, const GradedElement&) = default;

private:
  void add(int degree, const Rational& c);
  ComponentMap components_;
};

GradedElement adams(const GradedElement& x, int k);
std::optional<GradedElement> try_inverse(const GradedElement& x);

}  // namespace powstruct
