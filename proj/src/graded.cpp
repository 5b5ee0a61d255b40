#include "powstruct/graded.hpp"

namespace powstruct {

GradedElement GradedElement::homogeneous(int degree, const Rational& c) {
  if (degree < 0) throw DomainError("graded component degree must be >= 0");
  GradedElement x;
  x.add(degree, c);
  return x;
}

Rational GradedElement::component(int degree) const {
  auto it = components_.find(degree);
  return it == components_.end() ? Rational(0) : it->second;
}

Rational GradedElement::total() const {
  Rational s = 0;
  for (const auto& [d, c] : components_) s += c;
  return s;
}

void GradedElement::add(int degree, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = components_.try_emplace(degree, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) components_.erase(it);
}

GradedElement& GradedElement::operator+=(const GradedElement& other) {
  for (const auto& [d, c] : other.components_) add(d, c);
  return *this;
}

GradedElement& GradedElement::operator*=(const Rational& c) {
  if (c == 0) components_.clear();
  for (auto& [d, x] : components_) x *= c;
  return *this;
}

GradedElement operator*(const GradedElement& a, const GradedElement& b) {
  GradedElement r;
  for (const auto& [da, ca] : a.components_)
    for (const auto& [db, cb] : b.components_) r.add(da + db, ca * cb);
  return r;
}

GradedElement GradedElement::operator-() const {
  GradedElement r = *this;
  for (auto& [d, c] : r.components_) c = -c;
  return r;
}

GradedElement adams(const GradedElement& x, int k) {
  if (k < 1) throw DomainError("Adams operation index must be >= 1");
  GradedElement r;
  for (const auto& [d, c] : x.components()) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(d));
    r += GradedElement::homogeneous(d, c * Rational(scale));
  }
  return r;
}

std::optional<GradedElement> try_inverse(const GradedElement& x) {
  if (x.components().size() != 1 || x.components().begin()->first != 0) return std::nullopt;
  return GradedElement::homogeneous(0, 1 / x.components().begin()->second);
}

}  // namespace powstruct
