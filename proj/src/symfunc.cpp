#include "powstruct/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "powstruct/numtheory.hpp"

namespace powstruct {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw DomainError("partition parts must be positive");
    weight_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
  return a.parts_ <=> b.parts_;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw DomainError("partitions of a negative number");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

Partition merge(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Partition(std::move(parts));
}

Integer z_lambda(const Partition& lambda) {
  Integer z = 1;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const int mult = static_cast<int>(j - i);
    for (int r = 0; r < mult; ++r) z *= parts[i];
    z *= factorial(mult);
    i = j;
  }
  return z;
}

SymFunc::SymFunc(Alphabet coeff_vars, int bound) : coeff_vars_(std::move(coeff_vars)), bound_(bound) {
  if (bound < 0) throw DomainError("generator bound must be >= 0");
}

SymFunc SymFunc::power_sum(Alphabet coeff_vars, int bound, int index) {
  LaurentPoly one = LaurentPoly::from_constant(coeff_vars, 1);
  return from_partition(std::move(coeff_vars), bound, Partition({index}), one);
}

SymFunc SymFunc::from_partition(Alphabet coeff_vars, int bound, const Partition& lambda, const LaurentPoly& coeff) {
  SymFunc f(std::move(coeff_vars), bound);
  if (lambda.largest() > bound)
    throw BoundExceeded("p_" + std::to_string(lambda.largest()) + " exceeds generator bound " + std::to_string(bound));
  if (coeff.vars() != f.coeff_vars_) throw AlphabetMismatch("coefficient alphabet mismatch");
  f.add_term(lambda, coeff);
  return f;
}

SymFunc SymFunc::lift(const LaurentPoly& c, int bound) { return from_partition(c.vars(), bound, Partition(), c); }

SymFunc SymFunc::constant(const Rational& c) const {
  return lift(LaurentPoly::from_constant(coeff_vars_, c), bound_);
}

SymFunc SymFunc::constant(const LaurentPoly& c) const {
  if (c.vars() != coeff_vars_) throw AlphabetMismatch("coefficient alphabet mismatch");
  return lift(c, bound_);
}

LaurentPoly SymFunc::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? LaurentPoly(coeff_vars_) : it->second;
}

bool SymFunc::has_constant_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_constant(); });
}

int SymFunc::max_index() const {
  int m = 0;
  for (const auto& [lambda, c] : terms_) m = std::max(m, lambda.largest());
  return m;
}

std::optional<int> SymFunc::homogeneous_weight() const {
  if (terms_.empty()) return 0;
  const int w = terms_.begin()->first.weight();
  for (const auto& [lambda, c] : terms_)
    if (lambda.weight() != w) return std::nullopt;
  return w;
}

void SymFunc::check_compatible(const SymFunc& other) const {
  if (coeff_vars_ != other.coeff_vars_) throw AlphabetMismatch("symmetric functions over different coefficient alphabets");
  if (bound_ != other.bound_)
    throw BoundExceeded("symmetric functions with different generator bounds (" + std::to_string(bound_) + " vs " +
                        std::to_string(other.bound_) + ")");
}

void SymFunc::add_term(const Partition& lambda, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
  check_compatible(other);
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) {
  check_compatible(other);
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, -c);
  return *this;
}

SymFunc& SymFunc::operator*=(const Rational& c) {
  if (c == 0) terms_.clear();
  for (auto& [lambda, x] : terms_) x *= c;
  return *this;
}

SymFunc& SymFunc::operator*=(const LaurentPoly& c) {
  if (c.vars() != coeff_vars_) throw AlphabetMismatch("coefficient alphabet mismatch");
  TermMap scaled;
  for (auto& [lambda, x] : terms_) {
    LaurentPoly y = x * c;
    if (!y.is_zero()) scaled.emplace(lambda, std::move(y));
  }
  terms_ = std::move(scaled);
  return *this;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
  a.check_compatible(b);
  SymFunc r(a.coeff_vars_, a.bound_);
  for (const auto& [la, ca] : a.terms_)
    for (const auto& [lb, cb] : b.terms_) r.add_term(merge(la, lb), ca * cb);
  return r;
}

SymFunc SymFunc::operator-() const {
  SymFunc r = *this;
  for (auto& [lambda, c] : r.terms_) c = -c;
  return r;
}

SymFunc adams(const SymFunc& f, int k) {
  if (k < 1) throw DomainError("Adams operation index must be >= 1");
  if (k == 1) return f;
  if (static_cast<long>(k) * f.max_index() > f.bound())
    throw BoundExceeded("Adams operation Psi_" + std::to_string(k) + " maps p_" + std::to_string(f.max_index()) +
                        " past generator bound " + std::to_string(f.bound()));
  SymFunc r(f.coeff_vars(), f.bound());
  for (const auto& [lambda, c] : f.terms()) {
    std::vector<int> parts = lambda.parts();
    for (auto& p : parts) p *= k;
    r += SymFunc::from_partition(f.coeff_vars(), f.bound(), Partition(std::move(parts)), adams(c, k));
  }
  return r;
}

std::optional<SymFunc> try_inverse(const SymFunc& f) {
  if (f.terms().size() != 1 || !f.terms().begin()->first.empty()) return std::nullopt;
  auto inv = try_inverse(f.terms().begin()->second);
  if (!inv) return std::nullopt;
  return SymFunc::lift(*inv, f.bound());
}

// ---------------------------------------------------------------------------
// Bases

namespace {

void check_weight(int weight, int bound) {
  if (weight > bound)
    throw BoundExceeded("basis element of weight " + std::to_string(weight) + " exceeds generator bound " +
                        std::to_string(bound));
}

SymFunc signed_sum_over_partitions(int k, int bound, const Alphabet& vars, bool alternating) {
  if (k < 0) return SymFunc(vars, bound);
  check_weight(k, bound);
  SymFunc f(vars, bound);
  for (const auto& lambda : partitions_of(k)) {
    Rational c(Integer(1), z_lambda(lambda));
    if (alternating && (k - static_cast<int>(lambda.length())) % 2 != 0) c = -c;
    f += SymFunc::from_partition(vars, bound, lambda, LaurentPoly::from_constant(vars, c));
  }
  return f;
}

}  // namespace

SymFunc complete_h(int k, int bound, const Alphabet& coeff_vars) {
  return signed_sum_over_partitions(k, bound, coeff_vars, false);
}

SymFunc elementary_e(int k, int bound, const Alphabet& coeff_vars) {
  return signed_sum_over_partitions(k, bound, coeff_vars, true);
}

SymFunc schur(const Partition& lambda, int bound, const Alphabet& coeff_vars) {
  check_weight(lambda.weight(), bound);
  const auto& parts = lambda.parts();
  const int n = static_cast<int>(parts.size());
  if (n == 0) return SymFunc(coeff_vars, bound).constant(Rational(1));

  // Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}).
  std::map<int, SymFunc> h;
  auto entry = [&](int i, int j) -> const SymFunc& {
    const int idx = parts[static_cast<std::size_t>(i)] - i + j;
    auto it = h.find(idx);
    if (it == h.end()) it = h.emplace(idx, complete_h(idx, bound, coeff_vars)).first;
    return it->second;
  };

  // Laplace expansion along rows, memoized on the set of used columns.
  std::map<unsigned, SymFunc> memo;
  std::function<SymFunc(int, unsigned)> minor = [&](int row, unsigned used) -> SymFunc {
    if (row == n) return SymFunc(coeff_vars, bound).constant(Rational(1));
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    SymFunc acc(coeff_vars, bound);
    int free_before = 0;
    for (int col = 0; col < n; ++col) {
      if (used & (1u << col)) continue;
      const SymFunc& a = entry(row, col);
      if (!a.is_zero()) {
        SymFunc term = a * minor(row + 1, used | (1u << col));
        if (free_before % 2) acc -= term;
        else acc += term;
      }
      ++free_before;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return minor(0, 0);
}

SymFunc basis_in_p(Basis basis, const Partition& index, int bound, const Alphabet& coeff_vars) {
  switch (basis) {
    case Basis::h:
    case Basis::e: {
      // h_lambda = h_{lambda_1} h_{lambda_2} ..., likewise for e
      SymFunc out = SymFunc(coeff_vars, bound).constant(1);
      for (int k : index.parts())
        out = out * (basis == Basis::h ? complete_h(k, bound, coeff_vars) : elementary_e(k, bound, coeff_vars));
      return out;
    }
    case Basis::s:
      return schur(index, bound, coeff_vars);
  }
  throw DomainError("unknown basis");
}

std::map<Partition, LaurentPoly> p_to_schur(const SymFunc& f) {
  const auto weight = f.homogeneous_weight();
  if (!weight) throw DomainError("Schur expansion requires a homogeneous symmetric function");
  const int n = *weight;
  const auto parts = partitions_of(n);
  const std::size_t m = parts.size();
  const int bound = std::max(n, 1);

  // Solve sum_lambda c_lambda [p_mu] s_lambda = [p_mu] f for all mu |- n.
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m));
  for (std::size_t j = 0; j < m; ++j) {
    const SymFunc s = schur(parts[j], bound);
    for (std::size_t i = 0; i < m; ++i) a[i][j] = s.coefficient(parts[i]).constant_term();
  }
  std::vector<LaurentPoly> rhs(m);
  for (std::size_t i = 0; i < m; ++i) rhs[i] = f.coefficient(parts[i]);

  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (pivot < m && a[pivot][col] == 0) ++pivot;
    if (pivot == m) throw DomainError("singular Schur transition matrix");
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t j = col; j < m; ++j) a[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const Rational factor = a[i][col];
      for (std::size_t j = col; j < m; ++j) a[i][j] -= factor * a[col][j];
      rhs[i] -= rhs[col] * factor;
    }
  }

  std::map<Partition, LaurentPoly> out;
  for (std::size_t i = 0; i < m; ++i)
    if (!rhs[i].is_zero()) out.emplace(parts[i], rhs[i]);
  return out;
}

LaurentPoly specialize(const SymFunc& f, Specialization mode) {
  LaurentPoly result(f.coeff_vars());
  switch (mode) {
    case Specialization::invariants:
      for (const auto& [lambda, c] : f.terms()) result += c;
      return result;
    case Specialization::sign:
      for (const auto& [lambda, c] : f.terms()) {
        if ((lambda.weight() - static_cast<int>(lambda.length())) % 2 == 0) result += c;
        else result -= c;
      }
      return result;
    case Specialization::ordered: {
      const auto weight = f.homogeneous_weight();
      if (!weight) throw DomainError("ordered specialization requires a homogeneous symmetric function");
      const Partition ones(std::vector<int>(static_cast<std::size_t>(*weight), 1));
      return f.coefficient(ones) * Rational(factorial(*weight));
    }
  }
  throw DomainError("unknown specialization");
}

}  // namespace powstruct
