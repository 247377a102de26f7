#pragma once

#include <map>
#include <utility>

#include "annular/numeric.hpp"

namespace annular {

/// Exponent pair (a, b) of a monomial q^a v^b.
struct Exponents {
  Int a;  // power of q
  Int b;  // power of v

  friend bool operator==(const Exponents& x, const Exponents& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator<(const Exponents& x, const Exponents& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }
};

/// Exact Laurent polynomial in q and v with rational coefficients.
///
/// q stands for the quarter root of the loop parameter t, so t^{1/2} = q^2
/// and t = q^4; v is the twist weight. Terms are kept in canonical sparse
/// form: no zero coefficient is ever stored, and iteration order is the
/// lexicographic order on (a, b).
class Scalar {
 public:
  using TermMap = std::map<Exponents, Rat>;

  Scalar() = default;
  Scalar(int c) { insert(Exponents{0, 0}, Rat(c)); }
  Scalar(long c) { insert(Exponents{0, 0}, Rat(c)); }
  explicit Scalar(const Rat& c) { insert(Exponents{0, 0}, c); }

  static Scalar monomial(const Rat& c, Int a, Int b) {
    Scalar s;
    s.insert(Exponents{std::move(a), std::move(b)}, c);
    return s;
  }
  static Scalar q(long k = 1) { return monomial(1, k, 0); }
  static Scalar v(long k = 1) { return monomial(1, 0, k); }

  /// delta = -(q^2 + q^-2), the contractible loop weight.
  static Scalar delta() { return monomial(-1, 2, 0) + monomial(-1, -2, 0); }
  /// u = q v + q^-1 v^-1, the noncontractible loop weight.
  static Scalar loop_weight_u() {
    return monomial(1, 1, 1) + monomial(1, -1, -1);
  }
  /// s0 = q + q^-1, the noncontractible loop weight at twist v = 1.
  static Scalar s0() { return monomial(1, 1, 0) + monomial(1, -1, 0); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0} &&
           terms_.begin()->second == 1;
  }
  bool is_monomial() const { return terms_.size() == 1; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.terms_ == y.terms_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
  friend bool operator<(const Scalar& x, const Scalar& y) {
    return x.terms_ < y.terms_;
  }

  Scalar& operator+=(const Scalar& o) {
    for (const auto& [e, c] : o.terms_) insert(e, c);
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    for (const auto& [e, c] : o.terms_) insert(e, -c);
    return *this;
  }
  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator-(const Scalar& x) {
    Scalar r;
    for (const auto& [e, c] : x.terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend Scalar operator*(const Scalar& x, const Scalar& y) {
    Scalar r;
    for (const auto& [ex, cx] : x.terms_)
      for (const auto& [ey, cy] : y.terms_)
        r.insert(Exponents{ex.a + ey.a, ex.b + ey.b}, cx * cy);
    return r;
  }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Inverse of a monomial. Non-monomials are not units here.
  Scalar inverse() const {
    if (terms_.size() != 1)
      throw NonUnitError("only monomials are invertible in the Laurent ring");
    const auto& [e, c] = *terms_.begin();
    return monomial(Rat(denominator(c), numerator(c)), -e.a, -e.b);
  }

  /// Integer power; negative exponents require a monomial base.
  Scalar pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    Scalar r(1), base = *this;
    while (k > 0) {
      if (k & 1) r *= base;
      base *= base;
      k >>= 1;
    }
    return r;
  }

  /// Substitute v := value (a unit monomial with no v part). q is untouched.
  Scalar specialize_v(const Scalar& value) const {
    if (value.terms_.size() != 1)
      throw NonUnitError("substituted value must be a unit monomial");
    const auto& [ve, vc] = *value.terms_.begin();
    if (ve.b != 0)
      throw NonUnitError("substituted value must be free of v");
    if (vc == 0) throw NonUnitError("cannot substitute zero for v");
    Scalar r;
    for (const auto& [e, c] : terms_) {
      // c q^a v^b  ->  c vc^b q^(a + b*ve.a)
      Rat coeff = c;
      Int bb = e.b;
      bool neg = bb < 0;
      if (neg) bb = -bb;
      Rat factor = neg ? Rat(denominator(vc), numerator(vc)) : vc;
      Rat scale = 1;
      for (Int i = 0; i < bb; ++i) scale *= factor;
      coeff *= scale;
      r.insert(Exponents{e.a + e.b * ve.a, 0}, coeff);
    }
    return r;
  }

 private:
  void insert(const Exponents& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TermMap terms_;
};

}  // namespace annular
