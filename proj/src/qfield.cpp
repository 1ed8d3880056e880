#include "nilint/qfield.hpp"

#include <ostream>

#include "nilint/errors.hpp"

namespace nilint {

// ---------------------------------------------------------------- Rational

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

std::string Rational::to_string() const { return v_.get_str(); }

// ----------------------------------------------------------------- QuadRat

Rational QuadRat::norm() const { return p_ * p_ - Rational(2) * q_ * q_; }

QuadRat& QuadRat::operator+=(const QuadRat& o) {
  p_ += o.p_;
  q_ += o.q_;
  return *this;
}

QuadRat& QuadRat::operator-=(const QuadRat& o) {
  p_ -= o.p_;
  q_ -= o.q_;
  return *this;
}

QuadRat& QuadRat::operator*=(const QuadRat& o) {
  Rational p = p_ * o.p_ + Rational(2) * q_ * o.q_;
  Rational q = p_ * o.q_ + q_ * o.p_;
  p_ = std::move(p);
  q_ = std::move(q);
  return *this;
}

QuadRat& QuadRat::operator/=(const QuadRat& o) { return *this *= inv(o); }

std::strong_ordering operator<=>(const QuadRat& a, const QuadRat& b) {
  return sign(a - b) <=> 0;
}

std::string QuadRat::to_string() const {
  if (q_.is_zero()) return p_.to_string();
  std::string out;
  if (!p_.is_zero()) out = p_.to_string();
  if (q_.sign() < 0)
    out += '-';
  else if (!out.empty())
    out += '+';
  Rational mag = q_.abs();
  if (mag != Rational(1)) out += mag.to_string();
  out += "r2";
  return out;
}

QuadRat add(const QuadRat& u, const QuadRat& v) { return u + v; }

QuadRat mul(const QuadRat& u, const QuadRat& v) { return u * v; }

QuadRat inv(const QuadRat& u) {
  if (u.is_zero()) throw DomainError("division by zero");
  // p^2 - 2q^2 vanishes only at 0 since sqrt2 is irrational.
  Rational n = u.norm();
  return {u.p() / n, -u.q() / n};
}

int sign(const QuadRat& u) {
  int sp = u.p().sign();
  int sq = u.q().sign();
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // Opposite signs: the larger of |p| and |q| sqrt2 wins.
  int n = u.norm().sign();
  return n > 0 ? sp : sq;
}

Integer floor(const QuadRat& u) {
  if (u.q().is_zero()) return u.p().floor();
  // |u| <= |p| + 2|q| < bound, so lo <= u < hi.
  Integer bound = (u.p().abs() + Rational(2) * u.q().abs()).floor() + 1;
  Integer lo = -bound;
  Integer hi = bound;
  while (hi - lo > 1) {
    Integer mid = lo + (hi - lo) / 2;
    if (sign(u - QuadRat(mid)) >= 0)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

bool is_integer(const QuadRat& u) {
  return u.q().is_zero() && u.p().is_integer();
}

bool is_rational(const QuadRat& u) { return u.q().is_zero(); }

QuadRat frac(const QuadRat& u) { return u - QuadRat(floor(u)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

std::ostream& operator<<(std::ostream& os, const QuadRat& u) {
  return os << u.to_string();
}

}  // namespace nilint
