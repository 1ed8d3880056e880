#pragma once

// Exact arithmetic in K = Q(sqrt 2).
//
// Every value is kept in canonical form: rationals are reduced with a positive
// denominator, and p + q*sqrt2 is stored as the pair (p, q). Since sqrt2 is
// irrational the pair determines the real number, so equality is structural.

#include <compare>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace nilint {

using Integer = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT: integers are rationals
  Rational(const Integer& n) : v_(n) {}  // NOLINT
  // Throws DomainError("zero denominator") when den == 0.
  Rational(const Integer& num, const Integer& den);

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  Integer floor() const;

  Rational abs() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  // Throws DomainError("division by zero").
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

  // "n" or "n/d".
  std::string to_string() const;

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

// p + q*sqrt2.
class QuadRat {
 public:
  QuadRat() = default;
  QuadRat(long n) : p_(n) {}  // NOLINT
  QuadRat(const Integer& n) : p_(n) {}  // NOLINT
  QuadRat(Rational p) : p_(std::move(p)) {}  // NOLINT
  QuadRat(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {}

  static QuadRat sqrt2() { return {Rational{0}, Rational{1}}; }

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }

  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }

  QuadRat conj() const { return {p_, -q_}; }
  // p^2 - 2 q^2, the field norm down to Q.
  Rational norm() const;

  QuadRat& operator+=(const QuadRat& o);
  QuadRat& operator-=(const QuadRat& o);
  QuadRat& operator*=(const QuadRat& o);
  QuadRat& operator/=(const QuadRat& o);

  friend QuadRat operator+(QuadRat a, const QuadRat& b) { return a += b; }
  friend QuadRat operator-(QuadRat a, const QuadRat& b) { return a -= b; }
  friend QuadRat operator*(QuadRat a, const QuadRat& b) { return a *= b; }
  friend QuadRat operator/(QuadRat a, const QuadRat& b) { return a /= b; }
  QuadRat operator-() const { return {-p_, -q_}; }

  friend bool operator==(const QuadRat&, const QuadRat&) = default;
  // Real ordering, decided exactly.
  friend std::strong_ordering operator<=>(const QuadRat& a, const QuadRat& b);

  // Canonical literal: "5", "-1/2", "r2", "-r2", "3/2+2r2", "1/2r2".
  std::string to_string() const;

 private:
  Rational p_;
  Rational q_;
};

QuadRat add(const QuadRat& u, const QuadRat& v);
QuadRat mul(const QuadRat& u, const QuadRat& v);
// Throws DomainError("division by zero") on 0.
QuadRat inv(const QuadRat& u);
int sign(const QuadRat& u);
// The unique n with n <= u < n + 1.
Integer floor(const QuadRat& u);
bool is_integer(const QuadRat& u);
bool is_rational(const QuadRat& u);
// u - floor(u), in [0, 1).
QuadRat frac(const QuadRat& u);

std::ostream& operator<<(std::ostream& os, const Rational& r);
std::ostream& operator<<(std::ostream& os, const QuadRat& u);

}  // namespace nilint
