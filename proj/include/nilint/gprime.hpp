#pragma once

// G' = H'/Gamma, where H' is the group of matrices [[1,a,c],[0,x,b],[0,0,1]]
// with x > 0. G sits inside G' as {x = 1}, recovered as the product of the
// centralizers of [0,1,0,1] and [1,0,0,1]; conjugation by C([0,0,0,2])
// moves [0,1,0,1] along the positive half of A, which gives a definable
// system of representatives for R = A/Z(G).

#include <iosfwd>
#include <optional>
#include <string>

#include "nilint/group.hpp"
#include "nilint/qfield.hpp"

namespace nilint {

class GPrimeElem {
 public:
  GPrimeElem() : x_(1) {}
  // Canonicalizes c mod 1. Throws DomainError("x must be positive").
  GPrimeElem(QuadRat a, QuadRat b, QuadRat c, QuadRat x);

  const QuadRat& a() const { return a_; }
  const QuadRat& b() const { return b_; }
  const QuadRat& c() const { return c_; }
  const QuadRat& x() const { return x_; }

  friend bool operator==(const GPrimeElem&, const GPrimeElem&) = default;

  std::string to_string() const;

 private:
  QuadRat a_;
  QuadRat b_;
  QuadRat c_;
  QuadRat x_;
};

GPrimeElem gp_mul(const GPrimeElem& g, const GPrimeElem& h);
GPrimeElem gp_inv(const GPrimeElem& g);
inline GPrimeElem operator*(const GPrimeElem& g, const GPrimeElem& h) {
  return gp_mul(g, h);
}
GPrimeElem gp_pow(const GPrimeElem& g, long n);

// By direct commutation. The centralizer of [0,1,0,1] is
// {[a,b,c,1] : a in Z}, which strictly contains {[0,b,c,1]}; intersecting
// with C([0,r2,0,1]) cuts it down to {[0,b,c,1]}.
bool gp_in_centralizer(const GPrimeElem& h, const GPrimeElem& g);

// [a,b,c] -> [a,b,c,1]
GPrimeElem embed(const GElem& g);
// Inverse of embed. Throws DomainError when x != 1.
GElem unembed(const GPrimeElem& h);

struct CentralizerFactors {
  GPrimeElem first;   // in C([0,1,0,1])
  GPrimeElem second;  // in C([1,0,0,1])
};

// h = [0,b,c,1] * [a,0,0,1] when x = 1; nullopt otherwise (both centralizers
// lie inside {x = 1}, hence so does their product).
std::optional<CentralizerFactors> centralizer_factors(const GPrimeElem& h);

// h in C([0,1,0,1]) C([1,0,0,1]), the copy of G inside G'.
bool in_G_embedded(const GPrimeElem& h);

// g [0,1,0,1] g^-1 for g in C([0,0,0,2]) = {[0,0,c,x]}; equals [0,x,0,1].
// Throws DomainError for g outside C([0,0,0,2]).
GPrimeElem conj_orbit_element(const GPrimeElem& g);

// The representative [0,b,0,1] of the class of [0,b,*] in A/Z(G): taken from
// the orbit O for b > 0, from O^-1 for b < 0, the identity for b = 0.
GPrimeElem rep_of_R(const QuadRat& b);
// Throws DomainError unless h = [0,b,0,1].
QuadRat class_of_rep(const GPrimeElem& h);

std::ostream& operator<<(std::ostream& os, const GPrimeElem& g);

}  // namespace nilint
