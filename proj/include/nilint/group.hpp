#pragma once

// The Heisenberg group H3(K), its quotient G = H3(K)/Gamma by the integer
// points of the center, and the definable subsets of G: centralizers, the
// line subgroups L_{a,b}, A, B, the center, the projection to E = G/Z(G),
// and collinearity on E.

#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "nilint/qfield.hpp"

namespace nilint {

// [[1,a,c],[0,1,b],[0,0,1]]
struct HElem {
  QuadRat a;
  QuadRat b;
  QuadRat c;

  friend bool operator==(const HElem&, const HElem&) = default;
};

HElem h_mul(const HElem& g, const HElem& h);
HElem h_inv(const HElem& g);

// Class [a,b,c] of H3(K)/Gamma, stored with c in [0,1).
class GElem {
 public:
  GElem() = default;
  GElem(QuadRat a, QuadRat b, QuadRat c);

  static GElem project(const HElem& h) { return {h.a, h.b, h.c}; }

  const QuadRat& a() const { return a_; }
  const QuadRat& b() const { return b_; }
  const QuadRat& c() const { return c_; }

  // The representative with c in [0,1).
  HElem lift() const { return {a_, b_, c_}; }

  friend bool operator==(const GElem&, const GElem&) = default;

  std::string to_string() const;

 private:
  QuadRat a_;
  QuadRat b_;
  QuadRat c_;
};

GElem g_mul(const GElem& g, const GElem& h);
GElem g_inv(const GElem& g);
inline GElem operator*(const GElem& g, const GElem& h) { return g_mul(g, h); }
// g^n for any integer n.
GElem g_pow(const GElem& g, long n);
// g h g^-1 h^-1
GElem commutator(const GElem& g, const GElem& h);

// Point of E = G/Z(G), identified with K^2.
struct EPoint {
  QuadRat a;
  QuadRat b;

  friend bool operator==(const EPoint&, const EPoint&) = default;
  friend EPoint operator+(const EPoint& p, const EPoint& q) {
    return {p.a + q.a, p.b + q.b};
  }
  friend EPoint operator-(const EPoint& p, const EPoint& q) {
    return {p.a - q.a, p.b - q.b};
  }

  std::string to_string() const;
};

// Parameters of L_{a,b} = {[a',b',c'] : a b' - b a' = 0}, normalized so that
// the first nonzero of (a, b) is 1.
class LineSubgroup {
 public:
  // Throws DomainError for (0, 0).
  LineSubgroup(const QuadRat& a, const QuadRat& b);

  const QuadRat& a() const { return a_; }
  const QuadRat& b() const { return b_; }

  friend bool operator==(const LineSubgroup&, const LineSubgroup&) = default;

  // "L(a,b)"
  std::string to_string() const;

 private:
  QuadRat a_;
  QuadRat b_;
};

// h in C(g), by the closed form a b' - b a' in Z.
bool in_centralizer(const GElem& h, const GElem& g);
// g h == h g, computed in the group.
bool commute(const GElem& g, const GElem& h);
bool is_central(const GElem& g);
bool in_L(const LineSubgroup& line, const GElem& h);

// Both descriptions of L_{a,b} as pointwise predicates:
//   by_centralizers(h)  h in C([a,b,0]) and h in C([r2 a, r2 b, 0])
//   by_kernel(h)        a b' - b a' = 0
// They agree on K because t in Z and r2 t in Z force t = 0.
class LineDefinitions {
 public:
  bool by_centralizers(const GElem& h) const;
  bool by_kernel(const GElem& h) const;
  const LineSubgroup& line() const { return line_; }

 private:
  friend LineDefinitions L_from_centralizers(const QuadRat&, const QuadRat&);
  LineDefinitions(const QuadRat& a, const QuadRat& b);

  GElem first_;
  GElem second_;
  LineSubgroup line_;
};

// Throws DomainError for (0, 0).
LineDefinitions L_from_centralizers(const QuadRat& a, const QuadRat& b);

// A = L_{0,1} = {[0,b,c]}, B = A n C([1,0,0]) = {[0,b,c] : b in Z}.
bool in_A(const GElem& h);
bool in_B(const GElem& h);
// The same two sets, evaluated through in_L and in_centralizer.
bool in_A_definitional(const GElem& h);
bool in_B_definitional(const GElem& h);

EPoint iota(const GElem& g);
// The class representative [a,b,0] of a point of E.
GElem lift(const EPoint& p);

// C(g1) n C(g2) when it is a line subgroup. Writing v1, v2 for the images
// under iota, this happens iff v2 = lambda v1 with lambda in K \ Q, which is
// exactly when the intersection is 2-divisible. Throws DomainError
// ("centralizer is everything") if either input is central.
std::optional<LineSubgroup> is_line_pair(const GElem& g1, const GElem& g2);

// For a pair that is not a line: an element of C(g1) n C(g2) with no square
// root inside the intersection. nullopt when the pair is a line.
std::optional<GElem> non_halvable_witness(const GElem& g1, const GElem& g2);

struct DivisibilityReport {
  std::size_t members = 0;  // sampled elements found inside the intersection
  std::optional<GElem> counterexample;
  bool divisible() const { return !counterexample; }
};

// Sampling oracle for 2-divisibility of C(g1) n C(g2): membership by direct
// commutation, and for each member x an explicit search for y in the
// intersection with y y = x. Does not consult in_centralizer or is_line_pair.
DivisibilityReport check_2divisible(const GElem& g1, const GElem& g2,
                                    std::span<const GElem> sample);

// exists L in the line family with p^-1 q in L and p^-1 r in L, discharged
// with the witness L through p^-1 q.
bool coll(const EPoint& p, const EPoint& q, const EPoint& r);

std::ostream& operator<<(std::ostream& os, const GElem& g);
std::ostream& operator<<(std::ostream& os, const EPoint& p);
std::ostream& operator<<(std::ostream& os, const LineSubgroup& l);

}  // namespace nilint
