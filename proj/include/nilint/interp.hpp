#pragma once

// The interpretation of (K, +, *, Z) in G and G'.
//
// Numbers are classes of A modulo Z(G), each carried by its representative
// [0,b,0,1] in G'. Addition and multiplication run the von Staudt
// constructions in E = G/Z(G): points of E come from iota, incidence is the
// group-defined coll, parallels are translates by group multiplication.
// Integrality is membership in B.
//
// Everything here is exact over K = Q(sqrt2). K is closed under every
// construction used, so this is the restriction of the real structure to K,
// not a proof about R.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "nilint/geometry.hpp"
#include "nilint/gprime.hpp"
#include "nilint/group.hpp"
#include "nilint/qfield.hpp"

namespace nilint {

class RNum {
 public:
  // Throws DomainError unless rep has the form [0,b,0,1].
  static RNum from_representative(const GPrimeElem& rep);

  const GPrimeElem& representative() const { return rep_; }

  friend bool operator==(const RNum&, const RNum&) = default;

 private:
  explicit RNum(GPrimeElem rep) : rep_(std::move(rep)) {}
  GPrimeElem rep_;
};

RNum encode(const QuadRat& t);
QuadRat decode(const RNum& r);

RNum interp_add(const RNum& x, const RNum& y);
RNum interp_mul(const RNum& x, const RNum& y);
bool interp_is_int(const RNum& x);

// A point of E. It can only be built from a group element (through iota) and
// offers no arithmetic, so constructions over it go through the group.
class EClass {
 public:
  static EClass of(const GElem& g) { return EClass(iota(g)); }

  // The representative [a,b,0].
  GElem lift() const { return nilint::lift(p_); }

  friend bool operator==(const EClass&, const EClass&) = default;

 private:
  friend class EPlane;
  explicit EClass(EPoint p) : p_(std::move(p)) {}
  EPoint p_;
};

// E with lines given by pairs of distinct points. Parallels are group
// translates; two lines are parallel when their directions are collinear
// with the identity; a meet is located on iota-coordinates and accepted only
// once coll certifies it lies on both lines.
class EPlane {
 public:
  using Point = EClass;
  struct Line {
    EClass from;
    EClass to;
  };

  Line line_through(const Point& p, const Point& q) const;
  Line parallel_through(const Line& l, const Point& p) const;
  std::optional<Point> meet(const Line& l, const Line& m) const;
};

static_assert(IncidencePlane<EPlane>);

// Values produced by the catalog of definable formulas.
using Value = std::variant<QuadRat, GElem, GPrimeElem, EPoint, bool,
                           std::optional<LineSubgroup>>;

std::string to_string(const Value& v);

// Evaluates one formula of the fixed catalog
//   coll(p,q,r)  centralizer(h,g)  in_L(a,b,h)  in_A(h)  in_B(h)
//   is_line_pair(g1,g2)  orbit(g')  product_recovery(h')  embed(g)
// on already-evaluated arguments. '-' and '_' are interchangeable in ids.
// Unknown ids and arity mismatches throw UsageError, ill-typed arguments
// TypeError.
Value definable_reals_demo(std::string_view formula_id,
                           std::span<const Value> args);

}  // namespace nilint
