#pragma once

// Affine incidence geometry over K, and the von Staudt constructions that
// recover + and * on an axis from lines through pairs of points, parallels
// and intersections alone.
//
// Numbers t are the axis points N(t) = (0, t) on the line u = 0.

#include <concepts>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "nilint/qfield.hpp"

namespace nilint {

struct AffPoint {
  QuadRat u;
  QuadRat v;

  friend bool operator==(const AffPoint&, const AffPoint&) = default;
  std::string to_string() const;
};

// A u + B v + C = 0 with the first nonzero of (A, B) equal to 1.
class AffLine {
 public:
  // Throws DomainError when A = B = 0.
  AffLine(const QuadRat& A, const QuadRat& B, const QuadRat& C);

  const QuadRat& A() const { return A_; }
  const QuadRat& B() const { return B_; }
  const QuadRat& C() const { return C_; }

  bool contains(const AffPoint& p) const;

  friend bool operator==(const AffLine&, const AffLine&) = default;
  std::string to_string() const;

 private:
  QuadRat A_;
  QuadRat B_;
  QuadRat C_;
};

// Throws DomainError("degenerate pair") when p == q.
AffLine line_through(const AffPoint& p, const AffPoint& q);
bool is_parallel(const AffLine& l, const AffLine& m);
AffLine parallel_through(const AffLine& l, const AffPoint& p);

struct Meet {
  enum class Kind { point, parallel, coincident };
  Kind kind;
  std::optional<AffPoint> point;
};

Meet meet(const AffLine& l, const AffLine& m);

bool coll_det(const AffPoint& p, const AffPoint& q, const AffPoint& r);

// What a von Staudt construction may use: lines through two distinct points,
// the parallel to a line through a point, and the intersection point of two
// lines (nullopt when they are parallel or equal). Points are opaque.
template <class P>
concept IncidencePlane = requires(const P& plane, const typename P::Point& p,
                                  const typename P::Line& l) {
  { plane.line_through(p, p) } -> std::same_as<typename P::Line>;
  { plane.parallel_through(l, p) } -> std::same_as<typename P::Line>;
  { plane.meet(l, l) } -> std::same_as<std::optional<typename P::Point>>;
};

// origin = N(0), unit = N(1), aux off the axis.
template <IncidencePlane P>
struct StaudtFrame {
  typename P::Point origin;
  typename P::Point unit;
  typename P::Point aux;
};

namespace detail {

template <IncidencePlane P>
typename P::Point must_meet(const P& plane, const typename P::Line& l,
                            const typename P::Line& m) {
  auto pt = plane.meet(l, m);
  if (!pt) throw std::logic_error("von Staudt construction degenerated");
  return *pt;
}

}  // namespace detail

// N(x), N(y) -> N(x + y). Translate P by N(y) along the axis direction, then
// slide back along the direction from P to N(x).
template <IncidencePlane P>
typename P::Point staudt_sum(const P& plane, const StaudtFrame<P>& frame,
                             const typename P::Point& nx,
                             const typename P::Point& ny) {
  auto axis = plane.line_through(frame.origin, frame.unit);
  auto rail = plane.parallel_through(axis, frame.aux);
  auto ray = plane.line_through(frame.origin, frame.aux);
  auto q = detail::must_meet(plane, plane.parallel_through(ray, ny), rail);
  auto back = plane.parallel_through(plane.line_through(frame.aux, nx), q);
  return detail::must_meet(plane, back, axis);
}

// N(x), N(y) -> N(x y). Scale P by x with the parallel to U P through N(x),
// then project along the direction from P to N(y).
template <IncidencePlane P>
typename P::Point staudt_product(const P& plane, const StaudtFrame<P>& frame,
                                 const typename P::Point& nx,
                                 const typename P::Point& ny) {
  auto axis = plane.line_through(frame.origin, frame.unit);
  auto ray = plane.line_through(frame.origin, frame.aux);
  auto scale = plane.parallel_through(
      plane.line_through(frame.unit, frame.aux), nx);
  auto q = detail::must_meet(plane, scale, ray);
  auto back = plane.parallel_through(plane.line_through(frame.aux, ny), q);
  return detail::must_meet(plane, back, axis);
}

// K^2 with the exact kernel above.
struct AffinePlane {
  using Point = AffPoint;
  using Line = AffLine;

  Line line_through(const Point& p, const Point& q) const {
    return nilint::line_through(p, q);
  }
  Line parallel_through(const Line& l, const Point& p) const {
    return nilint::parallel_through(l, p);
  }
  std::optional<Point> meet(const Line& l, const Line& m) const {
    return nilint::meet(l, m).point;
  }
};

// Throw DomainError when aux lies on the axis u = 0.
QuadRat vs_add(const QuadRat& x, const QuadRat& y, const AffPoint& aux);
QuadRat vs_mul(const QuadRat& x, const QuadRat& y, const AffPoint& aux);

std::ostream& operator<<(std::ostream& os, const AffPoint& p);
std::ostream& operator<<(std::ostream& os, const AffLine& l);

}  // namespace nilint
