#include "nilint/geometry.hpp"

#include <ostream>

#include "nilint/errors.hpp"

namespace nilint {

std::string AffPoint::to_string() const {
  return "(" + u.to_string() + "," + v.to_string() + ")";
}

AffLine::AffLine(const QuadRat& A, const QuadRat& B, const QuadRat& C) {
  if (A.is_zero() && B.is_zero())
    throw DomainError("line with vanishing normal");
  QuadRat lead = A.is_zero() ? B : A;
  QuadRat r = inv(lead);
  A_ = A * r;
  B_ = B * r;
  C_ = C * r;
}

bool AffLine::contains(const AffPoint& p) const {
  return (A_ * p.u + B_ * p.v + C_).is_zero();
}

std::string AffLine::to_string() const {
  return "{" + A_.to_string() + "," + B_.to_string() + "," + C_.to_string() +
         "}";
}

AffLine line_through(const AffPoint& p, const AffPoint& q) {
  if (p == q) throw DomainError("degenerate pair");
  QuadRat A = q.v - p.v;
  QuadRat B = p.u - q.u;
  return {A, B, -(A * p.u + B * p.v)};
}

bool is_parallel(const AffLine& l, const AffLine& m) {
  return (l.A() * m.B() - m.A() * l.B()).is_zero();
}

AffLine parallel_through(const AffLine& l, const AffPoint& p) {
  return {l.A(), l.B(), -(l.A() * p.u + l.B() * p.v)};
}

Meet meet(const AffLine& l, const AffLine& m) {
  if (is_parallel(l, m))
    return {l == m ? Meet::Kind::coincident : Meet::Kind::parallel, {}};
  QuadRat r = inv(l.A() * m.B() - m.A() * l.B());
  AffPoint p{(m.C() * l.B() - l.C() * m.B()) * r,
             (l.C() * m.A() - m.C() * l.A()) * r};
  return {Meet::Kind::point, p};
}

bool coll_det(const AffPoint& p, const AffPoint& q, const AffPoint& r) {
  return ((q.u - p.u) * (r.v - p.v) - (q.v - p.v) * (r.u - p.u)).is_zero();
}

namespace {

StaudtFrame<AffinePlane> axis_frame(const AffPoint& aux) {
  if (aux.u.is_zero())
    throw DomainError("auxiliary point lies on the axis");
  return {{0, 0}, {0, 1}, aux};
}

}  // namespace

QuadRat vs_add(const QuadRat& x, const QuadRat& y, const AffPoint& aux) {
  auto frame = axis_frame(aux);
  return staudt_sum(AffinePlane{}, frame, {0, x}, {0, y}).v;
}

QuadRat vs_mul(const QuadRat& x, const QuadRat& y, const AffPoint& aux) {
  auto frame = axis_frame(aux);
  return staudt_product(AffinePlane{}, frame, {0, x}, {0, y}).v;
}

std::ostream& operator<<(std::ostream& os, const AffPoint& p) {
  return os << p.to_string();
}

std::ostream& operator<<(std::ostream& os, const AffLine& l) {
  return os << l.to_string();
}

}  // namespace nilint
