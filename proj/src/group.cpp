#include "nilint/group.hpp"

#include <ostream>

#include "nilint/errors.hpp"

namespace nilint {
namespace {

// a b' - b a' for (a, b), (a', b'): the commutator's central coordinate.
QuadRat cross(const QuadRat& a, const QuadRat& b, const QuadRat& a2,
              const QuadRat& b2) {
  return a * b2 - b * a2;
}

QuadRat cross(const EPoint& v, const EPoint& w) {
  return cross(v.a, v.b, w.a, w.b);
}

const QuadRat kHalf{Rational(Integer(1), Integer(2))};

}  // namespace

HElem h_mul(const HElem& g, const HElem& h) {
  return {g.a + h.a, g.b + h.b, g.c + h.c + g.a * h.b};
}

HElem h_inv(const HElem& g) { return {-g.a, -g.b, g.a * g.b - g.c}; }

GElem::GElem(QuadRat a, QuadRat b, QuadRat c)
    : a_(std::move(a)), b_(std::move(b)), c_(frac(c)) {}

std::string GElem::to_string() const {
  return "[" + a_.to_string() + "," + b_.to_string() + "," + c_.to_string() +
         "]";
}

GElem g_mul(const GElem& g, const GElem& h) {
  return GElem::project(h_mul(g.lift(), h.lift()));
}

GElem g_inv(const GElem& g) { return GElem::project(h_inv(g.lift())); }

GElem g_pow(const GElem& g, long n) {
  GElem base = n < 0 ? g_inv(g) : g;
  unsigned long e = n < 0 ? 0UL - static_cast<unsigned long>(n)
                          : static_cast<unsigned long>(n);
  GElem acc;
  while (e != 0) {
    if (e & 1UL) acc = acc * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return acc;
}

GElem commutator(const GElem& g, const GElem& h) {
  return g * h * g_inv(g) * g_inv(h);
}

std::string EPoint::to_string() const {
  return "(" + a.to_string() + "," + b.to_string() + ")";
}

LineSubgroup::LineSubgroup(const QuadRat& a, const QuadRat& b) {
  if (a.is_zero() && b.is_zero())
    throw DomainError("degenerate line parameters (0,0)");
  if (!a.is_zero()) {
    a_ = QuadRat(1);
    b_ = b / a;
  } else {
    a_ = QuadRat(0);
    b_ = QuadRat(1);
  }
}

std::string LineSubgroup::to_string() const {
  return "L(" + a_.to_string() + "," + b_.to_string() + ")";
}

bool in_centralizer(const GElem& h, const GElem& g) {
  return is_integer(cross(g.a(), g.b(), h.a(), h.b()));
}

bool commute(const GElem& g, const GElem& h) { return g * h == h * g; }

bool is_central(const GElem& g) { return g.a().is_zero() && g.b().is_zero(); }

bool in_L(const LineSubgroup& line, const GElem& h) {
  return cross(line.a(), line.b(), h.a(), h.b()).is_zero();
}

LineDefinitions::LineDefinitions(const QuadRat& a, const QuadRat& b)
    : first_(a, b, 0),
      second_(QuadRat::sqrt2() * a, QuadRat::sqrt2() * b, 0),
      line_(a, b) {}

bool LineDefinitions::by_centralizers(const GElem& h) const {
  return in_centralizer(h, first_) && in_centralizer(h, second_);
}

bool LineDefinitions::by_kernel(const GElem& h) const {
  return in_L(line_, h);
}

LineDefinitions L_from_centralizers(const QuadRat& a, const QuadRat& b) {
  return {a, b};
}

bool in_A(const GElem& h) { return h.a().is_zero(); }

bool in_B(const GElem& h) { return h.a().is_zero() && is_integer(h.b()); }

bool in_A_definitional(const GElem& h) {
  return L_from_centralizers(0, 1).by_centralizers(h);
}

bool in_B_definitional(const GElem& h) {
  return in_A_definitional(h) && in_centralizer(h, GElem(1, 0, 0));
}

EPoint iota(const GElem& g) { return {g.a(), g.b()}; }

GElem lift(const EPoint& p) { return {p.a, p.b, 0}; }

namespace {

void require_noncentral(const GElem& g1, const GElem& g2) {
  if (is_central(g1) || is_central(g2))
    throw DomainError("centralizer is everything");
}

// lambda with v2 = lambda v1, when the two are dependent.
std::optional<QuadRat> ratio(const EPoint& v1, const EPoint& v2) {
  if (!cross(v1, v2).is_zero()) return std::nullopt;
  return v1.a.is_zero() ? v2.b / v1.b : v2.a / v1.a;
}

}  // namespace

std::optional<LineSubgroup> is_line_pair(const GElem& g1, const GElem& g2) {
  require_noncentral(g1, g2);
  EPoint v1 = iota(g1);
  auto lambda = ratio(v1, iota(g2));
  if (!lambda || is_rational(*lambda)) return std::nullopt;
  return LineSubgroup(v1.a, v1.b);
}

std::optional<GElem> non_halvable_witness(const GElem& g1, const GElem& g2) {
  require_noncentral(g1, g2);
  EPoint v1 = iota(g1);
  EPoint v2 = iota(g2);
  auto lambda = ratio(v1, v2);
  if (!lambda) {
    // The intersection is a lattice times the center. w = -v2 / cross(v1, v2)
    // has cross(v1, w) = -1 and cross(v2, w) = 0; its half gives -1/2.
    QuadRat s = -inv(cross(v1, v2));
    return GElem(s * v2.a, s * v2.b, 0);
  }
  if (!is_rational(*lambda)) return std::nullopt;
  // lambda = m/n. Members have cross(v1, w) in nZ; take cross(v1, w) = -n.
  QuadRat n(Rational(lambda->p().den()));
  if (!v1.a.is_zero()) return GElem(0, -n / v1.a, 0);
  return GElem(n / v1.b, 0, 0);
}

DivisibilityReport check_2divisible(const GElem& g1, const GElem& g2,
                                    std::span<const GElem> sample) {
  auto member = [&](const GElem& x) {
    return commute(x, g1) && commute(x, g2);
  };
  DivisibilityReport report;
  for (const GElem& x : sample) {
    if (!member(x)) continue;
    ++report.members;
    // [a,b,c]^2 = [2a, 2b, 2c + ab], so a root has iota(x)/2 and one of two
    // central coordinates mod 1.
    QuadRat a = x.a() * kHalf;
    QuadRat b = x.b() * kHalf;
    QuadRat c = (x.c() - a * b) * kHalf;
    bool halved = false;
    for (const GElem& y : {GElem(a, b, c), GElem(a, b, c + kHalf)}) {
      if (y * y == x && member(y)) {
        halved = true;
        break;
      }
    }
    if (!halved) {
      report.counterexample = x;
      break;
    }
  }
  return report;
}

bool coll(const EPoint& p, const EPoint& q, const EPoint& r) {
  GElem p_inv = g_inv(lift(p));
  GElem u = p_inv * lift(q);
  GElem v = p_inv * lift(r);
  if (is_central(u) || is_central(v)) return true;
  LineSubgroup line(u.a(), u.b());
  return in_L(line, u) && in_L(line, v);
}

std::ostream& operator<<(std::ostream& os, const GElem& g) {
  return os << g.to_string();
}

std::ostream& operator<<(std::ostream& os, const EPoint& p) {
  return os << p.to_string();
}

std::ostream& operator<<(std::ostream& os, const LineSubgroup& l) {
  return os << l.to_string();
}

}  // namespace nilint
