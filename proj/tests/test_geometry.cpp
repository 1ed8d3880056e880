#include <doctest.h>

#include "nilint/checks.hpp"
#include "nilint/errors.hpp"
#include "nilint/geometry.hpp"

using namespace nilint;

namespace {

Rational q(long n, long d) { return {Integer(n), Integer(d)}; }
const QuadRat r2 = QuadRat::sqrt2();

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("line_through") {
    CHECK(line_through({0, 0}, {0, 1}) == AffLine(1, 0, 0));
    CHECK(line_through({0, 0}, {1, 1}) == AffLine(1, -1, 0));
    // sqrt2 u + v - sqrt2 = 0, scaled to u + (sqrt2/2) v - 1 = 0
    AffLine l = line_through({1, 0}, {0, r2});
    CHECK(l == AffLine(1, QuadRat(0, q(1, 2)), -1));
    CHECK(l.contains({1, 0}));
    CHECK(l.contains({0, r2}));
    CHECK_THROWS_WITH_AS(line_through({r2, 1}, {r2, 1}), "degenerate pair",
                         DomainError);
    CHECK_THROWS_AS(AffLine(0, 0, 1), DomainError);
  }

  TEST_CASE("parallels and meets") {
    AffLine u0(1, 0, 0), u1(1, 0, -1), v0(0, 1, 0);
    CHECK(is_parallel(u0, u1));
    auto m = meet(u0, u1);
    CHECK(m.kind == Meet::Kind::parallel);
    CHECK_FALSE(m.point);
    CHECK(meet(u0, u0).kind == Meet::Kind::coincident);
    CHECK(meet(u0, v0).point == AffPoint{0, 0});
    // u - v = 0 and u + v - 2 = 0
    CHECK(meet(AffLine(1, -1, 0), AffLine(1, 1, -2)).point == AffPoint{1, 1});

    CHECK(parallel_through(u0, {1, 0}) == u1);
    CHECK(parallel_through(AffLine(1, -1, 0), {0, 1}) == AffLine(1, -1, 1));
    CHECK(parallel_through(u0, {0, 7}) == u0);
  }

  TEST_CASE("kernel invariants on samples") {
    Sampler s(31);
    for (int i = 0; i < 200; ++i) {
      AffPoint p{s.scalar(), s.scalar()}, r{s.scalar(), s.scalar()};
      AffPoint qq{s.scalar(), s.scalar()};
      if (p == qq) continue;
      AffLine l = line_through(p, qq);
      REQUIRE(l.contains(p));
      REQUIRE(l.contains(qq));
      AffLine par = parallel_through(l, r);
      REQUIRE(par.contains(r));
      REQUIRE(is_parallel(par, l));
      REQUIRE(parallel_through(par, r) == par);
      if (r == p) continue;
      AffLine m = line_through(p, r);
      auto x = meet(l, m);
      if (coll_det(p, qq, r)) {
        REQUIRE(x.kind == Meet::Kind::coincident);
      } else {
        REQUIRE(x.point == p);
      }
    }
  }

  TEST_CASE("coll_det") {
    CHECK(coll_det({0, 0}, {1, 1}, {2, 2}));
    CHECK_FALSE(coll_det({0, 0}, {1, 0}, {0, 1}));
    CHECK(coll_det({1, 1}, {2, 3}, {3, 5}));
  }

  TEST_CASE("von Staudt sum") {
    CHECK(vs_add(3, 5, {1, 1}) == QuadRat(8));
    CHECK(vs_add(r2, 0, {q(2, 3), -4}) == r2);
    CHECK(vs_add(r2, -r2, {2, 3}) == QuadRat(0));
    CHECK(vs_add(0, 0, {1, 0}) == QuadRat(0));
    CHECK_THROWS_WITH_AS(vs_add(1, 2, {0, 1}), "auxiliary point lies on the axis",
                         DomainError);
  }

  TEST_CASE("von Staudt product") {
    CHECK(vs_mul(2, 3, {1, 1}) == QuadRat(6));
    CHECK(vs_mul(QuadRat(q(7, 3), -1), 1, {-5, r2}) == QuadRat(q(7, 3), -1));
    CHECK(vs_mul(r2, r2, {1, 2}) == QuadRat(2));
    CHECK(vs_mul(0, r2, {1, 2}) == QuadRat(0));
    CHECK(vs_mul(r2, 0, {1, 2}) == QuadRat(0));
    CHECK(vs_mul(3, 4, {1, 1}) == QuadRat(12));
    CHECK_THROWS_AS(vs_mul(1, 2, {0, 5}), DomainError);
  }

  TEST_CASE("constructions are aux-independent") {
    Sampler s(32);
    for (int i = 0; i < 200; ++i) {
      QuadRat x = s.scalar(), y = s.scalar();
      AffPoint a1 = s.off_axis(), a2 = s.off_axis();
      REQUIRE(vs_add(x, y, a1) == x + y);
      REQUIRE(vs_add(x, y, a2) == x + y);
      REQUIRE(vs_mul(x, y, a1) == x * y);
      REQUIRE(vs_mul(x, y, a2) == x * y);
    }
  }

  TEST_CASE("constructions only see the incidence interface") {
    // A plane whose points carry no arithmetic: the templates must compile
    // against it, so they cannot touch coordinates.
    struct Opaque {
      AffPoint p;
      bool operator==(const Opaque&) const = default;
    };
    struct OpaquePlane {
      using Point = Opaque;
      using Line = AffLine;
      Line line_through(const Point& a, const Point& b) const {
        return nilint::line_through(a.p, b.p);
      }
      Line parallel_through(const Line& l, const Point& a) const {
        return nilint::parallel_through(l, a.p);
      }
      std::optional<Point> meet(const Line& l, const Line& m) const {
        auto x = nilint::meet(l, m).point;
        if (!x) return std::nullopt;
        return Opaque{*x};
      }
    };
    static_assert(IncidencePlane<OpaquePlane>);
    StaudtFrame<OpaquePlane> f{{{0, 0}}, {{0, 1}}, {{2, 7}}};
    CHECK(staudt_sum(OpaquePlane{}, f, {{0, 4}}, {{0, r2}}).p ==
          AffPoint{0, QuadRat(4, 1)});
    CHECK(staudt_product(OpaquePlane{}, f, {{0, 4}}, {{0, r2}}).p ==
          AffPoint{0, QuadRat(0, 4)});
  }
}
