#include "nilint/checks.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "nilint/errors.hpp"
#include "nilint/interp.hpp"

namespace nilint {

// ----------------------------------------------------------------- Sampler

long Sampler::uniform(long lo, long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng_() % span);
}

Rational Sampler::rational() {
  return {Integer(uniform(-kMaxNum, kMaxNum)), Integer(uniform(1, kMaxDen))};
}

Rational Sampler::nonzero_rational() {
  Rational r;
  do r = rational();
  while (r.is_zero());
  return r;
}

QuadRat Sampler::scalar() {
  switch (uniform(0, 5)) {
    case 0: return QuadRat(uniform(-kMaxNum, kMaxNum));
    case 1: return QuadRat(rational());
    case 2: return QuadRat(Rational(0), rational());
    default: return {rational(), rational()};
  }
}

QuadRat Sampler::nonzero() {
  QuadRat u;
  do u = scalar();
  while (u.is_zero());
  return u;
}

QuadRat Sampler::positive() {
  QuadRat u = nonzero();
  return sign(u) > 0 ? u : -u;
}

QuadRat Sampler::irrational() { return {rational(), nonzero_rational()}; }

HElem Sampler::h_elem() { return {scalar(), scalar(), scalar()}; }

GElem Sampler::g_elem() { return {scalar(), scalar(), scalar()}; }

GElem Sampler::noncentral() {
  GElem g;
  do g = g_elem();
  while (is_central(g));
  return g;
}

GPrimeElem Sampler::gp_elem() {
  return {scalar(), scalar(), scalar(), positive()};
}

EPoint Sampler::point() { return {scalar(), scalar()}; }

AffPoint Sampler::off_axis() { return {nonzero(), scalar()}; }

// ------------------------------------------------------------------ suites

namespace {

using Outcome = std::optional<std::string>;

std::ostream& operator<<(std::ostream& os, const HElem& h) {
  return os << "(" << h.a << "," << h.b << "," << h.c << ")";
}

struct Failure {
  std::ostringstream out;

  explicit Failure(std::string_view what) { out << what; }
  template <class T>
  Failure& with(std::string_view name, const T& value) {
    out << (first_ ? ": " : ", ") << name << "=" << value;
    first_ = false;
    return *this;
  }
  operator Outcome() const { return out.str(); }

 private:
  bool first_ = true;
};

const QuadRat kR2 = QuadRat::sqrt2();

// 140/99 < sqrt2 < 99/70
std::optional<int> interval_sign(const QuadRat& w) {
  Rational lo_r2(Integer(140), Integer(99));
  Rational hi_r2(Integer(99), Integer(70));
  const Rational& p = w.p();
  const Rational& q = w.q();
  Rational lo = q.sign() >= 0 ? p + q * lo_r2 : p + q * hi_r2;
  Rational hi = q.sign() >= 0 ? p + q * hi_r2 : p + q * lo_r2;
  if (lo.sign() > 0) return 1;
  if (hi.sign() < 0) return -1;
  if (w.is_zero()) return 0;
  return std::nullopt;
}

Outcome qfield_case(Sampler& s) {
  QuadRat u = s.scalar(), v = s.scalar(), w = s.scalar();
  if ((u + v) + w != u + (v + w) || (u * v) * w != u * (v * w))
    return Failure("associativity").with("u", u).with("v", v).with("w", w);
  if (u + v != v + u || u * v != v * u)
    return Failure("commutativity").with("u", u).with("v", v);
  if (u * (v + w) != u * v + u * w)
    return Failure("distributivity").with("u", u).with("v", v).with("w", w);
  if (!u.is_zero() && u * inv(u) != QuadRat(1))
    return Failure("inverse").with("u", u);
  if (sign(u * v) != sign(u) * sign(v))
    return Failure("sign multiplicativity").with("u", u).with("v", v);
  if (auto expected = interval_sign(u + v); expected && *expected != sign(u + v))
    return Failure("sign vs interval bounds").with("u", u).with("v", v);
  Integer n = floor(u);
  if (sign(u - QuadRat(n)) < 0 || sign(QuadRat(n + 1) - u) <= 0)
    return Failure("floor bracket").with("u", u).with("floor", n);
  QuadRat t = s.coin() ? QuadRat(s.uniform(-100, 100)) : s.scalar();
  if (is_integer(t) && is_integer(kR2 * t) && !t.is_zero())
    return Failure("irrationality lemma").with("t", t);
  return std::nullopt;
}

Outcome group_core_case(Sampler& s) {
  HElem x = s.h_elem(), y = s.h_elem(), z = s.h_elem();
  if (h_mul(h_mul(x, y), z) != h_mul(x, h_mul(y, z)))
    return Failure("H3 associativity").with("x", x).with("y", y).with("z", z);
  if (h_mul(x, h_inv(x)) != HElem{} || h_mul(HElem{}, x) != x)
    return Failure("H3 inverse/identity").with("x", x);

  GElem g = s.g_elem(), h = s.g_elem(), k = s.g_elem();
  if ((g * h) * k != g * (h * k))
    return Failure("G associativity").with("g", g).with("h", h).with("k", k);
  if (g * g_inv(g) != GElem{} || g * GElem{} != g)
    return Failure("G inverse/identity").with("g", g);

  QuadRat shift(s.uniform(-100, 100));
  if (GElem::project(x) != GElem::project({x.a, x.b, x.c + shift}))
    return Failure("quotient soundness").with("x", x).with("z", shift);

  // Pairs drawn with integer differences now and then so both verdicts occur.
  GElem h2 = s.coin() ? h : GElem(g.a() * QuadRat(s.uniform(-3, 3)),
                                  g.b() * QuadRat(s.uniform(-3, 3)), h.c());
  if (in_centralizer(h2, g) != commute(g, h2))
    return Failure("centralizer formula").with("g", g).with("h", h2);

  GElem comm = commutator(g, h);
  if (!is_central(comm) ||
      comm.c() != frac(g.a() * h.b() - h.a() * g.b()))
    return Failure("commutator").with("g", g).with("h", h);

  QuadRat a = s.scalar(), b = s.scalar();
  if (a.is_zero() && b.is_zero()) b = 1;
  auto defs = L_from_centralizers(a, b);
  GElem probe = s.coin() ? h : GElem(a * s.scalar(), b * s.scalar(), h.c());
  if (s.uniform(0, 3) == 0) {
    QuadRat t = s.scalar();
    probe = GElem(a * t, b * t, h.c());
  }
  if (defs.by_centralizers(probe) != defs.by_kernel(probe))
    return Failure("L equivalence").with("a", a).with("b", b).with("h", probe);

  if (in_A(h) != in_A_definitional(h) || in_B(h) != in_B_definitional(h))
    return Failure("A/B definitional forms").with("h", h);

  if (iota(g * h) != iota(g) + iota(h) ||
      (iota(g) == EPoint{} ) != is_central(g))
    return Failure("iota homomorphism").with("g", g).with("h", h);

  GElem g1 = s.noncentral();
  GElem g2;
  switch (s.uniform(0, 2)) {
    case 0: {
      QuadRat l = s.irrational();
      g2 = GElem(l * g1.a(), l * g1.b(), s.scalar());
      break;
    }
    case 1: {
      QuadRat l(s.nonzero_rational());
      g2 = GElem(l * g1.a(), l * g1.b(), s.scalar());
      break;
    }
    default: g2 = s.noncentral();
  }
  auto line = is_line_pair(g1, g2);
  std::vector<GElem> sample;
  for (int i = 0; i < 4; ++i) {
    QuadRat t = s.scalar();
    sample.emplace_back(t * g1.a(), t * g1.b(), s.scalar());
    sample.push_back(s.g_elem());
  }
  if (auto w = non_halvable_witness(g1, g2)) sample.push_back(*w);
  auto report = check_2divisible(g1, g2, sample);
  if (line.has_value() != report.divisible())
    return Failure("line pair vs 2-divisibility").with("g1", g1).with("g2", g2);

  EPoint p = s.point(), q = s.point();
  EPoint r = s.coin() ? s.point()
                      : EPoint{p.a + s.scalar() * (q.a - p.a),
                               p.b + s.scalar() * (q.b - p.b)};
  if (coll(p, q, r) != coll_det({p.a, p.b}, {q.a, q.b}, {r.a, r.b}))
    return Failure("coll vs determinant").with("p", p).with("q", q).with("r", r);
  return std::nullopt;
}

Outcome gprime_case(Sampler& s) {
  GPrimeElem g = s.gp_elem(), h = s.gp_elem(), k = s.gp_elem();
  if ((g * h) * k != g * (h * k))
    return Failure("G' associativity").with("g", g).with("h", h).with("k", k);
  if (g * gp_inv(g) != GPrimeElem{} || GPrimeElem{} * g != g)
    return Failure("G' inverse/identity").with("g", g);
  GPrimeElem gh = g * h;
  if (sign(gh.x()) != 1 || sign(gh.c()) < 0 || sign(QuadRat(1) - gh.c()) != 1)
    return Failure("G' canonical form").with("g", g).with("h", h);

  GElem a = s.g_elem(), b = s.g_elem();
  if (embed(a * b) != embed(a) * embed(b) || unembed(embed(a)) != a)
    return Failure("embedding").with("g", a).with("h", b);

  GPrimeElem one = embed(a);
  auto f = centralizer_factors(one);
  if (!f || f->first * f->second != one || !in_G_embedded(one))
    return Failure("product recovery").with("h", one);
  GPrimeElem probe = s.coin() ? g : one;
  if (in_G_embedded(probe) != (probe.x() == QuadRat(1)))
    return Failure("product set is {x = 1}").with("h", probe);

  GPrimeElem conj(0, 0, s.scalar(), s.positive());
  if (conj_orbit_element(conj) != GPrimeElem(0, conj.x(), 0, 1))
    return Failure("orbit law").with("g", conj);

  GElem in_a(0, s.scalar(), s.scalar());
  auto same_class = [&](const QuadRat& t) {
    GElem d = unembed(embed(in_a) * gp_inv(rep_of_R(t)));
    return is_central(d);
  };
  QuadRat other = s.scalar();
  if (!same_class(in_a.b()) || (other != in_a.b() && same_class(other)))
    return Failure("section").with("h", in_a).with("other", other);

  static const GPrimeElem base(0, 1, 0, 1);
  static const GPrimeElem base_r2(0, kR2, 0, 1);
  GPrimeElem c = s.coin() ? g
                          : GPrimeElem(QuadRat(s.uniform(-2, 2)), s.scalar(),
                                       s.scalar(), 1);
  bool both = gp_in_centralizer(c, base) && gp_in_centralizer(c, base_r2);
  bool displayed = c.a().is_zero() && c.x() == QuadRat(1);
  if (both != displayed)
    return Failure("refined centralizer").with("h", c);
  return std::nullopt;
}

Outcome geometry_case(Sampler& s) {
  AffPoint p{s.scalar(), s.scalar()};
  AffPoint q{s.scalar(), s.scalar()};
  if (p == q) q.u += QuadRat(1);
  AffLine l = line_through(p, q);
  if (!l.contains(p) || !l.contains(q))
    return Failure("line_through").with("p", p).with("q", q);
  AffPoint r{s.scalar(), s.scalar()};
  AffLine par = parallel_through(l, r);
  if (!par.contains(r) || !is_parallel(l, par) ||
      parallel_through(par, r) != par || parallel_through(l, p) != l)
    return Failure("parallel_through").with("l", l).with("p", r);
  AffPoint t{s.scalar(), s.scalar()};
  if (t != r) {
    AffLine m = line_through(r, t);
    auto mt = meet(l, m);
    if (mt.kind == Meet::Kind::point &&
        (!l.contains(*mt.point) || !m.contains(*mt.point)))
      return Failure("meet").with("l", l).with("m", m);
  }

  QuadRat x = s.scalar(), y = s.scalar();
  AffPoint aux1 = s.off_axis(), aux2 = s.off_axis();
  QuadRat sum1 = vs_add(x, y, aux1), sum2 = vs_add(x, y, aux2);
  if (sum1 != x + y || sum2 != sum1)
    return Failure("von Staudt sum").with("x", x).with("y", y)
        .with("aux1", aux1).with("aux2", aux2);
  QuadRat prod1 = vs_mul(x, y, aux1), prod2 = vs_mul(x, y, aux2);
  if (prod1 != x * y || prod2 != prod1)
    return Failure("von Staudt product").with("x", x).with("y", y)
        .with("aux1", aux1).with("aux2", aux2);

  AffPoint c = s.coin() ? AffPoint{s.scalar(), s.scalar()}
                        : AffPoint{p.u + s.scalar() * (q.u - p.u),
                                   p.v + s.scalar() * (q.v - p.v)};
  if (coll_det(p, q, c) != coll({p.u, p.v}, {q.u, q.v}, {c.u, c.v}))
    return Failure("coll_det vs coll").with("p", p).with("q", q).with("r", c);
  return std::nullopt;
}

Outcome interp_case(Sampler& s) {
  QuadRat x = s.scalar(), y = s.scalar(), z = s.scalar();
  RNum ex = encode(x), ey = encode(y), ez = encode(z);
  if (decode(ex) != x) return Failure("encode/decode").with("t", x);
  if (decode(interp_add(ex, ey)) != x + y)
    return Failure("interp add").with("x", x).with("y", y);
  if (decode(interp_mul(ex, ey)) != x * y)
    return Failure("interp mul").with("x", x).with("y", y);
  if (interp_is_int(ex) != is_integer(x))
    return Failure("interp isint").with("t", x);
  if (interp_add(ex, ey) != interp_add(ey, ex) ||
      interp_mul(ex, ey) != interp_mul(ey, ex))
    return Failure("interp commutativity").with("x", x).with("y", y);
  if (interp_mul(ex, interp_add(ey, ez)) !=
      interp_add(interp_mul(ex, ey), interp_mul(ex, ez)))
    return Failure("interp distributivity").with("x", x).with("y", y)
        .with("z", z);
  return std::nullopt;
}

using Case = Outcome (*)(Sampler&);

const std::map<std::string, Case, std::less<>>& registry() {
  static const std::map<std::string, Case, std::less<>> cases{
      {"qfield", qfield_case},     {"group-core", group_core_case},
      {"gprime", gprime_case},     {"geometry", geometry_case},
      {"interp", interp_case},
  };
  return cases;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"qfield", "group-core", "gprime",
                                              "geometry", "interp"};
  return names;
}

SuiteReport run_suite(std::string_view suite, std::uint64_t seed,
                      std::size_t count) {
  auto it = registry().find(suite);
  if (it == registry().end())
    throw UsageError("unknown suite '" + std::string(suite) + "'");
  SuiteReport report{std::string(suite), 0, count, std::nullopt};
  Sampler sampler(seed);
  for (std::size_t i = 0; i < count; ++i) {
    Outcome bad;
    try {
      bad = it->second(sampler);
    } catch (const std::exception& e) {
      bad = std::string("exception: ") + e.what();
    }
    if (bad) {
      report.counterexample = "case " + std::to_string(i) + ": " + *bad;
      break;
    }
    ++report.passed;
  }
  return report;
}

std::vector<SuiteReport> run_check(std::string_view suite, std::uint64_t seed,
                                   std::size_t count) {
  if (suite != "all") return {run_suite(suite, seed, count)};
  std::vector<SuiteReport> out;
  for (const auto& name : suite_names())
    out.push_back(run_suite(name, seed, count));
  return out;
}

}  // namespace nilint
