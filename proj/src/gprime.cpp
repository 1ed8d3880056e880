#include "nilint/gprime.hpp"

#include <ostream>

#include "nilint/errors.hpp"

namespace nilint {
namespace {

const GPrimeElem& orbit_base() {
  static const GPrimeElem base(0, 1, 0, 1);
  return base;
}

const GPrimeElem& dilation() {
  static const GPrimeElem d(0, 0, 0, 2);
  return d;
}

}  // namespace

GPrimeElem::GPrimeElem(QuadRat a, QuadRat b, QuadRat c, QuadRat x)
    : a_(std::move(a)), b_(std::move(b)), c_(frac(c)), x_(std::move(x)) {
  if (sign(x_) != 1) throw DomainError("x must be positive");
}

std::string GPrimeElem::to_string() const {
  return "[" + a_.to_string() + "," + b_.to_string() + "," + c_.to_string() +
         "," + x_.to_string() + "]";
}

GPrimeElem gp_mul(const GPrimeElem& g, const GPrimeElem& h) {
  return {h.a() + g.a() * h.x(), g.b() + g.x() * h.b(),
          g.c() + h.c() + g.a() * h.b(), g.x() * h.x()};
}

GPrimeElem gp_inv(const GPrimeElem& g) {
  QuadRat r = inv(g.x());
  return {-g.a() * r, -g.b() * r, g.a() * g.b() * r - g.c(), r};
}

GPrimeElem gp_pow(const GPrimeElem& g, long n) {
  GPrimeElem base = n < 0 ? gp_inv(g) : g;
  unsigned long e = n < 0 ? 0UL - static_cast<unsigned long>(n)
                          : static_cast<unsigned long>(n);
  GPrimeElem acc;
  while (e != 0) {
    if (e & 1UL) acc = acc * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return acc;
}

bool gp_in_centralizer(const GPrimeElem& h, const GPrimeElem& g) {
  return g * h == h * g;
}

GPrimeElem embed(const GElem& g) { return {g.a(), g.b(), g.c(), 1}; }

GElem unembed(const GPrimeElem& h) {
  if (h.x() != QuadRat(1)) throw DomainError("element is not in G (x != 1)");
  return {h.a(), h.b(), h.c()};
}

std::optional<CentralizerFactors> centralizer_factors(const GPrimeElem& h) {
  if (h.x() != QuadRat(1)) return std::nullopt;
  return CentralizerFactors{{0, h.b(), h.c(), 1}, {h.a(), 0, 0, 1}};
}

bool in_G_embedded(const GPrimeElem& h) {
  static const GPrimeElem left_center(0, 1, 0, 1);
  static const GPrimeElem right_center(1, 0, 0, 1);
  auto f = centralizer_factors(h);
  return f && gp_in_centralizer(f->first, left_center) &&
         gp_in_centralizer(f->second, right_center) &&
         f->first * f->second == h;
}

GPrimeElem conj_orbit_element(const GPrimeElem& g) {
  if (!gp_in_centralizer(g, dilation()))
    throw DomainError("conjugator is not in C([0,0,0,2])");
  return g * orbit_base() * gp_inv(g);
}

GPrimeElem rep_of_R(const QuadRat& b) {
  int s = sign(b);
  if (s == 0) return {};
  if (s > 0) return conj_orbit_element({0, 0, 0, b});
  return gp_inv(conj_orbit_element({0, 0, 0, -b}));
}

QuadRat class_of_rep(const GPrimeElem& h) {
  if (!h.a().is_zero() || !h.c().is_zero() || h.x() != QuadRat(1))
    throw DomainError("not a representative of A/Z(G): " + h.to_string());
  return h.b();
}

std::ostream& operator<<(std::ostream& os, const GPrimeElem& g) {
  return os << g.to_string();
}

}  // namespace nilint
