#include "nilint/interp.hpp"

#include <algorithm>
#include <stdexcept>

#include "nilint/errors.hpp"

namespace nilint {

RNum RNum::from_representative(const GPrimeElem& rep) {
  class_of_rep(rep);
  return RNum(rep);
}

RNum encode(const QuadRat& t) { return RNum::from_representative(rep_of_R(t)); }

QuadRat decode(const RNum& r) { return class_of_rep(r.representative()); }

// ------------------------------------------------------------------ EPlane

EPlane::Line EPlane::line_through(const Point& p, const Point& q) const {
  if (p == q) throw DomainError("degenerate pair");
  return {p, q};
}

EPlane::Line EPlane::parallel_through(const Line& l, const Point& p) const {
  GElem direction = g_inv(l.from.lift()) * l.to.lift();
  return {p, EClass::of(p.lift() * direction)};
}

std::optional<EPlane::Point> EPlane::meet(const Line& l, const Line& m) const {
  GElem dl = g_inv(l.from.lift()) * l.to.lift();
  GElem dm = g_inv(m.from.lift()) * m.to.lift();
  if (coll(iota(GElem{}), iota(dl), iota(dm))) return std::nullopt;

  auto affine = [](const EClass& p) { return AffPoint{p.p_.a, p.p_.b}; };
  auto at = nilint::meet(nilint::line_through(affine(l.from), affine(l.to)),
                         nilint::line_through(affine(m.from), affine(m.to)));
  if (!at.point) throw std::logic_error("non-parallel lines without a meet");
  EClass candidate(EPoint{at.point->u, at.point->v});
  if (!coll(l.from.p_, l.to.p_, candidate.p_) ||
      !coll(m.from.p_, m.to.p_, candidate.p_))
    throw std::logic_error("meet not certified by coll");
  return candidate;
}

// ---------------------------------------------------------- interpretation

namespace {

EClass point_of(const RNum& r) {
  return EClass::of(unembed(r.representative()));
}

RNum number_of(const EClass& p) {
  GElem h = p.lift();
  if (!in_A_definitional(h)) throw std::logic_error("construction left A");
  return RNum::from_representative(embed(h));
}

const StaudtFrame<EPlane>& frame() {
  static const StaudtFrame<EPlane> f{
      EClass::of(GElem{}),
      point_of(encode(1)),
      EClass::of(GElem(1, 1, 0)),
  };
  return f;
}

}  // namespace

RNum interp_add(const RNum& x, const RNum& y) {
  return number_of(staudt_sum(EPlane{}, frame(), point_of(x), point_of(y)));
}

RNum interp_mul(const RNum& x, const RNum& y) {
  return number_of(
      staudt_product(EPlane{}, frame(), point_of(x), point_of(y)));
}

bool interp_is_int(const RNum& x) {
  return in_B_definitional(unembed(x.representative()));
}

// ----------------------------------------------------------------- catalog

std::string to_string(const Value& v) {
  struct Printer {
    std::string operator()(const QuadRat& u) const { return u.to_string(); }
    std::string operator()(const GElem& g) const { return g.to_string(); }
    std::string operator()(const GPrimeElem& g) const { return g.to_string(); }
    std::string operator()(const EPoint& p) const { return p.to_string(); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const std::optional<LineSubgroup>& l) const {
      return l ? l->to_string() : "none";
    }
  };
  return std::visit(Printer{}, v);
}

namespace {

const char* type_name(const Value& v) {
  static const char* const names[] = {"scalar", "G element", "G' element",
                                      "point",  "boolean",   "line"};
  return names[v.index()];
}

template <class T>
const T& arg(std::string_view id, std::span<const Value> args, std::size_t i) {
  if (const T* p = std::get_if<T>(&args[i])) return *p;
  throw TypeError(std::string(id) + ": argument " + std::to_string(i + 1) +
                  " has type " + type_name(args[i]));
}

void arity(std::string_view id, std::span<const Value> args, std::size_t n) {
  if (args.size() != n)
    throw UsageError(std::string(id) + " expects " + std::to_string(n) +
                     " arguments, got " + std::to_string(args.size()));
}

}  // namespace

Value definable_reals_demo(std::string_view formula_id,
                           std::span<const Value> args) {
  std::string id(formula_id);
  std::replace(id.begin(), id.end(), '-', '_');

  if (id == "coll") {
    arity(id, args, 3);
    return coll(arg<EPoint>(id, args, 0), arg<EPoint>(id, args, 1),
                arg<EPoint>(id, args, 2));
  }
  if (id == "centralizer") {
    arity(id, args, 2);
    if (std::holds_alternative<GPrimeElem>(args[0]))
      return gp_in_centralizer(arg<GPrimeElem>(id, args, 0),
                               arg<GPrimeElem>(id, args, 1));
    return in_centralizer(arg<GElem>(id, args, 0), arg<GElem>(id, args, 1));
  }
  if (id == "in_L") {
    arity(id, args, 3);
    return in_L(LineSubgroup(arg<QuadRat>(id, args, 0),
                             arg<QuadRat>(id, args, 1)),
                arg<GElem>(id, args, 2));
  }
  if (id == "in_A") {
    arity(id, args, 1);
    return in_A(arg<GElem>(id, args, 0));
  }
  if (id == "in_B") {
    arity(id, args, 1);
    return in_B(arg<GElem>(id, args, 0));
  }
  if (id == "is_line_pair") {
    arity(id, args, 2);
    return is_line_pair(arg<GElem>(id, args, 0), arg<GElem>(id, args, 1));
  }
  if (id == "orbit") {
    arity(id, args, 1);
    return conj_orbit_element(arg<GPrimeElem>(id, args, 0));
  }
  if (id == "product_recovery") {
    arity(id, args, 1);
    return in_G_embedded(arg<GPrimeElem>(id, args, 0));
  }
  if (id == "embed") {
    arity(id, args, 1);
    return embed(arg<GElem>(id, args, 0));
  }
  throw UsageError("unknown formula '" + std::string(formula_id) + "'");
}

}  // namespace nilint
