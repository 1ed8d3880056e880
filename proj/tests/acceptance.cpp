// Runs the ten acceptance criteria with fixed seeds and prints one line per
// criterion. Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "nilint/checks.hpp"
#include "nilint/errors.hpp"
#include "nilint/geometry.hpp"
#include "nilint/gprime.hpp"
#include "nilint/group.hpp"
#include "nilint/interp.hpp"
#include "nilint/termlang.hpp"

using namespace nilint;

namespace {

const QuadRat r2 = QuadRat::sqrt2();

// Thrown by expect(); carries the first mismatch.
struct Mismatch {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Mismatch{what};
}

template <class T>
std::string str(const T& v) {
  return v.to_string();
}

std::string str(const HElem& h) {
  return "[" + h.a.to_string() + "," + h.b.to_string() + "," +
         h.c.to_string() + "]";
}

// ------------------------------------------------------------------ 1

template <class T, class Draw, class Mul, class Inv>
void group_axioms(const char* name, Draw draw, Mul mul, Inv inv, T identity) {
  for (int i = 0; i < 1000; ++i) {
    T x = draw(), y = draw(), z = draw();
    std::string at = std::string(name) + " " + str(x) + " " + str(y) + " " +
                     str(z);
    expect(mul(mul(x, y), z) == mul(x, mul(y, z)), "associativity " + at);
    expect(mul(x, identity) == x && mul(identity, x) == x, "identity " + at);
    expect(mul(x, inv(x)) == identity && mul(inv(x), x) == identity,
           "inverse " + at);
  }
}

void criterion1() {
  auto start = std::chrono::steady_clock::now();
  Sampler s(1001);
  group_axioms<HElem>("H3", [&] { return s.h_elem(); }, h_mul, h_inv, HElem{});
  group_axioms<GElem>("G", [&] { return s.g_elem(); }, g_mul, g_inv, GElem{});
  group_axioms<GPrimeElem>("G'", [&] { return s.gp_elem(); }, gp_mul, gp_inv,
                           GPrimeElem{});
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  expect(secs < 5.0, "took " + std::to_string(secs) + " s");
}

// ------------------------------------------------------------------ 2

void criterion2() {
  Sampler s(1002);
  for (int i = 0; i < 1000; ++i) {
    GElem g = s.g_elem();
    // Half the pairs are built to commute so both verdicts get exercised.
    GElem h = i % 2 ? s.g_elem()
                    : GElem(g.a() * QuadRat(s.uniform(-3, 3)) +
                                QuadRat(s.uniform(-3, 3)),
                            g.b() * QuadRat(s.uniform(-3, 3)), s.scalar());
    expect(in_centralizer(h, g) == commute(g, h), str(g) + " " + str(h));
  }
}

// ------------------------------------------------------------------ 3

void criterion3() {
  Sampler s(1003);
  for (int i = 0; i < 200; ++i) {
    QuadRat a, b;
    do {
      a = s.scalar();
      b = s.scalar();
    } while (a.is_zero() && b.is_zero());
    auto defs = L_from_centralizers(a, b);
    for (int j = 0; j < 200; ++j) {
      QuadRat t = s.scalar();
      GElem h = j % 2 ? s.g_elem() : GElem(a * t, b * t, s.scalar());
      expect(defs.by_centralizers(h) == defs.by_kernel(h),
             "L(" + str(a) + "," + str(b) + ") at " + str(h));
      expect(!(is_integer(t) && is_integer(r2 * t)) || t.is_zero(),
             "irrationality lemma at t = " + str(t));
    }
  }
}

// ------------------------------------------------------------------ 4

void criterion4() {
  Sampler s(1004);
  int negatives = 0;
  for (int i = 0; i < 100; ++i) {
    GElem g1 = s.noncentral();
    QuadRat lambda = i % 3 == 0   ? s.irrational()
                     : i % 3 == 1 ? QuadRat(s.nonzero_rational())
                                  : QuadRat(0);
    GElem g2 = lambda.is_zero()
                   ? s.noncentral()
                   : GElem(lambda * g1.a(), lambda * g1.b(), s.scalar());
    auto line = is_line_pair(g1, g2);
    auto witness = non_halvable_witness(g1, g2);
    std::vector<GElem> sample;
    for (int j = 0; j < 8; ++j) {
      QuadRat t = s.scalar();
      sample.emplace_back(t * g1.a(), t * g1.b(), s.scalar());
      sample.push_back(s.g_elem());
    }
    // The oracle checks the symbolic witness by direct commutation like any
    // other sample; random draws alone rarely land in the thin non-halvable
    // set when the ratio is rational.
    if (witness) sample.push_back(*witness);
    auto report = check_2divisible(g1, g2, sample);
    std::string at = str(g1) + " " + str(g2);
    expect(report.members > 0, "empty sample at " + at);
    expect(line.has_value() == report.divisible(), "verdict at " + at);
    if (!line) {
      ++negatives;
      std::vector<GElem> alone;
      if (witness) alone.push_back(*witness);
      expect(witness.has_value() &&
                 check_2divisible(g1, g2, alone).counterexample == witness,
             "no explicit witness at " + at);
    }
  }
  expect(negatives > 0, "no negative instances drawn");
}

// ------------------------------------------------------------------ 5

void criterion5() {
  Sampler s(1005);
  for (int i = 0; i < 500; ++i) {
    QuadRat x = s.scalar(), y = s.scalar();
    AffPoint a1 = s.off_axis(), a2 = s.off_axis();
    std::string at = str(x) + " " + str(y) + " aux " + str(a1) + " " + str(a2);
    expect(vs_add(x, y, a1) == x + y && vs_add(x, y, a2) == x + y,
           "sum at " + at);
    expect(vs_mul(x, y, a1) == x * y && vs_mul(x, y, a2) == x * y,
           "product at " + at);
  }
}

// ------------------------------------------------------------------ 6

void criterion6() {
  Sampler s(1006);
  for (int i = 0; i < 1000; ++i) {
    EPoint p = s.point(), q = s.point();
    QuadRat t = s.scalar();
    EPoint r = i % 2 ? s.point()
                     : EPoint{p.a + t * (q.a - p.a), p.b + t * (q.b - p.b)};
    expect(coll(p, q, r) == coll_det({p.a, p.b}, {q.a, q.b}, {r.a, r.b}),
           str(p) + " " + str(q) + " " + str(r));
  }
}

// ------------------------------------------------------------------ 7

template <class T>
concept Addable = requires(T a) { a + a; };

void criterion7() {
  // Points of E offer no arithmetic: only the group can move them.
  static_assert(!Addable<EClass>);
  static_assert(!std::is_constructible_v<EClass, EPoint>);
  Sampler s(1007);
  for (int i = 0; i < 500; ++i) {
    QuadRat x = s.scalar(), y = s.scalar();
    std::string at = str(x) + " " + str(y);
    expect(decode(interp_add(encode(x), encode(y))) == x + y, "add at " + at);
    expect(decode(interp_mul(encode(x), encode(y))) == x * y, "mul at " + at);
    expect(interp_is_int(encode(x)) == is_integer(x), "isint at " + str(x));
  }
}

// ------------------------------------------------------------------ 8

// Membership in O, its inverses, or the identity, through the orbit map.
bool in_section(const GPrimeElem& g) {
  if (g == GPrimeElem{}) return true;
  auto in_orbit = [](const GPrimeElem& k) {
    if (!(k.a().is_zero() && k.c().is_zero() && k.x() == QuadRat(1)))
      return false;
    if (sign(k.b()) <= 0) return false;
    return conj_orbit_element(GPrimeElem(0, 0, 0, k.b())) == k;
  };
  return in_orbit(g) || in_orbit(gp_inv(g));
}

void criterion8() {
  Sampler s(1008);
  for (int i = 0; i < 200; ++i) {
    GPrimeElem k(0, 0, s.scalar(), s.positive());
    expect(conj_orbit_element(k) == GPrimeElem(0, k.x(), 0, 1),
           "orbit at " + str(k));
  }
  for (int i = 0; i < 200; ++i) {
    QuadRat b = s.scalar();
    GElem h(0, b, s.scalar());
    // Candidates in and around the class of h; exactly one is a section point.
    std::vector<GPrimeElem> candidates;
    for (GPrimeElem c : {GPrimeElem(0, b, 0, 1), GPrimeElem(0, b, s.scalar(), 1),
                         GPrimeElem(0, b, s.irrational(), 1),
                         GPrimeElem(0, b + s.nonzero(), 0, 1),
                         GPrimeElem(0, -b, 0, 1),
                         GPrimeElem(0, b, 0, s.positive())})
      if (std::find(candidates.begin(), candidates.end(), c) == candidates.end())
        candidates.push_back(c);
    int hits = 0;
    for (const auto& c : candidates) {
      bool same_class = c.x() == QuadRat(1) &&
                        is_central(unembed(c * gp_inv(embed(h))));
      if (same_class && in_section(c)) ++hits;
    }
    expect(hits == 1, "section hits class of " + str(h) + " " +
                          std::to_string(hits) + " times");
    expect(rep_of_R(b) == GPrimeElem(0, b, 0, 1) && in_section(rep_of_R(b)),
           "rep_of_R at " + str(b));
  }
  for (int i = 0; i < 200; ++i) {
    GPrimeElem k = i % 2 ? s.gp_elem()
                         : GPrimeElem(s.scalar(), s.scalar(), s.scalar(), 1);
    expect(in_G_embedded(k) == (k.x() == QuadRat(1)), "product at " + str(k));
  }
}

// ------------------------------------------------------------------ 9

void criterion9() {
  GPrimeElem base(0, 1, 0, 1), base_r2(0, r2, 0, 1), w(1, 0, 0, 1);
  expect(gp_in_centralizer(w, base), "witness does not commute");
  expect(!w.a().is_zero(), "witness lies in the displayed set");
  Sampler s(1009);
  for (int i = 0; i < 200; ++i) {
    GPrimeElem h = i % 4 == 0   ? s.gp_elem()
                   : i % 4 == 1 ? GPrimeElem(0, s.scalar(), s.scalar(), 1)
                   : i % 4 == 2 ? GPrimeElem(QuadRat(s.uniform(-3, 3)),
                                             s.scalar(), s.scalar(), 1)
                                : GPrimeElem(0, s.scalar(), s.scalar(),
                                             s.positive());
    bool refined = gp_in_centralizer(h, base) && gp_in_centralizer(h, base_r2);
    bool displayed = h.a().is_zero() && h.x() == QuadRat(1);
    expect(refined == displayed, "probe " + str(h));
  }
}

// ------------------------------------------------------------------ 10

class TreeGen {
 public:
  explicit TreeGen(std::uint64_t seed) : s_(seed) {}

  Expr tree(int depth) {
    auto sub = [&] { return std::make_shared<const Expr>(tree(depth - 1)); };
    switch (depth <= 0 ? s_.uniform(0, 3) : s_.uniform(0, 6)) {
      case 0: return {ScalarLit{s_.scalar()}};
      case 1: return {GLit{s_.g_elem()}};
      case 2: return {GPLit{s_.gp_elem()}};
      case 3: return {PointLit{s_.point()}};
      case 4: return {Mul{sub(), sub()}};
      case 5: return {Pow{sub(), s_.uniform(-9, 9)}};
      default: {
        static const char* const names[] = {"coll", "centralizer", "in_L",
                                            "orbit", "embed"};
        Call c{names[s_.uniform(0, 4)], {}};
        for (long n = s_.uniform(0, 3); n > 0; --n) c.args.push_back(sub());
        return {c};
      }
    }
  }

 private:
  Sampler s_;
};

void criterion10() {
  TreeGen gen(1010);
  for (int i = 0; i < 500; ++i) {
    Expr e = gen.tree(5);
    std::string text = print(e);
    expect(parse_expr(text) == e, "round trip of " + text);
  }
  std::mt19937_64 rng(1010);
  for (int i = 0; i < 10000; ++i) {
    std::string input(rng() % 40, '\0');
    for (char& c : input) c = static_cast<char>(rng() & 0xff);
    try {
      eval(parse_expr(input));
    } catch (const ParseError& e) {
      expect(e.offset() <= input.size(), "offset past end");
    } catch (const UsageError&) {
    } catch (const DomainError&) {
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void()>>> criteria{
      {"group axioms in H3, G, G'", criterion1},
      {"centralizer formula", criterion2},
      {"line subgroup definitions agree", criterion3},
      {"divisibility classification", criterion4},
      {"von Staudt constructions", criterion5},
      {"collinearity bridge", criterion6},
      {"end-to-end interpretation", criterion7},
      {"orbit, section, product of centralizers", criterion8},
      {"refined centralizer in G'", criterion9},
      {"parser round trip and fuzzing", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = true;
    try {
      criteria[i].second();
    } catch (const Mismatch& m) {
      ok = false;
      detail = m.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %2zu %s%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first, ok ? "" : ": ", detail.c_str());
    failed += !ok;
  }
  return failed;
}
