// nilint: evaluate group words, query the definable predicates of G and G',
// run the interpretation of (K,+,*,Z), and execute the seeded invariant
// suites.
//
// Exit status: 0 on success, 1 on domain errors and failed checks, 2 on
// usage and parse errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "nilint/checks.hpp"
#include "nilint/errors.hpp"
#include "nilint/geometry.hpp"
#include "nilint/interp.hpp"
#include "nilint/termlang.hpp"

namespace {

using nlohmann::json;
using namespace nilint;

json scalar_json(const QuadRat& u) { return u.to_string(); }

json value_json(const Value& v) {
  struct Visitor {
    json operator()(const QuadRat& u) const { return scalar_json(u); }
    json operator()(const GElem& g) const {
      return json::array({scalar_json(g.a()), scalar_json(g.b()),
                          scalar_json(g.c())});
    }
    json operator()(const GPrimeElem& g) const {
      return json::array({scalar_json(g.a()), scalar_json(g.b()),
                          scalar_json(g.c()), scalar_json(g.x())});
    }
    json operator()(const EPoint& p) const {
      return json::array({scalar_json(p.a), scalar_json(p.b)});
    }
    json operator()(bool b) const { return b; }
    json operator()(const std::optional<LineSubgroup>& l) const {
      if (!l) return nullptr;
      return json::array({scalar_json(l->a()), scalar_json(l->b())});
    }
  };
  return std::visit(Visitor{}, v);
}

class Output {
 public:
  explicit Output(bool json_mode) : json_(json_mode) {}

  void emit(const std::string& command, const Value& v) {
    emit(command, value_json(v), to_string(v));
  }

  void emit(const std::string& command, const json& result,
            const std::string& canonical) {
    if (json_)
      std::cout << json{{"command", command},
                        {"result", result},
                        {"canonical", canonical}}
                       .dump()
                << '\n';
    else
      std::cout << canonical << '\n';
  }

 private:
  bool json_;
};

template <class T>
T value_of(const std::string& text, const char* what) {
  Value v = eval(parse_expr(text));
  if (auto* p = std::get_if<T>(&v)) return *p;
  throw TypeError("'" + text + "' is not " + what);
}

Value element_of(const std::string& text) {
  Value v = eval(parse_expr(text));
  if (!std::holds_alternative<GElem>(v) &&
      !std::holds_alternative<GPrimeElem>(v))
    throw TypeError("'" + text + "' is not a group element");
  return v;
}

// Literals such as "-r2" or "-1/2" would be taken for options; a leading
// space keeps them positional and the tokenizer skips it.
std::vector<std::string> protect_negative_literals(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) {  // CLI11 wants reversed order
    std::string a = argv[i];
    if (a.size() > 1 && a[0] == '-' &&
        (std::isdigit(static_cast<unsigned char>(a[1])) || a[1] == 'r'))
      a.insert(a.begin(), ' ');
    args.push_back(std::move(a));
  }
  return args;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact computations in the Heisenberg quotient G = H3/Gamma, "
               "its extension G', and the interpretation of (K,+,*,Z) over "
               "K = Q(sqrt2)",
               "nilint"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "One JSON object per result");

  std::string expr_text;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression");
  eval_cmd->add_option("EXPR", expr_text, "Expression")->required();

  // Literal arguments are plain strings: CLI11 would read "[a,b,c]" as its
  // own list syntax if they were vectors.
  std::string arg1, arg2, arg3;
  auto positional = [&](CLI::App* c, std::initializer_list<const char*> names) {
    std::string* slots[] = {&arg1, &arg2, &arg3};
    std::size_t i = 0;
    for (const char* n : names) c->add_option(n, *slots[i++])->required();
  };

  auto* coll_cmd =
      app.add_subcommand("coll", "Group-defined collinearity of three points");
  positional(coll_cmd, {"P", "Q", "R"});

  auto* cent_cmd =
      app.add_subcommand("centralizer", "Is H in the centralizer of G?");
  positional(cent_cmd, {"H", "G"});

  auto* in_l_cmd = app.add_subcommand("in-l", "Is H in L_{a,b}?");
  positional(in_l_cmd, {"A", "B", "H"});

  auto* lp_cmd = app.add_subcommand(
      "line-pair", "Is C(G1) n C(G2) a line subgroup? Prints L(a,b) or none");
  positional(lp_cmd, {"G1", "G2"});

  std::string aux_text = "(1,1)";
  auto* vs_add_cmd =
      app.add_subcommand("vs-add", "Von Staudt sum on the axis u = 0");
  auto* vs_mul_cmd =
      app.add_subcommand("vs-mul", "Von Staudt product on the axis u = 0");
  for (auto* c : {vs_add_cmd, vs_mul_cmd}) {
    positional(c, {"X", "Y"});
    c->add_option("AUX", aux_text, "Auxiliary point off the axis")
        ->capture_default_str();
  }

  auto* interp_cmd =
      app.add_subcommand("interp", "Arithmetic through the group");
  interp_cmd->require_subcommand(1);
  auto* i_add = interp_cmd->add_subcommand("add", "x + y");
  auto* i_mul = interp_cmd->add_subcommand("mul", "x * y");
  auto* i_int = interp_cmd->add_subcommand("isint", "x in Z");
  positional(i_add, {"X", "Y"});
  positional(i_mul, {"X", "Y"});
  positional(i_int, {"X"});

  std::string orbit_arg;
  auto* orbit_cmd = app.add_subcommand(
      "orbit", "g [0,1,0,1] g^-1 for g = [0,0,c,x] in C([0,0,0,2])");
  orbit_cmd->add_option("ELEMENT", orbit_arg, "G' element")->required();

  std::string suite;
  std::uint64_t seed = 1;
  std::size_t count = 100;
  auto* check_cmd = app.add_subcommand(
      "check", "Run seeded invariant suites: qfield, group-core, gprime, "
               "geometry, interp, all");
  check_cmd->add_option("SUITE", suite, "Suite name")->required();
  check_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  check_cmd->add_option("--count", count, "Number of cases")
      ->capture_default_str();

  auto* help_cmd = app.add_subcommand("help", "Show this help");

  try {
    app.parse(protect_negative_literals(argc, argv));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "nilint: " << e.what() << '\n'
              << "run 'nilint help' for usage\n";
    return 2;
  }

  Output out(json_mode);
  if (help_cmd->parsed()) {
    std::cout << app.get_formatter()->make_help(&app, "nilint",
                                                CLI::AppFormatMode::Normal);
    return 0;
  }
  if (eval_cmd->parsed()) {
    out.emit("eval", eval(parse_expr(expr_text)));
  } else if (coll_cmd->parsed()) {
    std::vector<Value> args{value_of<EPoint>(arg1, "a point"),
                            value_of<EPoint>(arg2, "a point"),
                            value_of<EPoint>(arg3, "a point")};
    out.emit("coll", definable_reals_demo("coll", args));
  } else if (cent_cmd->parsed()) {
    std::vector<Value> args{element_of(arg1), element_of(arg2)};
    out.emit("centralizer", definable_reals_demo("centralizer", args));
  } else if (in_l_cmd->parsed()) {
    std::vector<Value> args{parse_scalar(arg1), parse_scalar(arg2),
                            value_of<GElem>(arg3, "a G element")};
    out.emit("in-l", definable_reals_demo("in_L", args));
  } else if (lp_cmd->parsed()) {
    std::vector<Value> args{value_of<GElem>(arg1, "a G element"),
                            value_of<GElem>(arg2, "a G element")};
    out.emit("line-pair", definable_reals_demo("is_line_pair", args));
  } else if (vs_add_cmd->parsed() || vs_mul_cmd->parsed()) {
    QuadRat x = parse_scalar(arg1);
    QuadRat y = parse_scalar(arg2);
    EPoint aux = value_of<EPoint>(aux_text, "a point");
    bool add = vs_add_cmd->parsed();
    QuadRat r = add ? vs_add(x, y, {aux.a, aux.b}) : vs_mul(x, y, {aux.a, aux.b});
    out.emit(add ? "vs-add" : "vs-mul", r);
  } else if (interp_cmd->parsed()) {
    if (i_int->parsed()) {
      out.emit("interp isint", interp_is_int(encode(parse_scalar(arg1))));
    } else {
      RNum x = encode(parse_scalar(arg1));
      RNum y = encode(parse_scalar(arg2));
      bool add = i_add->parsed();
      RNum r = add ? interp_add(x, y) : interp_mul(x, y);
      out.emit(add ? "interp add" : "interp mul", decode(r));
    }
  } else if (orbit_cmd->parsed()) {
    out.emit("orbit", conj_orbit_element(
                          value_of<GPrimeElem>(orbit_arg, "a G' element")));
  } else if (check_cmd->parsed()) {
    auto reports = run_check(suite, seed, count);
    bool ok = true;
    std::size_t passed = 0, total = 0;
    for (const auto& r : reports) {
      ok = ok && r.ok();
      passed += r.passed;
      total += r.total;
      std::string line =
          r.ok() ? "ok " + std::to_string(r.passed) + "/" +
                       std::to_string(r.total)
                 : "FAIL " + std::to_string(r.passed) + "/" +
                       std::to_string(r.total) + " " + *r.counterexample;
      if (reports.size() > 1) line = r.suite + ": " + line;
      json result{{"suite", r.suite},
                  {"seed", seed},
                  {"passed", r.passed},
                  {"total", r.total},
                  {"counterexample", r.counterexample
                                         ? json(*r.counterexample)
                                         : json(nullptr)}};
      out.emit("check", result, line);
    }
    if (reports.size() > 1) {
      std::string summary = std::string(ok ? "ok " : "FAIL ") +
                            std::to_string(passed) + "/" +
                            std::to_string(total);
      out.emit("check", json{{"suite", "all"},
                             {"seed", seed},
                             {"passed", passed},
                             {"total", total}},
               summary);
    }
    return ok ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const nilint::ParseError& e) {
    std::cerr << "nilint: parse error: " << e.what() << '\n';
    return 2;
  } catch (const nilint::UsageError& e) {
    std::cerr << "nilint: " << e.what() << '\n';
    return 2;
  } catch (const nilint::DomainError& e) {
    std::cerr << "nilint: domain error: " << e.what() << '\n';
    return 1;
  }
}
