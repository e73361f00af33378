#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hodge/degenerate.hpp"
#include "hodge/e3.hpp"
#include "hodge/lift.hpp"
#include "hodge/polygon.hpp"
#include "hodge/pr.hpp"
#include "hodge/serialize.hpp"
#include "hodge/strat.hpp"
#include "hodge/tmodule.hpp"
#include "hodge/verify.hpp"

using namespace hodge;

namespace {

// Exit codes: 0 success or true, 1 negative answer or infeasible, 2 usage.
constexpr int kTrue = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  unsigned prime = 2;
  int h = 0;
  int e = 0;
  int g = 0;
  int max_dim = 5;
  int cases = 100;
  std::uint64_t seed = 7;
  std::string a, b, d, x, parts, mu, delta, alpha, beta, datum, format = "json";
};

std::vector<int> ints(const std::string& text, const char* what) {
  try {
    return parse_int_list(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string("--") + what + " expects a comma-separated list of integers, got '" + text + "'");
  }
}

std::array<int, 3> triple(const std::string& text, const char* what) {
  const auto v = ints(text, what);
  if (v.size() != 3) throw UsageError(std::string("--") + what + " expects three entries");
  return {v[0], v[1], v[2]};
}

std::array<int, 2> pair_of(const std::string& text, const char* what) {
  const auto v = ints(text, what);
  if (v.size() != 2) throw UsageError(std::string("--") + what + " expects two entries");
  return {v[0], v[1]};
}

Rational rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    const long num = std::stol(text.substr(0, slash), &used);
    if (used != text.substr(0, slash).size()) throw std::invalid_argument(text);
    long den = 1;
    if (slash != std::string::npos) {
      den = std::stol(text.substr(slash + 1), &used);
      if (used != text.size() - slash - 1 || den == 0) throw std::invalid_argument(text);
    }
    return Rational(num, den);
  } catch (const std::exception&) {
    throw UsageError("--x expects an integer or a fraction a/b, got '" + text + "'");
  }
}

int boolean(bool value) {
  std::cout << (value ? "true" : "false") << '\n';
  return value ? kTrue : kNegative;
}

PrimeField field(const Options& o) {
  try {
    return PrimeField(o.prime);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

JordanType jordan(const Options& o, int e, const std::vector<int>& mu = {}) {
  auto parts = ints(o.parts, "parts");
  int h = o.h;
  if (h == 0) {
    h = static_cast<int>(parts.size());
    for (int m : mu) h = std::max(h, m);
  }
  return JordanType(e, h, std::move(parts));
}

// --- polygon ---

int polygon_dom(const Options& o) {
  return boolean(dominates(Polygon(o.h, ints(o.a, "a")), Polygon(o.h, ints(o.b, "b"))));
}

int polygon_star(const Options& o) {
  std::cout << to_json(star(Polygon(o.h, ints(o.a, "a")), Polygon(o.h, ints(o.b, "b")))).dump() << '\n';
  return kTrue;
}

int polygon_eval(const Options& o) {
  std::cout << to_string(Polygon(o.h, ints(o.d, "d")).eval(rational(o.x))) << '\n';
  return kTrue;
}

int polygon_slopes(const Options& o) {
  const Polygon p(o.h, ints(o.d, "d"));
  Json slopes = Json::array();
  for (const auto& [s, m] : p.slopes()) slopes.push_back(Json{{"slope", to_string(s)}, {"multiplicity", m}});
  Json points = Json::array();
  for (const auto& [x, y] : p.breakpoints()) points.push_back(Json::array({x, to_string(y)}));
  std::cout << Json{{"slopes", slopes}, {"breakpoints", points}}.dump() << '\n';
  return kTrue;
}

// --- pr ---

int pr_exists_cmd(const Options& o) {
  const auto mu = ints(o.mu, "mu");
  return boolean(pr_exists(jordan(o, o.e ? o.e : static_cast<int>(mu.size()), mu), mu));
}

int pr_oracle_cmd(const Options& o) {
  const auto mu = ints(o.mu, "mu");
  const JordanType j = jordan(o, o.e ? o.e : static_cast<int>(mu.size()), mu);
  return boolean(pr_oracle_exists(realize(j, field(o)), mu));
}

int pr_construct_cmd(const Options& o) {
  const auto mu = ints(o.mu, "mu");
  const JordanType j = jordan(o, o.e ? o.e : static_cast<int>(mu.size()), mu);
  try {
    std::cout << to_json(pr_construct(realize(j, field(o)), mu)).dump() << '\n';
    return kTrue;
  } catch (const PRInfeasible& e) {
    std::cout << Json{{"feasible", false}, {"witness", e.witness()}, {"reason", e.what()}}.dump() << '\n';
    return kNegative;
  }
}

int pr_hdg_cmd(const Options& o) {
  std::cout << to_json(hodge_polygon(jordan(o, o.e))).dump() << '\n';
  return kTrue;
}

}  // namespace

namespace {

// --- e3 ---

void require_type(const Options& o) {
  if (o.g == 0 && (o.h <= 0 || o.mu.empty())) throw UsageError("give --h and --mu, or --polarized g");
}

StrataPoint point(const Options& o) {
  require_type(o);
  if (o.g > 0) return StrataPoint{2 * o.g, {o.g, o.g, o.g}, triple(o.delta, "delta"), pair_of(o.alpha, "alpha"), pair_of(o.beta, "beta")};
  return StrataPoint{o.h, triple(o.mu, "mu"), triple(o.delta, "delta"), pair_of(o.alpha, "alpha"), pair_of(o.beta, "beta")};
}

std::vector<StrataPoint> points(const Options& o) {
  require_type(o);
  if (o.g > 0) return enum_ypol(o.g);
  return enum_yadm(o.h, triple(o.mu, "mu"));
}

int e3_enum(const Options& o) {
  const auto list = points(o);
  if (o.format == "csv") {
    std::cout << to_csv(list);
  } else if (o.format == "json") {
    for (const auto& y : list) std::cout << to_json(y).dump() << '\n';
  } else {
    throw UsageError("--format must be json or csv");
  }
  return kTrue;
}

Json read_json(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("bad JSON: ") + e.what());
  }
}

int e3_phi(const Options& o) {
  PRDatum datum = [&] {
    try {
      return pr_datum_from_json(read_json(o.datum));
    } catch (const Json::exception& e) {
      throw UsageError(std::string("bad datum: ") + e.what());
    }
  }();
  const int h = o.h > 0 ? o.h : jordan_type(datum.module).h();
  std::cout << to_json(phi(datum, h)).dump() << '\n';
  return kTrue;
}

int e3_normal_form(const Options& o) {
  const StrataPoint y = point(o);
  if (o.g == 0) {
    std::cout << to_json(normal_form(y, field(o))).dump() << '\n';
    return kTrue;
  }
  const auto flag = polarized_normal_form(y, field(o));
  if (!flag) {
    std::cout << Json{{"found", false}, {"point", to_json(y)}}.dump() << '\n';
    return kNegative;
  }
  std::cout << Json{{"h", flag->h},
                    {"omega1", to_json(flag->omega1.basis())},
                    {"omega2", to_json(flag->omega2.basis())},
                    {"omega", to_json(flag->omega.basis())}}
                   .dump()
            << '\n';
  return kTrue;
}

// --- strat ---

int strat_dot(const Options& o) {
  std::cout << export_dot(StrataPoset(points(o)));
  return kTrue;
}

int strat_json(const Options& o) {
  std::cout << export_json(StrataPoset(points(o))) << '\n';
  return kTrue;
}

int strat_closure(const Options& o) {
  const StrataPoset poset(points(o));
  for (const auto& y : closure_set(point(o), poset)) std::cout << to_json(y).dump() << '\n';
  return kTrue;
}

}  // namespace

namespace {

// --- lift ---

int lift_demo(const Options& o) {
  const PrimeField f = field(o);
  // 0 ⊆ M_1 = <e_1> ⊆ M_2 = F_p^2, L̄ = <e_1>, generic L must leave M_1.
  const Subspace m1 = Subspace::span(f, 2, std::vector<Vector>{{1, 0}});
  const LiftProblem problem = LiftProblem::constant(Flag({m1, Subspace::full(f, 2)}), m1, {0, 1});
  const PolyMatrix lift = lift_subspace(problem);
  const LiftReport report = verify_lift(problem, lift);
  Json out;
  out["lift"] = Json{{"ranks", problem.ranks()},
                     {"special_dims", problem.special_dims()},
                     {"targets", problem.targets},
                     {"basis", to_json(lift)},
                     {"generic_dims", report.dims},
                     {"verified", report.ok()}};

  // h = 2, μ = (1,1,1): δ = (2,1,0), α_1 = β_1 = 2 degenerates to the minimal stratum.
  const auto all = enum_yadm(2, {1, 1, 1});
  const StrataPoint from = *std::find_if(all.begin(), all.end(), [](const StrataPoint& y) {
    return y.delta == std::array{2, 1, 0} && y.alpha[0] == 2 && y.beta[0] == 2;
  });
  const StrataPoint to = *std::find_if(all.begin(), all.end(), [&](const StrataPoint& y) {
    return std::all_of(all.begin(), all.end(), [&](const StrataPoint& z) { return leq(y, z); });
  });
  const DegenerationResult step = degenerate_step(from, to, f);
  out["degeneration"] = Json{{"from", to_json(from)},
                             {"to", to_json(to)},
                             {"omega1", to_json(step.lifted.omega1)},
                             {"omega2", to_json(step.lifted.omega2)},
                             {"omega", to_json(step.lifted.omega)},
                             {"generic", to_json(step.generic)}};
  std::cout << out.dump() << '\n';
  return report.ok() && step.generic == to ? kTrue : kNegative;
}

int lift_verify(const Options& o) {
  if (o.cases <= 0) throw UsageError("--cases must be positive");
  VerifyConfig config;
  config.seed = o.seed;
  const SweepResult r = sweep_lifting(config, o.cases, std::max(1, o.cases / 5));
  std::cout << format_report(config, {r});
  return r.ok() ? kTrue : kNegative;
}

// --- verify ---

int verify_all(const Options& o) {
  if (o.max_dim <= 0) throw UsageError("--max-dim must be positive");
  VerifyConfig config;
  config.max_dim = o.max_dim;
  config.seed = o.seed;
  const auto results = run_all(config);
  std::cout << format_report(config, results);
  return std::all_of(results.begin(), results.end(), [](const SweepResult& r) { return r.ok(); }) ? kTrue : kNegative;
}

void apply_cap_override() {
  const char* text = std::getenv("HODGE_ENUM_CAP");
  if (text == nullptr) return;
  try {
    std::size_t used = 0;
    const unsigned long long cap = std::stoull(text, &used);
    if (used != std::string(text).size() || cap == 0) throw std::invalid_argument(text);
    set_enumeration_cap(cap);
  } catch (const std::exception&) {
    throw UsageError(std::string("HODGE_ENUM_CAP must be a positive integer, got '") + text + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polygons, Pappas-Rapoport data and e = 3 strata over finite fields"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&)> action;
  app.add_option("-p,--prime", o.prime, "field characteristic")->check(CLI::Range(2u, 65521u));

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, int (*run)(const Options&)) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->callback([&action, run] { action = run; });
    return sub;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->require_subcommand(1);
    return sub;
  };

  CLI::App* polygon = group("polygon", "polygon arithmetic");
  for (auto [name, help, run] : {std::tuple{"dom", "does P(h;a) dominate P(h;b)", polygon_dom},
                                 std::tuple{"star", "P(h;a) * P(h;b)", polygon_star}}) {
    CLI::App* sub = leaf(polygon, name, help, run);
    sub->add_option("--h", o.h)->required();
    sub->add_option("--a", o.a)->required();
    sub->add_option("--b", o.b)->required();
  }
  CLI::App* eval = leaf(polygon, "eval", "value of P(h;d) at x", polygon_eval);
  eval->add_option("--h", o.h)->required();
  eval->add_option("--d", o.d)->required();
  eval->add_option("--x", o.x)->required();
  CLI::App* slopes = leaf(polygon, "slopes", "slopes and breakpoints of P(h;d)", polygon_slopes);
  slopes->add_option("--h", o.h)->required();
  slopes->add_option("--d", o.d)->required();

  CLI::App* pr = group("pr", "Pappas-Rapoport data");
  for (auto [name, help, run] : {std::tuple{"exists", "Hdg(M) >= P(mu)", pr_exists_cmd},
                                 std::tuple{"construct", "build a datum of type mu", pr_construct_cmd},
                                 std::tuple{"oracle", "exhaustive search for a datum", pr_oracle_cmd}}) {
    CLI::App* sub = leaf(pr, name, help, run);
    sub->add_option("--parts", o.parts)->required();
    sub->add_option("--mu", o.mu)->required();
    sub->add_option("--e", o.e);
    sub->add_option("--h", o.h);
  }
  CLI::App* hdg = leaf(pr, "hdg", "Hodge polygon of a Jordan type", pr_hdg_cmd);
  hdg->add_option("--e", o.e)->required();
  hdg->add_option("--parts", o.parts)->required();
  hdg->add_option("--h", o.h);

  CLI::App* e3 = group("e3", "e = 3 classification");
  CLI::App* e3_list = leaf(e3, "enum", "list Y^adm(h, mu) or Y^pol(g)", e3_enum);
  CLI::App* e3_nf = leaf(e3, "normal-form", "a datum with the given invariants", e3_normal_form);
  CLI::App* e3_phi_cmd = leaf(e3, "phi", "invariants of a datum read as JSON", e3_phi);
  e3_phi_cmd->add_option("--datum", o.datum, "file, or - for stdin")->required();
  e3_phi_cmd->add_option("--h", o.h);
  e3_list->add_option("--format", o.format, "json or csv");

  CLI::App* strat = group("strat", "strata poset");
  strat->alias("strata");
  CLI::App* dot = leaf(strat, "dot", "Hasse diagram as DOT", strat_dot);
  CLI::App* json = leaf(strat, "json", "nodes and covering edges as JSON", strat_json);
  CLI::App* closure = leaf(strat, "closure", "points below a given point", strat_closure);

  for (CLI::App* sub : {e3_list, e3_nf, dot, json, closure}) {
    sub->add_option("--h", o.h);
    sub->add_option("--mu", o.mu);
    sub->add_option("--polarized", o.g, "g, for the polarized points with h = 2g");
  }
  for (CLI::App* sub : {e3_nf, closure}) {
    sub->add_option("--delta", o.delta)->required();
    sub->add_option("--alpha", o.alpha)->required();
    sub->add_option("--beta", o.beta)->required();
  }

  CLI::App* lift = group("lift", "flag lifting");
  leaf(lift, "demo", "worked lifting and degeneration examples", lift_demo);
  CLI::App* lv = leaf(lift, "verify", "random lifting problems checked by generic rank", lift_verify);
  lv->add_option("--seed", o.seed);
  lv->add_option("--cases", o.cases);

  CLI::App* verify = group("verify", "acceptance sweeps");
  CLI::App* all = leaf(verify, "all", "run every sweep", verify_all);
  all->add_option("--max-dim", o.max_dim);
  all->add_option("--seed", o.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }
  try {
    apply_cap_override();
    return action(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const PRInfeasible& e) {
    std::cerr << e.what() << '\n';
    return kNegative;
  } catch (const LiftInfeasible& e) {
    std::cerr << e.what() << '\n';
    return kNegative;
  } catch (const OrderViolation& e) {
    std::cerr << e.what() << '\n';
    return kNegative;
  } catch (const InadmissiblePoint& e) {
    std::cerr << e.what() << '\n';
    return kNegative;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNegative;
  }
}
