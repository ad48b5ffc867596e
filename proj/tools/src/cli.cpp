#include "tiltwall_cli/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "tiltwall/counting.hpp"
#include "tiltwall/config.hpp"
#include "tiltwall/error.hpp"
#include "tiltwall/first_wall.hpp"
#include "tiltwall/modular.hpp"
#include "tiltwall/report_json.hpp"
#include "tiltwall/stability.hpp"
#include "tiltwall/svg.hpp"
#include "tiltwall/walls.hpp"

namespace tiltwall::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flags shared across subcommands. Unset optionals fall back to the config.
struct Flags {
  std::string config;
  std::optional<int> decimal;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> order;
  std::optional<std::int64_t> n_max;
  std::optional<std::int64_t> granularity;
  std::optional<std::int64_t> a;
  std::optional<std::int64_t> N;
  std::string u;
  std::string v;
  std::string charge;
  std::string b;
  std::string w;
  std::string d = "0";
  std::string I_value;
  std::string table;
  std::string series;
  std::string phi;
  std::string out;
};

Json read_json_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Config, "cannot read '" + path + "'");
  try {
    return Json::parse(f);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Config, "'" + path + "' is not valid JSON: " + e.what());
  }
}

Rational parse_rational_arg(const std::string& text, const char* what) {
  try {
    return Rational::parse(text);
  } catch (const Error&) {
    throw UsageError(std::string(what) + ": expected an integer or p/q, got '" + text + "'");
  }
}

// "r,ch1.H^2,ch2.H,ch3"
Charge parse_charge_arg(const std::string& text, const char* what) {
  std::vector<Rational> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(parse_rational_arg(item, what));
  if (parts.size() != 4) {
    throw UsageError(std::string(what) + ": expected four comma-separated entries r,ch1H2,ch2H,ch3");
  }
  return Charge{parts[0], parts[1], parts[2], parts[3], std::nullopt, std::nullopt};
}

struct Context {
  const Flags& flags;
  std::ostream& out;
  RunConfig cfg;
  RenderOptions render;
  std::string command;

  void emit(Json body) {
    body["provenance"] = provenance(command, cfg.hash);
    out << body.dump(2) << "\n";
  }
};

RunConfig resolve_config(const Flags& f) {
  RunConfig cfg;
  if (!f.config.empty()) cfg = load_config(f.config);
  if (f.n) {
    if (*f.n < 1) throw UsageError("--n must be positive");
    cfg.charge.n = *f.n;
  }
  return cfg;
}

std::int64_t order_of(const Context& c) {
  const std::int64_t order = c.flags.order.value_or(c.cfg.options.order.value_or(10));
  if (order < 0) throw UsageError("--order must be non-negative");
  return order;
}

FirstWallOptions wall_options(const Context& c) {
  FirstWallOptions o;
  o.granularity = c.flags.granularity.value_or(c.cfg.options.granularity.value_or(1));
  if (o.granularity < 1) throw UsageError("--granularity must be positive");
  return o;
}

StabilityParam point_arg(const Flags& f) {
  if (f.b.empty() || f.w.empty()) throw UsageError("--b and --w are required");
  return StabilityParam{parse_rational_arg(f.b, "--b"), parse_rational_arg(f.w, "--w")};
}

Json wall_json(const Wall& wall, const RenderOptions& r) {
  if (const auto* l = std::get_if<WallLine>(&wall)) {
    return Json{{"kind", "line"}, {"slope", to_json(l->slope, r)}, {"intercept", to_json(l->intercept, r)}};
  }
  return Json{{"kind", "vertical"}, {"b", to_json(std::get<VerticalWall>(wall).b, r)}};
}

void cmd_first_wall(Context& c) {
  const FirstWallReport rep = first_wall(c.cfg.charge, c.cfg.threefold, wall_options(c));
  c.emit(Json{{"first_wall", to_json(rep, c.render)}});
}

void cmd_min_n(Context& c) {
  const std::int64_t n_max = c.flags.n_max.value_or(c.cfg.options.n_max.value_or(200));
  if (n_max < 1) throw UsageError("--n-max must be positive");
  const auto n = min_n_unique(c.cfg.charge, c.cfg.threefold, n_max, wall_options(c));
  c.emit(Json{{"min_n", n ? Json(*n) : Json("none")}, {"n_max", n_max}});
}

void cmd_wall(Context& c) {
  if (c.flags.u.empty() || c.flags.v.empty()) throw UsageError("--u and --v are required");
  const Wall w = wall_between(parse_charge_arg(c.flags.u, "--u"), parse_charge_arg(c.flags.v, "--v"),
                              c.cfg.threefold);
  c.emit(Json{{"wall", wall_json(w, c.render)}});
}

void cmd_bg_check(Context& c) {
  if (c.flags.charge.empty()) throw UsageError("--charge is required");
  const Charge ch = parse_charge_arg(c.flags.charge, "--charge");
  const StabilityParam p = point_arg(c.flags);
  const bool holds = bg_inequality_check(ch, p, c.cfg.threefold);
  c.emit(Json{{"b", to_json(p.b, c.render)}, {"w", to_json(p.w, c.render)}, {"inequality_holds", holds}});
}

void cmd_li_region(Context& c) {
  const StabilityParam p = point_arg(c.flags);
  c.emit(Json{{"b", to_json(p.b, c.render)},
              {"w", to_json(p.w, c.render)},
              {"in_U", p.in_U()},
              {"in_li_region", li_region_contains(p)}});
}

void cmd_chi(Context& c) {
  if (!c.flags.charge.empty()) {
    const Charge ch = with_rank1_refinements(parse_charge_arg(c.flags.charge, "--charge"), c.cfg.threefold);
    c.emit(Json{{"chi", to_json(chi_euler(ch, c.cfg.threefold), c.render)}});
    return;
  }
  c.emit(Json{{"chi_vn", to_json(chi_vn(c.cfg.charge, c.cfg.threefold), c.render)}});
}

void cmd_en(Context& c) {
  c.emit(Json{{"e_n", e_n(c.cfg.charge, c.cfg.threefold).get_str()},
              {"chi_vn", chi_vn_integer(c.cfg.charge, c.cfg.threefold).get_str()}});
}

void cmd_dt(Context& c) {
  if (c.flags.I_value.empty()) throw UsageError("--I is required");
  const Rational I = parse_rational_arg(c.flags.I_value, "--I");
  if (!I.is_integer()) throw UsageError("--I must be an integer");
  c.emit(Json{{"e_n", e_n(c.cfg.charge, c.cfg.threefold).get_str()},
              {"I", I.num().get_str()},
              {"omega", dt_from_mnop(I.num(), c.cfg.charge, c.cfg.threefold).get_str()}});
}

void cmd_toda(Context& c) {
  if (c.flags.table.empty()) throw UsageError("--table is required");
  const auto [I, P] = invariant_tables_from_json(read_json_file(c.flags.table));
  const TodaResult res = toda_sum(c.cfg.charge, c.cfg.threefold, I, P);
  Json terms = Json::array();
  for (const auto& t : res.terms) {
    terms.push_back({{"beta1H", t.beta1H},
                     {"m1", t.m1},
                     {"beta2H", t.beta2H},
                     {"m2", t.m2},
                     {"multiplicity", t.multiplicity.get_str()},
                     {"value", t.value.get_str()}});
  }
  // The Theorem-2 style product e_n I[m, beta] is reported next to the sum
  // so index conventions can be compared.
  const std::int64_t beta = c.cfg.charge.betaH.to_int64();
  const std::int64_t m = c.cfg.charge.m.to_int64();
  const BigInt en = e_n(c.cfg.charge, c.cfg.threefold);
  c.emit(Json{{"toda_sum", res.value.get_str()},
              {"terms", terms},
              {"cone_points", res.cone_points},
              {"e_n_times_I_m", BigInt(en * I.get(beta, m)).get_str()},
              {"e_n_times_I_minus_m", BigInt(en * I.get(beta, -m)).get_str()}});
}

void cmd_mhat(Context& c) {
  CurveCharge cc = c.cfg.charge;
  cc.Q = resolve_Q(cc, c.cfg.threefold);
  c.emit(Json{{"mhat", to_json(mhat(cc, c.cfg.threefold), c.render)}, {"Q", to_json(*cc.Q, c.render)}});
}

void cmd_twist(Context& c) {
  if (!c.flags.a) throw UsageError("--a is required");
  CurveCharge cc = c.cfg.charge;
  if (!cc.Q && c.cfg.threefold.pic_rank1) cc.Q = resolve_Q(cc, c.cfg.threefold);
  const CurveCharge tw = twist_curve_charge(cc, *c.flags.a, c.cfg.threefold);
  Json body{{"a", *c.flags.a}, {"before", to_json(cc, c.render)}, {"after", to_json(tw, c.render)}};
  if (cc.Q) {
    body["mhat_before"] = to_json(mhat(cc, c.cfg.threefold), c.render);
    body["mhat_after"] = to_json(mhat(tw, c.cfg.threefold), c.render);
  }
  c.emit(body);
}

void cmd_goettsche(Context& c) {
  const Rational d = parse_rational_arg(c.flags.d, "--d");
  const QSeries s = goettsche_series(c.cfg.charge, c.cfg.threefold, d, order_of(c));
  c.emit(Json{{"series", to_json(s, c.render)},
              {"e_D", to_json(euler_D(c.cfg.charge, c.cfg.threefold), c.render)},
              {"pole_order", to_json(pole_order(c.cfg.charge, c.cfg.threefold), c.render)}});
}

void cmd_nl_series(Context& c) {
  if (c.flags.table.empty()) throw UsageError("--table is required");
  const NLTable nl = nl_table_from_json(read_json_file(c.flags.table));
  const NLSeries s = assemble_nl_series(nl, c.cfg.charge, c.cfg.threefold, order_of(c));
  Json comps = Json::array();
  for (const auto& q : s.components) comps.push_back(to_json(q, c.render));
  c.emit(Json{{"components", comps},
              {"N", static_cast<std::int64_t>(s.components.size())},
              {"weight", to_json(s.weight, c.render)}});
}

void cmd_t_check(Context& c) {
  const Rational phi = c.flags.phi.empty() ? t_phase(c.cfg.charge, c.cfg.threefold)
                                           : parse_rational_arg(c.flags.phi, "--phi");
  std::vector<QSeries> series;
  if (!c.flags.series.empty()) {
    series.push_back(qseries_from_json(read_json_file(c.flags.series)));
  } else if (!c.flags.table.empty()) {
    series = assemble_nl_series(nl_table_from_json(read_json_file(c.flags.table)), c.cfg.charge,
                                c.cfg.threefold, order_of(c))
                 .components;
  } else {
    series.push_back(goettsche_series(c.cfg.charge, c.cfg.threefold,
                                      parse_rational_arg(c.flags.d, "--d"), order_of(c)));
  }
  Json results = Json::array();
  bool all = true;
  for (const auto& s : series) {
    const bool ok = t_check(s, phi);
    all = all && ok;
    results.push_back(ok);
  }
  c.emit(Json{{"phi", to_json(phi, c.render)}, {"components", results}, {"passed", all}});
}

void cmd_s_matrix(Context& c) {
  const DiscriminantGroup G = c.flags.N ? DiscriminantGroup{*c.flags.N}
                                        : DiscriminantGroup::for_charge(c.cfg.charge, c.cfg.threefold);
  if (G.N < 1) throw UsageError("--N must be positive");
  const ComplexMatrix M = s_matrix(G);
  c.emit(Json{{"N", G.N}, {"matrix", to_json(M)}, {"unitarity_deviation", unitarity_deviation(M)}});
}

void cmd_plot(Context& c) {
  const FirstWallReport rep = first_wall(c.cfg.charge, c.cfg.threefold, wall_options(c));
  const PlotScene scene = first_wall_scene(rep, c.cfg.charge, c.cfg.threefold);
  const std::string svg = render_bw_plane(scene.items, scene.viewport);
  if (c.flags.out.empty()) {
    c.out << svg;
    return;
  }
  std::ofstream f(c.flags.out, std::ios::binary);
  if (!f) throw Error(ErrorKind::Config, "cannot write '" + c.flags.out + "'");
  f << svg;
  c.emit(Json{{"svg", c.flags.out}});
}

struct Command {
  const char* name;
  const char* help;
  bool needs_config;
  std::function<void(Context&)> run;
  std::vector<std::string> options;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Exact tilt-stability walls and D4-D2-D0 generating series", "tiltwall"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  const std::vector<Command> commands = {
      {"first-wall", "Candidate walls for v_n and the filter transcript", true, cmd_first_wall,
       {"n", "granularity"}},
      {"min-n", "Smallest n from which the first wall is unique", true, cmd_min_n, {"n-max", "granularity"}},
      {"wall", "Numerical wall between two charges", false, cmd_wall, {"u", "v"}},
      {"bg-check", "Conjectural ch3 bound at a null-locus point", false, cmd_bg_check, {"charge", "b", "w"}},
      {"li-region", "Membership of (b, w) in U and in the Li region", false, cmd_li_region, {"b", "w"}},
      {"chi", "chi(v(n)), or chi of --charge", true, cmd_chi, {"n", "charge"}},
      {"en", "Euler-characteristic multiplicity e_n", true, cmd_en, {"n"}},
      {"dt", "e_n times a curve-counting invariant", true, cmd_dt, {"n", "I"}},
      {"toda", "Toda cone sum for invariant tables", true, cmd_toda, {"n", "table"}},
      {"mhat", "Twist-invariant normalised charge", true, cmd_mhat, {"n"}},
      {"twist", "Curve charge of e^{aH} v_n", true, cmd_twist, {"n", "a"}},
      {"goettsche", "Goettsche series for one discriminant", true, cmd_goettsche, {"n", "d", "order"}},
      {"nl-series", "Assemble the Noether-Lefschetz generating vector", true, cmd_nl_series,
       {"n", "table", "order"}},
      {"t-check", "Check exponents against the T-phase", true, cmd_t_check,
       {"n", "d", "order", "table", "series", "phi"}},
      {"s-matrix", "Weil-representation S-matrix of Z/N", false, cmd_s_matrix, {"n", "N"}},
      {"plot", "SVG diagram of the first-wall geometry", true, cmd_plot, {"n", "granularity", "out"}},
  };

  std::map<CLI::App*, const Command*> by_app;
  for (const auto& cmd : commands) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    auto* cfg_opt = sub->add_option("--config", f.config, "TOML run configuration");
    if (cmd.needs_config) cfg_opt->required();
    sub->add_option("--decimal", f.decimal, "Render numbers with this many decimals")->check(CLI::Range(0, 1000));
    for (const auto& o : cmd.options) {
      if (o == "n") sub->add_option("--n", f.n, "Override charge.n");
      else if (o == "granularity") sub->add_option("--granularity", f.granularity, "Candidate grid (1/k)Z");
      else if (o == "n-max") sub->add_option("--n-max", f.n_max, "Largest n scanned");
      else if (o == "u") sub->add_option("--u", f.u, "Charge r,ch1H2,ch2H,ch3");
      else if (o == "v") sub->add_option("--v", f.v, "Charge r,ch1H2,ch2H,ch3");
      else if (o == "charge") sub->add_option("--charge", f.charge, "Charge r,ch1H2,ch2H,ch3");
      else if (o == "b") sub->add_option("--b", f.b, "b coordinate (p/q)");
      else if (o == "w") sub->add_option("--w", f.w, "w coordinate (p/q)");
      else if (o == "I") sub->add_option("--I", f.I_value, "Invariant value");
      else if (o == "table") sub->add_option("--table", f.table, "JSON table file");
      else if (o == "order") sub->add_option("--order", f.order, "Truncation order");
      else if (o == "d") sub->add_option("--d", f.d, "Discriminant d (p/q)");
      else if (o == "a") sub->add_option("--a", f.a, "Twist by O(a)");
      else if (o == "series") sub->add_option("--series", f.series, "JSON series file");
      else if (o == "phi") sub->add_option("--phi", f.phi, "Phase (p/q) instead of the computed one");
      else if (o == "N") sub->add_option("--N", f.N, "Group order");
      else if (o == "out") sub->add_option("--out", f.out, "Write the SVG here");
    }
    by_app[sub] = &cmd;
  }

  std::vector<std::string> argv_rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "tiltwall: " << e.what() << "\n";
    return kExitUsage;
  }

  const Command* cmd = nullptr;
  for (CLI::App* sub : app.get_subcommands()) cmd = by_app.at(sub);
  try {
    Context ctx{f, out, resolve_config(f), {}, cmd->name};
    ctx.render.decimal = f.decimal ? f.decimal : ctx.cfg.options.decimal;
    cmd->run(ctx);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "tiltwall: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "tiltwall: " << e.what() << "\n";
    return e.kind() == ErrorKind::Config ? kExitConfig : kExitPrecondition;
  }
}

}  // namespace tiltwall::cli
