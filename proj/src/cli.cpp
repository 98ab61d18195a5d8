#include "isbell/cli.hpp"

#include <algorithm>
#include <optional>

#include <CLI11.hpp>

#include "isbell/errors.hpp"
#include "isbell/random.hpp"
#include "isbell/region.hpp"

namespace isbell {

namespace {

struct GlobalOptions {
  double tolerance = kDefaultTol;
  std::uint64_t seed = 0;
  std::size_t budget = kDefaultBudget;
};

ExtNonNeg parse_scalar(const std::string& text) {
  if (text == "inf") return ExtNonNeg::infinity();
  try {
    return ExtNonNeg(std::stod(text));
  } catch (const std::invalid_argument&) {
    throw ShapeMismatch("expected a number or \"inf\", got \"" + text + "\"");
  }
}

Json parse_inline_json(const std::string& text) {
  return Json::parse(text);
}

Json read_json_or_file(const std::string& text) {
  std::string trimmed = text;
  trimmed.erase(0, trimmed.find_first_not_of(" \t"));
  if (!trimmed.empty() && (trimmed[0] == '{' || trimmed[0] == '['))
    return Json::parse(trimmed);
  std::ifstream in(text);
  if (!in) throw ShapeMismatch("cannot open " + text);
  return Json::parse(in);
}

struct SpaceProvider {
  std::string path;
  GlobalOptions* globals;
  SpaceRef load() const {
    return share(read_space_file(path, globals->tolerance));
  }
};

Grid grid_from_flags(const Space& space, std::optional<double> step,
                     std::optional<double> bound) {
  Grid grid = Grid::commensurate(space, bound);
  if (step) grid.step = *step;
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = 0; j < space.size(); ++j)
      if (!space.d(i, j).finite()) grid.include_infinity = true;
  return grid;
}

void print(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"operators on finite generalized metric spaces"};
  app.require_subcommand(1);

  GlobalOptions globals;
  app.add_option("--tolerance", globals.tolerance,
                 "comparison tolerance (default 1e-9)");
  app.add_option("--seed", globals.seed, "seed for randomized operations");
  app.add_option("--budget", globals.budget, "enumeration budget");

  int exit_code = 0;

  // validate
  std::string sp_validate;
  auto* validate = app.add_subcommand("validate", "validate a space file");
  validate->add_option("--space", sp_validate, "space file (.json or .csv)")
      ->required();
  validate->callback([&]() {
    Space space = read_space_file(sp_validate, globals.tolerance);
    print(out, to_json(space));
  });

  // conjugate {L|R}
  std::string conj_dir, sp_conj, f_conj;
  auto* conjugate = app.add_subcommand("conjugate", "Isbell conjugation");
  conjugate->add_option("direction", conj_dir, "L or R")
      ->required()
      ->check(CLI::IsMember({"L", "R"}));
  conjugate->add_option("--space", sp_conj, "space file")->required();
  conjugate->add_option("--f", f_conj, "functional values as JSON")
      ->required();
  conjugate->callback([&]() {
    SpaceRef space = share(read_space_file(sp_conj, globals.tolerance));
    Functional f =
        Functional::raw(space, table_from_json(parse_inline_json(f_conj)));
    Functional result = conj_dir == "L" ? conjugate_L(f) : conjugate_R(f);
    print(out, to_json(result));
  });

  // project {RL|LR}
  std::string proj_dir, sp_proj, f_proj;
  auto* project = app.add_subcommand("project", "idempotent projections");
  project->add_option("direction", proj_dir, "RL or LR")
      ->required()
      ->check(CLI::IsMember({"RL", "LR"}));
  project->add_option("--space", sp_proj, "space file")->required();
  project->add_option("--f", f_proj, "functional values as JSON")->required();
  project->callback([&]() {
    SpaceRef space = share(read_space_file(sp_proj, globals.tolerance));
    Functional f =
        Functional::raw(space, table_from_json(parse_inline_json(f_proj)));
    Functional result = proj_dir == "RL" ? project_RL(f) : project_LR(f);
    print(out, to_json(result));
  });

  // embed
  std::string sp_embed, embed_point;
  auto* embed_cmd = app.add_subcommand("embed", "embed a point of the space");
  embed_cmd->add_option("--space", sp_embed, "space file")->required();
  embed_cmd->add_option("--point", embed_point, "point label")->required();
  embed_cmd->callback([&]() {
    SpaceRef space = share(read_space_file(sp_embed, globals.tolerance));
    print(out, to_json(embed(space, space->index(embed_point))));
  });

  // dist
  std::string sp_dist, dist_kind, dist_a, dist_b;
  auto* dist = app.add_subcommand("dist", "distances in the derived spaces");
  dist->add_option("--space", sp_dist, "space file")->required();
  dist->add_option("--kind", dist_kind,
                   "interval | presheaf | opcopresheaf | isbell | tightspan "
                   "| hk")
      ->required()
      ->check(CLI::IsMember({"interval", "presheaf", "opcopresheaf", "isbell",
                             "tightspan", "hk"}));
  dist->add_option("--a", dist_a, "first value (JSON)")->required();
  dist->add_option("--b", dist_b, "second value (JSON)")->required();
  dist->callback([&]() {
    if (dist_kind == "interval") {
      ExtNonNeg a = extnn_from_json(parse_inline_json(dist_a));
      ExtNonNeg b = extnn_from_json(parse_inline_json(dist_b));
      print(out, to_json(dist_interval(a, b)));
      return;
    }
    SpaceRef space = share(read_space_file(sp_dist, globals.tolerance));
    Json ja = parse_inline_json(dist_a);
    Json jb = parse_inline_json(dist_b);
    if (dist_kind == "presheaf" || dist_kind == "opcopresheaf" ||
        dist_kind == "tightspan") {
      Functional a = Functional::raw(space, table_from_json(ja));
      Functional b = Functional::raw(space, table_from_json(jb));
      if (dist_kind == "presheaf")
        print(out, to_json(presheaf_dist(a, b)));
      else if (dist_kind == "opcopresheaf")
        print(out, to_json(opcopresheaf_dist(a, b)));
      else
        print(out, to_json(tightspan_dist(a, b, globals.tolerance)));
      return;
    }
    if (dist_kind == "isbell") {
      IsbellPoint a = isbell_point_from_json(ja, space, globals.tolerance);
      IsbellPoint b = isbell_point_from_json(jb, space, globals.tolerance);
      print(out, to_json(isbell_dist(a, b, globals.tolerance)));
      return;
    }
    // hk: pairs {"f": [...], "g": [...]} without the invariance requirement
    TriangularPair a{Functional::raw(space, table_from_json(ja.at("f"))),
                     Functional::raw(space, table_from_json(ja.at("g")))};
    TriangularPair b{Functional::raw(space, table_from_json(jb.at("f"))),
                     Functional::raw(space, table_from_json(jb.at("g")))};
    print(out, to_json(hk_dist(a, b)));
  });

  // tightspan classify | sample
  auto* tightspan = app.add_subcommand("tightspan", "classical tight span");
  tightspan->require_subcommand(1);
  std::string sp_ts, f_ts;
  auto* ts_classify = tightspan->add_subcommand("classify",
                                                "classify a functional");
  ts_classify->add_option("--space", sp_ts, "space file")->required();
  ts_classify->add_option("--f", f_ts, "functional values as JSON")
      ->required();
  ts_classify->callback([&]() {
    SpaceRef space = share(read_space_file(sp_ts, globals.tolerance));
    Functional f =
        Functional::raw(space, table_from_json(parse_inline_json(f_ts)));
    bool aim = in_aim(f, globals.tolerance);
    bool tight = is_tight(f, globals.tolerance);
    bool minimal = false;
    if (aim)
      minimal = is_minimal_in_aim(f, globals.tolerance,
                                  default_perturbation_step(*space));
    print(out,
          Json{{"in_aim", aim}, {"tight", tight}, {"minimal", minimal}});
  });
  std::string sp_ts_sample;
  std::optional<double> ts_step, ts_bound;
  auto* ts_sample = tightspan->add_subcommand(
      "sample", "sample the tight span on a grid");
  ts_sample->add_option("--space", sp_ts_sample, "space file")->required();
  ts_sample->add_option("--step", ts_step, "grid step");
  ts_sample->add_option("--bound", ts_bound, "grid bound");
  ts_sample->callback([&]() {
    SpaceRef space = share(read_space_file(sp_ts_sample, globals.tolerance));
    Grid grid = grid_from_flags(*space, ts_step, ts_bound);
    Json points = Json::array();
    for_each_functional(space, grid, Role::raw, globals.budget,
                        [&](std::span<const ExtNonNeg> table) {
                          Functional f = Functional::raw(
                              space, std::vector<ExtNonNeg>(table.begin(),
                                                            table.end()));
                          if (is_tight(f, globals.tolerance))
                            points.push_back(to_json(f));
                        });
    print(out, points);
  });

  // hk check | enumerate
  auto* hk = app.add_subcommand("hk", "directed tight span");
  hk->require_subcommand(1);
  std::string sp_hk, f_hk, g_hk;
  auto* hk_check = hk->add_subcommand("check", "classify a pair");
  hk_check->add_option("--space", sp_hk, "space file")->required();
  hk_check->add_option("--f", f_hk, "distances-in table (JSON)")->required();
  hk_check->add_option("--g", g_hk, "distances-out table (JSON)")->required();
  hk_check->callback([&]() {
    SpaceRef space = share(read_space_file(sp_hk, globals.tolerance));
    Functional f =
        Functional::raw(space, table_from_json(parse_inline_json(f_hk)));
    Functional g =
        Functional::raw(space, table_from_json(parse_inline_json(g_hk)));
    bool triangular = is_triangular(f, g, globals.tolerance);
    bool minimal = triangular && is_minimal_pair(f, g, globals.tolerance);
    bool perturbative =
        triangular &&
        is_minimal_pair_perturbative(f, g, globals.tolerance,
                                     default_perturbation_step(*space));
    print(out, Json{{"triangular", triangular},
                    {"minimal", minimal},
                    {"minimal_perturbative", perturbative}});
  });
  std::string sp_hk_enum;
  std::optional<double> hk_step, hk_bound;
  auto* hk_enum = hk->add_subcommand("enumerate",
                                     "enumerate minimal pairs on a grid");
  hk_enum->add_option("--space", sp_hk_enum, "space file")->required();
  hk_enum->add_option("--step", hk_step, "grid step");
  hk_enum->add_option("--bound", hk_bound, "grid bound");
  hk_enum->callback([&]() {
    SpaceRef space = share(read_space_file(sp_hk_enum, globals.tolerance));
    Grid grid = grid_from_flags(*space, hk_step, hk_bound);
    Json pairs = Json::array();
    for (const TriangularPair& p :
         brute_minimal_pairs(space, grid, globals.budget))
      pairs.push_back(Json{{"f", to_json(p.f)}, {"g", to_json(p.g)}});
    print(out, pairs);
  });

  // colimit / limit
  auto add_colimit_like = [&](const char* name, const char* help,
                              bool colimit_side) {
    auto* cmd = app.add_subcommand(name, help);
    auto sp = std::make_shared<std::string>();
    auto diagram_text = std::make_shared<std::string>();
    cmd->add_option("--space", *sp, "target space file")->required();
    cmd->add_option("--diagram", *diagram_text,
                    "diagram JSON ({\"shape\",\"J\",\"W\"}) or file")
        ->required();
    cmd->callback([&, sp, diagram_text, colimit_side]() {
      SpaceRef space = share(read_space_file(*sp, globals.tolerance));
      WeightedDiagram wd = weighted_diagram_from_json(
          read_json_or_file(*diagram_text), space, colimit_side,
          globals.tolerance);

      Json result;
      std::vector<std::size_t> found =
          colimit_side ? colimit_search(wd, globals.tolerance)
                       : limit_search(wd, globals.tolerance);
      Json names = Json::array();
      for (std::size_t c : found) names.push_back(space->label(c));
      result["search"] = std::move(names);

      std::vector<IsbellPoint> legs;
      for (std::size_t d = 0; d < wd.shape()->size(); ++d)
        legs.push_back(embed(space, wd.j(d)));
      CompletionDiagram embedded =
          make_completion_diagram(wd.shape(), space, legs, wd.weight);
      IsbellPoint lifted = colimit_side
                               ? colim_fixed(embedded, globals.tolerance)
                               : lim_fixed(embedded, globals.tolerance);
      result["completion"] = to_json(lifted);

      // Universal-property transcript over the embedded points.
      Json transcript = Json::array();
      bool all_ok = true;
      for (std::size_t x = 0; x < space->size(); ++x) {
        IsbellPoint probe = embed(space, x);
        ExtNonNeg lhs = colimit_side
                            ? isbell_dist(lifted, probe, globals.tolerance)
                            : isbell_dist(probe, lifted, globals.tolerance);
        ExtNonNeg rhs(0.0);
        for (std::size_t d = 0; d < legs.size(); ++d) {
          ExtNonNeg leg_dist =
              colimit_side ? isbell_dist(legs[d], probe, globals.tolerance)
                           : isbell_dist(probe, legs[d], globals.tolerance);
          rhs = max(rhs, monus(leg_dist, wd.weight[d]));
        }
        bool ok = approx_eq(lhs, rhs, globals.tolerance);
        all_ok = all_ok && ok;
        transcript.push_back(Json{{"point", space->label(x)},
                                  {"lhs", to_json(lhs)},
                                  {"rhs", to_json(rhs)},
                                  {"ok", ok}});
      }
      result["universal_property"] =
          Json{{"ok", all_ok}, {"transcript", std::move(transcript)}};
      print(out, result);
      if (!all_ok) exit_code = 1;
    });
  };
  add_colimit_like("colimit", "weighted colimit of a point diagram", true);
  add_colimit_like("limit", "weighted limit of a point diagram", false);

  // module {oplus|odot|boxplus|boxdot}
  auto* module_cmd = app.add_subcommand("module", "semi-tropical actions");
  module_cmd->require_subcommand(1);
  auto add_module_op = [&](const char* name, bool binary, auto fn) {
    auto* cmd = module_cmd->add_subcommand(name);
    auto sp = std::make_shared<std::string>();
    auto p_text = std::make_shared<std::string>();
    auto q_text = std::make_shared<std::string>();
    auto tau_text = std::make_shared<std::string>();
    cmd->add_option("--space", *sp, "space file")->required();
    cmd->add_option("--p", *p_text, "point (f table or {\"f\",\"g\"})")
        ->required();
    if (binary)
      cmd->add_option("--q", *q_text, "second point")->required();
    else
      cmd->add_option("--tau", *tau_text, "scalar (number or inf)")
          ->required();
    cmd->callback([&, sp, p_text, q_text, tau_text, binary, fn]() {
      SpaceRef space = share(read_space_file(*sp, globals.tolerance));
      IsbellPoint p = isbell_point_from_json(parse_inline_json(*p_text), space,
                                             globals.tolerance);
      if (binary) {
        IsbellPoint q = isbell_point_from_json(parse_inline_json(*q_text),
                                               space, globals.tolerance);
        print(out, to_json(fn(p, q, ExtNonNeg(0.0), globals.tolerance)));
      } else {
        ExtNonNeg tau = parse_scalar(*tau_text);
        print(out, to_json(fn(p, p, tau, globals.tolerance)));
      }
    });
  };
  add_module_op("oplus", true,
                [](const IsbellPoint& p, const IsbellPoint& q, ExtNonNeg,
                   double tol) { return oplus(p, q, tol); });
  add_module_op("boxplus", true,
                [](const IsbellPoint& p, const IsbellPoint& q, ExtNonNeg,
                   double tol) { return boxplus(p, q, tol); });
  add_module_op("odot", false,
                [](const IsbellPoint& p, const IsbellPoint&, ExtNonNeg tau,
                   double tol) { return odot(tau, p, tol); });
  add_module_op("boxdot", false,
                [](const IsbellPoint& p, const IsbellPoint&, ExtNonNeg tau,
                   double tol) { return boxdot(tau, p, tol); });

  // export-region
  std::string sp_region;
  std::optional<double> region_step, region_bound;
  bool region_grid_sample = false, region_debug = false;
  auto* region_cmd =
      app.add_subcommand("export-region", "describe the completion's shape");
  region_cmd->add_option("--space", sp_region, "space file")->required();
  region_cmd->add_option("--step", region_step, "sampling grid step");
  region_cmd->add_option("--bound", region_bound, "sampling grid bound");
  region_cmd->add_flag("--grid-sample", region_grid_sample,
                       "skip closed forms and emit sampled points");
  region_cmd->add_flag("--debug", region_debug,
                       "print the three-point branch conditions to stderr");
  region_cmd->callback([&]() {
    SpaceRef space = share(read_space_file(sp_region, globals.tolerance));
    std::optional<Grid> grid;
    if (region_step || region_bound || region_grid_sample)
      grid = grid_from_flags(*space, region_step, region_bound);
    RegionDescription region;
    if (region_grid_sample) {
      // reuse the fallback path directly
      Grid g = grid ? *grid : grid_from_flags(*space, std::nullopt,
                                              std::nullopt);
      Json points = Json::array();
      region.kind = "grid-sample";
      for_each_functional(space, g, Role::raw, globals.budget,
                          [&](std::span<const ExtNonNeg> table) {
                            Functional f = Functional::raw(
                                space, std::vector<ExtNonNeg>(table.begin(),
                                                              table.end()));
                            Functional rl = project_RL(f);
                            for (std::size_t i = 0; i < f.size(); ++i)
                              if (!approx_eq(rl[i], f[i], globals.tolerance))
                                return;
                            region.points.emplace_back(table.begin(),
                                                       table.end());
                          });
      print(out, to_json(region));
      return;
    }
    region = export_region(space, grid, globals.tolerance, &err,
                           region_debug ? &err : nullptr);
    print(out, to_json(region));
  });

  // verify
  std::string verify_theorem_id, sp_verify;
  std::optional<double> verify_step, verify_bound;
  int verify_trials = 200;
  bool verify_list = false;
  auto* verify_cmd = app.add_subcommand("verify", "brute-force theorem check");
  verify_cmd->add_option("--theorem", verify_theorem_id, "theorem identifier");
  verify_cmd->add_option("--space", sp_verify, "space file");
  verify_cmd->add_option("--step", verify_step, "grid step");
  verify_cmd->add_option("--bound", verify_bound, "grid bound");
  verify_cmd->add_option("--trials", verify_trials, "randomized trials");
  verify_cmd->add_flag("--list", verify_list, "list registered theorems");
  verify_cmd->callback([&]() {
    if (verify_list) {
      Json names = Json::array();
      for (const std::string& name : registered_theorems())
        names.push_back(name);
      print(out, names);
      return;
    }
    if (verify_theorem_id.empty() || sp_verify.empty())
      throw CLI::ValidationError("verify", "--theorem and --space required");
    SpaceRef space = share(read_space_file(sp_verify, globals.tolerance));
    VerifyConfig config;
    config.step = verify_step;
    config.bound = verify_bound;
    config.trials = verify_trials;
    config.seed = globals.seed;
    config.tol = globals.tolerance;
    config.budget = globals.budget;
    VerifyReport report = verify_theorem(verify_theorem_id, space, config);
    print(out, to_json(report));
    if (!report.passed) exit_code = 1;
  });

  // random-space
  std::size_t rs_points = 3;
  bool rs_symmetric = false;
  double rs_step = 0.25;
  int rs_max_steps = 8;
  double rs_inf_prob = 0.0, rs_zero_prob = 0.0;
  auto* random_cmd = app.add_subcommand("random-space",
                                        "generate a random valid space");
  random_cmd->add_option("--points", rs_points, "number of points");
  random_cmd->add_flag("--symmetric", rs_symmetric, "symmetric distances");
  random_cmd->add_option("--step", rs_step, "distance quantum");
  random_cmd->add_option("--max-steps", rs_max_steps,
                         "largest distance in steps");
  random_cmd->add_option("--inf-prob", rs_inf_prob,
                         "probability of an infinite entry");
  random_cmd->add_option("--zero-prob", rs_zero_prob,
                         "probability of a zero entry");
  random_cmd->callback([&]() {
    Rng rng(globals.seed);
    SpaceOptions options;
    options.points = rs_points;
    options.symmetric = rs_symmetric;
    options.step = rs_step;
    options.max_steps = rs_max_steps;
    options.infinity_prob = rs_inf_prob;
    options.zero_prob = rs_zero_prob;
    print(out, to_json(random_space(rng, options)));
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    err << "ParseError: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace isbell
