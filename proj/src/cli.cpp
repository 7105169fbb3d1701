#include "qpbl/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qpbl/axioms.hpp"
#include "qpbl/catalog.hpp"
#include "qpbl/fixedpoint.hpp"
#include "qpbl/sequences.hpp"
#include "qpbl/space_io.hpp"
#include "qpbl/topology.hpp"

namespace qpbl::cli {

namespace {

using nlohmann::json;

// --- serialization ----------------------------------------------------------

json to_json(const Point& p) {
  if (p.is_real()) return json(p.as_real());
  return json(p.as_label());
}

json to_json(const std::vector<Point>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(to_json(p));
  return a;
}

json to_json(const AxiomReport& rep) {
  json j;
  j["axiom"] = axiom_name(rep.axiom);
  j["passed"] = rep.passed;
  j["worst_violation"] = rep.worst_violation;
  j["sampled_evidence_only"] = rep.sampled_evidence_only;
  j["tolerance"] = rep.tolerance;
  if (!rep.witness.empty()) j["witness"] = to_json(rep.witness);
  return j;
}

json to_json(const MinimalCoefficient& mc) {
  json j;
  j["value"] = mc.value;
  if (mc.exact) j["exact"] = mc.exact->to_string();
  j["lower_bound_only"] = mc.lower_bound_only;
  if (!mc.witness.empty()) j["witness"] = to_json(mc.witness);
  return j;
}

json to_json(const CheckResult& c) {
  json j;
  j["name"] = c.name;
  j["passed"] = c.passed;
  j["sampled"] = c.sampled;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

json to_json(const FixedPointCertificate& cert) {
  json j;
  j["point"] = to_json(cert.point);
  j["residual_forward"] = cert.residual_forward;
  j["residual_backward"] = cert.residual_backward;
  j["self_distance"] = cert.self_distance;
  j["iterations"] = cert.iterations;
  j["map_evaluations"] = cert.map_evaluations;
  j["unique_among_restarts"] = cert.unique_among_restarts;
  j["restart_points"] = to_json(cert.restart_points);
  json checks = json::array();
  for (const auto& c : cert.hypothesis_report) checks.push_back(to_json(c));
  j["hypothesis_report"] = std::move(checks);
  return j;
}

json to_json(const CauchyProfile& p) {
  json j;
  j["qpbl_forward_limit"] = p.qpbl_forward_limit;
  j["qpbl_backward_limit"] = p.qpbl_backward_limit;
  j["forward_spread"] = p.forward_spread;
  j["backward_spread"] = p.backward_spread;
  j["is_cauchy"] = p.is_cauchy;
  j["is_zero_cauchy"] = p.is_zero_cauchy;
  return j;
}

// --- option plumbing --------------------------------------------------------

struct CommonOptions {
  std::string space_id;
  std::string space_file;
  std::vector<std::string> params;
  int grid = 101;
  int randoms = 1000;
  std::optional<std::uint64_t> seed;
  double tol = 1e-9;
};

void add_space_options(CLI::App* cmd, CommonOptions& opts, bool required = true) {
  auto* id = cmd->add_option("--space", opts.space_id, "catalog space id");
  auto* file = cmd->add_option("--space-file", opts.space_file,
                               "JSON space file (finite table format)");
  if (required) {
    id->excludes(file);
    file->excludes(id);
  }
  cmd->add_option("--param", opts.params, "catalog parameter key=value (repeatable)");
  cmd->add_option("--grid", opts.grid, "grid points per axis for interval sampling");
  cmd->add_option("--random", opts.randoms, "seeded random sample count");
  cmd->add_option("--seed", opts.seed, "sampling seed (falls back to QPBL_SEED)");
  cmd->add_option("--tol", opts.tol, "comparison tolerance");
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  if (const char* env = std::getenv("QPBL_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("QPBL_SEED is not an integer");
    }
  }
  return 0;
}

SamplePlan plan_of(const CommonOptions& opts) {
  SamplePlan plan;
  plan.grid_points_per_axis = opts.grid;
  plan.random_points = opts.randoms;
  plan.seed = resolve_seed(opts.seed);
  plan.tolerance = opts.tol;
  plan.validate();
  return plan;
}

CatalogParams parse_params(const std::vector<std::string>& kvs) {
  CatalogParams params;
  for (const auto& kv : kvs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw UsageError("--param expects key=value: " + kv);
    try {
      params[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("--param value is not numeric: " + kv);
    }
  }
  return params;
}

Space resolve_space(const CommonOptions& opts) {
  if (!opts.space_file.empty()) return load_space(opts.space_file);
  if (opts.space_id.empty()) throw UsageError("provide --space <id> or --space-file <path>");
  return make_space(opts.space_id, parse_params(opts.params));
}

Point parse_point(const Space& space, const std::string& text) {
  if (space.is_finite()) {
    const Point p = Point::label(text);
    if (!space.contains(p)) throw PointOutsideDomain("label not in domain: " + text);
    return p;
  }
  try {
    return Point::real(std::stod(text));
  } catch (const std::exception&) {
    throw UsageError("expected a decimal point coordinate, got: " + text);
  }
}

SequenceSpec parse_sequence(const Space& space, const std::string& text, int horizon) {
  if (text == "recip") {
    if (space.is_finite()) throw UsageError("recip needs an interval domain");
    return recip_seq(horizon);
  }
  if (text.rfind("const:", 0) == 0)
    return const_seq(parse_point(space, text.substr(6)), horizon);
  if (text.rfind("alt:", 0) == 0) {
    const std::string rest = text.substr(4);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw UsageError("alt needs two points: alt:<p>:<q>");
    return alt_seq(parse_point(space, rest.substr(0, colon)),
                   parse_point(space, rest.substr(colon + 1)), horizon);
  }
  if (text.rfind("orbit:", 0) == 0) {
    const std::string rest = text.substr(6);
    const auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw UsageError("orbit needs a map and a start: orbit:<map-id>:<x0>");
    const Mapping map = make_mapping(rest.substr(0, colon));
    return orbit(map, parse_point(space, rest.substr(colon + 1)), horizon - 1);
  }
  throw UsageError("unknown sequence '" + text +
                   "' (use const:<p>, recip, alt:<p>:<q>, orbit:<map-id>:<x0>)");
}

std::string status_of_reports(const std::vector<AxiomReport>& reports) {
  bool sampled = false;
  for (const auto& r : reports) {
    if (!r.passed) return "fail";
    sampled = sampled || r.sampled_evidence_only;
  }
  return sampled ? "evidence-only" : "pass";
}

// --- subcommand handlers ----------------------------------------------------

struct Outcome {
  std::string status;
  json payload;
};

Outcome cmd_catalog(const std::string& show_id) {
  json payload;
  if (show_id.empty()) {
    json items = json::array();
    for (const auto& e : catalog_entries()) {
      json it;
      it["id"] = e.id;
      it["kind"] = e.kind == CatalogEntry::Kind::space ? "space" : "mapping";
      it["summary"] = e.summary;
      if (!e.params_help.empty()) it["params"] = e.params_help;
      items.push_back(std::move(it));
    }
    payload["entries"] = std::move(items);
    return {"pass", payload};
  }
  for (const auto& e : catalog_entries())
    if (e.id == show_id) {
      payload["id"] = e.id;
      payload["kind"] = e.kind == CatalogEntry::Kind::space ? "space" : "mapping";
      payload["summary"] = e.summary;
      if (!e.params_help.empty()) payload["params"] = e.params_help;
      if (e.kind == CatalogEntry::Kind::space) {
        const Space sp = make_space(e.id);
        payload["claimed_s"] = sp.coefficient();
        if (sp.coefficient_exact()) payload["claimed_s_exact"] = sp.coefficient_exact()->to_string();
        if (sp.is_finite()) payload["points"] = sp.finite().labels;
      }
      return {"pass", payload};
    }
  throw UnknownId("unknown catalog id: " + show_id);
}

Outcome cmd_verify(const CommonOptions& opts, std::optional<double> s_override) {
  const Space space = resolve_space(opts);
  const SamplePlan plan = plan_of(opts);
  const std::vector<AxiomReport> reports =
      s_override ? check_axioms(space, *s_override, plan) : check_axioms_claimed(space, plan);
  json payload;
  payload["space"] = space.name();
  payload["s"] = s_override ? *s_override : space.coefficient();
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  payload["reports"] = std::move(arr);
  return {status_of_reports(reports), payload};
}

Outcome cmd_min_s(const CommonOptions& opts) {
  const Space space = resolve_space(opts);
  const MinimalCoefficient mc = minimal_coefficient(space, plan_of(opts));
  json payload;
  payload["space"] = space.name();
  payload["claimed_s"] = space.coefficient();
  payload["minimal"] = to_json(mc);
  return {mc.lower_bound_only ? "evidence-only" : "pass", payload};
}

Outcome cmd_classify(const CommonOptions& opts) {
  const Space space = resolve_space(opts);
  const SpaceClassification cls = classify(space, plan_of(opts));
  json payload;
  payload["space"] = space.name();
  payload["quasi_partial_b_metric_like"] = cls.quasi_partial_b_metric_like;
  payload["quasi_partial_b_metric"] = cls.quasi_partial_b_metric;
  payload["symmetric"] = cls.symmetric;
  payload["b_metric_like"] = cls.b_metric_like;
  json arr = json::array();
  for (const auto& r : cls.reports) arr.push_back(to_json(r));
  payload["reports"] = std::move(arr);
  return {cls.sampled_evidence_only ? "evidence-only" : "pass", payload};
}

Outcome cmd_ball(const CommonOptions& opts, const std::string& center, double eps,
                 const std::vector<std::string>& probes) {
  const Space space = resolve_space(opts);
  const Ball b = ball(space, parse_point(space, center), eps);
  json payload;
  payload["space"] = space.name();
  payload["center"] = to_json(b.center);
  payload["radius"] = b.radius;
  if (b.explicit_set) payload["members"] = *b.explicit_set;
  json results = json::array();
  for (const auto& text : probes) {
    const Point p = parse_point(space, text);
    json r;
    r["point"] = to_json(p);
    r["member"] = b.membership(p);
    results.push_back(std::move(r));
  }
  if (!probes.empty()) payload["probes"] = std::move(results);
  return {"pass", payload};
}

Outcome cmd_topology(const CommonOptions& opts) {
  const Space space = resolve_space(opts);
  const FiniteTopology top = enumerate_topology(space);
  json payload;
  payload["space"] = space.name();
  payload["ground"] = top.ground;
  payload["open_sets"] = top.open_sets();
  payload["open_set_count"] = top.open_masks.size();
  return {"pass", payload};
}

Outcome cmd_separation(const CommonOptions& opts) {
  const Space space = resolve_space(opts);
  const SeparationReport rep = separation_class(enumerate_topology(space));
  json payload;
  payload["space"] = space.name();
  payload["class"] = separation_name(rep.cls);
  if (rep.witness) payload["witness"] = {rep.witness->first, rep.witness->second};
  return {"pass", payload};
}

Outcome cmd_seq_profile(const CommonOptions& opts, const std::string& seq_text,
                        const std::string& target, int horizon, double tol,
                        bool equivalence) {
  const Space space = resolve_space(opts);
  const SequenceSpec seq = parse_sequence(space, seq_text, horizon);
  json payload;
  payload["space"] = space.name();
  payload["sequence"] = seq.name;
  payload["horizon"] = seq.horizon;
  payload["tol"] = tol;
  std::string status = space.is_finite() ? "pass" : "evidence-only";

  if (!target.empty()) {
    const LimitProfile prof = limit_profile(space, seq, parse_point(space, target), tol);
    json lp;
    lp["target"] = to_json(prof.target);
    lp["forward_tail"] = prof.forward_tail;
    lp["backward_tail"] = prof.backward_tail;
    lp["self_distance"] = prof.self_distance;
    lp["converged"] = prof.converged;
    payload["limit_profile"] = std::move(lp);
  }
  payload["cauchy_profile"] = to_json(cauchy_profile(space, seq, tol));
  if (equivalence) {
    const CauchyEquivalenceReport eq = cauchy_equivalence_check(space, seq, tol);
    json je;
    je["in_space"] = to_json(eq.in_space);
    je["in_bml"] = to_json(eq.in_bml);
    je["agree"] = eq.agree;
    payload["cauchy_equivalence"] = std::move(je);
    if (!eq.agree) status = "fail";
  }
  return {status, payload};
}

Outcome cmd_fix_solve(const CommonOptions& opts, const std::string& theorem,
                      const std::string& map_id,
                      const std::vector<std::string>& map_params,
                      const std::string& x0_text, const std::string& phi_text,
                      const std::string& psi_text, std::optional<double> lambda,
                      std::optional<double> K, std::optional<double> a1,
                      std::optional<double> a2, std::optional<double> a3,
                      std::optional<double> a4, double tol, int max_iter) {
  const Space space = resolve_space(opts);
  const Mapping map = make_mapping(map_id, parse_params(map_params));
  const Point x0 = parse_point(space, x0_text);

  SolveOptions sopts;
  sopts.tol = tol;
  sopts.max_iter = max_iter;
  sopts.plan = plan_of(opts);

  FixedPointCertificate cert;
  if (theorem == "phi") {
    if (phi_text.empty()) throw UsageError("--theorem phi requires --phi");
    cert = phi_contraction_solve(space, map, parse_scalar(phi_text), x0, sopts);
  } else if (theorem == "lambda") {
    if (!lambda) throw UsageError("--theorem lambda requires --lambda");
    cert = lambda_contraction_solve(space, map, *lambda, x0, sopts);
  } else if (theorem == "phi-psi") {
    if (phi_text.empty() || psi_text.empty())
      throw UsageError("--theorem phi-psi requires --phi and --psi");
    cert = phi_psi_solve(space, map, parse_scalar(phi_text), parse_scalar(psi_text), x0,
                         sopts);
  } else if (theorem == "expansive") {
    if (!a1 || !a2 || !a3 || !a4)
      throw UsageError("--theorem expansive requires --a1 --a2 --a3 --a4");
    cert = expansive_solve(space, map, ExpansiveParams{*a1, *a2, *a3, *a4}, x0, sopts);
  } else if (theorem == "expansive-k") {
    if (!K) throw UsageError("--theorem expansive-k requires --K");
    cert = expansive_solve_k(space, map, *K, x0, sopts);
  } else {
    throw UsageError("unknown theorem '" + theorem +
                     "' (phi|lambda|phi-psi|expansive|expansive-k)");
  }

  json payload;
  payload["space"] = space.name();
  payload["map"] = map.name;
  payload["theorem"] = theorem;
  payload["tol"] = tol;
  payload["certificate"] = to_json(cert);
  return {space.is_finite() ? "pass" : "evidence-only", payload};
}

Outcome cmd_reproduce(const std::string& id, bool all) {
  json payload;
  bool ok = true;
  if (all) {
    json entries = json::array();
    for (const auto& rid : reproduce_ids()) {
      json e = reproduce_example(rid);
      ok = ok && e.at("passed").get<bool>();
      entries.push_back(std::move(e));
    }
    payload["examples"] = std::move(entries);
    payload["all_passed"] = ok;
  } else {
    payload = reproduce_example(id);
    ok = payload.at("passed").get<bool>();
  }
  return {ok ? "pass" : "fail", payload};
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  const auto started = std::chrono::steady_clock::now();

  CLI::App app{"quasi-partial b-metric-like space toolkit"};
  app.require_subcommand(1);

  // catalog
  auto* catalog_cmd = app.add_subcommand("catalog", "list built-in spaces and mappings");
  catalog_cmd->require_subcommand(1);
  auto* catalog_list = catalog_cmd->add_subcommand("list", "identifier table");
  std::string show_id;
  auto* catalog_show = catalog_cmd->add_subcommand("show", "one identifier in detail");
  catalog_show->add_option("id", show_id, "catalog id")->required();

  // verify
  CommonOptions verify_opts;
  std::optional<double> verify_s;
  auto* verify_cmd = app.add_subcommand("verify", "check QPbl1-QPbl4");
  add_space_options(verify_cmd, verify_opts);
  verify_cmd->add_option("--s", verify_s, "coefficient to verify (defaults to claimed)");

  // min-s
  CommonOptions mins_opts;
  auto* mins_cmd = app.add_subcommand("min-s", "minimal coefficient");
  add_space_options(mins_cmd, mins_opts);

  // classify
  CommonOptions classify_opts;
  auto* classify_cmd = app.add_subcommand("classify", "space family membership");
  add_space_options(classify_cmd, classify_opts);

  // ball
  CommonOptions ball_opts;
  std::string ball_center;
  double ball_eps = 0.0;
  std::vector<std::string> ball_probes;
  auto* ball_cmd = app.add_subcommand("ball", "open-ball membership");
  add_space_options(ball_cmd, ball_opts);
  ball_cmd->add_option("--center", ball_center, "ball center")->required();
  ball_cmd->add_option("--eps", ball_eps, "ball radius")->required();
  ball_cmd->add_option("--probe", ball_probes, "membership probe (repeatable)");

  // topology
  CommonOptions topo_opts;
  auto* topo_cmd = app.add_subcommand("topology", "enumerate the ball topology");
  add_space_options(topo_cmd, topo_opts);

  // separation
  CommonOptions sep_opts;
  auto* sep_cmd = app.add_subcommand("separation", "T0/T1/T2 classification");
  add_space_options(sep_cmd, sep_opts);

  // seq
  auto* seq_cmd = app.add_subcommand("seq", "sequence diagnostics");
  seq_cmd->require_subcommand(1);
  CommonOptions seq_opts;
  std::string seq_text, seq_target;
  int seq_horizon = 10000;
  double seq_tol = 1e-6;
  bool seq_equiv = false;
  auto* seq_profile = seq_cmd->add_subcommand("profile", "convergence and Cauchy profile");
  add_space_options(seq_profile, seq_opts);
  seq_profile->add_option("--seq", seq_text, "const:<p> | recip | alt:<p>:<q> | orbit:<map>:<x0>")
      ->required();
  seq_profile->add_option("--target", seq_target, "candidate limit point");
  seq_profile->add_option("--horizon", seq_horizon, "sequence horizon N");
  seq_profile->add_option("--seq-tol", seq_tol, "convergence tolerance");
  seq_profile->add_flag("--equivalence", seq_equiv,
                        "compare Cauchy verdicts in the space and its symmetrization");

  // fix
  auto* fix_cmd = app.add_subcommand("fix", "fixed-point solvers");
  fix_cmd->require_subcommand(1);
  CommonOptions fix_opts;
  std::string fix_theorem, fix_map, fix_x0, fix_phi, fix_psi;
  std::vector<std::string> fix_map_params;
  std::optional<double> fix_lambda, fix_K, fix_a1, fix_a2, fix_a3, fix_a4;
  double fix_tol = 1e-10;
  int fix_max_iter = 100000;
  auto* fix_solve = fix_cmd->add_subcommand("solve", "run a certified solver");
  add_space_options(fix_solve, fix_opts);
  fix_solve->add_option("--theorem", fix_theorem, "phi|lambda|phi-psi|expansive|expansive-k")
      ->required();
  fix_solve->add_option("--map", fix_map, "catalog mapping id")->required();
  fix_solve->add_option("--map-param", fix_map_params,
                        "mapping parameter key=value (repeatable)");
  fix_solve->add_option("--x0", fix_x0, "starting point")->required();
  fix_solve->add_option("--phi", fix_phi, "scalar function (linear:<c> | quad-capped)");
  fix_solve->add_option("--psi", fix_psi, "scalar function (linear:<c> | quad-capped)");
  fix_solve->add_option("--lambda", fix_lambda, "contraction factor");
  fix_solve->add_option("--K", fix_K, "expansion factor");
  fix_solve->add_option("--a1", fix_a1, "expansive coefficient a1");
  fix_solve->add_option("--a2", fix_a2, "expansive coefficient a2");
  fix_solve->add_option("--a3", fix_a3, "expansive coefficient a3");
  fix_solve->add_option("--a4", fix_a4, "expansive coefficient a4");
  fix_solve->add_option("--fix-tol", fix_tol, "displacement stopping tolerance");
  fix_solve->add_option("--max-iter", fix_max_iter, "iteration cap");

  // reproduce
  std::string repro_id;
  bool repro_all = false;
  auto* repro_cmd = app.add_subcommand("reproduce", "replay the worked examples");
  repro_cmd->add_option("id", repro_id, "registry id");
  repro_cmd->add_flag("--all", repro_all, "run the whole registry");

  std::string command_line = "qpbl";
  for (const auto& a : args) command_line += " " + a;

  const auto finish = [&](const std::string& status, json payload, int code) {
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();
    json envelope;
    envelope["schema_version"] = 1;
    envelope["command"] = command_line;
    envelope["status"] = status;
    envelope["payload"] = std::move(payload);
    envelope["elapsed_ms"] = static_cast<std::int64_t>(elapsed);
    return RunResult{code, std::move(envelope)};
  };

  try {
    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    app.parse(argv_rev);

    Outcome out;
    if (*catalog_list)
      out = cmd_catalog("");
    else if (*catalog_show)
      out = cmd_catalog(show_id);
    else if (*verify_cmd)
      out = cmd_verify(verify_opts, verify_s);
    else if (*mins_cmd)
      out = cmd_min_s(mins_opts);
    else if (*classify_cmd)
      out = cmd_classify(classify_opts);
    else if (*ball_cmd)
      out = cmd_ball(ball_opts, ball_center, ball_eps, ball_probes);
    else if (*topo_cmd)
      out = cmd_topology(topo_opts);
    else if (*sep_cmd)
      out = cmd_separation(sep_opts);
    else if (*seq_profile)
      out = cmd_seq_profile(seq_opts, seq_text, seq_target, seq_horizon, seq_tol, seq_equiv);
    else if (*fix_solve)
      out = cmd_fix_solve(fix_opts, fix_theorem, fix_map, fix_map_params, fix_x0, fix_phi,
                          fix_psi, fix_lambda, fix_K, fix_a1, fix_a2, fix_a3, fix_a4,
                          fix_tol, fix_max_iter);
    else if (*repro_cmd) {
      if (!repro_all && repro_id.empty())
        throw UsageError("reproduce needs an id or --all");
      out = cmd_reproduce(repro_id, repro_all);
    } else {
      throw UsageError("no subcommand selected");
    }

    const int code = out.status == "fail" ? 1 : 0;
    return finish(out.status, std::move(out.payload), code);
  } catch (const CLI::ParseError& e) {
    json payload;
    payload["error"] = {{"code", "usage_error"}, {"message", e.what()}};
    return finish("fail", std::move(payload), 2);
  } catch (const UsageError& e) {
    json payload;
    payload["error"] = {{"code", e.code()}, {"message", e.what()}};
    return finish("fail", std::move(payload), 2);
  } catch (const HypothesisFailed& e) {
    json payload;
    payload["error"] = {{"code", e.code()}, {"message", e.what()}, {"check", e.check()}};
    return finish("fail", std::move(payload), 1);
  } catch (const Error& e) {
    json payload;
    payload["error"] = {{"code", e.code()}, {"message", e.what()}};
    return finish("fail", std::move(payload), 1);
  }
}

std::string render_text(const nlohmann::json& envelope) {
  std::ostringstream os;
  os << "command: " << envelope.value("command", "") << "\n";
  os << "status:  " << envelope.value("status", "") << "\n";
  os << "elapsed: " << envelope.value("elapsed_ms", 0) << " ms\n";
  os << "payload:\n" << envelope.at("payload").dump(2) << "\n";
  return os.str();
}

}  // namespace qpbl::cli
