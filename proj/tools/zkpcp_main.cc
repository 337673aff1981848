// zkpcp: command-line front end. Every record is one JSON object per line
// on stdout. Exit status: 0 when every check passes, 1 when a proof is
// rejected or an audit finds a difference, 2 on bad input.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "zkpcp/antisym.h"
#include "zkpcp/audit.h"
#include "zkpcp/cnf.h"
#include "zkpcp/encoding.h"
#include "zkpcp/pcp.h"
#include "zkpcp/pcp_simulator.h"
#include "zkpcp/proof_io.h"
#include "zkpcp/rm_locator.h"
#include "zkpcp/script.h"
#include "zkpcp/sigma_rm.h"

namespace {

using nlohmann::json;
using namespace zkpcp;

constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 24;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<std::uint64_t> field;
  std::size_t m = 2;
  std::size_t degree = 3;
  std::string h_set = "0,1";
  std::uint64_t seed = 1;
  std::size_t trials = 1;
  std::string cnf;
  std::optional<std::uint64_t> count;
  std::string proof;
  std::string script;
  std::string out;
  std::uint64_t cap = kDefaultCap;
  std::string code = "rm";
  std::string points;
  std::size_t max_queries = 4;
  bool omit_mask_row = false;
  bool log = false;
};

void emit(const json& j) { std::cout << j.dump() << '\n'; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json fe_list(std::span<const Fe> v) {
  json out = json::array();
  for (Fe x : v) out.push_back(x.value());
  return out;
}

json point_list(std::span<const Point> pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(to_string(p));
  return out;
}

json matrix_rows(const Matrix& z) {
  json out = json::array();
  for (std::size_t r = 0; r < z.rows(); ++r) out.push_back(fe_list(z.row(r)));
  return out;
}

std::vector<Fe> parse_h(const std::string& text, const PrimeField& f) {
  const Point p = parse_point(text, f);
  return p.coords();
}

SharpSat load_instance(const Options& o) {
  if (o.cnf.empty()) throw InputError("--cnf is required");
  if (!o.count) throw InputError("--count is required");
  std::ifstream in(o.cnf);
  if (!in) throw InputError("cannot open " + o.cnf);
  return make_sharp_sat(parse_dimacs(in), *o.count, o.field);
}

json params_record(const PcpParams& p) {
  return {{"p", p.field.modulus()},
          {"m", p.m},
          {"d", p.d},
          {"h", fe_list(p.h)},
          {"gamma", p.gamma.value()},
          {"soundness_margin", p.meets_soundness_margin()}};
}

int cmd_prove(const Options& o) {
  if (o.out.empty()) throw InputError("--out is required");
  const SharpSat inst = load_instance(o);
  Rng rng(o.seed);
  const ProofPolys polys = prove_polys(inst.params, inst.f, rng);
  const ProofTables tables = materialize(inst.params, polys, o.cap);
  std::ofstream out(o.out, std::ios::binary);
  if (!out) throw InputError("cannot write " + o.out);
  write_proof(out, inst.params, tables);
  json rec = {{"record", "prove"}, {"out", o.out}};
  rec["params"] = params_record(inst.params);
  rec["entries"] = tables.sigma_table.size() + tables.q_table.size() * (inst.params.m + 1);
  emit(rec);
  return 0;
}

int cmd_verify(const Options& o) {
  if (o.proof.empty()) throw InputError("--proof is required");
  const SharpSat inst = load_instance(o);
  std::ifstream in(o.proof, std::ios::binary);
  if (!in) throw InputError("cannot open " + o.proof);
  LoadedProof loaded = read_proof(in, o.cap);
  const PcpParams& want = inst.params;
  if (loaded.params.field.modulus() != want.field.modulus() || loaded.params.m != want.m ||
      loaded.params.d != want.d || loaded.params.h != want.h)
    throw InputError("proof parameters do not match the instance");
  if (!want.meets_soundness_margin())
    emit({{"record", "warning"}, {"message", "m d >= p / 10; soundness is not guaranteed"}});
  std::size_t accepted = 0;
  const bool with_log = o.log || o.trials == 1;
  for (std::size_t trial = 0; trial < o.trials; ++trial) {
    Rng rng(o.seed, trial);
    const VerifierResult res =
        verify(want, inst.f_eval, loaded.tables, sample_coins(want, rng));
    accepted += res.accept;
    json rec = {{"record", "verify"},
                {"trial", trial},
                {"accept", res.accept},
                {"reason", res.reason},
                {"queries", res.log.size()}};
    if (with_log) {
      json log = json::array();
      for (const auto& q : res.log)
        log.push_back({oracle_name(q.oracle, q.index), to_string(q.point), q.answer.value()});
      rec["log"] = log;
    }
    emit(rec);
  }
  emit({{"record", "summary"}, {"trials", o.trials}, {"accepted", accepted},
        {"rejected", o.trials - accepted}});
  return accepted == o.trials ? 0 : 1;
}

int cmd_simulate(const Options& o) {
  if (o.script.empty()) throw InputError("--script is required");
  const SharpSat inst = load_instance(o);
  const ScriptBlock script = parse_script(read_file(o.script), inst.params);
  SimulatedProof sim(inst.params, inst.f_eval, o.seed, !o.omit_mask_row);
  const auto run = run_script(script, [&](const ScriptQuery& q) {
    return sim.read(q.oracle, q.index, q.point);
  });
  json view = json::array();
  for (std::size_t k = 0; k < run.size(); ++k) {
    const auto& [q, a] = run[k];
    json rec = {{"record", "answer"},
                {"step", k},
                {"oracle", oracle_name(q.oracle, q.index)},
                {"point", to_string(q.point)},
                {"answer", a.value()}};
    if (q.oracle == Oracle::kSigma && q.point.length() == inst.params.m) {
      const Fe fx = inst.f_eval(q.point);
      rec["f"] = fx.value();
      rec["mask"] = inst.params.field.sub(a, fx).value();
    }
    emit(rec);
    view.push_back(rec);
  }
  if (!o.out.empty()) {
    std::ofstream out(o.out);
    if (!out) throw InputError("cannot write " + o.out);
    out << json{{"seed", o.seed}, {"params", params_record(inst.params)}, {"view", view}}.dump(2)
        << '\n';
  }
  return 0;
}

int cmd_audit(const Options& o) {
  PcpParams params;
  FieldFunction f_eval;
  if (!o.cnf.empty()) {
    const SharpSat inst = load_instance(o);
    params = inst.params;
    f_eval = inst.f_eval;
  } else {
    const PrimeField f(o.field.value_or(3));
    params = PcpParams::make(f.modulus(), o.m, o.degree, parse_h(o.h_set, f), Fe(0));
    params.validate_for_prover();
    Rng rng(o.seed);
    const MultiPoly poly = random_poly(f, DegreeVector(o.m, o.degree), rng);
    for (const auto& x : params.cube().points())
      params.gamma = f.add(params.gamma, poly.eval(f, x));
    f_eval = [f, poly](const Point& x) { return poly.eval(f, x); };
  }
  std::vector<ScriptBlock> scripts;
  if (!o.script.empty()) {
    scripts.push_back(parse_script(read_file(o.script), params));
  } else {
    Rng rng(o.seed, 1);
    for (std::size_t k = 0; k < o.trials; ++k)
      scripts.push_back(random_script(params, rng, o.max_queries));
  }
  std::size_t differing = 0;
  for (std::size_t k = 0; k < scripts.size(); ++k) {
    const AuditReport rep = audit_script(params, f_eval, scripts[k], !o.omit_mask_row, o.cap);
    differing += !rep.identical();
    json rec = {{"record", "audit"},
                {"script", k},
                {"depth", rep.depth},
                {"paths", rep.paths},
                {"support_equal", rep.support_equal},
                {"tv", std::to_string(rep.tv_numerator) + "/" +
                           std::to_string(rep.tv_denominator)},
                {"identical", rep.identical()}};
    if (!rep.identical()) {
      json w = json::array();
      for (std::size_t i = 0; i < rep.witness_queries.size(); ++i) {
        const auto& q = rep.witness_queries[i];
        w.push_back({oracle_name(q.oracle, q.index), to_string(q.point),
                     rep.witness_answers[i].value()});
      }
      rec["witness"] = w;
    }
    emit(rec);
  }
  emit({{"record", "summary"}, {"params", params_record(params)},
        {"scripts", scripts.size()}, {"differing", differing},
        {"mask_row", !o.omit_mask_row}});
  return differing == 0 ? 0 : 1;
}

int cmd_locate(const Options& o) {
  const PrimeField f(o.field.value_or(5));
  const ProductSet cube = ProductSet::power(parse_h(o.h_set, f), o.m);
  const auto pts = parse_points(o.points, f);
  const CodeView view{f, DegreeVector(o.m, o.degree), std::nullopt};
  LocatorOutput out;
  if (o.code == "rm") {
    out = rm_locate(view, cube, pts);
  } else if (o.code == "sigma-rm") {
    out = sigma_rm_locate(view, cube, pts);
  } else if (o.code == "antisym") {
    out = antisym_locate(f, cube, pts);
  } else if (o.code == "enc-pcp") {
    out = make_enc_pcp_locator(f, o.m, o.degree, cube.factor(0))->locate(pts);
  } else {
    throw InputError("unknown code '" + o.code + "' (rm, sigma-rm, antisym, enc-pcp)");
  }
  emit({{"record", "locate"},
        {"code", o.code},
        {"r", point_list(out.r)},
        {"queries", point_list(out.queries)},
        {"z", matrix_rows(out.z)}});
  return 0;
}

int cmd_detect(const Options& o) {
  const PrimeField f(o.field.value_or(5));
  const auto pts = parse_points(o.points, f);
  const ConstraintBasis cb = cd_rm(CodeView{f, DegreeVector(o.m, o.degree), std::nullopt}, pts);
  emit({{"record", "detect"}, {"domain", point_list(cb.domain)}, {"rows", matrix_rows(cb.z)}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-knowledge PCP toolkit over prime fields"};
  app.require_subcommand(1);
  Options o;
  std::uint64_t field = 0, count = 0;
  std::size_t audit_trials = 20;
  std::uint64_t audit_cap = 2'000'000;

  auto add_field = [&](CLI::App* c) { c->add_option("--field", field, "prime modulus p"); };
  auto add_instance = [&](CLI::App* c) {
    c->add_option("--cnf", o.cnf, "DIMACS CNF file");
    c->add_option("--count", count, "claimed number of models");
    add_field(c);
  };
  auto add_shape = [&](CLI::App* c) {
    add_field(c);
    c->add_option("--m", o.m, "number of variables");
    c->add_option("--degree", o.degree, "individual degree bound");
    c->add_option("--h-set", o.h_set, "cube factor, e.g. 0,1");
  };

  auto* prove = app.add_subcommand("prove", "write an honest proof for a #SAT claim");
  add_instance(prove);
  prove->add_option("--seed", o.seed);
  prove->add_option("--out", o.out, "proof file to write");
  prove->add_option("--cap", o.cap, "maximum number of table entries");

  auto* verify_cmd = app.add_subcommand("verify", "check a proof file against a #SAT claim");
  add_instance(verify_cmd);
  verify_cmd->add_option("--proof", o.proof, "proof file");
  verify_cmd->add_option("--seed", o.seed);
  verify_cmd->add_option("--trials", o.trials, "independent verifier runs");
  verify_cmd->add_option("--cap", o.cap, "maximum number of table entries");
  verify_cmd->add_flag("--log", o.log, "print the query log for every trial");

  auto* simulate = app.add_subcommand("simulate", "answer a query script with the simulator");
  add_instance(simulate);
  simulate->add_option("--script", o.script, "JSON query script");
  simulate->add_option("--seed", o.seed);
  simulate->add_option("--out", o.out, "write the view as JSON");
  simulate->add_flag("--omit-mask-row", o.omit_mask_row, "use the broken test simulator");

  auto* audit = app.add_subcommand("audit-zk", "exact real-vs-simulated law comparison");
  add_shape(audit);
  audit->add_option("--cnf", o.cnf, "use a #SAT instance instead of a random F");
  audit->add_option("--count", count);
  audit->add_option("--seed", o.seed);
  audit->add_option("--trials", audit_trials, "number of random scripts");
  audit->add_option("--max-queries", o.max_queries, "queries per random script");
  audit->add_option("--script", o.script, "audit this JSON script only");
  audit->add_option("--cap", audit_cap, "maximum number of answer paths");
  audit->add_flag("--omit-mask-row", o.omit_mask_row, "audit the broken test simulator");

  auto* locate = app.add_subcommand("locate", "run a constraint locator");
  add_shape(locate);
  locate->add_option("--code", o.code, "rm, sigma-rm, antisym or enc-pcp");
  locate->add_option("--points", o.points, "query points, e.g. (0,1);(2,2);()")->required();

  auto* detect = app.add_subcommand("detect", "constraint basis of RM on a point set");
  add_shape(detect);
  detect->add_option("--points", o.points, "points, e.g. 0;1;2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  auto given = [](CLI::App* c, const std::string& name) {
    const auto* opt = c->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  for (auto* c : app.get_subcommands()) {
    if (given(c, "--field")) o.field = field;
    if (given(c, "--count")) o.count = count;
    if (c == audit) {
      o.trials = audit_trials;
      o.cap = audit_cap;
    }
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "prove") return cmd_prove(o);
    if (name == "verify") return cmd_verify(o);
    if (name == "simulate") return cmd_simulate(o);
    if (name == "audit-zk") return cmd_audit(o);
    if (name == "locate") return cmd_locate(o);
    if (name == "detect") return cmd_detect(o);
  } catch (const std::exception& e) {
    std::cerr << json{{"record", "error"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  }
  return 2;
}
