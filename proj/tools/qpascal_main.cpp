#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpascal/dim6.hpp"
#include "qpascal/expr_parser.hpp"
#include "qpascal/report.hpp"

using namespace qpascal;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitReducible = 10;
constexpr int kExitUndecidable = 20;
constexpr int kExitInput = 2;

struct JobSpec {
  std::string command;
  bool dim6 = false;
  bool symbolic = false;
  bool sequential = false;
  bool identity = false;
  std::optional<unsigned> n;
  std::string q;
  std::string lambdas;
  std::string lambda1;
  std::string c;
  unsigned long conductor = 0;
  std::string format = "json";
  std::string out;
  bool raw = false;
};

struct Outcome {
  Json result;
  int exit_code = kExitOk;
};

FieldElem parse_elem(const std::string& text, const JobSpec& job) {
  FieldElem e = FieldElem::parse(text);
  if (job.conductor > 1) {
    if (job.conductor % e.conductor() != 0)
      throw Error(ErrorCode::ConductorMismatch, "'" + text + "' does not live in Q(z(" +
                                                    std::to_string(job.conductor) + "))");
    e = e.embedded(job.conductor);
  }
  return e;
}

std::vector<FieldElem> parse_list(const std::string& text, const JobSpec& job) {
  std::vector<FieldElem> out;
  for (const auto& item : split_top_level(text)) out.push_back(parse_elem(item, job));
  return out;
}

FieldElem need_lambda1(const JobSpec& job) {
  if (job.lambda1.empty()) throw Error(ErrorCode::InvalidArgument, "--lambda1 is required");
  return parse_elem(job.lambda1, job);
}

RepParams general_params(const JobSpec& job) {
  if (!job.n) throw Error(ErrorCode::InvalidArgument, "--n is required unless --dim6 is given");
  if (job.q.empty()) throw Error(ErrorCode::InvalidArgument, "--q is required");
  RepParams p;
  p.n = *job.n;
  p.q = parse_elem(job.q, job);
  p.lambdas = job.lambdas.empty() ? std::vector<FieldElem>(p.n + 1, FieldElem(1)) : parse_list(job.lambdas, job);
  if (p.lambdas.size() != p.n + 1)
    throw Error(ErrorCode::ShapeMismatch, "--lambdas needs " + std::to_string(p.n + 1) + " entries");
  p.c = job.c.empty() ? p.lambdas.front() * p.lambdas.back() : parse_elem(job.c, job);
  return p;
}

RepParams job_params(const JobSpec& job) {
  return job.dim6 ? dim6_params(need_lambda1(job)) : general_params(job);
}

Outcome cmd_build(const JobSpec& job) {
  if (job.dim6) {
    const FieldElem l = need_lambda1(job);
    const Dim6Rep rep = build_dim6(l);
    Json r{{"lambda1", to_json(l, job.raw)},
           {"q", to_json(dim6_q(), job.raw)},
           {"admissible", rep.admissible},
           {"sigma1", to_json(rep.rho1, job.raw)},
           {"sigma2", to_json(rep.rho2, job.raw)},
           {"braid_relation", braid_relation_holds(rep.rho1, rep.rho2)}};
    return {r, kExitOk};
  }
  return {to_json(build_rep(general_params(job)), job.raw), kExitOk};
}

Json check(const std::string& name, bool ok) { return Json{{"check", name}, {"passed", ok}}; }

Outcome cmd_verify(const JobSpec& job) {
  const RepParams p = job_params(job);
  Json checks = Json::array();
  bool all = true;
  auto add = [&](const std::string& name, bool ok) {
    checks.push_back(check(name, ok));
    all = all && ok;
  };
  bool lambda_ok = true;
  for (unsigned i = 0; i <= p.n; ++i) lambda_ok = lambda_ok && p.lambdas[i] * p.lambdas[p.n - i] == p.c;
  add("lambda_condition", lambda_ok);
  const BraidRep rep = build_rep(p);
  add("braid_relation", braid_relation_holds(rep.sigma1, rep.sigma2));
  add("sigma1_upper_triangular", rep.sigma1.is_upper_triangular());
  add("sigma2_lower_triangular", rep.sigma2.is_lower_triangular());
  add("sigma1_invertible", !determinant(rep.sigma1).is_zero());
  add("sigma2_invertible", !determinant(rep.sigma2).is_zero());
  if (job.dim6) {
    const FieldElem l = need_lambda1(job);
    const Dim6Rep d6 = build_dim6(l);
    add("matches_display", d6.rho1 == dim6_sigma1_display(l) && d6.rho2 == dim6_sigma2_display(l));
    if (d6.admissible) {
      const auto u = eigenvectors_u(l);
      const auto mu = dim6_eigenvalues(l);
      bool eig = true;
      for (std::size_t i = 0; i < 6; ++i) eig = eig && d6.rho1 * u[i] == mu[i] * u[i];
      add("eigenvectors", eig);
      const DiagonalizedPair pair = diagonalize(d6);
      add("diagonalization", pair.X == ExactMatrix::diagonal(mu));
    }
  }
  return {Json{{"params", to_json(p, job.raw)}, {"checks", checks}, {"all_passed", all}},
          all ? kExitOk : 1};
}

int verdict_exit(const Verdict& v) {
  switch (v.status) {
    case VerdictStatus::Irreducible: return kExitOk;
    case VerdictStatus::Reducible: return kExitReducible;
    case VerdictStatus::PatternUndecidable: return kExitUndecidable;
  }
  return 1;
}

Outcome cmd_decide(const JobSpec& job) {
  EngineOptions opts;
  opts.parallel = !job.sequential;
  if (job.symbolic) {
    const Theorem36Result r = theorem36_conditions(opts.parallel);
    return {to_json(r, job.raw), kExitOk};
  }
  if (!job.dim6 && job.n) {
    const BraidRep rep = build_rep(general_params(job));
    const SmallDimVerdict v = small_dim_irreducibility(rep.sigma1, rep.sigma2);
    Json r{{"status", to_string(v.reducible ? VerdictStatus::Reducible : VerdictStatus::Irreducible)}, {"via_transpose", v.via_transpose}, {"reason", v.reason}};
    return {r, v.reducible ? kExitReducible : kExitOk};
  }
  const FieldElem l = need_lambda1(job);
  const Verdict v = decide_irreducible(l, opts);
  Json r{{"lambda1", to_json(l, job.raw)}, {"verdict", to_json(v, job.raw)}};
  return {r, verdict_exit(v)};
}

Outcome cmd_restrict(const JobSpec& job) {
  EngineOptions opts;
  opts.parallel = !job.sequential;
  const Theorem41Result r = verify_theorem41(need_lambda1(job), opts);
  return {to_json(r, job.raw), verdict_exit(r.verdict)};
}

Outcome cmd_criterion(const JobSpec& job) {
  if (!job.n) throw Error(ErrorCode::InvalidArgument, "--n is required");
  const unsigned n = *job.n;
  if (job.identity) {
    if (job.q.empty()) throw Error(ErrorCode::InvalidArgument, "--q is required");
    const FieldElem q = parse_elem(job.q, job);
    const QContext ctx(q);
    const bool pred = identity_lambda_irreducible(n, ctx);
    Json r{{"criterion", "identity_lambda"},
           {"n", n},
           {"q", to_json(q, job.raw)},
           {"q_integer", to_json(q_int(n, ctx), job.raw)},
           {"irreducible", pred}};
    if (n <= 2) {
      RepParams p{n, q, std::vector<FieldElem>(n + 1, FieldElem(1)), FieldElem(1)};
      const BraidRep rep = build_rep(p);
      const SmallDimVerdict v = small_dim_irreducibility(rep.sigma1, rep.sigma2);
      r["engine_irreducible"] = !v.reducible;
      r["engine_reason"] = v.reason;
      r["agrees"] = v.reducible != pred;
    }
    return {r, pred ? kExitOk : kExitReducible};
  }
  if (job.lambdas.empty()) throw Error(ErrorCode::InvalidArgument, "--lambdas or --identity is required");
  const std::vector<FieldElem> lambdas = parse_list(job.lambdas, job);
  const OperatorCriterion c = operator_irred_criterion_q1(n, lambdas);
  Json r = to_json(c, job.raw);
  r["criterion"] = "operator_q1";
  return {r, c.irreducible ? kExitOk : kExitReducible};
}

Json job_echo(const JobSpec& job) {
  Json j{{"command", job.command}};
  if (job.dim6) j["dim6"] = true;
  if (job.symbolic) j["symbolic"] = true;
  if (job.identity) j["identity"] = true;
  if (job.n) j["n"] = *job.n;
  if (!job.q.empty()) j["q"] = job.q;
  if (!job.lambdas.empty()) j["lambdas"] = job.lambdas;
  if (!job.lambda1.empty()) j["lambda1"] = job.lambda1;
  if (!job.c.empty()) j["c"] = job.c;
  if (job.conductor) j["conductor"] = job.conductor;
  if (job.raw) j["raw_coeffs"] = true;
  if (job.format != "json") j["format"] = job.format;
  return j;
}

Outcome dispatch(const JobSpec& job) {
  if (job.command == "build") return cmd_build(job);
  if (job.command == "verify") return cmd_verify(job);
  if (job.command == "decide") return cmd_decide(job);
  if (job.command == "restrict") return cmd_restrict(job);
  return cmd_criterion(job);
}

int emit(const JobSpec& job, const Json& report) {
  const std::string text = job.format == "text" ? render_text(report) : report.dump(2) + "\n";
  if (job.out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(job.out);
  if (!f) {
    std::cerr << "error: cannot write " << job.out << "\n";
    return 1;
  }
  f << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-Pascal braid representations of B3"};
  app.require_subcommand(1);
  JobSpec job;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--conductor", job.conductor, "Embed all inputs into Q(z(N))")->check(CLI::PositiveNumber);
    sub->add_option("--out", job.out, "Write the report to FILE");
    sub->add_option("--format", job.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--raw-coeffs", job.raw, "Add coefficient vectors to every field element");
  };
  auto rep_opts = [&](CLI::App* sub) {
    sub->add_flag("--dim6", job.dim6, "Use the 6-dimensional family at q = z(3)");
    sub->add_option("--lambda1", job.lambda1, "lambda_1 for the 6-dimensional family");
    sub->add_option("--n", job.n, "Dimension minus one");
    sub->add_option("--q", job.q, "Parameter q");
    sub->add_option("--lambdas", job.lambdas, "Comma separated lambda_0,...,lambda_n");
    sub->add_option("--c", job.c, "Product constant (default lambda_0*lambda_n)");
  };

  CLI::App* build = app.add_subcommand("build", "Build both generator images");
  rep_opts(build);
  common(build);
  CLI::App* verify = app.add_subcommand("verify", "Check the braid relation and structural properties");
  rep_opts(verify);
  common(verify);
  CLI::App* decide = app.add_subcommand("decide", "Decide irreducibility");
  rep_opts(decide);
  decide->add_flag("--symbolic", job.symbolic, "Sweep lambda_1 symbolically");
  decide->add_flag("--sequential", job.sequential, "Disable parallel pattern checks");
  common(decide);
  CLI::App* restrict_cmd = app.add_subcommand("restrict", "Restrict to the 4-dimensional invariant subspace");
  restrict_cmd->add_option("--lambda1", job.lambda1, "lambda_1 with lambda_1^3 = q^2")->required();
  restrict_cmd->add_flag("--sequential", job.sequential, "Disable parallel pattern checks");
  common(restrict_cmd);
  CLI::App* criterion = app.add_subcommand("criterion", "Evaluate the irreducibility predicates");
  criterion->add_option("--n", job.n, "Dimension minus one")->required();
  criterion->add_option("--q", job.q, "Parameter q (with --identity)");
  criterion->add_flag("--identity", job.identity, "Lambda = I predicate: (n)_q != 0");
  criterion->add_option("--lambdas", job.lambdas, "lambda_0,...,lambda_n for the q = 1 operator criterion");
  common(criterion);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }
  job.command = app.get_subcommands().front()->get_name();

  Json report{{"schema_version", kSchemaVersion}, {"engine_version", std::string(kEngineVersion)}, {"job", job_echo(job)}};
  const auto t0 = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    Outcome o = dispatch(job);
    report["status"] = "ok";
    report["result"] = std::move(o.result);
    code = o.exit_code;
  } catch (const Error& e) {
    code = exit_code_for(e.code());
    Json err{{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
    if (auto* pe = dynamic_cast<const ParseError*>(&e)) err["position"] = pe->position();
    report["status"] = "error";
    report["error"] = err;
    std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
  } catch (const std::exception& e) {
    code = 1;
    report["status"] = "error";
    report["error"] = Json{{"code", "Internal"}, {"message", e.what()}};
    std::cerr << "error: " << e.what() << "\n";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report["timing"] = Json{{"seconds", secs}};
  if (emit(job, report) != 0) return 1;
  return code;
}
