// Command-line front end: every subcommand builds a JobRequest and hands it
// to the shared dispatcher, so batch files and flags exercise identical
// code paths.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wreathlab/error.hpp"
#include "wreathlab/jobs.hpp"
#include "wreathlab/oracle/group.hpp"

namespace {

using nlohmann::json;

int emit(const wreathlab::JobResult& r, const std::string& output) {
  if (output == "json") {
    std::cout << r.report.dump(2) << "\n";
  } else {
    std::cout << r.text;
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact nilpotency-class computations for wreath products of finite p-groups"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output = "text";
  std::uint64_t size_limit = wreathlab::oracle::kDefaultSizeLimit;
  std::uint64_t sweep = 50;
  app.add_option("--output", output, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->envname("WREATHLAB_OUTPUT");
  app.add_option("--size-limit", size_limit, "max elements an explicit group may have")
      ->envname("WREATHLAB_SIZE_LIMIT");
  app.add_option("--sweep", sweep, "crossover verification width")->envname("WREATHLAB_SWEEP");

  std::string group_spec, b_spec, profile, expr_a, expr_b, batch_path;
  std::string l_str, z_str, t_str;
  unsigned c = 0, alpha = 0, v = 0;
  std::uint64_t p = 0;

  CLI::App* kp = app.add_subcommand("kp", "closed-form K_p-series of a finite abelian p-group");
  kp->add_option("group", group_spec, "group spec, e.g. \"p=5: 3,1,1\"")->required();

  CLI::App* shield = app.add_subcommand("shield", "class of A Wr B from the profile of A and B");
  shield->add_option("--profile", profile, "profile \"p=2 c=2 s=2,1\", or D4 / Q8")->required();
  shield->add_option("b", b_spec, "finite abelian group spec for B")->required();

  CLI::App* lemma1 = app.add_subcommand("lemma1", "closed-form class over the Z(l,t) family");
  lemma1->add_option("--c", c)->required();
  lemma1->add_option("--alpha", alpha)->required();
  lemma1->add_option("--p", p)->required();
  lemma1->add_option("--v", v)->required();
  lemma1->add_option("--l", l_str)->required();
  lemma1->add_option("--t", t_str)->required();

  CLI::App* lemma2 = app.add_subcommand("lemma2", "closed-form class over the Y(z,t) family");
  lemma2->add_option("--c", c)->required();
  lemma2->add_option("--alpha", alpha)->required();
  lemma2->add_option("--p", p)->required();
  lemma2->add_option("--v", v)->required();
  lemma2->add_option("--z", z_str)->required();
  lemma2->add_option("--t", t_str)->required();

  CLI::App* thresholds =
      app.add_subcommand("thresholds", "stabilization thresholds t0 (Z family) and t1 (Y family)");
  thresholds->add_option("--profile", profile)->required();
  thresholds->add_option("--v", v)->required();
  CLI::Option* thr_l = thresholds->add_option("--l", l_str, "compute t0 for this l");
  CLI::Option* thr_z = thresholds->add_option("--z", z_str, "compute t1 for this z");

  CLI::App* crossover = app.add_subcommand("crossover", "crossover point t* of the two families");
  crossover->add_option("--profile", profile)->required();
  crossover->add_option("--v", v)->required();
  crossover->add_option("--l", l_str)->required();
  crossover->add_option("--z", z_str)->required();

  CLI::App* decide =
      app.add_subcommand("decide", "does A Wr B generate the product variety var(A)var(B)?");
  decide->add_option("--profile", profile)->required();
  decide->add_option("b", b_spec, "abelian group spec for B; multiplicities may be inf")->required();

  CLI::App* oracle_class =
      app.add_subcommand("oracle-class", "brute-force lower central series of an explicit group");
  oracle_class->add_option("group", expr_a, "group expression, e.g. \"wr(C_2, C_4)\"")->required();

  CLI::App* oracle_verify =
      app.add_subcommand("oracle-verify", "brute-force class of A wr B vs the class formula");
  oracle_verify->add_option("a", expr_a, "group expression for A")->required();
  oracle_verify->add_option("b", expr_b, "group expression for B (abelian)")->required();
  CLI::Option* ver_p = oracle_verify->add_option("--p", p, "prime (inferred when omitted)");

  CLI::App* kp_def =
      app.add_subcommand("kp-definitional", "definitional K_p-series of an explicit p-group");
  kp_def->add_option("group", expr_a, "group expression")->required();
  CLI::Option* def_p = kp_def->add_option("--p", p, "prime (inferred when omitted)");

  CLI::App* batch = app.add_subcommand("batch", "run a JSON array of jobs from a file");
  batch->add_option("file", batch_path, "path to the JSON job file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  wreathlab::JobRequest req;
  req.format = output;
  json& args = req.args;
  args = json::object();

  if (kp->parsed()) {
    req.command = "kp";
    args["group"] = group_spec;
  } else if (shield->parsed()) {
    req.command = "shield";
    args["profile"] = profile;
    args["b"] = b_spec;
  } else if (lemma1->parsed() || lemma2->parsed()) {
    req.command = lemma1->parsed() ? "lemma1" : "lemma2";
    args["c"] = c;
    args["alpha"] = alpha;
    args["p"] = p;
    args["v"] = v;
    if (lemma1->parsed()) {
      args["l"] = l_str;
    } else {
      args["z"] = z_str;
    }
    args["t"] = t_str;
  } else if (thresholds->parsed()) {
    req.command = "thresholds";
    args["profile"] = profile;
    args["v"] = v;
    if (thr_l->count()) args["l"] = l_str;
    if (thr_z->count()) args["z"] = z_str;
  } else if (crossover->parsed()) {
    req.command = "crossover";
    args["profile"] = profile;
    args["v"] = v;
    args["l"] = l_str;
    args["z"] = z_str;
    args["sweep"] = sweep;
  } else if (decide->parsed()) {
    req.command = "decide";
    args["profile"] = profile;
    args["b"] = b_spec;
  } else if (oracle_class->parsed()) {
    req.command = "oracle-class";
    args["group"] = expr_a;
    args["size_limit"] = size_limit;
  } else if (oracle_verify->parsed()) {
    req.command = "oracle-verify";
    args["a"] = expr_a;
    args["b"] = expr_b;
    if (ver_p->count()) args["p"] = p;
    args["size_limit"] = size_limit;
  } else if (kp_def->parsed()) {
    req.command = "kp-definitional";
    args["group"] = expr_a;
    if (def_p->count()) args["p"] = p;
    args["size_limit"] = size_limit;
  } else if (batch->parsed()) {
    try {
      return emit(wreathlab::run_batch_file(batch_path, output), output);
    } catch (const wreathlab::ParseError& e) {
      std::cerr << "error (parse): " << e.what() << "\n";
      return 2;
    }
  }

  return emit(wreathlab::run_job(req), output);
}
