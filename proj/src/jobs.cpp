#include "wreathlab/jobs.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "wreathlab/error.hpp"
#include "wreathlab/kp.hpp"
#include "wreathlab/oracle/series.hpp"
#include "wreathlab/oracle/verify.hpp"
#include "wreathlab/parse.hpp"
#include "wreathlab/shield.hpp"
#include "wreathlab/variety.hpp"

namespace wreathlab {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------- argument access

const json& need(const json& args, const char* key) {
  if (!args.is_object() || !args.contains(key)) {
    throw ParseError(std::string("missing argument \"") + key + "\"");
  }
  return args[key];
}

std::string get_string(const json& args, const char* key) {
  const json& v = need(args, key);
  if (!v.is_string()) throw ParseError(std::string("argument \"") + key + "\" must be a string");
  return v.get<std::string>();
}

BigInt to_big(const json& v, const char* key) {
  if (v.is_number_unsigned()) return BigInt(v.get<std::uint64_t>());
  if (v.is_number_integer()) {
    auto x = v.get<std::int64_t>();
    if (x < 0) throw ParseError(std::string("argument \"") + key + "\" must be non-negative");
    return BigInt(x);
  }
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    BigInt b;
    try {
      b = BigInt(s);
    } catch (const std::exception&) {
      throw ParseError(std::string("argument \"") + key + "\": bad integer \"" + s + "\"");
    }
    if (b < 0) throw ParseError(std::string("argument \"") + key + "\" must be non-negative");
    return b;
  }
  throw ParseError(std::string("argument \"") + key + "\" must be an integer or decimal string");
}

BigInt get_big(const json& args, const char* key) { return to_big(need(args, key), key); }

std::uint64_t get_u64(const json& args, const char* key) {
  return to_u64(get_big(args, key), key);
}

unsigned get_unsigned(const json& args, const char* key) {
  BigInt b = get_big(args, key);
  if (b > std::numeric_limits<unsigned>::max()) {
    throw ParseError(std::string("argument \"") + key + "\" out of range");
  }
  return static_cast<unsigned>(b);
}

std::uint64_t get_size_limit(const json& args) {
  if (args.is_object() && args.contains("size_limit")) return get_u64(args, "size_limit");
  return oracle::kDefaultSizeLimit;
}

// BigInt values travel as decimal strings in reports: JSON numbers lose
// exactness past 2^53.
json big(const BigInt& v) { return v.str(); }

// ---------------------------------------------------------------- render helpers

json shield_params_json(const ShieldParams& params) {
  json e = json::array();
  for (const auto& [s, es] : params.e) e.push_back({{"s", big(s)}, {"e", big(es)}});
  return json{{"d", big(params.d)}, {"e", std::move(e)}, {"a", big(params.a)}, {"b", big(params.b)}};
}

std::string shield_params_text(const ShieldParams& params) {
  std::ostringstream os;
  os << "d=" << params.d << " a=" << params.a << " b=" << params.b << "\n";
  for (const auto& [s, es] : params.e) os << "e(" << s << ")=" << es << " ";
  os << "\n";
  return os.str();
}

LemmaInputs lemma_inputs(const json& args, bool first_family) {
  LemmaInputs in;
  in.c = get_unsigned(args, "c");
  in.alpha = get_unsigned(args, "alpha");
  in.p = get_u64(args, "p");
  in.v = get_unsigned(args, "v");
  if (first_family) {
    in.l = get_big(args, "l");
  } else {
    in.z = get_big(args, "z");
  }
  in.t = get_big(args, "t");
  return in;
}

json lemma_inputs_json(const LemmaInputs& in, bool first_family) {
  json j{{"c", in.c}, {"alpha", in.alpha}, {"p", in.p}, {"v", in.v}, {"t", big(in.t)}};
  if (first_family) {
    j["l"] = big(in.l);
  } else {
    j["z"] = big(in.z);
  }
  return j;
}

struct Outcome {
  json inputs;
  json result;
  std::string text;
  int exit_code = 0;
};

// ---------------------------------------------------------------- command handlers

Outcome handle_kp(const json& args) {
  AbelianPGroup g = parse_group_spec(get_string(args, "group")).to_finite();
  std::vector<KpRun> runs = kp_sequence(g);

  json terms = json::array();
  std::ostringstream os;
  for (const KpRun& r : runs) {
    terms.push_back({{"first", big(r.first)},
                     {"last", big(r.last)},
                     {"group", to_spec_string(r.term)},
                     {"display", r.term.to_string()},
                     {"order", big(r.term.order())}});
    os << "K[" << r.first;
    if (r.last != r.first) os << ".." << r.last;
    os << "] = " << r.term.to_string() << "  order=" << r.term.order() << "\n";
  }
  return {{{"group", to_spec_string(g)}}, {{"terms", std::move(terms)}}, os.str(), 0};
}

Outcome handle_shield(const json& args) {
  ActiveProfile prof = parse_profile(get_string(args, "profile"));
  AbelianPGroup b = parse_group_spec(get_string(args, "b")).to_finite();

  ShieldParams params = shield_params(b);
  BigInt cls = shield_class(prof, b);
  unsigned argmax = shield_argmax(prof, b);

  std::ostringstream os;
  os << shield_params_text(params);
  os << "class = " << cls << " (max at h=" << argmax << ")\n";
  return {{{"profile", to_profile_string(prof)}, {"b", to_spec_string(b)}},
          {{"class", big(cls)}, {"argmax", argmax}, {"params", shield_params_json(params)}},
          os.str(),
          0};
}

Outcome handle_lemma(const json& args, bool first_family) {
  LemmaInputs in = lemma_inputs(args, first_family);
  BigInt cls = first_family ? lemma1_class(in) : lemma2_class(in);
  std::ostringstream os;
  os << "class = " << cls << "\n";
  return {lemma_inputs_json(in, first_family), {{"class", big(cls)}}, os.str(), 0};
}

Outcome handle_thresholds(const json& args) {
  ActiveProfile prof = parse_profile(get_string(args, "profile"));
  unsigned v = get_unsigned(args, "v");
  bool has_l = args.contains("l");
  bool has_z = args.contains("z");
  if (!has_l && !has_z) throw ParseError("thresholds needs l (for t0), z (for t1), or both");

  json inputs{{"profile", to_profile_string(prof)}, {"v", v}};
  json result;
  std::ostringstream os;
  if (has_l) {
    BigInt l = get_big(args, "l");
    inputs["l"] = big(l);
    BigInt t0 = t0_threshold(prof, v, l);
    result["t0"] = big(t0);
    os << "t0 = " << t0 << "\n";
  }
  if (has_z) {
    BigInt z = get_big(args, "z");
    inputs["z"] = big(z);
    BigInt t1 = t1_threshold(prof, v, z);
    result["t1"] = big(t1);
    os << "t1 = " << t1 << "\n";
  }
  return {std::move(inputs), std::move(result), os.str(), 0};
}

Outcome handle_crossover(const json& args) {
  ActiveProfile prof = parse_profile(get_string(args, "profile"));
  unsigned v = get_unsigned(args, "v");
  BigInt l = get_big(args, "l");
  BigInt z = get_big(args, "z");
  std::uint64_t sweep = args.contains("sweep") ? get_u64(args, "sweep") : 50;

  BigInt tstar = crossover_tstar(prof, v, l, z);

  // Verify the guarantee on (t*, t*+sweep] and check the boundary: at t*
  // the strict inequality fails unless t* was pinned up to one of the
  // validity thresholds.
  LemmaInputs in;
  in.c = prof.cls();
  in.alpha = prof.alpha();
  in.p = prof.prime();
  in.v = v;
  in.l = l;
  in.z = z;
  auto holds_at = [&](const BigInt& t) {
    LemmaInputs q = in;
    q.t = t;
    return lemma2_class(q) > lemma1_class(q);
  };
  bool holds_beyond = true;
  for (BigInt t = tstar + 1; t <= tstar + sweep; ++t) {
    if (!holds_at(t)) {
      holds_beyond = false;
      break;
    }
  }
  BigInt pin = t0_threshold(prof, v, l);
  BigInt t1 = t1_threshold(prof, v, z);
  if (t1 > pin) pin = t1;
  if (l > pin) pin = l;
  if (z + 1 > pin) pin = z + 1;
  bool boundary_ok = tstar == pin || !holds_at(tstar);
  bool verified = holds_beyond && boundary_ok;

  std::ostringstream os;
  os << "t* = " << tstar << "\n";
  os << "sweep(" << tstar << ", " << tstar + sweep << "]: lemma2 > lemma1 "
     << (holds_beyond ? "holds" : "FAILS") << "\n";
  os << "boundary at t*: " << (boundary_ok ? "fails or threshold-pinned (as required)" : "UNEXPECTED")
     << "\n";
  return {{{"profile", to_profile_string(prof)}, {"v", v}, {"l", big(l)}, {"z", big(z)}, {"sweep", sweep}},
          {{"tstar", big(tstar)},
           {"holds_beyond", holds_beyond},
           {"boundary_fails_or_pinned", boundary_ok}},
          os.str(),
          verified ? 0 : 3};
}

Outcome handle_decide(const json& args) {
  ActiveProfile prof = parse_profile(get_string(args, "profile"));
  AbelianGroupSpec b = parse_group_spec(get_string(args, "b"));

  VarietyDecision d = decide_generates_product_variety(prof, b);

  std::ostringstream os;
  os << "generates var(A)var(B): " << (d.generates ? "yes" : "no") << "\n";
  os << d.explanation << "\n";
  return {{{"profile", to_profile_string(prof)}, {"b", to_spec_string(b)}},
          {{"generates", d.generates},
           {"v", d.v},
           {"top_multiplicity", d.top.to_string()},
           {"explanation", d.explanation}},
          os.str(),
          0};
}

Outcome handle_oracle_class(const json& args) {
  std::uint64_t limit = get_size_limit(args);
  std::string expr = get_string(args, "group");
  oracle::GroupPtr g = parse_group_expr(expr, limit);

  oracle::LowerCentralSeries series = oracle::lower_central_series(*g);
  auto cls = oracle::nilpotency_class(series);

  json jser = json::array();
  for (std::size_t h = 0; h < series.terms.size(); ++h) {
    jser.push_back({{"h", h + 1},
                    {"order", series.terms[h].order()},
                    {"exponent", oracle::subgroup_exponent(*g, series.terms[h])}});
  }
  json result{{"group", g->name()}, {"order", g->order()}, {"series", std::move(jser)},
              {"nilpotent", cls.has_value()}};
  std::ostringstream os;
  os << g->name() << ", order " << g->order() << "\n";
  os << oracle::series_report(*g, series);
  if (cls) {
    result["class"] = *cls;
    os << "class = " << *cls << "\n";
  } else {
    os << "not nilpotent (series stabilizes at order " << series.terms.back().order() << ")\n";
  }
  return {{{"group", expr}, {"size_limit", limit}}, std::move(result), os.str(), 0};
}

Outcome handle_oracle_verify(const json& args) {
  std::uint64_t limit = get_size_limit(args);
  std::string ea = get_string(args, "a");
  std::string eb = get_string(args, "b");
  oracle::GroupPtr a = parse_group_expr(ea, limit);
  oracle::GroupPtr b = parse_group_expr(eb, limit);
  std::uint64_t p =
      args.contains("p") ? get_u64(args, "p") : oracle::common_prime(*a, *b);

  oracle::VerifyReport r = oracle::verify_shield(a, b, p, limit);

  json result{{"wreath_order", r.wreath_order},
              {"oracle_class", r.oracle_class ? json(*r.oracle_class) : json("not-nilpotent")},
              {"formula_class", big(r.formula_class)},
              {"profile", to_profile_string(r.profile)},
              {"b_structure", to_spec_string(r.b_structure)},
              {"equal", r.equal}};
  auto wrap = [](const std::string& n) {
    return n.find(' ') == std::string::npos ? n : "(" + n + ")";
  };
  std::ostringstream os;
  os << wrap(r.a_name) << " wr " << wrap(r.b_name) << " (order " << r.wreath_order
     << "): " << r.summary() << "\n";
  return {{{"a", ea}, {"b", eb}, {"p", p}, {"size_limit", limit}},
          std::move(result),
          os.str(),
          r.equal ? 0 : 3};
}

Outcome handle_kp_definitional(const json& args) {
  std::uint64_t limit = get_size_limit(args);
  std::string expr = get_string(args, "group");
  oracle::GroupPtr g = parse_group_expr(expr, limit);
  std::uint64_t p = args.contains("p") ? get_u64(args, "p") : oracle::common_prime(*g, *g);

  std::vector<oracle::Subgroup> terms = oracle::kp_series_definitional(*g, p);

  json jterms = json::array();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    jterms.push_back({{"i", i + 1},
                      {"order", terms[i].order()},
                      {"exponent", oracle::subgroup_exponent(*g, terms[i])}});
  }
  std::ostringstream os;
  os << g->name() << ", order " << g->order() << ", p=" << p << "\n";
  os << oracle::kp_report(*g, terms);
  return {{{"group", expr}, {"p", p}, {"size_limit", limit}},
          {{"group", g->name()}, {"order", g->order()}, {"terms", std::move(jterms)}},
          os.str(),
          0};
}

struct CommandSpec {
  const char* name;
  const char* method;
  Outcome (*fn)(const json&);
};

Outcome dispatch_lemma1(const json& a) { return handle_lemma(a, true); }
Outcome dispatch_lemma2(const json& a) { return handle_lemma(a, false); }

constexpr CommandSpec kCommands[] = {
    {"kp", "kp-closed-form", handle_kp},
    {"shield", "shield-formula", handle_shield},
    {"lemma1", "z-family-closed-form", dispatch_lemma1},
    {"lemma2", "y-family-closed-form", dispatch_lemma2},
    {"thresholds", "argmax-stabilization-scan", handle_thresholds},
    {"crossover", "linear-crossover-bound", handle_crossover},
    {"decide", "top-layer-infinity-criterion", handle_decide},
    {"oracle-class", "lower-central-series-bruteforce", handle_oracle_class},
    {"oracle-verify", "bruteforce-vs-formula", handle_oracle_verify},
    {"kp-definitional", "definitional-kp-series", handle_kp_definitional},
};

JobResult error_result(const std::string& command, int code, const char* type,
                       const std::string& message) {
  JobResult r;
  r.exit_code = code;
  r.report = json{{"command", command},
                  {"error", json{{"type", type}, {"message", message}}},
                  {"exit_code", code}};
  r.text = "error (" + std::string(type) + "): " + message + "\n";
  return r;
}

}  // namespace

JobResult run_job(const JobRequest& req) {
  const CommandSpec* cmd = nullptr;
  for (const CommandSpec& c : kCommands) {
    if (req.command == c.name) {
      cmd = &c;
      break;
    }
  }
  if (!cmd) return error_result(req.command, 2, "parse", "unknown command \"" + req.command + "\"");

  try {
    Outcome out = cmd->fn(req.args);
    JobResult r;
    r.exit_code = out.exit_code;
    r.report = json{{"command", cmd->name},
                    {"method", cmd->method},
                    {"inputs", std::move(out.inputs)},
                    {"result", std::move(out.result)},
                    {"exit_code", out.exit_code}};
    r.text = std::move(out.text);
    return r;
  } catch (const ParseError& e) {
    return error_result(req.command, 2, "parse", e.what());
  } catch (const SizeLimitError& e) {
    return error_result(req.command, 1, "size-limit", e.what());
  } catch (const ThresholdError& e) {
    return error_result(req.command, 1, "threshold", e.what());
  } catch (const DomainError& e) {
    return error_result(req.command, 1, "domain", e.what());
  } catch (const Error& e) {
    return error_result(req.command, 1, "internal", e.what());
  } catch (const nlohmann::json::exception& e) {
    return error_result(req.command, 2, "parse", e.what());
  } catch (const std::exception& e) {
    return error_result(req.command, 1, "internal", e.what());
  }
}

JobResult run_batch(const nlohmann::json& jobs, const std::string& format) {
  if (!jobs.is_array()) throw ParseError("batch file must contain a JSON array of jobs");

  JobResult agg;
  agg.report = json{{"jobs", json::array()}};
  std::ostringstream os;
  std::size_t idx = 0;
  for (const auto& j : jobs) {
    ++idx;
    if (!j.is_object() || !j.contains("command") || !j["command"].is_string()) {
      throw ParseError("job " + std::to_string(idx) + " must be {\"command\": ..., \"args\": {...}}");
    }
    JobRequest req;
    req.command = j["command"].get<std::string>();
    req.args = j.contains("args") ? j["args"] : json::object();
    req.format = format;
    JobResult r = run_job(req);
    agg.report["jobs"].push_back(r.report);
    os << "== job " << idx << ": " << req.command << " ==\n" << r.text;
    if (r.exit_code > agg.exit_code) agg.exit_code = r.exit_code;
  }
  agg.report["exit_code"] = agg.exit_code;
  agg.text = os.str();
  return agg;
}

JobResult run_batch_file(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open batch file: " + path);
  nlohmann::json jobs;
  try {
    in >> jobs;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("batch file " + path + ": " + e.what());
  }
  return run_batch(jobs, format);
}

}  // namespace wreathlab
