#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>

#include "finembed/combinatorics.hpp"
#include "finembed/constructions.hpp"
#include "finembed/dsl.hpp"
#include "finembed/embedding.hpp"
#include "finembed/laws.hpp"

namespace finembed::cli {

namespace {

using Json = nlohmann::ordered_json;

Json to_json(const FiniteSet& f) { return std::vector<Nat>(f.elements().begin(), f.elements().end()); }

Json to_json(const TriVerdict& v) {
  Json j;
  j["outcome"] = std::string(to_string(v.outcome));
  j["witness"] = v.witness ? Json(*v.witness) : Json(nullptr);
  j["certificate"] = v.certificate ? to_json(*v.certificate) : Json(nullptr);
  j["reason"] = v.reason;
  return j;
}

std::string verdict_line(const TriVerdict& v) {
  switch (v.outcome) {
    case Outcome::Yes: return v.witness ? "Yes k=" + std::to_string(*v.witness) : "Yes";
    case Outcome::No: return v.certificate ? "No, certificate F=" + to_string(*v.certificate) : "No";
    case Outcome::Unknown: break;
  }
  return "Unknown: " + v.reason;
}

std::string explained(const TriVerdict& v) {
  std::string s(to_string(v.outcome));
  if (!v.reason.empty()) s += " (" + v.reason + ")";
  return s;
}

int exit_for(Outcome o) {
  switch (o) {
    case Outcome::Yes: return kOk;
    case Outcome::No: return kNo;
    case Outcome::Unknown: break;
  }
  return kUnknown;
}

GroundSet evaluate(const std::string& text, Nat horizon) { return dsl::eval(dsl::parse(text), horizon); }

struct CheckOptions {
  std::string a;
  std::string b;
  Nat horizon = kDefaultWindow;
  Nat kmax = kDefaultWindow;
  bool oracle = false;
  bool json = false;
};

int run_check(const CheckOptions& o, std::ostream& out, std::ostream& err) {
  const GroundSet a = evaluate(o.a, o.horizon);
  const GroundSet b = evaluate(o.b, o.horizon);
  const TriVerdict v = fe_decide(a, b, o.horizon);
  std::optional<TriVerdict> oracle;
  if (o.oracle) oracle = fe_oracle_bruteforce(a, b, o.horizon, o.kmax);
  const bool contradiction = oracle && !oracle->is_unknown() && !v.is_unknown() && oracle->outcome != v.outcome;

  if (o.json) {
    Json j;
    j["command"] = "check";
    j["a"] = to_string(a);
    j["b"] = to_string(b);
    j["verdict"] = to_json(v);
    if (oracle) j["oracle"] = to_json(*oracle);
    out << j.dump() << '\n';
  } else {
    out << verdict_line(v) << '\n';
    if (!v.reason.empty() && !v.is_unknown()) out << "reason: " << v.reason << '\n';
    if (oracle) out << "oracle: " << verdict_line(*oracle) << '\n';
  }
  if (contradiction) {
    err << "oracle contradicts the decision procedure\n";
    return kLawFailure;
  }
  return exit_for(v.outcome);
}

int run_classify(const std::string& expr, Nat window, bool json, std::ostream& out) {
  const GroundSet s = evaluate(expr, window);
  const DensityReport bd = upper_banach_density(s, window);
  const TriVerdict thick = is_thick(s, window);
  const TriVerdict syndetic = is_syndetic(s);
  const TriVerdict ps = is_piecewise_syndetic(s);
  const auto ap = longest_ap(s, window);
  const std::string method = bd.method == DensityMethod::Exact ? "exact" : "windowed";

  if (json) {
    Json j;
    j["command"] = "classify";
    j["set"] = to_string(s);
    j["density"] = {{"value", bd.value.to_string()},
                    {"numerator", bd.value.num()},
                    {"denominator", bd.value.den()},
                    {"method", method},
                    {"window", bd.window ? Json(*bd.window) : Json(nullptr)}};
    j["thick"] = to_json(thick);
    j["syndetic"] = to_json(syndetic);
    j["piecewise_syndetic"] = to_json(ps);
    j["longest_ap"] = ap ? Json{{"start", ap->start}, {"difference", ap->difference}, {"length", ap->length}, {"window", window}}
                         : Json(nullptr);
    out << j.dump() << '\n';
    return kOk;
  }
  out << "set: " << to_string(s) << '\n';
  out << "upper Banach density: " << bd.value.to_string() << " (" << method << ")\n";
  out << "thick: " << explained(thick) << '\n';
  out << "syndetic: " << explained(syndetic) << '\n';
  out << "piecewise syndetic: " << explained(ps) << '\n';
  if (ap) {
    out << "longest AP below " << window << ": start=" << ap->start << " diff=" << ap->difference
        << " length=" << ap->length << '\n';
  } else {
    out << "longest AP below " << window << ": none\n";
  }
  return kOk;
}

int law_exit(LawOutcome o) {
  switch (o) {
    case LawOutcome::Pass:
    case LawOutcome::Vacuous: return kOk;
    case LawOutcome::Fail: return kLawFailure;
    case LawOutcome::Unknown: break;
  }
  return kUnknown;
}

int run_construct_pair(const std::string& expr, std::size_t count, Nat horizon, bool json, std::ostream& out) {
  const GroundSet x = evaluate(expr, horizon);
  const UnembeddablePair p = unembeddable_pair(x, count);
  const LawReport r = verify_pair(p);
  if (json) {
    Json j;
    j["command"] = "construct-pair";
    j["source"] = to_string(x);
    j["a"] = p.a_elements;
    j["b"] = p.b_elements;
    j["verify"] = Json::parse(to_json_line(r));
    out << j.dump() << '\n';
  } else {
    out << "A=" << to_string(FiniteSet(p.a_elements)) << '\n';
    out << "B=" << to_string(FiniteSet(p.b_elements)) << '\n';
    out << "verify: " << to_string(r.outcome);
    if (r.counterexample) out << " counterexample " << to_string(*r.counterexample);
    out << '\n';
  }
  return law_exit(r.outcome);
}

int run_chain(const std::string& expr, std::size_t depth, std::size_t count, Nat horizon, bool json, std::ostream& out) {
  const GroundSet x = evaluate(expr, horizon);
  const ChainResult c = descending_chain(x, depth, count);
  if (json) {
    Json j;
    j["command"] = "chain";
    j["depth"] = depth;
    j["count"] = count;
    Json levels = Json::array();
    for (std::size_t i = 0; i < c.sets.size(); ++i) {
      Json level;
      level["set"] = to_string(c.sets[i]);
      if (const auto* sp = c.sets[i].sampled()) {
        level["elements"] = std::vector<Nat>(sp->known_members().begin(), sp->known_members().end());
      }
      if (i > 0) {
        level["side"] = c.used_a_side[i - 1] ? "A" : "B";
        level["certificate"] = to_json(c.certificates[i - 1]);
      }
      levels.push_back(std::move(level));
    }
    j["levels"] = std::move(levels);
    j["error"] = c.error ? Json(*c.error) : Json(nullptr);
    out << j.dump() << '\n';
  } else {
    for (std::size_t i = 0; i < c.sets.size(); ++i) {
      out << "X" << i << " = " << to_string(c.sets[i]) << '\n';
      if (i > 0) {
        const TriVerdict& cert = c.certificates[i - 1];
        out << "  X" << i - 1 << " not <=_fe X" << i << " (" << (c.used_a_side[i - 1] ? "A" : "B")
            << "-side), certificate F=" << to_string(*cert.certificate) << '\n';
      }
    }
    if (c.error) out << "stopped: " << *c.error << '\n';
  }
  return c.error ? kUnknown : kOk;
}

int run_minimal(std::size_t n, Nat m, bool json, std::ostream& out) {
  const auto sets = minimal_sets(n, m);
  const Nat expected = m + 1 >= n ? binomial(m, n - 1) : 0;
  if (json) {
    Json j;
    j["command"] = "minimal";
    j["n"] = n;
    j["m"] = m;
    Json list = Json::array();
    for (const auto& s : sets) list.push_back(to_json(s));
    j["sets"] = std::move(list);
    j["count"] = sets.size();
    j["binomial"] = expected;
    out << j.dump() << '\n';
  } else {
    for (const auto& s : sets) out << to_string(s) << '\n';
    out << "count=" << sets.size() << "=C(" << m << "," << n - 1 << ")\n";
  }
  return sets.size() == expected ? kOk : kLawFailure;
}

struct LawsOptions {
  InstanceConfig cfg;
  unsigned threads = 0;
  bool json = false;
  std::string out_path;
};

int run_laws(const LawsOptions& o, std::ostream& out, std::ostream& err) {
  const auto reports = run_corpus(o.cfg, o.threads);
  const auto counts = tally(reports);
  std::size_t fails = 0;
  for (const auto& [law, t] : counts) fails += t.fail;

  Json summary;
  for (const auto& [law, t] : counts) {
    summary["summary"][law] = {{"pass", t.pass}, {"fail", t.fail}, {"vacuous", t.vacuous}, {"unknown", t.unknown}};
  }
  if (counts.empty()) summary["summary"] = Json::object();
  summary["fail"] = fails;

  std::ofstream file;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) {
      err << "cannot open " << o.out_path << '\n';
      return kUsage;
    }
  }
  for (const auto& r : reports) {
    const std::string line = to_json_line(r);
    if (o.json) out << line << '\n';
    if (file) file << line << '\n';
  }
  if (file) file << summary.dump() << '\n';
  if (o.json) {
    out << summary.dump() << '\n';
  } else {
    for (const auto& [law, t] : counts) {
      out << law << ": pass=" << t.pass << " fail=" << t.fail << " vacuous=" << t.vacuous << " unknown=" << t.unknown
          << '\n';
    }
  }
  for (const auto& r : reports) {
    if (r.outcome != LawOutcome::Fail) continue;
    err << "FAIL " << r.law << ' ' << r.instance;
    if (r.counterexample) err << " counterexample " << to_string(*r.counterexample);
    if (auto check = reverify_counterexample(r)) err << " oracle " << to_string(*check);
    err << '\n';
  }
  return fails > 0 ? kLawFailure : kOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite embeddability toolkit.\n"
               "Set expressions: {0,3,11}, {}, up(BITS;PERIOD;RESIDUES), evens, odds, nat,\n"
               "E + k, E & F, E | F, diff(E), shift(E; g1,...,gk), (E).\n"
               "'&' binds tighter than '|'; both associate to the left.",
               "fetool"};
  app.require_subcommand(1);

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Decide A <=_fe B; exit 0 Yes, 1 No, 2 Unknown");
  check_cmd->add_option("A", check.a, "left set expression")->required();
  check_cmd->add_option("B", check.b, "right set expression")->required();
  check_cmd->add_option("--horizon", check.horizon, "evaluation horizon and prefix window")->capture_default_str()->check(CLI::PositiveNumber);
  check_cmd->add_option("--kmax", check.kmax, "largest translate tried by the oracle")->capture_default_str()->check(CLI::PositiveNumber);
  check_cmd->add_flag("--oracle", check.oracle, "cross-check with the brute-force oracle");
  check_cmd->add_flag("--json", check.json, "JSON output");

  std::string classify_expr;
  Nat classify_window = 1000;
  bool classify_json = false;
  auto* classify_cmd = app.add_subcommand("classify", "Density, thickness, syndeticity and progressions");
  classify_cmd->add_option("EXPR", classify_expr, "set expression")->required();
  classify_cmd->add_option("--window", classify_window, "search window")->capture_default_str()->check(CLI::PositiveNumber);
  classify_cmd->add_flag("--json", classify_json, "JSON output");

  std::string pair_expr;
  std::size_t pair_count = 0;
  Nat pair_horizon = kDefaultWindow;
  bool pair_json = false;
  auto* pair_cmd = app.add_subcommand("construct-pair", "Strongly mutually unembeddable pair inside X");
  pair_cmd->add_option("X", pair_expr, "source set expression")->required();
  pair_cmd->add_option("--count", pair_count, "terms per side")->required()->check(CLI::PositiveNumber);
  pair_cmd->add_option("--horizon", pair_horizon, "evaluation horizon")->capture_default_str()->check(CLI::PositiveNumber);
  pair_cmd->add_flag("--json", pair_json, "JSON output");

  std::string chain_expr;
  std::size_t chain_depth = 0;
  std::size_t chain_count = 0;
  Nat chain_horizon = kDefaultWindow;
  bool chain_json = false;
  auto* chain_cmd = app.add_subcommand("chain", "Certified descending chain inside X");
  chain_cmd->add_option("X", chain_expr, "source set expression")->required();
  chain_cmd->add_option("--depth", chain_depth, "certified steps")->required()->check(CLI::PositiveNumber);
  chain_cmd->add_option("--count", chain_count, "elements at the deepest level")->required()->check(CLI::PositiveNumber);
  chain_cmd->add_option("--horizon", chain_horizon, "evaluation horizon")->capture_default_str()->check(CLI::PositiveNumber);
  chain_cmd->add_flag("--json", chain_json, "JSON output");

  std::size_t min_n = 0;
  Nat min_m = 0;
  bool min_json = false;
  auto* minimal_cmd = app.add_subcommand("minimal", "Minimal sets of size n inside {0..m}");
  minimal_cmd->add_option("--n", min_n, "set size")->required()->check(CLI::PositiveNumber);
  minimal_cmd->add_option("--m", min_m, "largest element")->required();
  minimal_cmd->add_flag("--json", min_json, "JSON output");

  LawsOptions laws;
  auto* laws_cmd = app.add_subcommand("laws", "Check every law on a seeded corpus; exit 4 on any fail");
  laws_cmd->add_option("--seed", laws.cfg.seed, "corpus seed")->capture_default_str();
  laws_cmd->add_option("--corpus", laws.cfg.corpus_size, "corpus size")->capture_default_str();
  laws_cmd->add_option("--max-period", laws.cfg.max_period, "largest period")->capture_default_str()->check(CLI::PositiveNumber);
  laws_cmd->add_option("--max-preperiod", laws.cfg.max_preperiod, "largest preperiod")->capture_default_str()->check(CLI::PositiveNumber);
  laws_cmd->add_option("--horizon", laws.cfg.horizon, "prefix window")->capture_default_str()->check(CLI::PositiveNumber);
  laws_cmd->add_option("--threads", laws.threads, "worker threads, 0 for all cores")->capture_default_str();
  laws_cmd->add_flag("--json", laws.json, "one JSON report per line");
  laws_cmd->add_option("--out", laws.out_path, "also write JSON lines to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check_cmd) return run_check(check, out, err);
    if (*classify_cmd) return run_classify(classify_expr, classify_window, classify_json, out);
    if (*pair_cmd) return run_construct_pair(pair_expr, pair_count, pair_horizon, pair_json, out);
    if (*chain_cmd) return run_chain(chain_expr, chain_depth, chain_count, chain_horizon, chain_json, out);
    if (*minimal_cmd) return run_minimal(min_n, min_m, min_json, out);
    if (*laws_cmd) return run_laws(laws, out, err);
  } catch (const dsl::ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const HorizonError& e) {
    err << "horizon: " << e.what() << '\n';
    return kUnknown;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUnknown;
  }
  return kUsage;
}

}  // namespace finembed::cli
