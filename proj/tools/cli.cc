// Copyright 2026 The tsms Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <CLI/CLI.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "tsms/explain.h"
#include "tsms/io.h"
#include "tsms/necessary.h"
#include "tsms/oracle.h"
#include "tsms/sms.h"
#include "tsms/solutions.h"

namespace tsms::cli {
namespace {

using json = nlohmann::json;

// Carries an exit code out of a command body.
struct Exit {
  int code;
  std::string message;
};

struct Common {
  std::string file;
  std::string rule_name;
  std::string winner;
  bool json = false;
};

PartialTournament load(const std::string& path) {
  if (path.empty()) throw Exit{kUsageOrParse, "no tournament file given"};
  try {
    return read_tournament_file(path);
  } catch (const ParseError& e) {
    throw Exit{kUsageOrParse, path + ": " + e.what()};
  } catch (const InvalidArgument& e) {
    throw Exit{kUsageOrParse, path + ": " + e.what()};
  }
}

WeightedTournament load_complete(const std::string& path) {
  PartialTournament g = load(path);
  try {
    return WeightedTournament(std::move(g));
  } catch (const IncompleteTournament&) {
    throw Exit{kIncomplete, path + ": tournament is not complete"};
  }
}

Rule rule_of(const Common& c) { return *parse_rule(c.rule_name); }

Candidate winner_of(const PartialTournament& g, const std::string& label) {
  auto w = g.candidates().find(label);
  if (!w) throw Exit{kUsageOrParse, "unknown candidate '" + label + "'"};
  return *w;
}

json edges_json(const PartialTournament& x) {
  json edges = json::array();
  for (Candidate a = 0; a < x.size(); ++a) {
    for (Candidate b = 0; b < x.size(); ++b) {
      if (x.weight(a, b) > 0) {
        edges.push_back({{"from", x.label(a)}, {"to", x.label(b)},
                         {"weight", x.weight(a, b)}});
      }
    }
  }
  return edges;
}

json tournament_json(const PartialTournament& x) {
  return {{"voters", x.voters()},
          {"candidates", x.candidates().labels()},
          {"edges", edges_json(x)}};
}

json certificate_json(const Certificate& cert) {
  if (const auto* tree = std::get_if<OutTreeCertificate>(&cert)) {
    const CandidateSet& set = *tree->candidates;
    auto list = [&](const std::vector<TreeEdge>& edges) {
      json out = json::array();
      for (const TreeEdge& e : edges) {
        out.push_back({{"parent", set.label(e.parent)},
                       {"child", set.label(e.child)},
                       {"weight", e.weight}});
      }
      return out;
    };
    return {{"kind", "out-tree"},
            {"root", set.label(tree->root)},
            {"edges", list(tree->edges)},
            {"relays", list(tree->relays)}};
  }
  const auto& nb = std::get<NeighborhoodCertificate>(cert);
  const CandidateSet& set = *nb.candidates;
  json row = json::array();
  for (const Entry& e : nb.winner_row) {
    row.push_back({{"opponent", set.label(e.other)}, {"weight", e.weight}});
  }
  json losses = json::array();
  for (const LossRow& r : nb.loss_rows) {
    json beaters = json::array();
    for (const Entry& e : r.beaters) {
      beaters.push_back({{"beater", set.label(e.other)}, {"weight", e.weight}});
    }
    losses.push_back({{"opponent", set.label(r.opponent)}, {"beaters", beaters}});
  }
  return {{"kind", "neighborhood"},
          {"winner", set.label(nb.winner)},
          {"winner_row", row},
          {"loss_rows", losses}};
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  void emit(const std::string& command, json inputs, json result) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start_)
                        .count();
    json envelope = {{"schema_version", kSchemaVersion},
                     {"command", command},
                     {"inputs", std::move(inputs)},
                     {"result", std::move(result)},
                     {"timing_ms", ms}};
    out_ << envelope.dump(2) << "\n";
  }

  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }

 private:
  std::ostream& out_;
  std::ostream& err_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json base_inputs(const Common& c, const PartialTournament& g) {
  json in = {{"file", c.file}, {"m", g.size()}, {"n", g.voters()}};
  if (!c.rule_name.empty()) in["rule"] = c.rule_name;
  if (!c.winner.empty()) in["winner"] = c.winner;
  return in;
}

int cmd_winners(Runner& run, const Common& c) {
  const WeightedTournament t = load_complete(c.file);
  const Rule rule = rule_of(c);
  const WinnerSet set = winners(rule, t);
  std::optional<ScoreTable> table;
  if (rule == Rule::kCopeland) table = copeland(t).table;
  if (rule == Rule::kBorda) table = borda(t).table;
  if (rule == Rule::kMaximin) table = maximin(t).table;

  if (c.json) {
    json labels = json::array();
    for (Candidate w : set.winners) labels.push_back(t.label(w));
    json result = {{"winners", labels}};
    if (table) {
      json scores = json::object();
      for (Candidate x = 0; x < t.size(); ++x) scores[t.label(x)] = table->scores[x];
      result["scores"] = scores;
    }
    run.emit("winners", base_inputs(c, t), result);
    return kOk;
  }
  std::string line;
  for (Candidate w : set.winners) {
    if (!line.empty()) line += table ? ", " : " ";
    line += t.label(w);
    if (table) line += " (score " + std::to_string(table->scores[w]) + ")";
  }
  run.out() << (line.empty() ? "(none)" : line) << "\n";
  return kOk;
}

struct SmsOptions {
  std::string variant;
  std::string out_file;
  std::uint64_t budget = kDefaultWucBudget;
};

SmsResult compute(const Common& c, const WeightedTournament& t,
                  const SmsOptions& o) {
  const Rule rule = rule_of(c);
  const Candidate w = winner_of(t, c.winner);
  if (!o.variant.empty() && *parse_variant(o.variant) != default_variant(rule)) {
    throw Exit{kUsageOrParse, "variant '" + o.variant + "' is not available for " +
                                  c.rule_name + "; use " +
                                  std::string(variant_name(default_variant(rule)))};
  }
  try {
    return compute_sms(rule, t, w, o.budget);
  } catch (const NotAWinner& e) {
    throw Exit{kNotAWinner, e.what()};
  }
}

int cmd_sms(Runner& run, const Common& c, const SmsOptions& o) {
  const WeightedTournament t = load_complete(c.file);
  const SmsResult r = compute(c, t, o);
  if (!o.out_file.empty()) {
    std::ofstream f(o.out_file);
    if (!f) throw Exit{kUsageOrParse, "cannot write '" + o.out_file + "'"};
    f << serialize(r.support.partial);
  }
  const SizeRange range =
      sms_size_formula(size_formula_input(rule_of(c), t, r.support.winner));
  if (c.json) {
    json result = {{"size", r.size},
                   {"win_count", r.win_count},
                   {"variant", std::string(variant_name(r.variant))},
                   {"optimal", r.optimal},
                   {"size_range", {range.lo, range.hi}},
                   {"support", tournament_json(r.support.partial)}};
    json inputs = base_inputs(c, t);
    if (rule_of(c) == Rule::kWeightedUncoveredSet) inputs["budget"] = o.budget;
    run.emit("sms", inputs, result);
  } else {
    auto& out = run.out();
    out << "rule: " << c.rule_name << "\n"
        << "winner: " << c.winner << "\n"
        << "variant: " << variant_name(r.variant) << "\n"
        << "size: " << r.size << "\n"
        << "win count: " << r.win_count << "\n";
    if (!r.optimal) {
      out << "optimal: no (search budget of " << o.budget
          << " nodes exhausted; best support found shown; sizes are bounded by ["
          << range.lo << ", " << range.hi << "])\n";
    }
    out << "support:\n" << serialize(r.support.partial);
  }
  return r.optimal ? kOk : kBudgetExhausted;
}

int cmd_explain(Runner& run, const Common& c, const SmsOptions& o,
                const std::string& format) {
  const WeightedTournament t = load_complete(c.file);
  const SmsResult r = compute(c, t, o);
  const Certificate cert = extract_structure(r);
  if (format == "json" || c.json) {
    json result = {{"certificate", certificate_json(cert)},
                   {"text", render_text(cert)},
                   {"size", r.size},
                   {"optimal", r.optimal}};
    json inputs = base_inputs(c, t);
    inputs["format"] = "json";
    run.emit("explain", inputs, result);
  } else if (format == "dot") {
    run.out() << render_dot(cert);
  } else {
    run.out() << render_text(cert);
  }
  return r.optimal ? kOk : kBudgetExhausted;
}

int cmd_verify(Runner& run, const Common& c, const std::string& support_file) {
  const WeightedTournament t = load_complete(c.file);
  const PartialTournament x = load(support_file);
  const Candidate w = winner_of(t, c.winner);
  Verification v{Verdict::kValidMs, std::nullopt, std::nullopt};
  try {
    v = verify_support(t, Support{x, rule_of(c), w});
  } catch (const NotASubTournament& e) {
    throw Exit{kNotSubTournament, e.what()};
  } catch (const InvalidArgument& e) {
    if (!x.same_shape(t.partial())) throw Exit{kNotSubTournament, e.what()};
    throw Exit{kUsageOrParse, e.what()};
  }
  const int code = v.verdict == Verdict::kValidMs      ? kOk
                   : v.verdict == Verdict::kNotMinimal ? kNotMinimal
                                                       : kNotNecessary;
  if (c.json) {
    json result = {{"verdict", std::string(verdict_name(v.verdict))},
                   {"size", support_size(x)}};
    result["removable"] = v.removable
                              ? json{{"from", t.label(v.removable->from)},
                                     {"to", t.label(v.removable->to)}}
                              : json(nullptr);
    result["counterexample"] =
        v.counterexample ? tournament_json(v.counterexample->partial()) : json(nullptr);
    json inputs = base_inputs(c, t);
    inputs["support"] = support_file;
    run.emit("verify", inputs, result);
    return code;
  }
  run.out() << verdict_name(v.verdict);
  if (v.removable) {
    run.out() << ": unit (" << t.label(v.removable->from) << ","
              << t.label(v.removable->to) << ") can be removed";
  }
  run.out() << "\n";
  if (v.counterexample) {
    run.out() << "completion where " << c.winner << " loses:\n"
              << serialize(v.counterexample->partial());
  }
  return code;
}

int cmd_oracle(Runner& run, const Common& c, std::uint64_t guard, bool list) {
  const WeightedTournament t = load_complete(c.file);
  const Rule rule = rule_of(c);
  const Candidate w = winner_of(t, c.winner);
  try {
    require_winner(rule, t, w);
  } catch (const NotAWinner& e) {
    throw Exit{kNotAWinner, e.what()};
  }
  std::vector<PartialTournament> supports;
  Weight best = -1;
  try {
    for_each_minimal_support(
        t, w, rule,
        [&](const PartialTournament& x) {
          const Weight size = support_size(x);
          if (best < 0 || size < best) best = size;
          if (list) supports.push_back(x);
          return true;
        },
        guard);
  } catch (const GuardExceeded& e) {
    throw Exit{kGuardExceeded, e.what()};
  }
  if (c.json) {
    json result = {{"size", best}};
    if (list) {
      json all = json::array();
      for (const auto& x : supports) all.push_back(tournament_json(x));
      result["supports"] = all;
    }
    json inputs = base_inputs(c, t);
    inputs["guard"] = guard;
    run.emit("oracle", inputs, result);
    return kOk;
  }
  run.out() << "oracle SMS size: " << best << "\n";
  for (std::size_t i = 0; i < supports.size(); ++i) {
    run.out() << "\n# minimal support " << i + 1 << " (size "
              << support_size(supports[i]) << ")\n"
              << serialize(supports[i]);
  }
  return kOk;
}

struct GenerateOptions {
  int m = 5;
  Weight n = 1;
  int p = 3;
  int q = 4;
  std::uint64_t seed = 1;
};

int cmd_generate(Runner& run, const std::string& kind, const GenerateOptions& o,
                 bool as_json) {
  if (kind == "random") {
    if (o.m < 1 || o.n < 1 || o.n > kMaxVoters) {
      throw Exit{kUsageOrParse, "need m >= 1 and 1 <= n <= 2^31-1"};
    }
    const WeightedTournament t = random_tournament(o.m, o.n, o.seed);
    if (as_json) {
      run.emit("generate",
               {{"kind", kind}, {"m", o.m}, {"n", o.n}, {"seed", o.seed}},
               {{"tournament", tournament_json(t.partial())}});
    } else {
      run.out() << "# random tournament m=" << o.m << " n=" << o.n
                << " seed=" << o.seed << "\n"
                << serialize(t.partial());
    }
    return kOk;
  }
  if (o.p < 2 || o.q < 2 || o.p > 20 || o.q > 20) {
    throw Exit{kUsageOrParse, "setcover needs 2 <= p, q <= 20"};
  }
  const SetCoverInstance inst = random_setcover(o.p, o.q, o.seed);
  const SetCoverTournament sc = build_setcover_tournament(inst);
  const int k = minimum_cover_size(inst);
  if (as_json) {
    run.emit("generate",
             {{"kind", kind}, {"p", o.p}, {"q", o.q}, {"seed", o.seed}},
             {{"tournament", tournament_json(sc.tournament.partial())},
              {"winner", sc.tournament.label(sc.winner)},
              {"subsets", inst.subsets},
              {"minimum_cover", k}});
  } else {
    std::ostringstream sets;
    for (std::size_t s = 0; s < inst.subsets.size(); ++s) {
      sets << " s" << s + 1 << "={";
      for (std::size_t i = 0; i < inst.subsets[s].size(); ++i) {
        sets << (i ? "," : "") << "e" << inst.subsets[s][i] + 1;
      }
      sets << "}";
    }
    run.out() << "# set-cover tournament p=" << o.p << " q=" << o.q
              << " seed=" << o.seed << " winner=w minimum_cover=" << k << "\n"
              << "#" << sets.str() << "\n"
              << serialize(sc.tournament.partial());
  }
  return kOk;
}

void add_common(CLI::App* sub, Common& c, bool needs_winner) {
  std::vector<std::string> names;
  for (Rule r : kAllRules) names.emplace_back(rule_name(r));
  sub->add_option("file", c.file, "Tournament file")->required();
  sub->add_option("--rule,-r", c.rule_name, "tc, uc, cop, borda, mm or wuc")
      ->required()
      ->check(CLI::IsMember(names));
  if (needs_winner) {
    sub->add_option("--winner,-w", c.winner, "Winner label")->required();
  }
  sub->add_flag("--json", c.json, "Emit the JSON envelope");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Smallest minimal supports for tournament solutions", "tsms"};
  app.require_subcommand(1);

  Common common;
  SmsOptions sms;
  std::string format = "text";
  std::string support_file;
  std::uint64_t guard = kDefaultCompletionGuard;
  bool list = false;
  std::string kind;
  GenerateOptions gen;
  bool gen_json = false;

  auto* winners_cmd = app.add_subcommand("winners", "Print the winner set");
  add_common(winners_cmd, common, false);

  auto add_sms_options = [&](CLI::App* sub) {
    sub->add_option("--variant", sms.variant, "shortest-paths, maxwin or exact")
        ->check(CLI::IsMember({"shortest-paths", "maxwin", "exact"}));
    sub->add_option("--budget", sms.budget,
                    "Node budget of the exact weighted-uncovered-set search");
  };
  auto* sms_cmd = app.add_subcommand("sms", "Compute a smallest minimal support");
  add_common(sms_cmd, common, true);
  add_sms_options(sms_cmd);
  sms_cmd->add_option("--out", sms.out_file, "Write the support to this file");

  auto* explain_cmd = app.add_subcommand("explain", "Explain why a candidate wins");
  add_common(explain_cmd, common, true);
  add_sms_options(explain_cmd);
  explain_cmd->add_option("--format", format, "text, json or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));

  auto* verify_cmd = app.add_subcommand("verify", "Check a claimed minimal support");
  add_common(verify_cmd, common, true);
  verify_cmd->add_option("--support", support_file, "Support file")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force SMS size");
  add_common(oracle_cmd, common, true);
  oracle_cmd->add_option("--guard", guard, "Maximum number of sub-weightings");
  oracle_cmd->add_flag("--list", list, "List every minimal support");

  auto* gen_cmd = app.add_subcommand("generate", "Generate a tournament file");
  gen_cmd->add_option("kind", kind, "random or setcover")
      ->required()
      ->check(CLI::IsMember({"random", "setcover"}));
  gen_cmd->add_option("--m", gen.m, "Candidates (random)");
  gen_cmd->add_option("--n", gen.n, "Voters (random)");
  gen_cmd->add_option("--p", gen.p, "Universe size (setcover)");
  gen_cmd->add_option("--q", gen.q, "Number of subsets (setcover)");
  gen_cmd->add_option("--seed", gen.seed, "Seed");
  gen_cmd->add_flag("--json", gen_json, "Emit the JSON envelope");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageOrParse;
  }

  Runner run(out, err);
  try {
    if (*winners_cmd) return cmd_winners(run, common);
    if (*sms_cmd) return cmd_sms(run, common, sms);
    if (*explain_cmd) return cmd_explain(run, common, sms, format);
    if (*verify_cmd) return cmd_verify(run, common, support_file);
    if (*oracle_cmd) return cmd_oracle(run, common, guard, list);
    if (*gen_cmd) return cmd_generate(run, kind, gen, gen_json);
  } catch (const Exit& e) {
    err << "tsms: " << e.message << "\n";
    return e.code;
  } catch (const GuardExceeded& e) {
    err << "tsms: " << e.what() << "\n";
    return kGuardExceeded;
  } catch (const Error& e) {
    err << "tsms: " << e.what() << "\n";
    return kUsageOrParse;
  }
  return kUsageOrParse;
}

}  // namespace tsms::cli
