// Copyright 2026 The comsoc Authors
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

#include "comsoc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "comsoc/hedonic.hpp"
#include "comsoc/io.hpp"
#include "comsoc/multiwinner.hpp"
#include "comsoc/oracles.hpp"
#include "comsoc/profile.hpp"

namespace comsoc {

using json = nlohmann::ordered_json;

std::string to_string(Status status) {
  switch (status) {
    case Status::ok: return "ok";
    case Status::no_solution: return "no_solution";
    case Status::error: return "error";
  }
  return "error";
}

namespace {

// Thresholds for --algo auto, in estimated search nodes.
constexpr std::uint64_t kEnumCommittees = 2'000'000;
constexpr std::uint64_t kVoterPartitions = 2'000'000;
constexpr std::uint64_t kMisrepGuesses = 100'000;
constexpr int kKernelMaxApprovals = 3;

// Raised when a payload fails its independent recheck.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

json one_based(const std::vector<int>& v) {
  json out = json::array();
  for (int x : v) out.push_back(x + 1);
  return out;
}

json partition_json(const Partition& p) {
  json out = json::array();
  for (const auto& c : p.coalitions()) out.push_back(one_based(c));
  return out;
}

json witness_json(const Witness& w) {
  json out;
  out["kind"] = to_string(w.kind);
  out["agents"] = one_based(w.agents);
  if (w.target) out["target"] = one_based(*w.target);
  return out;
}

json feedback_json(const FeedbackSet& f) {
  json out;
  out["kind"] = f.edges ? "edges" : "arcs";
  out["size"] = f.size();
  out["certified"] = f.certified;
  json list = json::array();
  for (auto [i, j] : f.arcs) list.push_back({i + 1, j + 1});
  out[f.edges ? "edges" : "arcs"] = list;
  return out;
}

json objective_json(Rule rule, const Rational& value) {
  if (rule == Rule::pav) return value.str();
  return value.num();
}

json axis_json(const Axis& axis) {
  json out;
  out["target"] = axis.target == AxisTarget::alternatives ? "alternatives" : "voters";
  out["order"] = one_based(axis.order);
  return out;
}

std::uint64_t saturating_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

bool meets(Rule rule, const Rational& objective, const Rational& bound) {
  return rule == Rule::pav ? objective >= bound : objective <= bound;
}

struct AutoChoice {
  std::string algo;
  std::string reason;
};

AutoChoice choose_algo(const MultiWinnerInstance& in, Rule rule) {
  const auto& p = in.profile;
  const int m = p.num_alternatives(), n = p.num_voters(), k = in.k;
  const std::uint64_t committees = binomial_saturating(m, k);
  if (rule == Rule::pav && in.bound) {
    int nonempty = 0;
    for (int i = 0; i < n; ++i) nonempty += !p.approval_set(i).empty();
    if (nonempty == n && *in.bound <= Rational(std::min(k, n)))
      return {"greedy", "S <= min(k, n) with no empty ballot"};
    if (p.max_approval_size() <= kKernelMaxApprovals)
      return {"kernel", "b <= " + std::to_string(kKernelMaxApprovals)};
    return {"xp-score", "score decision with b > " + std::to_string(kKernelMaxApprovals)};
  }
  if (rule != Rule::cc) return {"enum", "only committee enumeration applies"};
  if (committees <= kEnumCommittees) return {"enum", "C(m, k) <= " + std::to_string(kEnumCommittees)};
  if (in.bound && p.is_linear() && in.bound->is_integer() &&
      binomial_saturating(n, static_cast<int>(std::min<std::int64_t>(in.bound->num(), n))) <= kMisrepGuesses)
    return {"xp-misrep", "C(n, R) <= " + std::to_string(kMisrepGuesses)};
  if (saturating_pow(static_cast<std::uint64_t>(k), n) <= kVoterPartitions)
    return {"partition", "k^n <= " + std::to_string(kVoterPartitions)};
  return {"enum", "no cheaper route; enumeration under the search limits"};
}

std::vector<int> pad_to(std::vector<int> committee, int m, int k) {
  std::sort(committee.begin(), committee.end());
  for (int a = 0; a < m && static_cast<int>(committee.size()) < k; ++a)
    if (!std::binary_search(committee.begin(), committee.end(), a)) {
      committee.push_back(a);
      std::sort(committee.begin(), committee.end());
    }
  return committee;
}

struct Options {
  // global
  std::string output = "record";
  bool no_timing = false;
  double time_limit = 0;
  std::uint64_t node_budget = 0;
  std::uint64_t seed = 1;
  // mw
  std::string rule, algo = "auto", profile, structure, mode = "voters";
  int k = 0, budget = 0;
  std::string bound, score;
  std::vector<int> deleted;
  // hg
  std::string concept_name, instance, partition, hg_algo = "exact";
  double delta = 1e-3;
  // gen
  std::string graph, blockers = "padded", shape, out;
  int h = 0;
};

struct Context {
  Options opt;
  SearchLimits limits;
  CommandResult* result;
};

void need(bool ok, const std::string& what) {
  if (!ok) throw ContractError(what);
}

// --- mw --------------------------------------------------------------------

void mw_solve(Context& cx) {
  auto& o = cx.opt;
  auto& r = *cx.result;
  const Rule rule = parse_rule(o.rule);
  MultiWinnerInstance in{read_profile(o.profile), o.k, std::nullopt};
  need(o.bound.empty() || o.score.empty(), "give either --bound or --score, not both");
  if (!o.bound.empty()) in.bound = Rational::parse(o.bound);
  if (!o.score.empty()) in.bound = Rational::parse(o.score);
  in.validate();

  std::string algo = o.algo;
  std::string reason;
  if (algo == "auto") {
    auto c = choose_algo(in, rule);
    algo = c.algo;
    reason = c.reason;
  }
  auto require_rule = [&](std::initializer_list<Rule> ok) {
    if (std::find(ok.begin(), ok.end(), rule) == ok.end())
      throw UnsupportedKind("algorithm '" + algo + "' does not apply to " + to_string(rule));
  };

  std::optional<CommitteeSolution> sol;
  std::vector<std::string> trace;
  if (algo == "enum") {
    sol = solve_by_committee_enumeration(in, rule, cx.limits);
  } else if (algo == "partition") {
    require_rule({Rule::cc});
    sol = solve_cc_by_voter_partition(in, cx.limits);
  } else if (algo == "xp-misrep") {
    require_rule({Rule::cc});
    sol = solve_cc_xp_misrep(in, cx.limits);
  } else if (algo == "greedy") {
    require_rule({Rule::pav});
    sol = pav_greedy_small_score(in);
  } else if (algo == "xp-score") {
    require_rule({Rule::pav});
    sol = solve_pav_score_xp(in, cx.limits);
  } else if (algo == "kernel") {
    require_rule({Rule::pav});
    auto k = pav_kernelize(in);
    trace = k.trace;
    if (k.verdict == KernelVerdict::yes) {
      sol = k.witness;
    } else if (auto red = solve_pav_score_xp(*k.reduced_instance, cx.limits)) {
      std::vector<int> mapped;
      for (int a : red->committee) mapped.push_back(k.alt_map[a]);
      sol = make_solution(in.profile, rule, pad_to(mapped, in.profile.num_alternatives(), in.k));
    }
  } else if (algo == "mav-deletion") {
    require_rule({Rule::mav});
    std::vector<int> deleted;
    for (int a : o.deleted) deleted.push_back(a - 1);
    sol = solve_mav_with_deletion_set(in, deleted);
  } else {
    throw ContractError("unknown algorithm '" + algo + "'");
  }

  json& pl = r.payload;
  pl["rule"] = to_string(rule);
  pl["k"] = in.k;
  if (in.bound) pl[rule == Rule::pav ? "score" : "bound"] = objective_json(rule, *in.bound);
  pl["algo"] = algo;
  if (!reason.empty()) pl["reason"] = reason;
  if (!trace.empty()) pl["kernel_trace"] = trace;

  if (sol && in.bound && !meets(rule, sol->objective, *in.bound)) sol.reset();
  if (!sol) {
    r.status = Status::no_solution;
    return;
  }
  MultiWinnerInstance check = in;
  check.bound.reset();
  if (!verify_solution(check, *sol)) throw VerificationFailure("committee failed its recheck");
  pl["committee"] = one_based(sol->committee);
  if (sol->assignment) pl["assignment"] = one_based(*sol->assignment);
  pl["objective"] = objective_json(rule, sol->objective);
  r.status = Status::ok;
}

Structure parse_structure(const std::string& s) {
  if (s == "sp") return Structure::sp;
  if (s == "sc") return Structure::sc;
  throw DomainError("unknown structure '" + s + "'");
}

void mw_recognize(Context& cx) {
  auto& r = *cx.result;
  const Structure st = parse_structure(cx.opt.structure);
  auto p = read_profile(cx.opt.profile);
  auto axis = st == Structure::sp ? recognize_sp(p) : recognize_sc(p);
  r.payload["structure"] = cx.opt.structure;
  r.payload["kind"] = p.is_linear() ? "linear" : "approval";
  if (!axis) {
    r.status = Status::no_solution;
    return;
  }
  if (!verify_axis(p, *axis)) throw VerificationFailure("axis failed its recheck");
  r.payload["axis"] = axis_json(*axis);
  r.status = Status::ok;
}

void mw_distance(Context& cx) {
  auto& o = cx.opt;
  auto& r = *cx.result;
  const Structure st = parse_structure(o.structure);
  DeletionMode mode;
  if (o.mode == "voters") mode = DeletionMode::voters;
  else if (o.mode == "alternatives") mode = DeletionMode::alternatives;
  else throw DomainError("unknown deletion mode '" + o.mode + "'");
  auto p = read_profile(o.profile);
  auto cert = deletion_distance(p, st, mode, o.budget, cx.limits);
  r.payload["structure"] = o.structure;
  r.payload["mode"] = o.mode;
  r.payload["budget"] = o.budget;
  if (!cert) {
    r.status = Status::no_solution;
    return;
  }
  if (!verify_deletion_certificate(p, st, *cert)) throw VerificationFailure("deletion certificate failed its recheck");
  r.payload["distance"] = cert->removed.size();
  r.payload["removed"] = one_based(cert->removed);
  r.payload["axis"] = axis_json(cert->axis);
  r.status = Status::ok;
}

// --- hg --------------------------------------------------------------------

Concept parse_concept(const std::string& s) {
  if (s == "nash") return Concept::nash;
  if (s == "is") return Concept::individual;
  if (s == "core") return Concept::core;
  if (s == "score") return Concept::strict_core;
  throw DomainError("unknown stability concept '" + s + "'");
}

void hg_verify(Context& cx) {
  auto& o = cx.opt;
  auto& r = *cx.result;
  const Concept c = parse_concept(o.concept_name);
  auto h = read_hedonic(o.instance);
  auto p = read_partition(o.partition, h.num_agents());
  std::optional<Witness> w;
  bool certain = true;
  if (o.hg_algo == "exact") {
    w = verify(h, p, c, cx.limits);
  } else if (o.hg_algo == "bounded" || o.hg_algo == "colorcode") {
    if (c != Concept::core && c != Concept::strict_core)
      throw UnsupportedKind("--algo " + o.hg_algo + " verifies core and strict core only");
    const BlockingMode mode = c == Concept::core ? BlockingMode::strict : BlockingMode::weak;
    if (o.hg_algo == "bounded") {
      w = fa_core_verify_bounded(h, p, mode, cx.limits);
    } else {
      r.seed = o.seed;
      w = fa_core_verify_colorcoded(h, p, ColorCodingOptions{mode, o.delta, o.seed, cx.limits});
      certain = w.has_value();
    }
  } else {
    throw ContractError("unknown algorithm '" + o.hg_algo + "'");
  }
  r.payload["concept"] = o.concept_name;
  r.payload["algo"] = o.hg_algo;
  r.payload["stable"] = !w;
  r.payload["certain"] = certain;
  if (o.hg_algo == "colorcode") r.payload["delta"] = o.delta;
  if (w) {
    if (!check_witness(h, p, *w)) throw VerificationFailure("witness failed its recheck");
    r.payload["witness"] = witness_json(*w);
  }
  r.status = Status::ok;
}

void recheck_stable(const HedonicInstance& h, const Partition& p, Concept c) {
  std::optional<Witness> w;
  if (h.model() == HedonicModel::fa && (c == Concept::core || c == Concept::strict_core))
    w = fa_core_verify_bounded(h, p, c == Concept::core ? BlockingMode::strict : BlockingMode::weak);
  else
    w = verify(h, p, c);
  if (w) throw VerificationFailure("partition failed its stability recheck");
}

void hg_solve(Context& cx) {
  auto& o = cx.opt;
  auto& r = *cx.result;
  auto h = read_hedonic(o.instance);
  r.payload["concept"] = o.concept_name;
  std::optional<Partition> p;
  Concept c;
  if (o.concept_name == "score-fa") {
    c = Concept::strict_core;
    p = fa_scc_partition(h);
  } else if (o.concept_name == "nash-sym") {
    c = Concept::nash;
    auto res = nash_search_symmetric(h);
    r.payload["moves"] = res.moves;
    r.payload["welfare"] = res.welfare;
    p = res.partition;
  } else if (o.concept_name == "nash-ea") {
    c = Concept::nash;
    p = ea_nash_exist_fas(h, cx.limits);
  } else if (o.concept_name.rfind("brute-", 0) == 0) {
    c = parse_concept(o.concept_name.substr(6));
    p = brute_force_hedonic(h, c, cx.limits);
  } else {
    throw DomainError("unknown solve concept '" + o.concept_name + "'");
  }
  if (!p) {
    r.status = Status::no_solution;
    return;
  }
  recheck_stable(h, *p, c);
  r.payload["partition"] = partition_json(*p);
  r.status = Status::ok;
}

void hg_params(Context& cx) {
  auto& o = cx.opt;
  auto& r = *cx.result;
  auto h = read_hedonic(o.instance);
  std::optional<Partition> p;
  if (!o.partition.empty()) p = read_partition(o.partition, h.num_agents());
  auto rep = measure_parameters(h, p);
  if (!feedback_certifies(h, rep.feedback) || (rep.nash_feedback && !feedback_certifies(h, *rep.nash_feedback)))
    throw VerificationFailure("feedback set failed its recheck");
  json& pl = r.payload;
  pl["model"] = to_string(h.model());
  pl["agents"] = h.num_agents();
  pl["max_degree"] = rep.max_degree;
  pl["distinct_utilities"] = rep.distinct_utilities;
  pl["feedback"] = feedback_json(rep.feedback);
  if (rep.nash_feedback) pl["nash_feedback"] = feedback_json(*rep.nash_feedback);
  if (rep.kappa) pl["kappa"] = *rep.kappa;
  if (rep.num_coalitions) pl["coalitions"] = *rep.num_coalitions;
  r.status = Status::ok;
}

// --- gen -------------------------------------------------------------------

void emit_file(Context& cx, const std::string& text) {
  if (cx.opt.out.empty()) {
    cx.result->payload["content"] = text;
    return;
  }
  std::ofstream f(cx.opt.out);
  if (!(f << text)) throw Error("cannot write '" + cx.opt.out + "'");
  cx.result->payload["path"] = cx.opt.out;
}

void gen_clique_cc(Context& cx) {
  auto& o = cx.opt;
  BlockerSizing sizing;
  if (o.blockers == "padded") sizing = BlockerSizing::padded;
  else if (o.blockers == "literal") sizing = BlockerSizing::literal;
  else throw DomainError("unknown blocker sizing '" + o.blockers + "'");
  CliqueInput input{read_graph(o.graph), o.h};
  auto in = clique_to_cc_instance(input, sizing);
  in.validate();
  auto& pl = cx.result->payload;
  pl["rule"] = "cc";
  pl["k"] = in.k;
  pl["bound"] = in.bound->num();
  pl["alternatives"] = in.profile.num_alternatives();
  pl["voters"] = in.profile.num_voters();
  pl["blockers"] = o.blockers;
  std::ostringstream s;
  s << "# clique-cc h=" << o.h << " k=" << in.k << " bound=" << in.bound->str() << " blockers=" << o.blockers
    << '\n';
  write_profile(s, in.profile);
  emit_file(cx, s.str());
  cx.result->status = Status::ok;
}

void gen_random(Context& cx) {
  auto& o = cx.opt;
  GeneratorSpec spec{o.seed, parse_shape(o.shape)};
  cx.result->seed = o.seed;
  auto g = generate(spec);
  auto& pl = cx.result->payload;
  pl["generator"] = kGeneratorName;
  pl["shape"] = to_string(spec.shape);
  std::ostringstream s;
  s << "# generator: " << kGeneratorName << " seed=" << o.seed << " shape=" << to_string(spec.shape) << '\n';
  if (auto* prof = std::get_if<PreferenceProfile>(&g)) {
    pl["kind"] = prof->is_linear() ? "linear" : "approval";
    write_profile(s, *prof);
  } else {
    const auto& h = std::get<HedonicInstance>(g);
    pl["kind"] = to_string(h.model());
    write_hedonic(s, h);
  }
  emit_file(cx, s.str());
  cx.result->status = Status::ok;
}

// --- plumbing --------------------------------------------------------------

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse";
  if (dynamic_cast<const VerificationFailure*>(&e)) return "verification";
  if (dynamic_cast<const ResourceLimit*>(&e)) return "resource_limit";
  if (dynamic_cast<const DomainError*>(&e)) return "domain";
  if (dynamic_cast<const UnsupportedKind*>(&e)) return "unsupported";
  if (dynamic_cast<const ContractError*>(&e)) return "contract";
  if (dynamic_cast<const Error*>(&e)) return "failure";
  return "internal";
}

void fail(CommandResult& r, const std::exception& e) {
  r.status = Status::error;
  r.payload = json::object();
  r.payload["error"] = error_kind(e);
  if (auto* pe = dynamic_cast<const ParseError*>(&e)) {
    r.payload["code"] = to_string(pe->code());
    r.payload["line"] = pe->line();
  }
  r.payload["message"] = e.what();
  r.diagnostic = std::string("error: ") + e.what();
}

void add_globals(CLI::App& app, Options& o) {
  app.add_option("--output", o.output, "record or text")->check(CLI::IsMember({"record", "text"}));
  app.add_flag("--no-timing", o.no_timing, "Omit elapsed time so records are byte-identical");
  app.add_option("--time-limit", o.time_limit, "Wall-clock limit in seconds (default $COMSOC_TIME_LIMIT)");
  app.add_option("--node-budget", o.node_budget, "Search node budget, 0 for none");
  app.add_option("--seed", o.seed, "Seed for randomized commands");
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  const auto start = std::chrono::steady_clock::now();
  CommandResult r;
  r.command = args;
  Context cx{Options{}, {}, &r};
  Options& o = cx.opt;

  CLI::App app{"Multi-winner elections and hedonic games", "comsoc"};
  app.require_subcommand(1);
  add_globals(app, o);
  auto sub = [&](CLI::App* parent, const char* name, const char* help) {
    auto* s = parent->add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  auto* mw = sub(&app, "mw", "Multi-winner elections and preference structure");
  auto* hg = sub(&app, "hg", "Hedonic games");
  auto* gen = sub(&app, "gen", "Instance generators");
  mw->require_subcommand(1);
  hg->require_subcommand(1);
  gen->require_subcommand(1);

  auto* mw_s = sub(mw, "solve", "Find an optimal committee, or decide a bound");
  mw_s->add_option("--rule", o.rule, "monroe, cc, mav or pav")->required();
  mw_s->add_option("--k", o.k, "Committee size")->required();
  mw_s->add_option("--profile", o.profile, "Profile file")->required();
  mw_s->add_option("--bound", o.bound, "Misrepresentation bound R");
  mw_s->add_option("--score", o.score, "PAV score bound S");
  mw_s->add_option("--algo", o.algo)
      ->check(CLI::IsMember({"auto", "enum", "partition", "xp-misrep", "greedy", "xp-score", "kernel", "mav-deletion"}));
  mw_s->add_option("--deleted", o.deleted, "Alternatives whose removal leaves SP or SC (mav-deletion)")
      ->delimiter(',');

  auto* mw_r = sub(mw, "recognize", "Find a single-peaked or single-crossing axis");
  mw_r->add_option("--structure", o.structure, "sp or sc")->required();
  mw_r->add_option("--profile", o.profile, "Profile file")->required();

  auto* mw_d = sub(mw, "distance", "Fewest deletions to reach a structure");
  mw_d->add_option("--structure", o.structure, "sp or sc")->required();
  mw_d->add_option("--mode", o.mode, "voters or alternatives");
  mw_d->add_option("--budget", o.budget, "Largest deletion count searched")->required();
  mw_d->add_option("--profile", o.profile, "Profile file")->required();

  auto* hg_v = sub(hg, "verify", "Check a partition for stability");
  hg_v->add_option("--concept", o.concept_name, "nash, is, core or score (strict core)")->required();
  hg_v->add_option("--instance", o.instance, "Hedonic instance file")->required();
  hg_v->add_option("--partition", o.partition, "Partition file")->required();
  hg_v->add_option("--algo", o.hg_algo, "exact, bounded or colorcode");
  hg_v->add_option("--delta", o.delta, "Error probability for colorcode");

  auto* hg_s = sub(hg, "solve", "Search for a stable partition");
  hg_s->add_option("--concept", o.concept_name,
                   "score-fa, nash-sym, nash-ea, or brute-{nash,is,core,score}")
      ->required();
  hg_s->add_option("--instance", o.instance, "Hedonic instance file")->required();

  auto* hg_p = sub(hg, "params", "Measure structural parameters");
  hg_p->add_option("--instance", o.instance, "Hedonic instance file")->required();
  hg_p->add_option("--partition", o.partition, "Partition file");

  auto* gen_c = sub(gen, "clique-cc", "CC instance encoding an h-clique question");
  gen_c->set_help_flag("--help", "Print this help message and exit");  // frees -h for the clique size
  gen_c->add_option("--graph", o.graph, "Graph file")->required();
  gen_c->add_option("--h", o.h, "Clique size")->required();
  gen_c->add_option("--blockers", o.blockers, "padded or literal");
  gen_c->add_option("--out", o.out, "Write the profile here");

  auto* gen_r = sub(gen, "random", "Seeded random instance");
  gen_r->add_option("--shape", o.shape, "e.g. random_approval(5,5,2)")->required();
  gen_r->add_option("--out", o.out, "Write the instance here");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::Error& e) {
    std::ostringstream out, err;
    int code = app.exit(e, out, err);
    if (code == 0) {
      r.help = out.str();
      r.status = Status::ok;
      return r;
    }
    r.status = Status::error;
    r.payload["error"] = "usage";
    r.payload["message"] = e.what();
    r.diagnostic = err.str();
    return r;
  }
  r.record = o.output == "record";
  r.timing = !o.no_timing;

  try {
    double limit = o.time_limit;
    if (limit <= 0)
      if (const char* env = std::getenv("COMSOC_TIME_LIMIT")) limit = std::atof(env);
    if (limit > 0)
      cx.limits.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                       std::chrono::duration<double>(limit));
    cx.limits.node_budget = o.node_budget;

    if (mw_s->parsed()) mw_solve(cx);
    else if (mw_r->parsed()) mw_recognize(cx);
    else if (mw_d->parsed()) mw_distance(cx);
    else if (hg_v->parsed()) hg_verify(cx);
    else if (hg_s->parsed()) hg_solve(cx);
    else if (hg_p->parsed()) hg_params(cx);
    else if (gen_c->parsed()) gen_clique_cc(cx);
    else if (gen_r->parsed()) gen_random(cx);
  } catch (const std::exception& e) {
    fail(r, e);
  }
  r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string render(const CommandResult& r) {
  if (r.help) return *r.help;
  json rec;
  rec["command"] = r.command;
  rec["status"] = to_string(r.status);
  rec["payload"] = r.payload;
  if (r.timing) rec["elapsed"] = r.elapsed;
  rec["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  if (r.record) return rec.dump() + "\n";

  std::ostringstream s;
  for (const auto& [key, value] : rec.items()) {
    if (key == "payload") continue;
    s << key << ": ";
    if (key == "command") {
      for (std::size_t i = 0; i < r.command.size(); ++i) s << (i ? " " : "") << r.command[i];
    } else {
      s << (value.is_string() ? value.get<std::string>() : value.dump());
    }
    s << '\n';
  }
  for (const auto& [key, value] : r.payload.items()) {
    if (key == "content") continue;
    s << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  if (r.payload.contains("content")) s << r.payload["content"].get<std::string>();
  return s.str();
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + std::min(argc, 1), argv + argc);
  CommandResult r = run(args);
  out << render(r);
  if (!r.diagnostic.empty()) {
    err << r.diagnostic;
    if (r.diagnostic.back() != '\n') err << '\n';
  }
  return r.exit_code();
}

}  // namespace comsoc
