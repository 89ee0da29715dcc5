// Copyright 2026 The ldpcpd Authors.
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

#include "ldpcpd/experiments.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "ldpcpd/error.h"
#include "ldpcpd/version.h"

namespace ldpcpd {
namespace {

using nlohmann::json;

std::string ToString(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

const char* KindName(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::kAccuracy:
      return "accuracy";
    case ExperimentKind::kEpsSweep:
      return "eps_sweep";
    case ExperimentKind::kExponentRatio:
      return "exponent_ratio";
  }
  return "accuracy";
}

const char* MechanismName(MechanismKind m) {
  switch (m) {
    case MechanismKind::kNone:
      return "none";
    case MechanismKind::kRr:
      return "rr";
    case MechanismKind::kBm:
      return "bm";
  }
  return "none";
}

// ---- config JSON ----------------------------------------------------------

void RejectUnknown(const json& obj, std::initializer_list<const char*> keys,
                   const std::string& where) {
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : obj.items()) {
    if (!allowed.count(k)) {
      throw DomainError(where + ": unknown key '" + k + "'");
    }
  }
}

template <typename T>
T Get(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) {
    throw DomainError(where + ": missing key '" + key + "'");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw DomainError(where + ": bad value for '" + key + "'");
  }
}

std::size_t GetCount(const json& obj, const char* key,
                     const std::string& where) {
  const json& v = obj.contains(key) ? obj.at(key) : json();
  if (!v.is_number_unsigned() &&
      !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw DomainError(where + ": '" + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

FamilySpec FamilyFromJson(const json& j, const std::string& where) {
  if (!j.is_object()) throw DomainError(where + ": expected an object");
  const auto family = Get<std::string>(j, "family", where);
  if (family == "bernoulli") {
    RejectUnknown(j, {"family", "theta"}, where);
    return BernoulliFamily{Get<double>(j, "theta", where)};
  }
  if (family == "binomial") {
    RejectUnknown(j, {"family", "n_b", "p"}, where);
    return BinomialFamily{GetCount(j, "n_b", where),
                          Get<double>(j, "p", where)};
  }
  if (family == "truncated_poisson") {
    RejectUnknown(j, {"family", "lambda", "m"}, where);
    return TruncatedPoissonFamily{Get<double>(j, "lambda", where),
                                  GetCount(j, "m", where)};
  }
  if (family == "truncated_geometric") {
    RejectUnknown(j, {"family", "p", "m"}, where);
    return TruncatedGeometricFamily{Get<double>(j, "p", where),
                                    GetCount(j, "m", where)};
  }
  if (family == "explicit") {
    RejectUnknown(j, {"family", "pmf"}, where);
    return ExplicitFamily{Get<std::vector<double>>(j, "pmf", where)};
  }
  throw DomainError(where + ": unknown family '" + family + "'");
}

json FamilyToJson(const FamilySpec& spec) {
  struct V {
    json operator()(const BernoulliFamily& f) const {
      return {{"family", "bernoulli"}, {"theta", f.theta}};
    }
    json operator()(const BinomialFamily& f) const {
      return {{"family", "binomial"}, {"n_b", f.trials}, {"p", f.p}};
    }
    json operator()(const TruncatedPoissonFamily& f) const {
      return {{"family", "truncated_poisson"},
              {"lambda", f.lambda},
              {"m", f.m}};
    }
    json operator()(const TruncatedGeometricFamily& f) const {
      return {{"family", "truncated_geometric"}, {"p", f.p}, {"m", f.m}};
    }
    json operator()(const ExplicitFamily& f) const {
      return {{"family", "explicit"}, {"pmf", f.pmf}};
    }
  };
  return std::visit(V{}, spec);
}

// ---- simulation core ------------------------------------------------------

std::size_t ResolveThreads(std::size_t requested, std::size_t work) {
  std::size_t t = requested;
  if (t == 0) t = std::max(1u, std::thread::hardware_concurrency());
  return std::max<std::size_t>(1, std::min(t, work));
}

// Calls body(t) for every trial; each trial writes only its own slots.
template <typename Body>
void ForEachTrial(std::size_t trials, std::size_t threads, Body body) {
  const std::size_t workers = ResolveThreads(threads, trials);
  if (workers == 1) {
    for (std::size_t t = 0; t < trials; ++t) body(t);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t chunk = (trials + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(trials, begin + chunk);
    pool.emplace_back([&, w, begin, end] {
      try {
        for (std::size_t t = begin; t < end; ++t) body(t);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::size_t Deviation(std::size_t k_hat, std::size_t k_star) {
  return k_hat > k_star ? k_hat - k_star : k_star - k_hat;
}

struct Pair {
  Distribution p0;
  Distribution p1;
};

Pair MakePair(const ExperimentConfig& cfg) {
  Pair pair{MakeFamily(cfg.p0), MakeFamily(cfg.p1)};
  if (pair.p0.size() != pair.p1.size()) {
    throw DomainError("config: p0 and p1 have different alphabet sizes");
  }
  return pair;
}

std::vector<std::pair<std::string, std::string>> Metadata(
    const ExperimentConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> m = {
      {"kind", KindName(cfg.kind)},
      {"p0", FamilyLabel(cfg.p0)},
      {"p1", FamilyLabel(cfg.p1)},
      {"n", std::to_string(cfg.n)},
      {"k_star", std::to_string(cfg.k_star)},
      {"trials", std::to_string(cfg.trials)},
      {"mechanism", MechanismName(cfg.mechanism)},
      {"master_seed", std::to_string(cfg.master_seed)},
      {"truncated_support", "{0,...,m}"},
      {"beta_floor", "1/(2*trials)"},
      {"ctilde_form",
       cfg.ctilde_form == CtildeForm::kSquared ? "squared" : "verbatim"},
      {"clip_ratio", cfg.clip_ratio ? "true" : "false"},
  };
  return m;
}

void RequireEpsilonGrid(const ExperimentConfig& cfg) {
  if (!cfg.epsilon_grid || cfg.epsilon_grid->empty()) {
    throw DomainError("config: epsilon_grid must be non-empty");
  }
}

// Deviations of the non-private, RR and BM detectors for every epsilon,
// with common random numbers across columns.
struct SweepDeviations {
  std::vector<std::size_t> nonprivate;
  std::vector<std::vector<std::size_t>> rr;
  std::vector<std::vector<std::size_t>> bm;
};

SweepDeviations RunSweepTrials(const ExperimentConfig& cfg, const Pair& pair,
                               const RunOptions& options) {
  const auto& grid = *cfg.epsilon_grid;
  std::vector<MechanismPlan> rr_plans;
  std::vector<MechanismPlan> bm_plans;
  for (double eps : grid) {
    rr_plans.push_back(
        PlanRandomizedResponse(pair.p0, pair.p1, PrivacyBudget(eps)));
    bm_plans.push_back(
        PlanBinaryMechanism(pair.p0, pair.p1, PrivacyBudget(eps)));
  }
  SweepDeviations out;
  out.nonprivate.resize(cfg.trials);
  out.rr.assign(grid.size(), std::vector<std::size_t>(cfg.trials));
  out.bm.assign(grid.size(), std::vector<std::size_t>(cfg.trials));
  ForEachTrial(cfg.trials, options.threads, [&](std::size_t t) {
    CounterRng data_rng(cfg.master_seed, t, StreamTag::kData);
    const Dataset data =
        SampleDataset(pair.p0, pair.p1, cfg.n, cfg.k_star, data_rng);
    out.nonprivate[t] =
        Deviation(Detect(data, pair.p0, pair.p1).k_hat, cfg.k_star);
    for (std::size_t e = 0; e < grid.size(); ++e) {
      CounterRng rr_rng(cfg.master_seed, t, StreamTag::kPrivatize);
      out.rr[e][t] =
          Deviation(DetectPrivately(data, rr_plans[e], rr_rng).k_hat,
                    cfg.k_star);
      CounterRng bm_rng(cfg.master_seed, t, StreamTag::kPrivatize);
      out.bm[e][t] =
          Deviation(DetectPrivately(data, bm_plans[e], bm_rng).k_hat,
                    cfg.k_star);
    }
  });
  return out;
}

}  // namespace

void ExperimentConfig::Validate() const {
  if (n < 2) throw DomainError("config: n must be at least 2");
  if (k_star < 2 || k_star > n) {
    throw DomainError("config: k_star must lie in [2, n]");
  }
  if (trials < 1) throw DomainError("config: trials must be at least 1");
  if (alpha_grid.empty()) throw DomainError("config: alpha_grid is empty");
  for (double a : alpha_grid) {
    if (!(a >= 1.0 && a <= static_cast<double>(n))) {
      throw DomainError("config: every alpha must lie in [1, n]");
    }
  }
  if (epsilon_grid) {
    for (double e : *epsilon_grid) {
      if (!(e > 0.0) || !std::isfinite(e)) {
        throw DomainError("config: every epsilon must be positive and finite");
      }
    }
  }
  if (kind == ExperimentKind::kAccuracy && mechanism != MechanismKind::kNone &&
      (!epsilon_grid || epsilon_grid->size() != 1)) {
    throw DomainError(
        "config: a private accuracy curve needs exactly one epsilon");
  }
  if (kind != ExperimentKind::kAccuracy &&
      (!epsilon_grid || epsilon_grid->empty())) {
    throw DomainError("config: epsilon_grid must be non-empty");
  }
}

ExperimentConfig ConfigFromJson(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw DomainError("config: expected a JSON object");
  const std::string where = "config";
  RejectUnknown(j,
                {"kind", "p0", "p1", "n", "k_star", "trials", "alpha_grid",
                 "epsilon_grid", "mechanism", "master_seed", "ctilde_form",
                 "clip_ratio"},
                where);
  ExperimentConfig cfg;
  if (j.contains("kind")) {
    const auto k = Get<std::string>(j, "kind", where);
    if (k == "accuracy") {
      cfg.kind = ExperimentKind::kAccuracy;
    } else if (k == "eps_sweep") {
      cfg.kind = ExperimentKind::kEpsSweep;
    } else if (k == "exponent_ratio") {
      cfg.kind = ExperimentKind::kExponentRatio;
    } else {
      throw DomainError("config: unknown kind '" + k + "'");
    }
  }
  cfg.p0 = FamilyFromJson(j.value("p0", json()), "config.p0");
  cfg.p1 = FamilyFromJson(j.value("p1", json()), "config.p1");
  cfg.n = GetCount(j, "n", where);
  cfg.k_star = GetCount(j, "k_star", where);
  cfg.trials = GetCount(j, "trials", where);
  cfg.alpha_grid = Get<std::vector<double>>(j, "alpha_grid", where);
  if (j.contains("epsilon_grid") && !j.at("epsilon_grid").is_null()) {
    cfg.epsilon_grid = Get<std::vector<double>>(j, "epsilon_grid", where);
  }
  if (j.contains("mechanism")) {
    const auto m = Get<std::string>(j, "mechanism", where);
    if (m == "none") {
      cfg.mechanism = MechanismKind::kNone;
    } else if (m == "rr") {
      cfg.mechanism = MechanismKind::kRr;
    } else if (m == "bm") {
      cfg.mechanism = MechanismKind::kBm;
    } else {
      throw DomainError("config: unknown mechanism '" + m + "'");
    }
  }
  cfg.master_seed = Get<std::uint64_t>(j, "master_seed", where);
  if (j.contains("ctilde_form")) {
    const auto f = Get<std::string>(j, "ctilde_form", where);
    if (f == "verbatim") {
      cfg.ctilde_form = CtildeForm::kVerbatim;
    } else if (f == "squared") {
      cfg.ctilde_form = CtildeForm::kSquared;
    } else {
      throw DomainError("config: unknown ctilde_form '" + f + "'");
    }
  }
  if (j.contains("clip_ratio")) {
    cfg.clip_ratio = Get<bool>(j, "clip_ratio", where);
  }
  cfg.Validate();
  return cfg;
}

std::string ConfigToJson(const ExperimentConfig& cfg) {
  nlohmann::ordered_json j;
  j["kind"] = KindName(cfg.kind);
  j["p0"] = FamilyToJson(cfg.p0);
  j["p1"] = FamilyToJson(cfg.p1);
  j["n"] = cfg.n;
  j["k_star"] = cfg.k_star;
  j["trials"] = cfg.trials;
  j["alpha_grid"] = cfg.alpha_grid;
  if (cfg.epsilon_grid) j["epsilon_grid"] = *cfg.epsilon_grid;
  j["mechanism"] = MechanismName(cfg.mechanism);
  j["master_seed"] = cfg.master_seed;
  j["ctilde_form"] =
      cfg.ctilde_form == CtildeForm::kSquared ? "squared" : "verbatim";
  j["clip_ratio"] = cfg.clip_ratio;
  return j.dump(2) + "\n";
}

Dataset SampleDataset(const Distribution& p0, const Distribution& p1,
                      std::size_t n, std::size_t k_star, CounterRng& rng) {
  RequireSameAlphabet(p0, p1);
  if (k_star < 2 || k_star > n) {
    throw DomainError("sample: k_star must lie in [2, n]");
  }
  auto draw = [](const Distribution& p, double u) {
    double cumulative = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (p[x] == 0.0) continue;
      cumulative += p[x];
      last_positive = x;
      if (u < cumulative) return x;
    }
    return last_positive;
  };
  std::vector<std::uint32_t> symbols(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Distribution& p = i + 1 < k_star ? p0 : p1;
    symbols[i] = static_cast<std::uint32_t>(draw(p, rng.Uniform()));
  }
  return Dataset(std::move(symbols), p0.size(), k_star);
}

std::vector<std::size_t> SimulateDeviations(
    const Distribution& p0, const Distribution& p1, std::size_t n,
    std::size_t k_star, std::size_t trials, std::uint64_t master_seed,
    const std::optional<MechanismPlan>& plan, const RunOptions& options) {
  std::vector<std::size_t> out(trials);
  ForEachTrial(trials, options.threads, [&](std::size_t t) {
    CounterRng data_rng(master_seed, t, StreamTag::kData);
    const Dataset data = SampleDataset(p0, p1, n, k_star, data_rng);
    std::size_t k_hat;
    if (plan) {
      CounterRng noise(master_seed, t, StreamTag::kPrivatize);
      k_hat = DetectPrivately(data, *plan, noise).k_hat;
    } else {
      k_hat = Detect(data, p0, p1).k_hat;
    }
    out[t] = Deviation(k_hat, k_star);
  });
  return out;
}

double EmpiricalBeta(const std::vector<std::size_t>& deviations,
                     double alpha) {
  if (deviations.empty()) throw DomainError("empirical beta: no trials");
  std::size_t misses = 0;
  for (std::size_t d : deviations) {
    if (static_cast<double>(d) > alpha) ++misses;
  }
  return static_cast<double>(misses) / static_cast<double>(deviations.size());
}

ResultTable RunAccuracyCurve(const ExperimentConfig& cfg,
                             const RunOptions& options) {
  cfg.Validate();
  const Pair pair = MakePair(cfg);
  std::optional<MechanismPlan> plan;
  std::optional<double> eps;
  if (cfg.mechanism != MechanismKind::kNone) {
    if (!cfg.epsilon_grid || cfg.epsilon_grid->size() != 1) {
      throw DomainError(
          "config: a private accuracy curve needs exactly one epsilon");
    }
    eps = cfg.epsilon_grid->front();
    plan = cfg.mechanism == MechanismKind::kRr
               ? PlanRandomizedResponse(pair.p0, pair.p1, PrivacyBudget(*eps))
               : PlanBinaryMechanism(pair.p0, pair.p1, PrivacyBudget(*eps));
  }
  const auto deviations = SimulateDeviations(pair.p0, pair.p1, cfg.n,
                                             cfg.k_star, cfg.trials,
                                             cfg.master_seed, plan, options);
  ResultTable table;
  table.columns = {"alpha", "beta_empirical", "beta_theory", "trials"};
  table.metadata = Metadata(cfg);
  if (eps) table.metadata.emplace_back("epsilon", ToString(*eps));
  for (double alpha : cfg.alpha_grid) {
    BoundInputs in = InputsFromPair(pair.p0, pair.p1, cfg.n, alpha);
    double theory = 1.0;
    switch (cfg.mechanism) {
      case MechanismKind::kNone:
        theory = TheoremNonPrivate(in).beta;
        break;
      case MechanismKind::kRr:
        in.epsilon = eps;
        theory = TheoremRandomizedResponse(in).beta;
        break;
      case MechanismKind::kBm:
        in.epsilon = eps;
        in.s_tau_gap = QuantizerGap(pair.p0, pair.p1, plan->tau->quantizer);
        theory = TheoremBinaryMechanism(in, cfg.ctilde_form).beta;
        break;
    }
    table.rows.push_back({alpha, EmpiricalBeta(deviations, alpha), theory,
                          static_cast<double>(cfg.trials)});
  }
  return table;
}

ResultTable RunEpsSweep(const ExperimentConfig& cfg,
                        const RunOptions& options) {
  cfg.Validate();
  RequireEpsilonGrid(cfg);
  const Pair pair = MakePair(cfg);
  const double alpha = cfg.alpha_grid.front();
  const SweepDeviations dev = RunSweepTrials(cfg, pair, options);
  ResultTable table;
  table.columns = {"epsilon", "beta_rr", "beta_bm", "beta_nonprivate"};
  table.metadata = Metadata(cfg);
  table.metadata.emplace_back("alpha", ToString(alpha));
  const double np = EmpiricalBeta(dev.nonprivate, alpha);
  for (std::size_t e = 0; e < cfg.epsilon_grid->size(); ++e) {
    table.rows.push_back({(*cfg.epsilon_grid)[e],
                          EmpiricalBeta(dev.rr[e], alpha),
                          EmpiricalBeta(dev.bm[e], alpha), np});
  }
  return table;
}

ResultTable RunExponentRatio(const ExperimentConfig& cfg,
                             const RunOptions& options) {
  cfg.Validate();
  RequireEpsilonGrid(cfg);
  const Pair pair = MakePair(cfg);
  const double alpha = cfg.alpha_grid.front();
  const SweepDeviations dev = RunSweepTrials(cfg, pair, options);
  auto exponent = [&](const std::vector<std::size_t>& d) {
    return ErrorExponent(alpha, FloorBeta(EmpiricalBeta(d, alpha), cfg.trials));
  };
  auto ratio = [&](double v) { return cfg.clip_ratio ? std::min(1.0, v) : v; };
  const double lambda_np = exponent(dev.nonprivate);
  ResultTable table;
  table.columns = {"epsilon", "ratio_rr", "ratio_bm", "tanh_sq"};
  table.metadata = Metadata(cfg);
  table.metadata.emplace_back("alpha", ToString(alpha));
  table.metadata.emplace_back(
      "beta_nonprivate", ToString(EmpiricalBeta(dev.nonprivate, alpha)));
  for (std::size_t e = 0; e < cfg.epsilon_grid->size(); ++e) {
    const double eps = (*cfg.epsilon_grid)[e];
    table.rows.push_back({eps, ratio(exponent(dev.rr[e]) / lambda_np),
                          ratio(exponent(dev.bm[e]) / lambda_np),
                          PrivacyCostFactor(eps)});
  }
  return table;
}

ResultTable RunExperiment(const ExperimentConfig& cfg,
                          const RunOptions& options) {
  switch (cfg.kind) {
    case ExperimentKind::kAccuracy:
      return RunAccuracyCurve(cfg, options);
    case ExperimentKind::kEpsSweep:
      return RunEpsSweep(cfg, options);
    case ExperimentKind::kExponentRatio:
      return RunExponentRatio(cfg, options);
  }
  throw DomainError("config: unknown experiment kind");
}

}  // namespace ldpcpd
