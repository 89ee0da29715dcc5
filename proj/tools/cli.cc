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

#include "cli.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "ldpcpd/bounds.h"
#include "ldpcpd/channel.h"
#include "ldpcpd/detector.h"
#include "ldpcpd/divergence.h"
#include "ldpcpd/error.h"
#include "ldpcpd/experiments.h"
#include "ldpcpd/mechanisms.h"
#include "ldpcpd/results.h"
#include "ldpcpd/sdpi.h"
#include "ldpcpd/version.h"

namespace ldpcpd::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr char kThreadsEnv[] = "LDPCPD_THREADS";

class Printer {
 public:
  explicit Printer(const bool& full) : full_(full) {}

  std::string operator()(double v) const {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), full_ ? "%.17g" : "%.6g", v);
    return buf;
  }

  // The printed value as a JSON number, or null when not finite.
  Json AsJson(double v) const {
    if (!std::isfinite(v)) return nullptr;
    return std::strtod((*this)(v).c_str(), nullptr);
  }

 private:
  const bool& full_;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Reals separated by commas or whitespace. "@path" reads them from a file.
std::vector<double> ParseReals(const std::string& text) {
  const std::string body = !text.empty() && text[0] == '@'
                               ? ReadFile(text.substr(1))
                               : text;
  std::vector<double> out;
  std::size_t i = 0;
  while (i < body.size()) {
    while (i < body.size() && (body[i] == ',' || std::isspace(
                                   static_cast<unsigned char>(body[i])))) {
      ++i;
    }
    if (i >= body.size()) break;
    std::size_t j = i;
    while (j < body.size() && body[j] != ',' &&
           !std::isspace(static_cast<unsigned char>(body[j]))) {
      ++j;
    }
    double v = 0.0;
    const auto res = std::from_chars(body.data() + i, body.data() + j, v);
    if (res.ec != std::errc() || res.ptr != body.data() + j) {
      throw DomainError("cannot parse number '" + body.substr(i, j - i) + "'");
    }
    out.push_back(v);
    i = j;
  }
  return out;
}

Distribution ParsePmf(const std::string& text) {
  return Distribution(ParseReals(text));
}

std::vector<std::uint32_t> ParseSymbols(const std::string& text) {
  std::vector<std::uint32_t> out;
  for (double v : ParseReals(text)) {
    if (!(v >= 0.0) || v != std::floor(v) || v > 4294967295.0) {
      throw DataError("symbols must be non-negative integers");
    }
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

RenyiOrder ParseOrder(const std::string& text) {
  if (text == "inf" || text == "infinity") return RenyiOrder::Infinity();
  const auto v = ParseReals(text);
  if (v.size() != 1) throw DomainError("order must be a single number");
  return RenyiOrder(v[0]);
}

const char* ErrorCategory(const std::exception& e) {
  if (dynamic_cast<const DimensionError*>(&e)) return "dimension";
  if (dynamic_cast<const DomainError*>(&e)) return "domain";
  if (dynamic_cast<const DataError*>(&e)) return "data";
  if (dynamic_cast<const Error*>(&e)) return "io";
  return "domain";
}

std::string OneLine(std::string s) {
  for (char& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

// ---- subcommands ----------------------------------------------------------

struct DivergenceArgs {
  std::string kind;
  std::string p;
  std::string q;
  std::string rho = "1";
  double lambda = 0.5;
};

void RunDivergence(const DivergenceArgs& a, const Printer& fmt,
                   std::ostream& out) {
  const Distribution p = ParsePmf(a.p);
  const Distribution q = ParsePmf(a.q);
  double value = 0.0;
  if (a.kind == "tv") {
    value = TvDistance(p, q);
  } else if (a.kind == "kl") {
    value = KlDivergence(p, q);
  } else if (a.kind == "renyi") {
    value = RenyiDivergence(ParseOrder(a.rho), p, q);
  } else if (a.kind == "jeffreys-renyi") {
    value = JeffreysRenyi(ParseOrder(a.rho), p, q);
  } else if (a.kind == "chernoff") {
    value = Chernoff(p, q).value;
  } else {
    value = FLambdaDivergence(a.lambda, p, q);
  }
  out << fmt(value) << "\n";
}

struct MechanismArgs {
  std::string kind;
  double eps = 0.0;
  std::size_t q = 2;
  std::string p0;
  std::string p1;
  std::optional<double> tau;
};

Json RowsJson(const Channel& w, const Printer& fmt) {
  Json rows = Json::array();
  for (std::size_t x = 0; x < w.input_size(); ++x) {
    Json row = Json::array();
    for (double v : w.row(x)) row.push_back(fmt.AsJson(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

void RunMechanism(const MechanismArgs& a, const Printer& fmt,
                  std::ostream& out) {
  const PrivacyBudget eps(a.eps);
  Json doc;
  doc["kind"] = a.kind;
  doc["epsilon"] = fmt.AsJson(a.eps);
  if (a.kind == "rr") {
    const Channel w = RandomizedResponseChannel(a.q, eps);
    doc["ldp"] = VerifyLdp(w, eps);
    doc["rows"] = RowsJson(w, fmt);
  } else {
    if (a.p0.empty() || a.p1.empty()) {
      throw DomainError("binary mechanism needs --p0 and --p1");
    }
    const Distribution p0 = ParsePmf(a.p0);
    const Distribution p1 = ParsePmf(a.p1);
    Quantizer quantizer =
        a.tau ? MakeQuantizer(p0, p1, *a.tau)
              : SelectTauStar(p0, p1, eps).quantizer;
    const Channel w = BinaryMechanism(quantizer, eps);
    Json set = Json::array();
    for (std::size_t x = 0; x < quantizer.in_s.size(); ++x) {
      if (quantizer.in_s[x]) set.push_back(x);
    }
    doc["tau"] = fmt.AsJson(quantizer.tau);
    doc["set"] = std::move(set);
    doc["ich"] = fmt.AsJson(
        Chernoff(Pushforward(p0, w), Pushforward(p1, w)).value);
    doc["ldp"] = VerifyLdp(w, eps);
    doc["rows"] = RowsJson(w, fmt);
  }
  out << doc.dump() << "\n";
}

struct SdpiArgs {
  std::string channel = "rr";
  std::size_t q = 2;
  double eps = 1.0;
  std::string channel_file;
  std::string kind;
  std::string rho = "2";
  std::string method = "auto";
};

void RunSdpi(const SdpiArgs& a, const Printer& fmt, std::ostream& out) {
  std::optional<SymmetricChannelParams> params;
  std::optional<Channel> w;
  if (a.channel == "rr") {
    params = SymmetricChannelParams::RandomizedResponse(a.q, PrivacyBudget(a.eps));
    w = params->ToChannel();
  } else {
    if (a.channel_file.empty()) {
      throw DomainError("--channel file needs --channel-file");
    }
    w = ChannelFromJson(ReadFile(a.channel_file)).channel;
  }
  const bool closed_available =
      params && (a.kind == "tv" || a.kind == "renyi-inf" ||
                 a.kind == "jeffreys-inf");
  if (a.method == "closed" && !closed_available && a.kind != "tv") {
    throw DomainError("no closed form for this channel and divergence");
  }
  SdpiEstimate est;
  std::string method;
  if (closed_available && a.method != "numeric") {
    method = "closed_form";
    if (a.kind == "tv") {
      est = EtaTvSymmetric(*params);
    } else if (a.kind == "renyi-inf") {
      est = EtaRenyiInfSymmetric(*params);
    } else {
      est = EtaJeffreysInfSymmetric(*params);
    }
  } else if (a.kind == "tv") {
    method = "dobrushin";
    est = EtaTvDobrushin(*w);
  } else {
    method = "numeric";
    SdpiTarget target;
    if (a.kind == "kl") {
      target.rho = RenyiOrder(1.0);
    } else if (a.kind == "renyi") {
      target.rho = ParseOrder(a.rho);
    } else if (a.kind == "renyi-inf") {
      target.rho = RenyiOrder::Infinity();
    } else {
      target.rho = RenyiOrder::Infinity();
      target.jeffreys = true;
    }
    est = EtaNumeric(*w, target);
  }
  Json doc;
  doc["kind"] = a.kind;
  doc["method"] = method;
  doc["eta"] = fmt.AsJson(est.eta);
  doc["achieved_ratio"] = fmt.AsJson(est.achieved_ratio);
  doc["degenerate"] = est.degenerate;
  out << doc.dump() << "\n";
}

struct DetectArgs {
  std::string p0;
  std::string p1;
  std::string data;
  std::string symbols;
  std::optional<std::size_t> k_star;
  std::string mechanism = "none";
  std::optional<double> eps;
  std::uint64_t seed = 0;
  std::string scores;
};

void RunDetect(const DetectArgs& a, const Printer& fmt, std::ostream& out) {
  const Distribution p0 = ParsePmf(a.p0);
  const Distribution p1 = ParsePmf(a.p1);
  RequireSameAlphabet(p0, p1);
  if (a.data.empty() == a.symbols.empty()) {
    throw DomainError("give exactly one of --data and --symbols");
  }
  const auto symbols =
      ParseSymbols(a.data.empty() ? a.symbols : "@" + a.data);
  const Dataset data(symbols, p0.size(), a.k_star);
  DetectionResult result;
  if (a.mechanism == "none") {
    result = Detect(data, p0, p1);
  } else {
    if (!a.eps) throw DomainError("a private detector needs --eps");
    const PrivacyBudget eps(*a.eps);
    CounterRng rng(a.seed, 0, StreamTag::kPrivatize);
    result = a.mechanism == "rr" ? RrCpd(data, p0, p1, eps, rng)
                                 : BmCpd(data, p0, p1, eps, rng);
  }
  if (!a.scores.empty()) {
    std::ofstream f(a.scores, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open '" + a.scores + "' for writing");
    f << "k,score\n";
    for (std::size_t k = 0; k < result.scores.size(); ++k) {
      f << (k + 1) << "," << fmt(result.scores[k].value()) << "\n";
    }
    if (!f) throw Error("failed writing '" + a.scores + "'");
  }
  out << result.k_hat << "\n";
}

struct BoundArgs {
  std::string p0;
  std::string p1;
  std::size_t n = 2000;
  std::string alpha;
  std::string mechanism = "none";
  std::optional<double> eps;
  std::string ctilde = "verbatim";
};

void RunBound(const BoundArgs& a, const Printer& fmt, std::ostream& out) {
  const Distribution p0 = ParsePmf(a.p0);
  const Distribution p1 = ParsePmf(a.p1);
  const auto alphas = ParseReals(a.alpha);
  if (alphas.empty()) throw DomainError("--alpha needs at least one value");
  if (a.mechanism != "none" && !a.eps) {
    throw DomainError("a private bound needs --eps");
  }
  std::optional<double> gap;
  if (a.mechanism == "bm") {
    gap = QuantizerGap(p0, p1,
                       SelectTauStar(p0, p1, PrivacyBudget(*a.eps)).quantizer);
  }
  out << "alpha,bound_a,bound_b,beta,bound_a_closed,s,c,ich";
  if (a.mechanism == "rr") out << ",s_r,c_r";
  if (a.mechanism == "bm") out << ",s_b,c_b,c_tilde_b";
  out << "\n";
  for (double alpha : alphas) {
    BoundInputs in = InputsFromPair(p0, p1, a.n, alpha);
    BoundReport r;
    if (a.mechanism == "none") {
      r = TheoremNonPrivate(in);
    } else if (a.mechanism == "rr") {
      in.epsilon = a.eps;
      r = TheoremRandomizedResponse(in);
    } else {
      in.epsilon = a.eps;
      in.s_tau_gap = gap;
      r = TheoremBinaryMechanism(in, a.ctilde == "squared"
                                         ? CtildeForm::kSquared
                                         : CtildeForm::kVerbatim);
    }
    out << fmt(alpha) << "," << fmt(r.bound_a) << "," << fmt(r.bound_b)
        << "," << fmt(r.beta) << "," << fmt(r.bound_a_closed) << ","
        << fmt(in.s) << "," << fmt(in.c) << "," << fmt(in.ich);
    if (a.mechanism == "rr") {
      out << "," << fmt(r.s_eff) << "," << fmt(r.c_eff);
    } else if (a.mechanism == "bm") {
      out << "," << fmt(r.s_eff) << "," << fmt(*r.c_second) << ","
          << fmt(r.c_eff);
    }
    out << "\n";
  }
}

struct SimulateArgs {
  std::string config;
  std::string out;
  std::string format = "csv";
  std::optional<std::size_t> threads;
  std::optional<std::uint64_t> seed;
};

std::size_t DefaultThreads() {
  const char* env = std::getenv(kThreadsEnv);
  if (env == nullptr || *env == '\0') return 0;
  std::size_t v = 0;
  const std::string_view s(env);
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw DomainError(std::string(kThreadsEnv) + " must be an integer");
  }
  return v;
}

void RunSimulate(const SimulateArgs& a, std::ostream& out) {
  ExperimentConfig cfg = ConfigFromJson(ReadFile(a.config));
  if (a.seed) cfg.master_seed = *a.seed;
  RunOptions options;
  options.threads = a.threads ? *a.threads : DefaultThreads();
  const ResultTable table = RunExperiment(cfg, options);
  const ResultFormat format = ParseResultFormat(a.format);
  if (a.out.empty()) {
    out << (format == ResultFormat::kCsv ? FormatCsv(table)
                                         : FormatJson(table));
  } else {
    WriteResults(table, a.out, format);
  }
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  bool full_precision = false;
  const Printer fmt(full_precision);

  CLI::App app{"Offline change-point detection under local differential "
               "privacy."};
  app.name(args.empty() ? "ldpcpd" : args[0]);
  app.set_version_flag("--version", std::string(kVersion));
  app.add_flag("--full-precision", full_precision,
               "Print numbers with 17 significant digits instead of 6");
  app.require_subcommand(1);
  app.fallthrough();

  std::function<void()> action;

  DivergenceArgs div;
  auto* cmd = app.add_subcommand(
      "divergence",
      "Evaluate a divergence between two pmfs (nats). Prints one number.");
  cmd->add_option("--kind", div.kind, "Divergence")
      ->required()
      ->check(CLI::IsMember(
          {"tv", "kl", "renyi", "jeffreys-renyi", "chernoff", "f-lambda"}));
  cmd->add_option("--p", div.p, "First pmf, comma separated or @file")
      ->required();
  cmd->add_option("--q", div.q, "Second pmf, comma separated or @file")
      ->required();
  cmd->add_option("--rho", div.rho, "Renyi order >= 1 or 'inf'")
      ->capture_default_str();
  cmd->add_option("--lambda", div.lambda, "f_lambda parameter in (0, 1)")
      ->capture_default_str();
  cmd->callback([&] { action = [&] { RunDivergence(div, fmt, out); }; });

  MechanismArgs mech;
  cmd = app.add_subcommand(
      "mechanism",
      "Build a privatizing channel. Prints a JSON object with keys kind, "
      "epsilon, [tau, set, ich,] ldp, rows.");
  cmd->add_option("--kind", mech.kind, "rr or bm")
      ->required()
      ->check(CLI::IsMember({"rr", "bm"}));
  cmd->add_option("--eps", mech.eps, "Privacy budget")->required();
  cmd->add_option("--q", mech.q, "Alphabet size (rr)")
      ->capture_default_str();
  cmd->add_option("--p0", mech.p0, "Pre-change pmf (bm)");
  cmd->add_option("--p1", mech.p1, "Post-change pmf (bm)");
  cmd->add_option("--tau", mech.tau, "Quantizer threshold (bm); default tau*");
  cmd->callback([&] { action = [&] { RunMechanism(mech, fmt, out); }; });

  SdpiArgs sdpi;
  cmd = app.add_subcommand(
      "sdpi",
      "Contraction coefficient of a channel. Prints a JSON object with keys "
      "kind, method, eta, achieved_ratio, degenerate.");
  cmd->add_option("--channel", sdpi.channel, "rr or file")
      ->capture_default_str()
      ->check(CLI::IsMember({"rr", "file"}));
  cmd->add_option("--q", sdpi.q, "Alphabet size (rr)")
      ->capture_default_str();
  cmd->add_option("--eps", sdpi.eps, "Privacy budget (rr)")
      ->capture_default_str();
  cmd->add_option("--channel-file", sdpi.channel_file,
                  "JSON channel {\"rows\": [[...]]}");
  cmd->add_option("--kind", sdpi.kind, "Divergence")
      ->required()
      ->check(CLI::IsMember(
          {"tv", "kl", "renyi", "renyi-inf", "jeffreys-inf"}));
  cmd->add_option("--rho", sdpi.rho, "Renyi order for --kind renyi")
      ->capture_default_str();
  cmd->add_option("--method", sdpi.method, "auto, closed or numeric")
      ->capture_default_str()
      ->check(CLI::IsMember({"auto", "closed", "numeric"}));
  cmd->callback([&] { action = [&] { RunSdpi(sdpi, fmt, out); }; });

  DetectArgs det;
  cmd = app.add_subcommand(
      "detect",
      "Estimate the change-point. Prints k_hat (1-based); --scores writes "
      "CSV with columns k,score.");
  cmd->add_option("--p0", det.p0, "Pre-change pmf")->required();
  cmd->add_option("--p1", det.p1, "Post-change pmf")->required();
  cmd->add_option("--data", det.data, "File of symbols");
  cmd->add_option("--symbols", det.symbols, "Comma separated symbols");
  cmd->add_option("--k-star", det.k_star, "Known true change-point");
  cmd->add_option("--mechanism", det.mechanism, "none, rr or bm")
      ->capture_default_str()
      ->check(CLI::IsMember({"none", "rr", "bm"}));
  cmd->add_option("--eps", det.eps, "Privacy budget (rr, bm)");
  cmd->add_option("--seed", det.seed, "Privatization seed")
      ->capture_default_str();
  cmd->add_option("--scores", det.scores, "Write the score vector here");
  cmd->callback([&] { action = [&] { RunDetect(det, fmt, out); }; });

  BoundArgs bnd;
  cmd = app.add_subcommand(
      "bound",
      "Upper bounds on beta. Prints CSV with columns alpha,bound_a,bound_b,"
      "beta,bound_a_closed,s,c,ich, followed by s_r,c_r for rr or "
      "s_b,c_b,c_tilde_b for bm.");
  cmd->add_option("--p0", bnd.p0, "Pre-change pmf")->required();
  cmd->add_option("--p1", bnd.p1, "Post-change pmf")->required();
  cmd->add_option("--n", bnd.n, "Dataset size")
      ->capture_default_str();
  cmd->add_option("--alpha", bnd.alpha, "Tolerances, comma separated")
      ->required();
  cmd->add_option("--mechanism", bnd.mechanism, "none, rr or bm")
      ->capture_default_str()
      ->check(CLI::IsMember({"none", "rr", "bm"}));
  cmd->add_option("--eps", bnd.eps, "Privacy budget (rr, bm)");
  cmd->add_option("--ctilde", bnd.ctilde, "verbatim or squared")
      ->capture_default_str()
      ->check(CLI::IsMember({"verbatim", "squared"}));
  cmd->callback([&] { action = [&] { RunBound(bnd, fmt, out); }; });

  SimulateArgs sim;
  cmd = app.add_subcommand(
      "simulate",
      "Run a Monte Carlo experiment from a JSON config. Writes CSV or JSON "
      "to --out or stdout. --threads defaults to $LDPCPD_THREADS, else 0 "
      "(auto).");
  cmd->add_option("--config", sim.config, "Experiment config file")
      ->required();
  cmd->add_option("--out", sim.out, "Output path");
  cmd->add_option("--format", sim.format, "csv or json")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--threads", sim.threads, "Worker threads, 0 = auto");
  cmd->add_option("--seed", sim.seed, "Override master_seed");
  cmd->callback([&] { action = [&] { RunSimulate(sim, out); }; });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("ldpcpd");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (action) action();
    out.flush();
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << ErrorCategory(e) << ": " << OneLine(e.what())
        << "\n";
    return kExitDomain;
  }
}

}  // namespace ldpcpd::cli
