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

#include "ldpcpd/bounds.h"

#include <algorithm>
#include <cmath>

#include "ldpcpd/divergence.h"
#include "ldpcpd/error.h"

namespace ldpcpd {
namespace {

double Clip(double beta) { return std::clamp(beta, 0.0, 1.0); }

void Finish(BoundReport& r) {
  const double best = std::min(r.bound_a, r.bound_b);
  r.regime = r.bound_a <= r.bound_b ? BoundRegime::kSeries
                                    : BoundRegime::kSecond;
  r.beta = Clip(2.0 * best);
}

// t (1 - t^M) / (1 - t), the geometric sum of t^i for i = 1..M.
double GeometricSum(std::size_t n, double alpha, double c, double s) {
  if (s == 0.0) return kInfinity;
  const double t = std::exp(-alpha * c * c / (s * s));
  if (t >= 1.0) return kInfinity;
  const double m = std::max(1.0, std::floor((static_cast<double>(n) - 1.0) /
                                            alpha));
  return t * (1.0 - std::pow(t, m)) / (1.0 - t);
}

double SecondTermPrivate(double c_second, double alpha) {
  return std::pow(std::max(0.0, 1.0 - c_second / 2.0), alpha / 2.0);
}

double PrivateSensitivity(double eps, double s) {
  return std::min(2.0 * eps, std::tanh(eps / 2.0) * s);
}

}  // namespace

void BoundInputs::Validate() const {
  if (n < 2) throw DomainError("bounds: n must be at least 2");
  if (!(alpha >= 1.0 && alpha <= static_cast<double>(n))) {
    throw DomainError("bounds: alpha must lie in [1, n]");
  }
  if (!(s >= 0.0) || !(c >= 0.0) || !(ich >= 0.0)) {
    throw DomainError("bounds: s, C and I_ch must be non-negative");
  }
  if (epsilon && !(*epsilon > 0.0)) {
    throw DomainError("bounds: epsilon must be positive");
  }
  if (dtv && !(*dtv >= 0.0 && *dtv <= 1.0)) {
    throw DomainError("bounds: d_TV must lie in [0, 1]");
  }
  if (s_tau_gap && !(*s_tau_gap >= 0.0)) {
    throw DomainError("bounds: quantizer gap must be non-negative");
  }
}

BoundInputs InputsFromPair(const Distribution& p0, const Distribution& p1,
                           std::size_t n, double alpha) {
  BoundInputs in;
  in.n = n;
  in.alpha = alpha;
  in.s = Sensitivity(p0, p1);
  in.c = std::min(KlDivergence(p0, p1), KlDivergence(p1, p0));
  in.ich = Chernoff(p0, p1).value;
  in.q = p0.size();
  in.dtv = TvDistance(p0, p1);
  return in;
}

double Sensitivity(const Distribution& p0, const Distribution& p1) {
  return JeffreysRenyi(RenyiOrder::Infinity(), p0, p1);
}

int SeriesLength(std::size_t n, double alpha) {
  const double ratio = (static_cast<double>(n) - 1.0) / alpha;
  if (!(ratio > 1.0)) return 1;
  return std::max(1, static_cast<int>(std::ceil(std::log2(ratio))));
}

double ExponentialSeries(std::size_t n, double alpha, double c, double s) {
  if (s == 0.0) return kInfinity;
  const double rate = alpha * c * c / (s * s);  // 0 when s is infinite
  const int terms = SeriesLength(n, alpha);
  double sum = 0.0;
  double weight = 1.0;  // 2^{i-1}
  for (int i = 1; i <= terms; ++i) {
    sum += std::exp(-weight * rate);
    weight *= 2.0;
  }
  return sum;
}

BoundReport TheoremNonPrivate(const BoundInputs& in) {
  in.Validate();
  BoundReport r;
  r.s_eff = in.s;
  r.c_eff = in.c;
  r.bound_a = ExponentialSeries(in.n, in.alpha, in.c, in.s);
  r.bound_a_closed = GeometricSum(in.n, in.alpha, in.c, in.s);
  r.bound_b = std::exp(-in.alpha * in.ich);
  Finish(r);
  return r;
}

double CorollaryNonPrivateClosed(const BoundInputs& in) {
  in.Validate();
  const double closed = GeometricSum(in.n, in.alpha, in.c, in.s);
  if (std::isinf(closed)) return 1.0;
  return Clip(2.0 * std::min(closed, std::exp(-in.alpha * in.ich)));
}

BoundReport TheoremRandomizedResponse(const BoundInputs& in) {
  in.Validate();
  if (!in.epsilon || !in.q || !in.dtv) {
    throw DomainError("randomized response bound needs epsilon, q and d_TV");
  }
  const double eps = *in.epsilon;
  const double e = std::exp(eps);
  const double shrink =
      std::expm1(eps) / (e + static_cast<double>(*in.q) - 1.0);
  BoundReport r;
  r.s_eff = PrivateSensitivity(eps, in.s);
  r.c_eff = 2.0 * shrink * shrink * *in.dtv * *in.dtv;
  r.bound_a = ExponentialSeries(in.n, in.alpha, r.c_eff, r.s_eff);
  r.bound_a_closed = GeometricSum(in.n, in.alpha, r.c_eff, r.s_eff);
  r.bound_b = SecondTermPrivate(r.c_eff, in.alpha);
  Finish(r);
  return r;
}

BoundReport TheoremBinaryMechanism(const BoundInputs& in, CtildeForm form) {
  in.Validate();
  if (!in.epsilon || !in.dtv || !in.s_tau_gap) {
    throw DomainError(
        "binary mechanism bound needs epsilon, d_TV and the quantizer gap");
  }
  const double eps = *in.epsilon;
  const double th2 = PrivacyCostFactor(eps);
  const double gap = form == CtildeForm::kSquared
                         ? *in.s_tau_gap * *in.s_tau_gap
                         : *in.s_tau_gap;
  BoundReport r;
  r.s_eff = PrivateSensitivity(eps, in.s);
  r.c_eff = 2.0 * th2 * gap;
  r.c_second = 2.0 * th2 * *in.dtv * *in.dtv;
  r.bound_a = ExponentialSeries(in.n, in.alpha, r.c_eff, r.s_eff);
  r.bound_a_closed = GeometricSum(in.n, in.alpha, r.c_eff, r.s_eff);
  r.bound_b = SecondTermPrivate(*r.c_second, in.alpha);
  Finish(r);
  return r;
}

double QuantizerGap(const Distribution& p0, const Distribution& p1,
                    const Quantizer& quantizer) {
  RequireSameAlphabet(p0, p1);
  if (quantizer.in_s.size() != p0.size()) {
    throw DimensionError("quantizer gap: quantizer alphabet differs");
  }
  double gap = 0.0;
  for (std::size_t x = 0; x < p0.size(); ++x) {
    if (quantizer.in_s[x]) gap += std::abs(p0[x] - p1[x]);
  }
  return gap;
}

double PrivacyCostFactor(double epsilon) {
  if (!(epsilon > 0.0)) {
    throw DomainError("privacy cost: epsilon must be positive");
  }
  const double t = std::tanh(epsilon / 2.0);
  return t * t;
}

double ErrorExponent(double alpha, double beta) {
  if (!(alpha >= 1.0)) throw DomainError("error exponent: alpha must be >= 1");
  if (!(beta > 0.0 && beta <= 2.0)) {
    throw DomainError("error exponent: beta must lie in (0, 2]");
  }
  return -std::log(beta / 2.0) / alpha;
}

double FloorBeta(double beta, std::size_t trials) {
  if (trials == 0) throw DomainError("floor beta: zero trials");
  return std::max(beta, 1.0 / (2.0 * static_cast<double>(trials)));
}

}  // namespace ldpcpd
