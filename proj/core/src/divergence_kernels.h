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

// Allocation-free divergence kernels over raw mass vectors. Inputs are
// assumed valid pmfs of equal length; callers validate.

#ifndef LDPCPD_SRC_DIVERGENCE_KERNELS_H_
#define LDPCPD_SRC_DIVERGENCE_KERNELS_H_

#include <span>

namespace ldpcpd::internal {

double TvKernel(std::span<const double> p, std::span<const double> q);
double KlKernel(std::span<const double> p, std::span<const double> q);
// rho in (1, inf]; rho == 1 must go through KlKernel.
double RenyiKernel(double rho, std::span<const double> p,
                   std::span<const double> q);
double LogMomentKernel(double lambda, std::span<const double> p,
                       std::span<const double> q);

}  // namespace ldpcpd::internal

#endif  // LDPCPD_SRC_DIVERGENCE_KERNELS_H_
