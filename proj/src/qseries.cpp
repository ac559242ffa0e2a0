/**
 * Copyright 2026 The qtheta Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "qtheta/qseries.hpp"

#include <cmath>
#include <string>

namespace qtheta {

TruncationPolicy::TruncationPolicy(double tol, std::size_t max_terms)
    : tol_(tol), max_terms_(max_terms) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw ContractError("truncation tolerance must be a positive finite number");
  }
  if (max_terms < 1) {
    throw ContractError("truncation max_terms must be at least 1");
  }
}

TruncationPolicy TruncationPolicy::tightened(double factor) const {
  return TruncationPolicy(tol_ / factor, max_terms_);
}

Complex qpoch_finite(Complex a, Complex q, std::size_t n) {
  require_finite(a, "qpoch_finite: a");
  require_finite(q, "qpoch_finite: q");
  Complex prod{1.0, 0.0};
  Complex qi{1.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    prod *= 1.0 - a * qi;
    qi *= q;
  }
  return prod;
}

Complex qpoch_infinite(Complex a, Complex q, const TruncationPolicy& policy) {
  require_finite(a, "qpoch_infinite: a");
  require_finite(q, "qpoch_infinite: q");
  const double abs_q = std::abs(q);
  if (abs_q >= 1.0) {
    throw DomainError("qpoch_infinite: |q| = " + std::to_string(abs_q) + " must be < 1");
  }
  const double abs_a = std::abs(a);
  const double tail_scale = 1.0 / (1.0 - abs_q);

  Complex prod{1.0, 0.0};
  Complex qk{1.0, 0.0};
  double abs_qk = 1.0;
  for (std::size_t k = 0; k < policy.max_terms(); ++k) {
    if (abs_a * abs_qk * tail_scale < policy.tol()) {
      return prod;
    }
    prod *= 1.0 - a * qk;
    qk *= q;
    abs_qk *= abs_q;
  }
  throw NonConvergedError("qpoch_infinite: " + std::to_string(policy.max_terms()) +
                          " factors did not reach tolerance");
}

Complex qpoch_multi(std::span<const Complex> as, Complex q, const TruncationPolicy& policy) {
  Complex prod{1.0, 0.0};
  for (const Complex& a : as) {
    prod *= qpoch_infinite(a, q, policy);
  }
  if (as.empty()) {
    require_finite(q, "qpoch_multi: q");
    if (std::abs(q) >= 1.0) {
      throw DomainError("qpoch_multi: |q| must be < 1");
    }
  }
  return prod;
}

}  // namespace qtheta
