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

#include "qtheta/qtrig.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qtheta {
namespace {

constexpr double pi = std::numbers::pi;
constexpr Complex I{0.0, 1.0};

void require_inside_unit_disk(Complex a, const char* label) {
  const double r = std::abs(a);
  if (r >= 1.0) {
    throw DomainError(std::string("|") + label + "| = " + std::to_string(r) +
                      " >= 1, product tail bound unusable");
  }
}

// (q;q^2)_inf^2, the common denominator of sin_q, cos_q and Pi_q.
Complex odd_square(const QParameter& q, const TruncationPolicy& policy) {
  const Complex d = qpoch_infinite(q.q(), q.pow(2.0), policy);
  return d * d;
}

bool inside_envelope(const QParameter& q, Complex w) {
  return std::abs(q.q()) <= product_envelope_nome && std::abs(w.imag()) <= product_envelope_im_w;
}

Complex theta_ratio(Complex z, const QParameter& q, const TruncationPolicy& policy) {
  const ModularPoint dual = q.dual_modular();
  const Complex denom = theta1_series_scaled(pi / 2.0, dual, policy);
  if (denom == Complex{0.0, 0.0}) {
    throw std::logic_error("theta_1(pi/2|tau') vanished");
  }
  return theta1_series_scaled(z, dual, policy) / denom;
}

}  // namespace

QParameter::QParameter(Complex q) : q_(q) {
  require_finite(q, "q");
  const double r = std::abs(q);
  if (!(r > 0.0) || !(r < 1.0)) {
    throw DomainError("|q| = " + std::to_string(r) + " must lie in (0, 1)");
  }
  tau_ = std::log(q) / (I * pi);
}

QParameter QParameter::from_tau(Complex tau) {
  const ModularPoint m = ModularPoint::derived(tau);
  return QParameter(m.nome(), tau);
}

Complex QParameter::dual_nome() const { return std::exp(I * pi * dual_tau()); }

QParameter QParameter::power(int k) const {
  if (k < 1) throw ContractError("QParameter::power: k must be positive");
  const Complex tau = tau_ * static_cast<double>(k);
  return QParameter(std::exp(I * pi * tau), tau);
}

Complex QParameter::pow(Complex s) const { return std::exp(I * pi * tau_ * s); }

Complex sin_q_product(Complex z, const QParameter& q, const TruncationPolicy& policy) {
  require_finite(z, "sin_q: z");
  const Complex w = z / pi;
  const Complex a1 = q.pow(2.0 * w);
  const Complex a2 = q.pow(2.0 - 2.0 * w);
  require_inside_unit_disk(a1, "q^(2w)");
  require_inside_unit_disk(a2, "q^(2-2w)");
  const Complex q2 = q.pow(2.0);
  return q.pow((w - 0.5) * (w - 0.5)) * qpoch_infinite(a1, q2, policy) *
         qpoch_infinite(a2, q2, policy) / odd_square(q, policy);
}

Complex cos_q_product(Complex z, const QParameter& q, const TruncationPolicy& policy) {
  require_finite(z, "cos_q: z");
  const Complex w = z / pi;
  const Complex a1 = q.pow(1.0 + 2.0 * w);
  const Complex a2 = q.pow(1.0 - 2.0 * w);
  require_inside_unit_disk(a1, "q^(1+2w)");
  require_inside_unit_disk(a2, "q^(1-2w)");
  const Complex q2 = q.pow(2.0);
  return q.pow(w * w) * qpoch_infinite(a1, q2, policy) * qpoch_infinite(a2, q2, policy) /
         odd_square(q, policy);
}

Complex sin_q_via_theta(Complex z, const QParameter& q, const TruncationPolicy& policy) {
  require_finite(z, "sin_q: z");
  return theta_ratio(z, q, policy);
}

Complex cos_q_via_theta(Complex z, const QParameter& q, const TruncationPolicy& policy) {
  require_finite(z, "cos_q: z");
  return theta_ratio(z + pi / 2.0, q, policy);
}

QTrigValue sin_q_routed(Complex z, const QParameter& q, const TruncationPolicy& policy) {
  require_finite(z, "sin_q: z");
  const Complex w = z / pi;
  const double shift = std::floor(w.real());
  const Complex w0 = w - shift;
  const double sign = (std::fmod(std::abs(shift), 2.0) == 0.0) ? 1.0 : -1.0;
  if (w0 == Complex{0.0, 0.0}) {
    return {Complex{0.0, 0.0}, QTrigRoute::product};
  }
  if (inside_envelope(q, w0) && std::abs(q.pow(2.0 * w0)) < 1.0 &&
      std::abs(q.pow(2.0 - 2.0 * w0)) < 1.0) {
    return {sign * sin_q_product(pi * w0, q, policy), QTrigRoute::product};
  }
  return {sign * sin_q_via_theta(pi * w0, q, policy), QTrigRoute::theta_bridge};
}

QTrigValue cos_q_routed(Complex z, const QParameter& q, const TruncationPolicy& policy) {
  require_finite(z, "cos_q: z");
  const Complex w = z / pi;
  const double shift = std::floor(w.real() + 0.5);
  const Complex w0 = w - shift;
  const double sign = (std::fmod(std::abs(shift), 2.0) == 0.0) ? 1.0 : -1.0;
  if (w0 == Complex{-0.5, 0.0}) {
    return {Complex{0.0, 0.0}, QTrigRoute::product};
  }
  if (inside_envelope(q, w0) && std::abs(q.pow(1.0 + 2.0 * w0)) < 1.0 &&
      std::abs(q.pow(1.0 - 2.0 * w0)) < 1.0) {
    return {sign * cos_q_product(pi * w0, q, policy), QTrigRoute::product};
  }
  return {sign * cos_q_via_theta(pi * w0, q, policy), QTrigRoute::theta_bridge};
}

Complex pi_q(const QParameter& q, const TruncationPolicy& policy) {
  const Complex q2 = q.pow(2.0);
  const Complex e = qpoch_infinite(q2, q2, policy);
  return q.pow(0.25) * e * e / odd_square(q, policy);
}

}  // namespace qtheta
