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

#include "qtheta/theta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qtheta {
namespace {

constexpr double pi = std::numbers::pi;
constexpr Complex I{0.0, 1.0};

double relative_scale(Complex lhs, Complex rhs) {
  return std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

// Shared summation for the scaled theta series and its z-derivative at 0.
// Sums sum_n (-1)^n w(n) q^(n(n+1)) f(n) where f is sin((2n+1)z) or 1 and w(n)
// is 1 or 2n+1. The stopping rule is evaluated in logarithms so tiny nomes do
// not underflow the bound.
template <typename Term>
Complex scaled_sum(const ModularPoint& m, double abs_im_z, const TruncationPolicy& policy,
                   const char* what, Term term) {
  const double decay = pi * m.tau().imag();  // -log|q|
  const double log_prefactor = std::log(2.0) - decay / 4.0;  // log(2|q|^(1/4))
  const double log_tol = std::log(policy.tol());
  const double log_first = abs_im_z;  // log of the n = 0 envelope
  const double threshold = log_tol + std::min(0.0, log_prefactor + log_first);
  // The envelope -decay n(n+1) + (2n+1)|Im z| peaks at n* = |Im z|/decay - 1/2.
  const double peak = abs_im_z / decay - 0.5;

  Complex sum{0.0, 0.0};
  for (std::size_t n = 0; n < policy.max_terms(); ++n) {
    const double nd = static_cast<double>(n);
    const double log_env = -decay * nd * (nd + 1.0) + (2.0 * nd + 1.0) * abs_im_z +
                           std::log(2.0 * nd + 1.0);
    if (n > 0 && nd > peak && log_prefactor + log_env < threshold) {
      if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag())) {
        throw RangeError(std::string(what) + ": result overflows double precision");
      }
      return sum;
    }
    const Complex qpow = std::exp(I * pi * m.tau() * (nd * (nd + 1.0)));
    const Complex t = qpow * term(n);
    sum += (n % 2 == 0) ? t : -t;
  }
  throw NonConvergedError(std::string(what) + ": " + std::to_string(policy.max_terms()) +
                          " terms did not reach tolerance");
}

}  // namespace

ModularPoint::ModularPoint(Complex tau) : ModularPoint(tau, Unchecked{}) {
  if (!in_principal_window()) {
    throw DomainError("Re(tau) = " + std::to_string(tau.real()) + " outside (-1, 1]");
  }
}

ModularPoint::ModularPoint(Complex tau, Unchecked) : tau_(tau) {
  require_finite(tau, "tau");
  if (!(tau.imag() > 0.0)) {
    throw DomainError("Im(tau) = " + std::to_string(tau.imag()) + " must be positive");
  }
  nome_ = std::exp(I * pi * tau);
}

ModularPoint ModularPoint::from_nome(Complex q) {
  require_finite(q, "nome");
  const double r = std::abs(q);
  if (!(r > 0.0) || !(r < 1.0)) {
    throw DomainError("nome modulus " + std::to_string(r) + " must lie in (0, 1)");
  }
  return ModularPoint(std::log(q) / (I * pi));
}

ModularPoint ModularPoint::derived(Complex tau) { return ModularPoint(tau, Unchecked{}); }

Complex ModularPoint::dual_nome() const { return std::exp(I * pi * dual_tau()); }

ModularPoint ModularPoint::divided(int k) const {
  if (k < 1) throw ContractError("divided: k must be positive");
  return derived(tau_ / static_cast<double>(k));
}

ModularPoint ModularPoint::multiplied(int k) const {
  if (k < 1) throw ContractError("multiplied: k must be positive");
  return derived(tau_ * static_cast<double>(k));
}

Complex ModularPoint::nome_power(double s) const { return std::exp(I * pi * tau_ * s); }

bool ModularPoint::in_principal_window() const noexcept {
  return tau_.real() > -1.0 && tau_.real() <= 1.0;
}

Complex theta1_series_scaled(Complex z, const ModularPoint& m, const TruncationPolicy& policy) {
  require_finite(z, "theta1: z");
  return scaled_sum(m, std::abs(z.imag()), policy, "theta1_series", [z](std::size_t n) {
    return std::sin(static_cast<double>(2 * n + 1) * z);
  });
}

Complex theta1_series(Complex z, const ModularPoint& m, const TruncationPolicy& policy) {
  return 2.0 * m.nome_power(0.25) * theta1_series_scaled(z, m, policy);
}

Complex theta1_product(Complex z, const ModularPoint& m, ProductForm form,
                       const TruncationPolicy& policy) {
  require_finite(z, "theta1: z");
  const Complex q2 = m.nome_power(2.0);
  const Complex q14 = m.nome_power(0.25);
  const Complex e2 = std::exp(2.0 * I * z);
  Complex value;
  if (form == ProductForm::exponential) {
    const Complex as[] = {q2 / e2, e2, q2};
    value = I * q14 * std::exp(-I * z) * qpoch_multi(as, q2, policy);
  } else {
    const Complex as[] = {q2 * e2, q2 / e2, q2};
    value = 2.0 * q14 * std::sin(z) * qpoch_multi(as, q2, policy);
  }
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw RangeError("theta1_product: result overflows double precision");
  }
  return value;
}

Complex theta1_prime0(const ModularPoint& m, const TruncationPolicy& policy) {
  const Complex q2 = m.nome_power(2.0);
  const Complex e = qpoch_infinite(q2, q2, policy);
  return 2.0 * m.nome_power(0.25) * e * e * e;
}

Complex theta1_prime0_series_scaled(const ModularPoint& m, const TruncationPolicy& policy) {
  return scaled_sum(m, 0.0, policy, "theta1_prime0_series",
                    [](std::size_t n) { return Complex(static_cast<double>(2 * n + 1), 0.0); });
}

Complex theta1_prime0_series(const ModularPoint& m, const TruncationPolicy& policy) {
  return 2.0 * m.nome_power(0.25) * theta1_prime0_series_scaled(m, policy);
}

Complex theta1_half_closed_form(const ModularPoint& m, const TruncationPolicy& policy) {
  const Complex q2 = m.nome_power(2.0);
  const Complex neg = qpoch_infinite(-q2, q2, policy);
  return 2.0 * m.nome_power(0.25) * neg * neg * qpoch_infinite(q2, q2, policy);
}

QuasiPeriodResiduals quasi_period_residuals(Complex z, const ModularPoint& m,
                                            const TruncationPolicy& policy) {
  const Complex base = theta1_series(z, m, policy);
  const double scale = std::max(1.0, std::abs(base));
  const Complex shifted_pi = theta1_series(z + pi, m, policy);
  const Complex shifted_tau = theta1_series(z + pi * m.tau(), m, policy);
  const Complex factor = m.nome_power(-1.0) * std::exp(-2.0 * I * z);
  return {std::abs(shifted_pi + base) / scale, std::abs(shifted_tau + factor * base) / scale};
}

double oddness_residual(Complex z, const ModularPoint& m, const TruncationPolicy& policy) {
  const Complex plus = theta1_series(z, m, policy);
  const Complex minus = theta1_series(-z, m, policy);
  return std::abs(plus + minus) / std::max(1.0, std::abs(plus));
}

Complex transform_k_residual(Complex z, const ModularPoint& m, int k,
                             const TruncationPolicy& policy) {
  if (k < 1) throw ContractError("transform_k_residual: k must be positive");
  const ModularPoint scaled = m.divided(k);
  const Complex lhs = theta1_series(z + pi * m.tau(), scaled, policy);
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  const Complex rhs = sign * m.nome_power(-static_cast<double>(k)) *
                      std::exp(-2.0 * static_cast<double>(k) * I * z) *
                      theta1_series(z, scaled, policy);
  return (lhs - rhs) / relative_scale(lhs, rhs);
}

Complex jacobi_transform_residual(Complex z, const ModularPoint& m,
                                  const TruncationPolicy& policy) {
  require_finite(z, "jacobi_transform_residual: z");
  const Complex tau = m.tau();
  const Complex dual = m.dual_tau();
  const Complex exponent = I * dual * z * z / pi;
  if (exponent.real() > 700.0) {
    throw RangeError("jacobi_transform_residual: exp(i tau' z^2 / pi) overflows");
  }
  const Complex lhs = theta1_series(z, m, policy);
  const Complex rhs = std::pow(-I * tau, -0.5) * (-I) * std::exp(exponent) *
                      theta1_series(z * dual, m.dual(), policy);
  return (lhs - rhs) / relative_scale(lhs, rhs);
}

Complex dual_prime_residual(const ModularPoint& m, const TruncationPolicy& policy) {
  const Complex lhs = theta1_prime0_series(m.dual(), policy);
  const Complex rhs = std::pow(-I * m.tau(), 1.5) * theta1_prime0(m, policy);
  return (lhs - rhs) / relative_scale(lhs, rhs);
}

}  // namespace qtheta
