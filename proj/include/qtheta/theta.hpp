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

#ifndef QTHETA_THETA_HPP
#define QTHETA_THETA_HPP

#include "qtheta/error.hpp"
#include "qtheta/qseries.hpp"

namespace qtheta {

/// A point tau of the upper half-plane with its nome q = exp(i pi tau), dual
/// point tau' = -1/tau and dual nome p = exp(i pi tau').
///
/// Points built from user input must satisfy Re(tau) in (-1, 1], the window in
/// which Log(q) = i pi tau under the principal logarithm. Points derived from
/// another one (tau', tau/k, k tau) only need Im(tau) > 0: evaluation always
/// uses exp(i pi tau s) and never takes a logarithm of the nome.
class ModularPoint {
 public:
  explicit ModularPoint(Complex tau);

  /// tau = Log(q) / (i pi), principal branch. Requires 0 < |q| < 1.
  static ModularPoint from_nome(Complex q);
  /// Skips the principal-window check.
  static ModularPoint derived(Complex tau);

  Complex tau() const noexcept { return tau_; }
  Complex nome() const noexcept { return nome_; }
  Complex dual_tau() const noexcept { return -1.0 / tau_; }
  Complex dual_nome() const;

  ModularPoint dual() const { return derived(dual_tau()); }
  ModularPoint divided(int k) const;
  ModularPoint multiplied(int k) const;

  /// q^s := exp(i pi tau s).
  Complex nome_power(double s) const;
  bool in_principal_window() const noexcept;

 private:
  struct Unchecked {};
  ModularPoint(Complex tau, Unchecked);

  Complex tau_;
  Complex nome_;
};

enum class ProductForm { exponential, sine };

/// theta_1(z|tau) = 2 sum_n (-1)^n q^((2n+1)^2/4) sin((2n+1)z).
///
/// Stops at the first n past the peak of the term envelope where
/// 2|q|^((2n+1)^2/4) e^((2n+1)|Im z|) < tol * min(1, first-term bound).
Complex theta1_series(Complex z, const ModularPoint& m, const TruncationPolicy& policy = {});

/// theta_1(z|tau) / (2 q^(1/4)). Finite even when q^(1/4) underflows, so
/// ratios of theta values at tiny nomes stay well defined.
Complex theta1_series_scaled(Complex z, const ModularPoint& m, const TruncationPolicy& policy = {});

/// Either infinite-product representation of theta_1.
Complex theta1_product(Complex z, const ModularPoint& m, ProductForm form,
                       const TruncationPolicy& policy = {});

/// theta_1'(0|tau) = 2 q^(1/4) (q^2;q^2)_inf^3.
Complex theta1_prime0(const ModularPoint& m, const TruncationPolicy& policy = {});
/// theta_1'(0|tau) from the term-wise differentiated series.
Complex theta1_prime0_series(const ModularPoint& m, const TruncationPolicy& policy = {});
Complex theta1_prime0_series_scaled(const ModularPoint& m, const TruncationPolicy& policy = {});

/// theta_1(pi/2|tau) = 2 q^(1/4) (-q^2;q^2)_inf^2 (q^2;q^2)_inf.
Complex theta1_half_closed_form(const ModularPoint& m, const TruncationPolicy& policy = {});

struct QuasiPeriodResiduals {
  double r_pi = 0.0;
  double r_pitau = 0.0;
};

/// |theta(z+pi) + theta(z)| and |theta(z+pi tau) + q^-1 e^-2iz theta(z)|,
/// both divided by max(1, |theta(z)|).
QuasiPeriodResiduals quasi_period_residuals(Complex z, const ModularPoint& m,
                                            const TruncationPolicy& policy = {});

/// |theta(-z) + theta(z)| / max(1, |theta(z)|).
double oddness_residual(Complex z, const ModularPoint& m, const TruncationPolicy& policy = {});

// The residuals below are (lhs - rhs) / max(1, |lhs|, |rhs|).

/// theta(z + pi tau | tau/k) against (-1)^k q^-k e^(-2kiz) theta(z | tau/k).
Complex transform_k_residual(Complex z, const ModularPoint& m, int k,
                             const TruncationPolicy& policy = {});

/// theta(z|tau) against (-i tau)^(-1/2) (-i) e^(i tau' z^2 / pi) theta(z tau' | tau'),
/// principal branch for the power. Throws RangeError if the Gaussian factor overflows.
Complex jacobi_transform_residual(Complex z, const ModularPoint& m,
                                  const TruncationPolicy& policy = {});

/// theta'(0|tau') from the series against (-i tau)^(3/2) 2 q^(1/4) (q^2;q^2)_inf^3.
Complex dual_prime_residual(const ModularPoint& m, const TruncationPolicy& policy = {});

}  // namespace qtheta

#endif  // QTHETA_THETA_HPP
