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

#ifndef QTHETA_QTRIG_HPP
#define QTHETA_QTRIG_HPP

#include "qtheta/error.hpp"
#include "qtheta/qseries.hpp"
#include "qtheta/theta.hpp"

namespace qtheta {

/// The base q of the q-trigonometric functions, 0 < |q| < 1.
///
/// Carries tau = Log(q)/(i pi) so that every non-integer power is
/// q^s := exp(i pi tau s). Powers q^k keep tau -> k tau rather than re-taking
/// a principal logarithm of q^k, which keeps q^(ks) = (q^k)^s exact.
class QParameter {
 public:
  explicit QParameter(Complex q);
  static QParameter from_tau(Complex tau);

  Complex q() const noexcept { return q_; }
  Complex tau() const noexcept { return tau_; }
  Complex dual_tau() const noexcept { return -1.0 / tau_; }
  /// p = exp(i pi tau'); for real q in (0, 1) this is exp(pi^2 / ln q).
  Complex dual_nome() const;

  QParameter power(int k) const;
  Complex pow(Complex s) const;

  ModularPoint modular() const { return ModularPoint::derived(tau_); }
  ModularPoint dual_modular() const { return ModularPoint::derived(dual_tau()); }

 private:
  QParameter(Complex q, Complex tau) : q_(q), tau_(tau) {}
  Complex q_;
  Complex tau_;
};

enum class QTrigRoute { product, theta_bridge };

struct QTrigValue {
  Complex value;
  QTrigRoute route;
};

/// Product forms are used for |q| <= 0.95 and |Im(z/pi)| <= 2.
inline constexpr double product_envelope_nome = 0.95;
inline constexpr double product_envelope_im_w = 2.0;

/// sin_q(z) = q^((w-1/2)^2) (q^(2w), q^(2-2w); q^2)_inf / (q;q^2)_inf^2 with w = z/pi.
///
/// Throws DomainError if |q^(2w)| >= 1 or |q^(2-2w)| >= 1, where the tail
/// bound of the products is not usable.
Complex sin_q_product(Complex z, const QParameter& q, const TruncationPolicy& policy = {});

/// cos_q(z) = q^(w^2) (q^(1+2w), q^(1-2w); q^2)_inf / (q;q^2)_inf^2 with w = z/pi.
Complex cos_q_product(Complex z, const QParameter& q, const TruncationPolicy& policy = {});

/// theta_1(z|tau') / theta_1(pi/2|tau').
Complex sin_q_via_theta(Complex z, const QParameter& q, const TruncationPolicy& policy = {});
/// theta_1(z + pi/2|tau') / theta_1(pi/2|tau').
Complex cos_q_via_theta(Complex z, const QParameter& q, const TruncationPolicy& policy = {});

/// General entry points. Re(w) is first reduced to the fundamental strip using
/// sin_q(z + pi) = -sin_q(z) (resp. cos_q); the product form is used inside
/// the numeric envelope and the dual-nome theta ratio everywhere else.
QTrigValue sin_q_routed(Complex z, const QParameter& q, const TruncationPolicy& policy = {});
QTrigValue cos_q_routed(Complex z, const QParameter& q, const TruncationPolicy& policy = {});

inline Complex sin_q(Complex z, const QParameter& q, const TruncationPolicy& policy = {}) {
  return sin_q_routed(z, q, policy).value;
}
inline Complex cos_q(Complex z, const QParameter& q, const TruncationPolicy& policy = {}) {
  return cos_q_routed(z, q, policy).value;
}

/// Pi_q = q^(1/4) (q^2;q^2)_inf^2 / (q;q^2)_inf^2.
Complex pi_q(const QParameter& q, const TruncationPolicy& policy = {});

}  // namespace qtheta

#endif  // QTHETA_QTRIG_HPP
