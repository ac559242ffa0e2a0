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

// Pinned fixtures shared by the unit tests and the acceptance binary. Each
// fixture has a frozen 30-digit value, a live 50-digit oracle and the
// double-precision library value.

#ifndef QTHETA_TESTS_FIXTURES_HPP
#define QTHETA_TESTS_FIXTURES_HPP

#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "oracle/hp_oracle.hpp"
#include "qtheta/qseries.hpp"
#include "qtheta/qtrig.hpp"
#include "qtheta/theta.hpp"

namespace qtheta::oracle {

struct Fixture {
  std::string name;
  const char* frozen_value;
  std::function<Real()> live;
  std::function<double()> library;
};

inline std::vector<Fixture> pinned_fixtures() {
  const CReal i_tau(Real(0), Real(1));
  return {
      {"(0.1;0.1)_inf", frozen::qpoch_tenth, [] { return real(qpoch(CReal(Real("0.1")), CReal(Real("0.1")))); },
       [] { return qpoch_infinite(0.1, 0.1).real(); }},
      {"(0.1;0.1)_inf^2", frozen::qpoch_tenth_squared,
       [] {
         const CReal v = qpoch(CReal(Real("0.1")), CReal(Real("0.1")));
         return real(v * v);
       },
       [] { return std::pow(qpoch_infinite(0.1, 0.1), 2).real(); }},
      {"theta1(pi/2|i)", frozen::theta_half_at_i, [i_tau] { return real(theta1(CReal(pi() / 2), i_tau)); },
       [] { return theta1_series(std::numbers::pi / 2, ModularPoint(Complex(0.0, 1.0))).real(); }},
      {"theta1'(0|i)", frozen::theta_prime_at_i, [i_tau] { return real(theta1_prime0(i_tau)); },
       [] { return theta1_prime0(ModularPoint(Complex(0.0, 1.0))).real(); }},
      {"sin_0.5(pi/4)", frozen::sin_half_quarter, [] { return real(sin_q(CReal(pi() / 4), CReal(Real("0.5")))); },
       [] { return sin_q(std::numbers::pi / 4, QParameter(0.5)).real(); }},
      {"Pi_0.1", frozen::pi_tenth, [] { return real(pi_q(CReal(Real("0.1")))); },
       [] { return pi_q(QParameter(0.1)).real(); }},
      {"Pi_0.3/Pi_0.3^4", frozen::pi_ratio_03_4, [] { return pi_ratio(Real("0.3"), 4); },
       [] { return (pi_q(QParameter(0.3)) / pi_q(QParameter(0.3).power(4))).real(); }},
      {"Pi_0.2/Pi_0.2^9", frozen::pi_ratio_02_9, [] { return pi_ratio(Real("0.2"), 9); },
       [] { return (pi_q(QParameter(0.2)) / pi_q(QParameter(0.2).power(9))).real(); }},
      {"Pi_0.3/Pi_0.3^9", frozen::pi_ratio_03_9, [] { return pi_ratio(Real("0.3"), 9); },
       [] { return (pi_q(QParameter(0.3)) / pi_q(QParameter(0.3).power(9))).real(); }},
  };
}

/// |library - reference| / max(1, |reference|).
inline double fixture_error(double library, const Real& reference) {
  const double ref = static_cast<double>(reference);
  return std::abs(library - ref) / std::max(1.0, std::abs(ref));
}

inline constexpr double fixture_tolerance = 1e-13;

}  // namespace qtheta::oracle

#endif  // QTHETA_TESTS_FIXTURES_HPP
