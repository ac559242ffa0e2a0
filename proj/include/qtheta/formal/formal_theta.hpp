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

#ifndef QTHETA_FORMAL_FORMAL_THETA_HPP
#define QTHETA_FORMAL_FORMAL_THETA_HPP

#include "qtheta/formal/nome_series.hpp"

namespace qtheta::formal {

// Series in t with t^m = p (dual nome). Each result is exact through t^order.

/// theta_1(a z + s pi/2 | tau'/k) as a series in t and u = e^{iz}.
/// Requires a >= 1, s in [0, 3] and 4k | m.
NomeSeries theta1_formal(int a, int s, int k, int m, int order);

/// theta_1(s pi/2 | tau'/k), u-free.
NomeSeries theta_constant_formal(int s, int k, int m, int order);
/// theta_1(pi/2 | tau'/k).
inline NomeSeries theta_half_formal(int k, int m, int order) { return theta_constant_formal(1, k, m, order); }
/// theta_1'(0 | tau'/k).
NomeSeries theta_prime0_formal(int k, int m, int order);
/// theta_1(pi/4 | tau'/k)^2, which has rational coefficients although the value
/// itself carries a factor sqrt(2).
NomeSeries theta_quarter_squared_formal(int k, int m, int order);

/// Pi_q / Pi_{q^k} written on the dual side: k D(1) Th(k) / (D(k) Th(1)) with
/// D(j) = theta_1'(0|tau'/j) and Th(j) = theta_1(pi/2|tau'/j).
NomeSeries pi_ratio_dual_formal(int k, int m, int order);

// Series in t with t^m = q (direct nome).

/// (q^a; q^step)_inf. Requires a, step >= 1.
NomeSeries pochhammer_formal(int a, int step, int m, int order);

/// Pi_q / Pi_{q^k} = q^((1-k)/4) (q^2;q^2)^2 (q^k;q^2k)^2 / ((q;q^2)^2 (q^2k;q^2k)^2).
/// Requires m (k - 1) divisible by 4.
NomeSeries pi_ratio_direct_formal(int k, int m, int order);

enum class FormalConstant {
  half_pi_ratio_4,   // 1/2 Pi_q/Pi_{q^4}
  third_pi_ratio_9,  // 1/3 Pi_q/Pi_{q^9}
  pi_ratio_3,        // Pi_q/Pi_{q^3}
  cq,                // Pi_q/Pi_{q^2}
};

/// Named constants in the direct nome.
NomeSeries constant_formal(FormalConstant which, int m, int order);

}  // namespace qtheta::formal

#endif  // QTHETA_FORMAL_FORMAL_THETA_HPP
