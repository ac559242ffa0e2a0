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

#include "qtheta/formal/formal_theta.hpp"

#include <string>
#include <vector>

#include "qtheta/error.hpp"

namespace qtheta::formal {

namespace {

// i^j for any integer j.
GaussianRational i_power(int j) {
  switch (((j % 4) + 4) % 4) {
    case 0:
      return GaussianRational(1);
    case 1:
      return GaussianRational::i();
    case 2:
      return GaussianRational(-1);
    default:
      return -GaussianRational::i();
  }
}

void require_theta_root(int k, int m) {
  if (k < 1 || m % (4 * k) != 0) {
    throw ContractError("root " + std::to_string(m) + " cannot carry theta at tau'/" + std::to_string(k));
  }
}

}  // namespace

NomeSeries theta1_formal(int a, int s, int k, int m, int order) {
  require_theta_root(k, m);
  if (a < 1 || s < 0 || s > 3) throw ContractError("theta argument needs a >= 1 and s in [0, 3]");
  NomeSeries out(FormalNome::dual, m, order);
  const GaussianRational minus_i = -GaussianRational::i();
  for (int n = 0;; ++n) {
    const int odd = 2 * n + 1;
    const int e = m / (4 * k) * odd * odd;
    if (e > order) break;
    // 2 sin(x) = -i (e^{ix} - e^{-ix}), x = odd * (a z + s pi/2).
    const GaussianRational sign = (n % 2 == 0) ? GaussianRational(1) : GaussianRational(-1);
    LaurentPoly c;
    c.add_term(a * odd, sign * minus_i * i_power(odd * s));
    c.add_term(-a * odd, -(sign * minus_i * i_power(-odd * s)));
    out.add_term(e, c);
  }
  return out;
}

NomeSeries theta_constant_formal(int s, int k, int m, int order) {
  return theta1_formal(1, s, k, m, order).at_unit();
}

NomeSeries theta_prime0_formal(int k, int m, int order) {
  return theta1_formal(1, 0, k, m, order).derivative_at_unit();
}

NomeSeries theta_quarter_squared_formal(int k, int m, int order) {
  require_theta_root(k, m);
  // theta(pi/4) = sqrt(2) sum eps_n t^{e_n}, eps = +, -, -, + repeating.
  NomeSeries base(FormalNome::dual, m, order);
  static constexpr int eps[4] = {1, -1, -1, 1};
  for (int n = 0;; ++n) {
    const int odd = 2 * n + 1;
    const int e = m / (4 * k) * odd * odd;
    if (e > order) break;
    base.add_term(e, 0, GaussianRational(eps[n % 4]));
  }
  // base has valuation m/(4k) > 0, so the square stays exact through order.
  NomeSeries sq = (base * base).truncated(order);
  return sq * GaussianRational(2);
}

NomeSeries pi_ratio_dual_formal(int k, int m, int order) {
  const NomeSeries num = theta_prime0_formal(1, m, order) * theta_half_formal(k, m, order);
  const NomeSeries den = theta_prime0_formal(k, m, order) * theta_half_formal(1, m, order);
  return num * reciprocal(den) * GaussianRational(k);
}

NomeSeries pochhammer_formal(int a, int step, int m, int order) {
  if (a < 1 || step < 1) throw ContractError("pochhammer exponents must be positive");
  if (order < 0) return NomeSeries::constant(FormalNome::direct, m, order, GaussianRational(1));
  std::vector<mpz_class> c(static_cast<std::size_t>(order) + 1, 0);
  c[0] = 1;
  for (long e = static_cast<long>(a) * m; e <= order; e += static_cast<long>(step) * m) {
    for (long j = order; j >= e; --j) c[static_cast<std::size_t>(j)] -= c[static_cast<std::size_t>(j - e)];
  }
  NomeSeries out(FormalNome::direct, m, order);
  for (int j = 0; j <= order; ++j) {
    const auto& v = c[static_cast<std::size_t>(j)];
    if (sgn(v) != 0) out.add_term(j, 0, GaussianRational(mpq_class(v)));
  }
  return out;
}

NomeSeries pi_ratio_direct_formal(int k, int m, int order) {
  if ((m * (k - 1)) % 4 != 0) throw ContractError("root cannot carry q^((1-k)/4)");
  const int shift = -m * (k - 1) / 4;
  // Build the products with room for the shift, then move them down.
  const int work = order - shift;
  const NomeSeries num = power(pochhammer_formal(2, 2, m, work), 2) * power(pochhammer_formal(k, 2 * k, m, work), 2);
  const NomeSeries den = power(pochhammer_formal(1, 2, m, work), 2) * power(pochhammer_formal(2 * k, 2 * k, m, work), 2);
  return (num * reciprocal(den)).shifted(shift);
}

NomeSeries constant_formal(FormalConstant which, int m, int order) {
  switch (which) {
    case FormalConstant::half_pi_ratio_4:
      return pi_ratio_direct_formal(4, m, order) * GaussianRational::ratio(1, 2);
    case FormalConstant::third_pi_ratio_9:
      return pi_ratio_direct_formal(9, m, order) * GaussianRational::ratio(1, 3);
    case FormalConstant::pi_ratio_3:
      return pi_ratio_direct_formal(3, m, order);
    case FormalConstant::cq:
      return pi_ratio_direct_formal(2, m, order);
  }
  throw ContractError("unknown formal constant");
}

}  // namespace qtheta::formal
