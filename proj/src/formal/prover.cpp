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

#include "qtheta/formal/prover.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <numeric>
#include <set>

#include "qtheta/formal/formal_theta.hpp"

namespace qtheta::formal {

namespace {

using R = GaussianRational;

// Building blocks at a fixed root and working order.
struct Blocks {
  int m;
  int n;
  Mutation mutation;

  // Dual nome.
  NomeSeries T(int a, int s, int k) const { return theta1_formal(a, s, k, m, n); }
  NomeSeries Th(int k) const { return theta_half_formal(k, m, n); }
  NomeSeries D(int k) const { return theta_prime0_formal(k, m, n); }
  NomeSeries Q4sq(int k) const { return theta_quarter_squared_formal(k, m, n); }
  NomeSeries PR(int k) const { return pi_ratio_dual_formal(k, m, n); }

  // Direct nome.
  NomeSeries P(int a, int step) const { return pochhammer_formal(a, step, m, n); }
  NomeSeries PRq(int k) const { return pi_ratio_direct_formal(k, m, n); }
  // q^(num/den) as a t-exponent.
  int qexp(int num, int den) const {
    if ((m * num) % den != 0) throw ContractError("root cannot carry the q-power");
    return m * num / den;
  }

  R half() const { return mutation == Mutation::half_to_third ? R::ratio(1, 3) : R::ratio(1, 2); }
  int nine() const { return mutation == Mutation::pi_ratio_nine_to_eight ? 8 : 9; }
  R sign() const { return mutation == Mutation::sign_flip ? R(-1) : R(1); }
};

NomeSeries sq(const NomeSeries& a) { return a * a; }
NomeSeries cube(const NomeSeries& a) { return a * a * a; }
NomeSeries pow4(const NomeSeries& a) { return sq(sq(a)); }
NomeSeries div(const NomeSeries& a, const NomeSeries& b) { return a * reciprocal(b); }

using SideBuilder = std::function<NomeSeries(const Blocks&)>;

struct PartBuilder {
  SideBuilder lhs;
  SideBuilder rhs;
};

PartBuilder part_builder(std::string_view id, std::string_view label) {
  const bool p = label == "p";
  const bool q = label == "q";
  if (id == "help-0" && p) {
    return {[](const Blocks& b) { return b.T(2, 1, 1) * sq(b.Th(2)); },
            [](const Blocks& b) { return b.Th(1) * (sq(b.T(1, 1, 2)) - sq(b.T(1, 0, 2))); }};
  }
  if (id == "help" && p) {
    return {[](const Blocks& b) { return b.T(1, 0, 2) * b.T(1, 1, 2) * b.Th(1); },
            [](const Blocks& b) { return b.T(2, 0, 1) * b.Q4sq(2); }};
  }
  if (id == "thm-2.1" && p) {
    return {[](const Blocks& b) { return sq(b.T(2, 0, 1)) * pow4(b.Th(2)) * sq(b.Th(4)); },
            [](const Blocks& b) {
              const NomeSeries c = sq(b.PR(4) * b.half());
              const NomeSeries th1 = sq(b.Th(1));
              return c * (sq(b.T(1, 0, 4)) * pow4(b.Th(2)) * th1 - pow4(b.T(1, 0, 2)) * sq(b.Th(4)) * th1);
            }};
  }
  if (id == "thm-2.2" && p) {
    return {[](const Blocks& b) { return b.T(3, 0, 1) * cube(b.Th(3)) * b.Th(9); },
            [](const Blocks& b) {
              const NomeSeries a = b.PR(b.nine()) * R::ratio(1, 3);
              const NomeSeries one = NomeSeries::constant(FormalNome::dual, a.root(), a.order(), R(1));
              return a * b.T(1, 0, 9) * b.Th(1) * cube(b.Th(3)) - (a + one) * cube(b.T(1, 0, 3)) * b.Th(1) * b.Th(9);
            }};
  }
  if (id == "thm-2.3" && p) {
    return {[](const Blocks& b) { return b.T(3, 0, 1) * cube(b.Th(3)) + cube(b.T(1, 0, 3)) * b.Th(1) * b.sign(); },
            [](const Blocks& b) { return b.PR(3) * b.T(1, 0, 3) * sq(b.T(1, 1, 3)) * b.Th(1); }};
  }
  if (id == "help-1-1" && p) {
    return {[](const Blocks& b) { return sq(b.T(1, 0, 2)) * sq(b.T(1, 1, 2)); },
            [](const Blocks& b) {
              const NomeSeries r2 = sq(div(b.D(2), b.D(4)));
              return r2 * sq(b.Th(2)) * sq(b.T(1, 0, 4)) - r2 * sq(div(b.Th(4), b.Th(2))) * pow4(b.T(1, 0, 2));
            }};
  }
  if (id == "help-2-0" && p) {
    return {[](const Blocks& b) {
              const NomeSeries th_three_halves = theta_constant_formal(3, 1, b.m, b.n);
              return (cube(b.Th(3)) * b.T(3, 0, 1) - cube(b.T(1, 0, 3)) * th_three_halves) * R(4);
            },
            [](const Blocks& b) {
              // theta(pi/2 - z) is theta(z + pi/2) with z -> -z.
              const NomeSeries minus = b.T(1, 1, 3).reflected();
              return div(b.D(1), b.D(3)) * b.T(1, 0, 3) * b.T(1, 1, 3) * minus * b.Th(3) * R(12);
            }};
  }
  if (id == "help-2-1" && p) {
    return {[](const Blocks& b) {
              return b.T(3, 0, 1) * cube(b.Th(3)) * b.Th(9) + cube(b.T(1, 0, 3)) * b.Th(1) * b.Th(9);
            },
            [](const Blocks& b) {
              return div(b.D(1), b.D(3)) * b.T(1, 0, 3) * sq(b.T(1, 1, 3)) * b.Th(3) * b.Th(9) * R(3);
            }};
  }
  if (id == "help-2-2" && p) {
    return {[](const Blocks& b) {
              const NomeSeries a = b.PR(b.nine()) * R::ratio(1, 3);
              return a * (b.T(1, 0, 9) * cube(b.Th(3)) - cube(b.T(1, 0, 3)) * b.Th(9));
            },
            [](const Blocks& b) {
              const NomeSeries a = b.PR(b.nine()) * R::ratio(1, 3);
              return a * div(b.D(9), b.D(3)) * b.T(1, 0, 3) * sq(b.T(1, 1, 3)) * b.Th(3);
            }};
  }
  if (id == "help-1-3" && p) {
    return {[](const Blocks& b) {
              return div(sq(div(b.D(2), b.D(4))) * sq(b.Th(2)) * sq(b.Th(4)), sq(b.Q4sq(2)));
            },
            [](const Blocks& b) { return sq(b.PR(4)) * R::ratio(1, 4); }};
  }
  if (id == "help-1-3" && q) {
    // Product forms of (D2/D4)^2, Th2^2/Q4^2 and Th4^2/Q4^2 in q.
    return {[](const Blocks& b) {
              const NomeSeries d_ratio =
                  div(power(b.P(4, 4), 6), power(b.P(8, 8), 6)).shifted(b.qexp(-1, 1)) * R::ratio(1, 8);
              const NomeSeries c2 = div(power(b.P(2, 4), 4), sq(b.P(1, 2))).shifted(b.qexp(-1, 4));
              const NomeSeries c4 =
                  div(power(b.P(4, 8), 4) * sq(b.P(8, 8)), sq(b.P(1, 2)) * sq(b.P(4, 4))).shifted(b.qexp(-1, 4)) *
                  R(2);
              return d_ratio * c2 * c4;
            },
            [](const Blocks& b) { return sq(b.PRq(4)) * R::ratio(1, 4); }};
  }
  if (id == "help-2-3" && q) {
    // 9 (D1/D9)(Th9/Th1); the 27 and the 3 of the two displays give 9 * 3 / 27 = 1.
    return {[](const Blocks& b) {
              const NomeSeries d_ratio = div(power(b.P(2, 2), 3), power(b.P(18, 18), 3)).shifted(b.qexp(-2, 1));
              const NomeSeries t_ratio = div(sq(b.P(9, 18)) * b.P(18, 18), sq(b.P(1, 2)) * b.P(2, 2));
              return d_ratio * t_ratio * (R(9) * R::ratio(1, 27) * R(3));
            },
            [](const Blocks& b) { return b.PRq(b.nine()); }};
  }
  if (id == "help-3-1" && q) {
    // 3 (D1/D3)(Th3/Th1); the 1/(3 sqrt 3) and sqrt 3 of the displays cancel to 1/3.
    return {[](const Blocks& b) {
              const NomeSeries d_ratio = div(power(b.P(2, 2), 3), power(b.P(6, 6), 3)).shifted(b.qexp(-1, 2));
              const NomeSeries t_ratio = div(sq(b.P(3, 6)) * b.P(6, 6), sq(b.P(1, 2)) * b.P(2, 2));
              return d_ratio * t_ratio * (R(3) * R::ratio(1, 3));
            },
            [](const Blocks& b) { return b.PRq(3); }};
  }
  if (id == "Cq" && p) {
    return {[](const Blocks& b) { return div(sq(b.Th(2)), b.Q4sq(2)); },
            [](const Blocks& b) { return b.PR(2); }};
  }
  if (id == "Cq" && q) {
    return {[](const Blocks& b) { return div(power(b.P(2, 4), 4), sq(b.P(1, 2))).shifted(b.qexp(-1, 4)); },
            [](const Blocks& b) { return b.PRq(2); }};
  }
  throw ContractError("identity '" + std::string(id) + "' has no formal part '" + std::string(label) + "'");
}

const FormalPartInfo& find_part(const IdentityDescriptor& d, std::string_view label) {
  for (const auto& part : d.formal_parts) {
    if (part.label == label) return part;
  }
  throw ContractError("identity '" + d.id + "' has no formal part '" + std::string(label) + "'");
}

// Builds both sides, raising the working order until both are exact through target.
SidePair build_to_order(const PartBuilder& builder, int m, int target, Mutation mutation) {
  // Every block has a nonzero term below 2m, so reciprocals are always defined.
  int work = std::max(target, 2 * m);
  for (int attempt = 0; attempt < 16; ++attempt) {
    const Blocks blocks{m, work, mutation};
    std::optional<NomeSeries> lhs;
    std::optional<NomeSeries> rhs;
    std::exception_ptr lhs_error;
    std::exception_ptr rhs_error;
#pragma omp parallel sections num_threads(2)
    {
#pragma omp section
      try {
        lhs.emplace(builder.lhs(blocks));
      } catch (...) {
        lhs_error = std::current_exception();
      }
#pragma omp section
      try {
        rhs.emplace(builder.rhs(blocks));
      } catch (...) {
        rhs_error = std::current_exception();
      }
    }
    if (lhs_error) std::rethrow_exception(lhs_error);
    if (rhs_error) std::rethrow_exception(rhs_error);
    const int reached = std::min(lhs->order(), rhs->order());
    if (reached >= target) return {lhs->truncated(target), rhs->truncated(target)};
    work += target - reached;
  }
  throw NonConvergedError("formal sides did not reach the requested order");
}

}  // namespace

int effective_root(const IdentityDescriptor& d, const FormalPartInfo& part, Mutation mutation) {
  if (mutation == Mutation::pi_ratio_nine_to_eight && part.nome == FormalNome::dual &&
      d.is_sensitive_to(mutation)) {
    return std::lcm(part.root_m, 4 * 8);
  }
  return part.root_m;
}

SidePair build_sides(std::string_view id, std::string_view part_label, int m, int order, Mutation mutation) {
  const IdentityDescriptor& d = find_identity(id);
  if (!d.formal) throw ContractError("identity '" + d.id + "' has no formal mode");
  find_part(d, part_label);
  return build_to_order(part_builder(id, part_label), m, order, mutation);
}

PartReport compare_series(const NomeSeries& lhs, const NomeSeries& rhs, int order) {
  PartReport r;
  r.nome = lhs.nome();
  r.root_m = lhs.root();
  r.order = order;
  r.leading_exponent = std::min(lhs.valuation(), rhs.valuation());
  std::set<int> exponents;
  for (const auto& [e, c] : lhs.terms()) {
    if (e <= order) exponents.insert(e);
  }
  for (const auto& [e, c] : rhs.terms()) {
    if (e <= order) exponents.insert(e);
  }
  r.coefficients_compared = exponents.size();
  for (int e : exponents) {
    const LaurentPoly a = lhs.coefficient(e);
    const LaurentPoly b = rhs.coefficient(e);
    if (const auto u = first_difference(a, b)) {
      r.first_mismatch = Mismatch{e, *u, a.coefficient(*u).to_string(), b.coefficient(*u).to_string()};
      break;
    }
  }
  r.inconclusive = !r.first_mismatch && r.leading_exponent > order;
  r.verified = !r.first_mismatch && !r.inconclusive;
  return r;
}

ProofReport prove(std::string_view id, std::optional<int> order, Mutation mutation) {
  const auto start = std::chrono::steady_clock::now();
  const IdentityDescriptor& d = find_identity(id);
  if (!d.formal) throw ContractError("identity '" + d.id + "' has no formal mode");
  if (order && *order < 0) throw ContractError("formal order must be non-negative");

  ProofReport report;
  report.id = d.id;
  report.root_m = d.formal_parts.front().root_m;
  report.order = order.value_or(d.formal_parts.front().default_order);
  report.verified = true;
  for (const auto& part : d.formal_parts) {
    const int nominal = order.value_or(part.default_order);
    const int m = effective_root(d, part, mutation);
    const int target = nominal * (m / part.root_m);
    const SidePair sides = build_to_order(part_builder(d.id, part.label), m, target, mutation);
    PartReport pr = compare_series(sides.lhs, sides.rhs, target);
    pr.label = part.label;
    if (!pr.verified) report.verified = false;
    if (pr.inconclusive) report.inconclusive = true;
    if (pr.first_mismatch && !report.first_mismatch) report.first_mismatch = pr.first_mismatch;
    report.parts.push_back(std::move(pr));
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace qtheta::formal
