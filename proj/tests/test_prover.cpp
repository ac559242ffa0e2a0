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

#include <gtest/gtest.h>

#include <numbers>

#include "qtheta/formal/prover.hpp"

namespace qtheta::formal {
namespace {

TEST(Prover, EveryFormalIdentityVerifiesAtDefaultOrder) {
  for (const auto& d : catalog()) {
    if (!d.formal) continue;
    const auto r = prove(d.id);
    EXPECT_TRUE(r.verified) << d.id;
    EXPECT_FALSE(r.inconclusive) << d.id;
    EXPECT_FALSE(r.first_mismatch) << d.id;
    ASSERT_EQ(r.parts.size(), d.formal_parts.size());
    for (std::size_t i = 0; i < r.parts.size(); ++i) {
      EXPECT_EQ(r.parts[i].order, d.formal_parts[i].default_order) << d.id;
      EXPECT_EQ(r.parts[i].root_m, d.formal_parts[i].root_m) << d.id;
      EXPECT_GT(r.parts[i].coefficients_compared, 0u) << d.id;
    }
  }
}

TEST(Prover, PinnedOrders) {
  EXPECT_TRUE(prove("help-0", 100).verified);
  const auto r = prove("thm-2.3", 240);
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.root_m, 12);
}

TEST(Prover, MonotoneInOrder) {
  for (const auto& d : catalog()) {
    if (!d.formal) continue;
    const auto full = prove(d.id);
    ASSERT_TRUE(full.verified) << d.id;
    int lead = full.parts.front().leading_exponent;
    for (const auto& p : full.parts) lead = std::max(lead, p.leading_exponent);
    const int half = std::max(lead, full.order / 2);
    EXPECT_TRUE(prove(d.id, half).verified) << d.id << " at " << half;
    EXPECT_TRUE(prove(d.id, std::max(lead, 0)).verified) << d.id << " at " << lead;
  }
}

TEST(Prover, BelowLeadingOrderIsInconclusive) {
  const auto r = prove("thm-2.2", 1);
  EXPECT_FALSE(r.verified);
  EXPECT_TRUE(r.inconclusive);
  EXPECT_FALSE(r.first_mismatch);
}

TEST(Prover, MutationsProduceLeadingMismatches) {
  const auto half = prove("thm-2.1", std::nullopt, Mutation::half_to_third);
  EXPECT_FALSE(half.verified);
  ASSERT_TRUE(half.first_mismatch);
  EXPECT_EQ(half.first_mismatch->t_exponent, half.parts.front().leading_exponent);

  const auto nine = prove("thm-2.2", std::nullopt, Mutation::pi_ratio_nine_to_eight);
  EXPECT_FALSE(nine.verified);
  ASSERT_TRUE(nine.first_mismatch);
  EXPECT_EQ(nine.parts.front().root_m, 288);
  EXPECT_EQ(nine.first_mismatch->t_exponent, nine.parts.front().leading_exponent);

  const auto sign = prove("thm-2.3", std::nullopt, Mutation::sign_flip);
  EXPECT_FALSE(sign.verified);
  ASSERT_TRUE(sign.first_mismatch);
  EXPECT_EQ(sign.first_mismatch->t_exponent, sign.parts.front().leading_exponent);

  EXPECT_FALSE(prove("help-2-3", std::nullopt, Mutation::pi_ratio_nine_to_eight).verified);
}

TEST(Prover, RejectsNonFormalIds) {
  EXPECT_THROW(prove("q-Double2"), ContractError);
  EXPECT_THROW(prove("nope"), ContractError);
  EXPECT_THROW(prove("thm-2.1", -1), ContractError);
}

// Partial sums of the formal sides against the numeric evaluators at
// z = 0.3, q = 0.2. Dual parts use t = p^(1/m), direct parts t = q^(1/m).
TEST(Prover, CrossEngineConsistency) {
  const QParameter q(0.2);
  const Complex z(0.3);
  const Complex u = std::exp(Complex(0.0, 0.3));
  for (const auto& d : catalog()) {
    if (!d.formal) continue;
    const auto numeric = evaluate(d, z, q);
    for (const auto& part : d.formal_parts) {
      const SidePair sides = build_sides(d.id, part.label, part.root_m, part.default_order);
      const Complex tau = part.nome == FormalNome::dual ? q.dual_tau() : q.tau();
      const Complex t = std::exp(Complex(0.0, std::numbers::pi) * tau / static_cast<double>(part.root_m));
      const Complex lhs = sides.lhs.evaluate(t, u);
      const Complex rhs = sides.rhs.evaluate(t, u);
      const double scale = std::max(1.0, std::abs(numeric.lhs));
      EXPECT_LT(std::abs(lhs - numeric.lhs) / scale, 1e-8) << d.id << " " << part.label;
      EXPECT_LT(std::abs(rhs - numeric.rhs) / scale, 1e-8) << d.id << " " << part.label;
      EXPECT_LT(std::abs((lhs - rhs) - (numeric.lhs - numeric.rhs)) / scale, 1e-8) << d.id;
    }
  }
}

TEST(Prover, CompareSeriesReportsFirstMismatch) {
  NomeSeries a(FormalNome::dual, 4, 10);
  NomeSeries b(FormalNome::dual, 4, 10);
  a.add_term(3, 1, GaussianRational(2));
  b.add_term(3, 1, GaussianRational(2));
  a.add_term(5, -1, GaussianRational::ratio(1, 3));
  b.add_term(5, 2, GaussianRational(1));
  const auto r = compare_series(a, b, 10);
  EXPECT_FALSE(r.verified);
  ASSERT_TRUE(r.first_mismatch);
  EXPECT_EQ(r.first_mismatch->t_exponent, 5);
  EXPECT_EQ(r.first_mismatch->u_exponent, -1);
  EXPECT_EQ(r.first_mismatch->lhs, "1/3");
  EXPECT_EQ(r.first_mismatch->rhs, "0");
  EXPECT_TRUE(compare_series(a, b, 4).verified);
  EXPECT_TRUE(compare_series(a, b, 2).inconclusive);
}

}  // namespace
}  // namespace qtheta::formal
