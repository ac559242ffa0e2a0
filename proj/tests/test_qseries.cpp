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

#include <random>

#include "oracle/hp_oracle.hpp"
#include "qtheta/qseries.hpp"

namespace qtheta {
namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

TEST(QPochFinite, EmptyProductIsOne) { EXPECT_EQ(qpoch_finite(Complex(0.7, 0.1), 0.3, 0), Complex(1.0)); }

TEST(QPochFinite, MatchesExplicitProduct) {
  const Complex a(0.4, -0.2);
  const Complex q(0.5, 0.3);
  const Complex expected = (1.0 - a) * (1.0 - a * q) * (1.0 - a * q * q);
  EXPECT_LT(std::abs(qpoch_finite(a, q, 3) - expected), 1e-15);
}

TEST(QPochInfinite, PinnedTenthValue) {
  const double expected = static_cast<double>(oracle::Real(oracle::frozen::qpoch_tenth));
  const Complex got = qpoch_infinite(0.1, 0.1);
  EXPECT_NEAR(got.real(), expected, 1e-13);
  EXPECT_EQ(got.imag(), 0.0);
}

TEST(QPochInfinite, PinnedTenthSquared) {
  const double expected = static_cast<double>(oracle::Real(oracle::frozen::qpoch_tenth_squared));
  const Complex got = qpoch_infinite(0.1, 0.1);
  EXPECT_NEAR((got * got).real(), expected, 1e-13);
}

TEST(QPochInfinite, MatchesHighPrecisionOracleOnComplexArguments) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 40; ++i) {
    const Complex q = std::polar(0.9 * std::abs(u(rng)), 3.14 * u(rng));
    const Complex a(2.0 * u(rng), 2.0 * u(rng));
    const Complex expected = oracle::lo(oracle::qpoch(oracle::hp(a), oracle::hp(q)));
    EXPECT_LT(rel(qpoch_infinite(a, q), expected), 1e-12) << "a=" << a << " q=" << q;
  }
}

TEST(QPochInfinite, EulerPentagonalTheorem) {
  for (double r : {0.1, 0.4, 0.7}) {
    const Complex q = std::polar(r, 0.6);
    Complex series = 0.0;
    for (int k = -40; k <= 40; ++k) {
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      series += sign * std::pow(q, k * (3 * k - 1) / 2);
    }
    EXPECT_LT(rel(qpoch_infinite(q, q), series), 1e-13);
  }
}

TEST(QPochInfinite, ShiftRecurrence) {
  const Complex a(0.3, 0.8);
  const Complex q(-0.2, 0.6);
  EXPECT_LT(rel(qpoch_infinite(a, q), (1.0 - a) * qpoch_infinite(a * q, q)), 1e-14);
}

TEST(QPochInfinite, RejectsNomeOutsideDisk) {
  EXPECT_THROW(qpoch_infinite(0.5, 1.0), DomainError);
  EXPECT_THROW(qpoch_infinite(0.5, Complex(0.0, 1.2)), DomainError);
}

TEST(QPochInfinite, CapRaisesNonConvergence) {
  EXPECT_THROW(qpoch_infinite(0.5, 0.9, TruncationPolicy(1e-15, 5)), NonConvergedError);
}

TEST(QPochMulti, EmptyListAndProduct) {
  EXPECT_EQ(qpoch_multi({}, 0.3), Complex(1.0));
  const std::vector<Complex> as{0.2, Complex(0.1, 0.4)};
  EXPECT_LT(rel(qpoch_multi(as, 0.5), qpoch_infinite(as[0], 0.5) * qpoch_infinite(as[1], 0.5)), 1e-15);
}

TEST(TruncationPolicy, RejectsBadParameters) {
  EXPECT_THROW(TruncationPolicy(0.0, 10), ContractError);
  EXPECT_THROW(TruncationPolicy(-1e-3, 10), ContractError);
  EXPECT_THROW(TruncationPolicy(std::nan(""), 10), ContractError);
  EXPECT_THROW(TruncationPolicy(1e-10, 0), ContractError);
  EXPECT_DOUBLE_EQ(TruncationPolicy(1e-10, 10).tightened(10).tol(), 1e-11);
}

}  // namespace
}  // namespace qtheta
