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
#include <random>

#include "oracle/hp_oracle.hpp"
#include "qtheta/theta.hpp"

namespace qtheta {
namespace {

constexpr double kPi = std::numbers::pi;

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

struct Sample {
  Complex z;
  ModularPoint m;
};

std::vector<Sample> seeded_points(std::uint64_t seed, int n, double max_q, double max_im_z) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Sample> out;
  for (int i = 0; i < n; ++i) {
    const Complex q = std::polar(0.02 + (max_q - 0.02) * u(rng), kPi * (2.0 * u(rng) - 1.0) * 0.9);
    const Complex z(kPi * (2.0 * u(rng) - 1.0), max_im_z * (2.0 * u(rng) - 1.0));
    out.push_back({z, ModularPoint::from_nome(q)});
  }
  return out;
}

TEST(ModularPoint, EnforcesUpperHalfPlaneAndWindow) {
  EXPECT_THROW(ModularPoint(Complex(0.2, 0.0)), DomainError);
  EXPECT_THROW(ModularPoint(Complex(0.2, -1.0)), DomainError);
  EXPECT_THROW(ModularPoint(Complex(1.5, 1.0)), DomainError);
  EXPECT_NO_THROW(ModularPoint::derived(Complex(1.5, 1.0)));
  EXPECT_THROW(ModularPoint::from_nome(1.0), DomainError);
  EXPECT_THROW(ModularPoint::from_nome(0.0), DomainError);
}

TEST(ModularPoint, NomeRoundTrip) {
  const Complex q(0.3, -0.4);
  const ModularPoint m = ModularPoint::from_nome(q);
  EXPECT_LT(std::abs(m.nome() - q), 1e-15);
  EXPECT_TRUE(m.in_principal_window());
  EXPECT_LT(std::abs(m.dual().tau() * m.tau() + 1.0), 1e-15);
}

TEST(Theta1, PinnedValuesAtI) {
  const ModularPoint m(Complex(0.0, 1.0));
  const double half = static_cast<double>(oracle::Real(oracle::frozen::theta_half_at_i));
  const double prime = static_cast<double>(oracle::Real(oracle::frozen::theta_prime_at_i));
  EXPECT_NEAR(theta1_series(kPi / 2, m).real(), half, 1e-13);
  EXPECT_NEAR(theta1_half_closed_form(m).real(), half, 1e-13);
  EXPECT_NEAR(theta1_prime0(m).real(), prime, 1e-13);
  EXPECT_NEAR(theta1_prime0_series(m).real(), prime, 1e-13);
}

TEST(Theta1, ZeroAtOrigin) { EXPECT_EQ(theta1_series(0.0, ModularPoint(Complex(0.0, 1.0))), Complex(0.0)); }

TEST(Theta1, MatchesHighPrecisionOracle) {
  for (const auto& s : seeded_points(11, 30, 0.9, 1.0)) {
    const Complex expected = oracle::lo(oracle::theta1(oracle::hp(s.z), oracle::hp(s.m.tau())));
    EXPECT_LT(rel(theta1_series(s.z, s.m), expected), 1e-13) << s.z << " " << s.m.tau();
  }
}

TEST(Theta1, SeriesAgreesWithBothProducts) {
  double worst = 0.0;
  for (const auto& s : seeded_points(2026, 200, 0.8, 1.0)) {
    const Complex series = theta1_series(s.z, s.m);
    worst = std::max(worst, rel(series, theta1_product(s.z, s.m, ProductForm::exponential)));
    worst = std::max(worst, rel(series, theta1_product(s.z, s.m, ProductForm::sine)));
  }
  EXPECT_LT(worst, 1e-12);
}

TEST(Theta1, ScaledSeriesIsConsistent) {
  const ModularPoint m = ModularPoint::from_nome(Complex(0.2, 0.3));
  const Complex z(0.4, 0.2);
  EXPECT_LT(rel(theta1_series(z, m), 2.0 * m.nome_power(0.25) * theta1_series_scaled(z, m)), 1e-15);
}

TEST(Theta1, ScaledSeriesSurvivesUnderflowingNome) {
  // q^(1/4) underflows here but the ratio of two thetas does not.
  const ModularPoint m(Complex(0.0, 2000.0));
  const Complex ratio = theta1_series_scaled(0.3, m) / theta1_series_scaled(kPi / 2, m);
  EXPECT_NEAR(ratio.real(), std::sin(0.3), 1e-14);
}

TEST(Theta1, OddnessProperty) {
  for (const auto& s : seeded_points(5, 50, 0.9, 1.0)) EXPECT_LT(oddness_residual(s.z, s.m), 1e-14);
}

TEST(Theta1, QuasiPeriodicity) {
  for (const auto& s : seeded_points(6, 50, 0.8, 0.8)) {
    const auto r = quasi_period_residuals(s.z, s.m);
    EXPECT_LT(r.r_pi, 1e-10);
    EXPECT_LT(r.r_pitau, 1e-10);
  }
}

// The nome of tau/k is q^(1/k); its modulus is drawn from [0.2, 0.65] so every
// series in the residual runs at a well-conditioned nome.
std::vector<Sample> seeded_points_over_k(std::uint64_t seed, int n, int k) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Sample> out;
  for (int i = 0; i < n; ++i) {
    const double root = 0.2 + 0.45 * u(rng);
    const Complex q = std::polar(std::pow(root, k), kPi * (2.0 * u(rng) - 1.0) * 0.9);
    const Complex z(kPi * (2.0 * u(rng) - 1.0), 0.5 * (2.0 * u(rng) - 1.0));
    out.push_back({z, ModularPoint::from_nome(q)});
  }
  return out;
}

TEST(Theta1, ShiftByKTauOverK) {
  for (int k : {1, 2, 3, 4, 9}) {
    for (const auto& s : seeded_points_over_k(100 + k, 40, k)) {
      EXPECT_LT(std::abs(transform_k_residual(s.z, s.m, k)), 1e-10) << "k=" << k;
    }
  }
}

TEST(Theta1, JacobiImaginaryTransform) {
  for (const auto& s : seeded_points(8, 50, 0.8, 0.5)) {
    EXPECT_LT(std::abs(jacobi_transform_residual(s.z, s.m)), 1e-10) << s.z << " " << s.m.tau();
  }
}

TEST(Theta1, DualDerivative) {
  for (const auto& s : seeded_points(9, 50, 0.9, 0.0)) EXPECT_LT(std::abs(dual_prime_residual(s.m)), 1e-10);
}

TEST(Theta1, CapRaisesNonConvergence) {
  const ModularPoint m = ModularPoint::from_nome(0.99);
  EXPECT_THROW(theta1_series(0.3, m, TruncationPolicy(1e-15, 2)), NonConvergedError);
}

TEST(Theta1, DivisionHelpers) {
  const ModularPoint m(Complex(0.1, 0.8));
  EXPECT_LT(std::abs(m.divided(3).tau() - m.tau() / 3.0), 1e-16);
  EXPECT_LT(std::abs(m.multiplied(2).tau() - 2.0 * m.tau()), 1e-16);
  EXPECT_THROW(m.divided(0), ContractError);
}

}  // namespace
}  // namespace qtheta
