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
#include <omp.h>

#include <numbers>

#include "qtheta/sweep.hpp"

namespace qtheta {
namespace {

void expect_same(const SweepReport& a, const SweepReport& b) {
  ASSERT_EQ(a.points.size(), b.points.size());
  EXPECT_EQ(a.pass, b.pass);
  EXPECT_EQ(a.max_rel_err, b.max_rel_err);
  EXPECT_EQ(a.evaluated, b.evaluated);
  EXPECT_EQ(a.skipped, b.skipped);
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    EXPECT_EQ(a.points[i].record.lhs, b.points[i].record.lhs);
    EXPECT_EQ(a.points[i].record.rhs, b.points[i].record.rhs);
  }
  ASSERT_EQ(a.worst.has_value(), b.worst.has_value());
  if (a.worst) EXPECT_EQ(a.worst->z, b.worst->z);
}

TEST(Grid, DeterministicAndInRange) {
  GridSpec g;
  const auto a = grid_points(g, true);
  const auto b = grid_points(g, true);
  ASSERT_EQ(a.size(), 200u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].z, b[i].z);
    EXPECT_GE(a[i].z.real(), g.z_re_min);
    EXPECT_LE(a[i].z.real(), g.z_re_max);
    EXPECT_GE(a[i].z.imag(), g.z_im_min);
    EXPECT_LE(a[i].z.imag(), g.z_im_max);
  }
  g.seed += 1;
  EXPECT_NE(grid_points(g, true)[0].z, a[0].z);
}

TEST(Grid, NomeOnlyUsesOnePointPerNome) { EXPECT_EQ(grid_points(GridSpec{}, false).size(), 5u); }

TEST(Grid, RejectsEmptyOrInverted) {
  GridSpec g;
  g.q_values.clear();
  EXPECT_THROW(grid_points(g, true), ContractError);
  g = GridSpec{};
  g.z_count = 0;
  EXPECT_THROW(grid_points(g, true), ContractError);
  g = GridSpec{};
  g.z_re_min = 2.0;
  EXPECT_THROW(grid_points(g, true), ContractError);
}

TEST(Sweep, ParallelMatchesSerial) {
  for (const char* id : {"q-Double2", "thm-2.2", "ratio", "help-2-3"}) {
    const auto& d = find_identity(id);
    const auto serial = sweep_serial(d, GridSpec{});
    for (int threads : {1, 2, 4}) {
      omp_set_num_threads(threads);
      expect_same(sweep(d, GridSpec{}), serial);
    }
  }
}

TEST(Sweep, PinnedPasses) {
  GridSpec g;
  g.z_re_min = 0.1;
  g.z_re_max = 1.4;
  g.z_count = 20;
  g.q_values = {0.1, 0.2, 0.3, 0.4, 0.5};
  EXPECT_TRUE(sweep(find_identity("q-Double2"), g).pass);
  EXPECT_TRUE(sweep(find_identity("thm-2.2"), g).pass);
}

TEST(Sweep, EveryIdentityPassesDefaultGrid) {
  for (const auto& d : catalog()) {
    const auto r = sweep(d, GridSpec{});
    EXPECT_TRUE(r.pass) << d.id << " max_rel_err=" << r.max_rel_err;
    EXPECT_LT(r.max_rel_err, 1e-9) << d.id;
  }
}

TEST(Sweep, ExcludesTrigZerosWhenDividing) {
  GridSpec g;
  g.z_re_min = g.z_re_max = std::numbers::pi / 2;
  g.z_im_min = g.z_im_max = 0.0;
  g.z_count = 3;
  g.q_values = {0.3};
  const auto r = sweep(find_identity("ratio"), g);
  EXPECT_EQ(r.skipped, 3u);
  EXPECT_FALSE(r.pass);  // nothing was evaluated
  EXPECT_EQ(sweep(find_identity("q-Double2"), g).skipped, 0u);
}

TEST(Sweep, PointErrorsFailTheReport) {
  GridSpec g;
  g.q_values = {0.3, 0.97};
  g.z_count = 4;
  const auto r = sweep(find_identity("q-Double2"), g, TruncationPolicy(1e-15, 50));
  EXPECT_FALSE(r.pass);
  EXPECT_GT(r.failed, 0u);
  for (const auto& p : r.points) {
    if (p.status == PointStatus::error) EXPECT_EQ(p.error_kind, ErrorKind::non_converged);
  }
}

TEST(Sweep, MutationsAreDetected) {
  EXPECT_FALSE(sweep(find_identity("thm-2.1"), GridSpec{}, {}, {Mutation::half_to_third}).pass);
  EXPECT_FALSE(sweep(find_identity("q-Double"), GridSpec{}, {}, {Mutation::half_to_third}).pass);
  EXPECT_FALSE(sweep(find_identity("thm-2.2"), GridSpec{}, {}, {Mutation::pi_ratio_nine_to_eight}).pass);
  EXPECT_FALSE(sweep(find_identity("q-Triple"), GridSpec{}, {}, {Mutation::pi_ratio_nine_to_eight}).pass);
  EXPECT_FALSE(sweep(find_identity("thm-2.3"), GridSpec{}, {}, {Mutation::sign_flip}).pass);
  EXPECT_FALSE(sweep(find_identity("q-Triple2"), GridSpec{}, {}, {Mutation::sign_flip}).pass);
}

}  // namespace
}  // namespace qtheta
