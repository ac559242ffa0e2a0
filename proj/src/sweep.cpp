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

#include "qtheta/sweep.hpp"

#include <omp.h>

#include <cmath>
#include <numbers>
#include <random>

namespace qtheta {

namespace {

constexpr double kExclusionRadius = 1e-6;

// 53 uniform bits in [0, 1); avoids the implementation-defined distributions.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

PointResult evaluate_point(const IdentityDescriptor& d, std::size_t index, const GridPoint& p,
                           const TruncationPolicy& policy, const SweepOptions& options) {
  PointResult r;
  r.index = index;
  r.point = p;
  if (d.divides_by_trig && near_trig_zero(p.z)) {
    r.status = PointStatus::skipped;
    return r;
  }
  try {
    r.record = evaluate(d, p.z, QParameter(p.q), policy, options.mutation, options.unsquared);
  } catch (const Error& e) {
    r.status = PointStatus::error;
    r.error = e.what();
    r.error_kind = e.kind();
  } catch (const std::exception& e) {
    r.status = PointStatus::error;
    r.error = e.what();
  }
  return r;
}

// Serial aggregation so that ties resolve to the lowest index.
SweepReport aggregate(const IdentityDescriptor& d, const GridSpec& grid, std::vector<PointResult> points) {
  SweepReport report;
  report.id = d.id;
  report.grid = grid;
  for (const auto& p : points) {
    switch (p.status) {
      case PointStatus::skipped:
        ++report.skipped;
        break;
      case PointStatus::error:
        ++report.failed;
        break;
      case PointStatus::ok:
        ++report.evaluated;
        if (!report.worst || p.record.rel_err > report.max_rel_err) {
          report.worst = p.record;
          report.max_rel_err = p.record.rel_err;
        }
        break;
    }
  }
  report.points = std::move(points);
  report.pass = report.failed == 0 && report.evaluated > 0 && report.max_rel_err < grid.tolerance;
  return report;
}

void check_options(const IdentityDescriptor& d, const SweepOptions& options) {
  if (options.unsquared && !d.squared_form) {
    throw ContractError(d.id + ": unsquared sweep applies only to square-root identities");
  }
}

}  // namespace

bool near_trig_zero(Complex z) {
  for (double c : {0.0, std::numbers::pi / 2, std::numbers::pi}) {
    if (std::abs(z - c) < kExclusionRadius) return true;
  }
  return false;
}

std::vector<GridPoint> grid_points(const GridSpec& grid, bool has_z) {
  if (grid.q_values.empty() || grid.z_count < 1) throw ContractError("grid must be nonempty");
  if (grid.z_re_min > grid.z_re_max || grid.z_im_min > grid.z_im_max) {
    throw ContractError("grid ranges are inverted");
  }
  if (!(grid.tolerance > 0.0)) throw ContractError("grid tolerance must be positive");
  std::vector<GridPoint> points;
  std::mt19937_64 rng(grid.seed);
  for (Complex q : grid.q_values) {
    if (!has_z) {
      points.push_back({Complex(0.0), q});
      continue;
    }
    for (int j = 0; j < grid.z_count; ++j) {
      const double re = grid.z_re_min + unit(rng) * (grid.z_re_max - grid.z_re_min);
      const double im = grid.z_im_min + unit(rng) * (grid.z_im_max - grid.z_im_min);
      points.push_back({Complex(re, im), q});
    }
  }
  return points;
}

SweepReport sweep(const IdentityDescriptor& d, const GridSpec& grid, const TruncationPolicy& policy,
                  const SweepOptions& options) {
  check_options(d, options);
  const auto points = grid_points(grid, d.has_z);
  std::vector<PointResult> results(points.size());
  const auto n = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    results[idx] = evaluate_point(d, idx, points[idx], policy, options);
  }
  return aggregate(d, grid, std::move(results));
}

SweepReport sweep_serial(const IdentityDescriptor& d, const GridSpec& grid, const TruncationPolicy& policy,
                         const SweepOptions& options) {
  check_options(d, options);
  const auto points = grid_points(grid, d.has_z);
  std::vector<PointResult> results;
  results.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) results.push_back(evaluate_point(d, i, points[i], policy, options));
  return aggregate(d, grid, std::move(results));
}

}  // namespace qtheta
