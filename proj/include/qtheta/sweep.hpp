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

#ifndef QTHETA_SWEEP_HPP
#define QTHETA_SWEEP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtheta/catalog.hpp"

namespace qtheta {

/// Seeded grid of (z, q) points. For every q, z_count points are drawn
/// uniformly from the z rectangle; nome-only identities use one point per q.
struct GridSpec {
  static constexpr std::uint64_t default_seed = 20260314;
  static constexpr double default_tolerance = 1e-9;

  double z_re_min = 0.05;
  double z_re_max = 1.5;
  double z_im_min = -0.5;
  double z_im_max = 0.5;
  int z_count = 40;
  std::vector<Complex> q_values{0.1, 0.2, 0.3, 0.5, 0.7};
  std::uint64_t seed = default_seed;
  double tolerance = default_tolerance;
};

struct GridPoint {
  Complex z;
  Complex q;
};

/// Deterministic for a fixed spec on every platform. ContractError on an empty
/// or inverted grid.
std::vector<GridPoint> grid_points(const GridSpec& grid, bool has_z);

struct SweepOptions {
  Mutation mutation = Mutation::none;
  bool unsquared = false;  // principal-root form of square-root identities
};

enum class PointStatus { ok, skipped, error };

struct PointResult {
  std::size_t index = 0;
  GridPoint point;
  PointStatus status = PointStatus::ok;
  ResidualRecord record;
  std::string error;
  std::optional<ErrorKind> error_kind;  // unset for non-library exceptions
};

struct SweepReport {
  std::string id;
  GridSpec grid;
  std::vector<PointResult> points;  // in grid order
  std::optional<ResidualRecord> worst;
  double max_rel_err = 0.0;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
  std::size_t failed = 0;
  bool pass = false;
};

/// Points are evaluated in parallel; the report is identical to sweep_serial.
SweepReport sweep(const IdentityDescriptor& d, const GridSpec& grid, const TruncationPolicy& policy = {},
                  const SweepOptions& options = {});
/// Single-threaded reference implementation.
SweepReport sweep_serial(const IdentityDescriptor& d, const GridSpec& grid, const TruncationPolicy& policy = {},
                         const SweepOptions& options = {});

/// True when z lies within 1e-6 of 0, pi/2 or pi.
bool near_trig_zero(Complex z);

}  // namespace qtheta

#endif  // QTHETA_SWEEP_HPP
