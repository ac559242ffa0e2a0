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

#ifndef QTHETA_QSERIES_HPP
#define QTHETA_QSERIES_HPP

#include <cstddef>
#include <span>

#include "qtheta/error.hpp"

namespace qtheta {

/// Governs every infinite series or product evaluation in the library.
///
/// `tol` is an absolute bound on the neglected tail; `max_terms` caps the
/// number of terms or factors. Hitting the cap before the tail bound drops
/// below `tol` raises NonConvergedError rather than returning a partial result.
class TruncationPolicy {
 public:
  static constexpr double default_tol = 1e-15;
  static constexpr std::size_t default_max_terms = 1'000'000;

  TruncationPolicy() = default;
  TruncationPolicy(double tol, std::size_t max_terms);

  double tol() const noexcept { return tol_; }
  std::size_t max_terms() const noexcept { return max_terms_; }

  /// Same cap, tolerance divided by `factor`.
  TruncationPolicy tightened(double factor) const;

 private:
  double tol_ = default_tol;
  std::size_t max_terms_ = default_max_terms;
};

/// Finite q-shifted factorial (a;q)_n = prod_{i<n} (1 - a q^i); (a;q)_0 = 1.
Complex qpoch_finite(Complex a, Complex q, std::size_t n);

/// (a;q)_inf by direct multiplication, truncated at the first k with
/// |a| |q|^k / (1 - |q|) < tol. Requires |q| < 1.
///
/// The supported numeric envelope is |q| <= 0.95; beyond it results remain
/// correct but need many factors and lose a few digits to rounding.
Complex qpoch_infinite(Complex a, Complex q, const TruncationPolicy& policy = {});

/// (a_1, ..., a_k; q)_inf. An empty list gives 1.
Complex qpoch_multi(std::span<const Complex> as, Complex q, const TruncationPolicy& policy = {});

}  // namespace qtheta

#endif  // QTHETA_QSERIES_HPP
