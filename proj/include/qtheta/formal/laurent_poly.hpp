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

#ifndef QTHETA_FORMAL_LAURENT_POLY_HPP
#define QTHETA_FORMAL_LAURENT_POLY_HPP

#include <complex>
#include <map>
#include <optional>
#include <string>

#include "qtheta/formal/gaussian_rational.hpp"

namespace qtheta::formal {

/// Finite Laurent polynomial in u = e^{iz} with Gaussian-rational coefficients.
/// Zero coefficients are never stored, so equality is map equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly constant(const GaussianRational& c) { return monomial(0, c); }
  static LaurentPoly monomial(int exponent, const GaussianRational& c);

  const std::map<int, GaussianRational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  GaussianRational coefficient(int exponent) const;

  /// Single term, used by exact division.
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  void add_term(int exponent, const GaussianRational& c);
  /// this += a * b.
  void add_product(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const GaussianRational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const GaussianRational& c) { return a *= c; }
  friend LaurentPoly operator-(LaurentPoly a) { return a *= GaussianRational(-1); }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Inverse of a monomial; ContractError otherwise.
  LaurentPoly monomial_inverse() const;

  /// u -> 1/u, i.e. z -> -z.
  LaurentPoly reflected() const;

  /// Substitution u = 1.
  GaussianRational at_unit() const;
  /// d/dz at z = 0: sum c_j * (i j).
  GaussianRational derivative_at_unit() const;

  std::complex<double> evaluate(std::complex<double> u) const;

  /// Smallest exponent with differing coefficient, if any.
  friend std::optional<int> first_difference(const LaurentPoly& a, const LaurentPoly& b);

  std::string to_string() const;

 private:
  std::map<int, GaussianRational> terms_;
};

}  // namespace qtheta::formal

#endif  // QTHETA_FORMAL_LAURENT_POLY_HPP
