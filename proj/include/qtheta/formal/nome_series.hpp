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

#ifndef QTHETA_FORMAL_NOME_SERIES_HPP
#define QTHETA_FORMAL_NOME_SERIES_HPP

#include <complex>
#include <map>

#include "qtheta/formal/laurent_poly.hpp"

namespace qtheta::formal {

/// Which nome the series variable t is a root of: t^m = p (dual) or t^m = q (direct).
enum class FormalNome { dual, direct };

const char* to_string(FormalNome nome) noexcept;

/// Truncated Laurent series sum_e c_e(u) t^e with t^root = nome.
///
/// Every coefficient with exponent <= order() is exact; nothing is known
/// above it. Arithmetic tracks the order: sums keep the smaller one, products
/// lose what the other factor's valuation cannot support, reciprocals need a
/// monomial leading coefficient. Operands with different roots are rebased to
/// the least common multiple first.
class NomeSeries {
 public:
  NomeSeries(FormalNome nome, int root, int order);
  static NomeSeries constant(FormalNome nome, int root, int order, const GaussianRational& c);

  FormalNome nome() const noexcept { return nome_; }
  int root() const noexcept { return root_; }
  int order() const noexcept { return order_; }
  const std::map<int, LaurentPoly>& terms() const noexcept { return terms_; }

  /// First exponent with a nonzero coefficient, or order() + 1 if none is known.
  int valuation() const;
  LaurentPoly coefficient(int exponent) const;

  /// Terms above order() are dropped.
  void add_term(int exponent, const LaurentPoly& c);
  void add_term(int exponent, int u_exponent, const GaussianRational& c);

  /// Requires new_root to be a multiple of root().
  NomeSeries rebased(int new_root) const;
  NomeSeries truncated(int order) const;
  /// Multiplies by t^exponent.
  NomeSeries shifted(int exponent) const;

  /// z -> -z.
  NomeSeries reflected() const;
  /// u -> 1.
  NomeSeries at_unit() const;
  /// d/dz at z = 0.
  NomeSeries derivative_at_unit() const;

  NomeSeries& operator+=(const NomeSeries& o);
  NomeSeries& operator-=(const NomeSeries& o);
  NomeSeries& operator*=(const GaussianRational& c);

  friend NomeSeries operator+(NomeSeries a, const NomeSeries& b) { return a += b; }
  friend NomeSeries operator-(NomeSeries a, const NomeSeries& b) { return a -= b; }
  friend NomeSeries operator-(NomeSeries a) { return a *= GaussianRational(-1); }
  friend NomeSeries operator*(NomeSeries a, const GaussianRational& c) { return a *= c; }
  friend NomeSeries operator*(const NomeSeries& a, const NomeSeries& b);

  /// Sum over known terms at numeric t and u.
  std::complex<double> evaluate(std::complex<double> t, std::complex<double> u = 1.0) const;

 private:
  FormalNome nome_;
  int root_;
  int order_;
  std::map<int, LaurentPoly> terms_;
};

NomeSeries reciprocal(const NomeSeries& a);
NomeSeries power(const NomeSeries& a, int n);

}  // namespace qtheta::formal

#endif  // QTHETA_FORMAL_NOME_SERIES_HPP
