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

#include "qtheta/formal/laurent_poly.hpp"

#include <set>

#include "qtheta/error.hpp"

namespace qtheta::formal {

LaurentPoly LaurentPoly::monomial(int exponent, const GaussianRational& c) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

GaussianRational LaurentPoly::coefficient(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void LaurentPoly::add_term(int exponent, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void LaurentPoly::add_product(const LaurentPoly& a, const LaurentPoly& b) {
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      auto [it, inserted] = terms_.try_emplace(ea + eb);
      it->second.add_product(ca, cb);
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  out.add_product(a, b);
  return out;
}

LaurentPoly LaurentPoly::monomial_inverse() const {
  if (!is_monomial()) throw ContractError("only monomial Laurent polynomials are invertible");
  const auto& [e, c] = *terms_.begin();
  return monomial(-e, c.inverse());
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

GaussianRational LaurentPoly::at_unit() const {
  GaussianRational sum;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

GaussianRational LaurentPoly::derivative_at_unit() const {
  GaussianRational sum;
  const GaussianRational i = GaussianRational::i();
  for (const auto& [e, c] : terms_) sum += c * i * GaussianRational(e);
  return sum;
}

std::complex<double> LaurentPoly::evaluate(std::complex<double> u) const {
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : terms_) sum += c.to_complex() * std::pow(u, e);
  return sum;
}

std::optional<int> first_difference(const LaurentPoly& a, const LaurentPoly& b) {
  std::set<int> keys;
  for (const auto& [e, c] : a.terms_) keys.insert(e);
  for (const auto& [e, c] : b.terms_) keys.insert(e);
  for (int e : keys) {
    if (!(a.coefficient(e) == b.coefficient(e))) return e;
  }
  return std::nullopt;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (e != 0) out += "u^" + std::to_string(e);
  }
  return out;
}

}  // namespace qtheta::formal
