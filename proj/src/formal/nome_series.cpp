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

#include "qtheta/formal/nome_series.hpp"

#include <algorithm>
#include <numeric>

#include "qtheta/error.hpp"

namespace qtheta::formal {

const char* to_string(FormalNome nome) noexcept { return nome == FormalNome::dual ? "p" : "q"; }

NomeSeries::NomeSeries(FormalNome nome, int root, int order) : nome_(nome), root_(root), order_(order) {
  if (root < 1) throw ContractError("series root must be positive");
}

NomeSeries NomeSeries::constant(FormalNome nome, int root, int order, const GaussianRational& c) {
  NomeSeries s(nome, root, order);
  s.add_term(0, LaurentPoly::constant(c));
  return s;
}

int NomeSeries::valuation() const { return terms_.empty() ? order_ + 1 : terms_.begin()->first; }

LaurentPoly NomeSeries::coefficient(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void NomeSeries::add_term(int exponent, const LaurentPoly& c) {
  if (exponent > order_ || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void NomeSeries::add_term(int exponent, int u_exponent, const GaussianRational& c) {
  add_term(exponent, LaurentPoly::monomial(u_exponent, c));
}

NomeSeries NomeSeries::rebased(int new_root) const {
  if (new_root % root_ != 0) throw ContractError("rebase target is not a multiple of the root");
  const int f = new_root / root_;
  NomeSeries out(nome_, new_root, order_ * f);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e * f, c);
  return out;
}

NomeSeries NomeSeries::truncated(int order) const {
  NomeSeries out(nome_, root_, std::min(order, order_));
  for (const auto& [e, c] : terms_) {
    if (e > out.order_) break;
    out.terms_.emplace(e, c);
  }
  return out;
}

NomeSeries NomeSeries::shifted(int exponent) const {
  NomeSeries out(nome_, root_, order_ + exponent);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + exponent, c);
  return out;
}

NomeSeries NomeSeries::reflected() const {
  NomeSeries out(nome_, root_, order_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c.reflected());
  return out;
}

NomeSeries NomeSeries::at_unit() const {
  NomeSeries out(nome_, root_, order_);
  for (const auto& [e, c] : terms_) out.add_term(e, LaurentPoly::constant(c.at_unit()));
  return out;
}

NomeSeries NomeSeries::derivative_at_unit() const {
  NomeSeries out(nome_, root_, order_);
  for (const auto& [e, c] : terms_) out.add_term(e, LaurentPoly::constant(c.derivative_at_unit()));
  return out;
}

namespace {

void align(NomeSeries& a, NomeSeries& b) {
  if (a.nome() != b.nome()) throw ContractError("cannot combine series in different nomes");
  if (a.root() == b.root()) return;
  const int root = std::lcm(a.root(), b.root());
  a = a.rebased(root);
  b = b.rebased(root);
}

}  // namespace

NomeSeries& NomeSeries::operator+=(const NomeSeries& o) {
  NomeSeries rhs = o;
  align(*this, rhs);
  *this = truncated(std::min(order_, rhs.order_));
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

NomeSeries& NomeSeries::operator-=(const NomeSeries& o) { return *this += -o; }

NomeSeries& NomeSeries::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

NomeSeries operator*(const NomeSeries& a_in, const NomeSeries& b_in) {
  NomeSeries a = a_in;
  NomeSeries b = b_in;
  align(a, b);
  const int order = std::min(a.order() + b.valuation(), b.order() + a.valuation());
  NomeSeries out(a.nome(), a.root(), order);
  std::map<int, LaurentPoly> acc;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      if (ea + eb > order) break;
      acc[ea + eb].add_product(ca, cb);
    }
  }
  for (auto& [e, c] : acc) out.add_term(e, c);
  return out;
}

NomeSeries reciprocal(const NomeSeries& a) {
  const int v = a.valuation();
  if (v > a.order()) throw ContractError("reciprocal of a series with no known nonzero term");
  const LaurentPoly lead_inv = a.coefficient(v).monomial_inverse();
  const int span = a.order() - v;  // relative precision
  NomeSeries out(a.nome(), a.root(), a.order() - 2 * v);
  // b_n = -lead^{-1} sum_{k=1..n} a_{v+k} b_{n-k}, b_0 = lead^{-1}.
  std::vector<LaurentPoly> b(static_cast<std::size_t>(span) + 1);
  b[0] = lead_inv;
  for (int n = 1; n <= span; ++n) {
    LaurentPoly sum;
    for (auto it = a.terms().upper_bound(v); it != a.terms().end() && it->first - v <= n; ++it) {
      const auto& prev = b[static_cast<std::size_t>(n - (it->first - v))];
      if (!prev.is_zero()) sum.add_product(it->second, prev);
    }
    b[static_cast<std::size_t>(n)] = -(lead_inv * sum);
  }
  for (int n = 0; n <= span; ++n) out.add_term(n - v, b[static_cast<std::size_t>(n)]);
  return out;
}

NomeSeries power(const NomeSeries& a, int n) {
  if (n < 0) return power(reciprocal(a), -n);
  if (n == 0) return NomeSeries::constant(a.nome(), a.root(), a.order(), GaussianRational(1));
  NomeSeries result = a;
  NomeSeries base = a;
  bool first = true;
  while (n > 0) {
    if (n & 1) {
      result = first ? base : result * base;
      first = false;
    }
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

std::complex<double> NomeSeries::evaluate(std::complex<double> t, std::complex<double> u) const {
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : terms_) sum += c.evaluate(u) * std::pow(t, e);
  return sum;
}

}  // namespace qtheta::formal
