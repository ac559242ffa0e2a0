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

#include "qtheta/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "qtheta/theta.hpp"

namespace qtheta {

namespace {

constexpr double kPi = std::numbers::pi;
using formal::FormalNome;

// Base functions shared by the evaluators. Each call recomputes from scratch,
// so the two sides of an identity never reuse a sub-result.
class Family {
 public:
  explicit Family(const EvalInput& in) : in_(in) {}

  // q-trigonometric side, base q^k.
  Complex S(Complex z, int k = 1) const { return sin_q(z, in_.q.power(k), in_.policy); }
  Complex C(Complex z, int k = 1) const { return cos_q(z, in_.q.power(k), in_.policy); }
  // Pi_q / Pi_{q^k} from the products in q.
  Complex PR(int k) const { return pi_q(in_.q, in_.policy) / pi_q(in_.q.power(k), in_.policy); }

  // Theta side at tau'/k.
  ModularPoint dual(int k) const { return ModularPoint::derived(in_.q.dual_tau() / static_cast<double>(k)); }
  Complex T(Complex z, int k = 1) const { return theta1_series(z, dual(k), in_.policy); }
  Complex Th(int k) const { return T(kPi / 2, k); }
  Complex Q4(int k) const { return T(kPi / 4, k); }
  Complex D(int k) const { return theta1_prime0_series(dual(k), in_.policy); }

  Complex z() const { return in_.z; }
  double half() const { return in_.mutation == Mutation::half_to_third ? 1.0 / 3.0 : 0.5; }
  int nine() const { return in_.mutation == Mutation::pi_ratio_nine_to_eight ? 8 : 9; }
  double sign() const { return in_.mutation == Mutation::sign_flip ? -1.0 : 1.0; }

 private:
  const EvalInput& in_;
};

template <typename F>
SideEvaluator side(F f) {
  return [f](const EvalInput& in) { return f(Family(in)); };
}

Complex sq(Complex x) { return x * x; }
Complex cube(Complex x) { return x * x * x; }
Complex pow4(Complex x) { return sq(sq(x)); }

FormalPartInfo p_part(int m, int order) { return {"p", FormalNome::dual, m, order}; }
FormalPartInfo q_part(int m, int order) { return {"q", FormalNome::direct, m, order}; }

std::vector<IdentityDescriptor> build_catalog() {
  std::vector<IdentityDescriptor> c;
  auto add = [&c](IdentityDescriptor d) { c.push_back(std::move(d)); };

  // q-trigonometric multiplication formulas.
  {
    IdentityDescriptor d;
    d.id = "q-Double";
    d.statement_ref = "sin_q(2z) = 1/2 Pi_q/Pi_{q^4} sqrt(sin_{q^4}(z)^2 - sin_{q^2}(z)^4)";
    d.squared_form = true;
    d.sensitive_to = {Mutation::half_to_third};
    d.lhs = side([](const Family& f) { return sq(f.S(2.0 * f.z())); });
    d.rhs = side([](const Family& f) {
      return sq(f.half() * f.PR(4)) * (sq(f.S(f.z(), 4)) - pow4(f.S(f.z(), 2)));
    });
    d.lhs_unsquared = side([](const Family& f) { return f.S(2.0 * f.z()); });
    d.rhs_unsquared = side([](const Family& f) {
      return f.half() * f.PR(4) * std::sqrt(sq(f.S(f.z(), 4)) - pow4(f.S(f.z(), 2)));
    });
    add(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "q-Double2";
    d.statement_ref = "sin_q(2z) = Pi_q/Pi_{q^2} sin_{q^2}(z) cos_{q^2}(z)";
    d.lhs = side([](const Family& f) { return f.S(2.0 * f.z()); });
    d.rhs = side([](const Family& f) { return f.PR(2) * f.S(f.z(), 2) * f.C(f.z(), 2); });
    add(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "q-Double3";
    d.statement_ref = "cos_q(2z) = cos_{q^2}(z)^2 - sin_{q^2}(z)^2";
    d.lhs = side([](const Family& f) { return f.C(2.0 * f.z()); });
    d.rhs = side([](const Family& f) { return sq(f.C(f.z(), 2)) - sq(f.S(f.z(), 2)); });
    add(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "q-Double4";
    d.statement_ref = "sin_q(2z) = 1/2 Pi_q/Pi_{q^4} sqrt(cos_{q^4}(z)^2 - cos_{q^2}(z)^4)";
    d.squared_form = true;
    d.sensitive_to = {Mutation::half_to_third};
    d.lhs = side([](const Family& f) { return sq(f.S(2.0 * f.z())); });
    d.rhs = side([](const Family& f) {
      return sq(f.half() * f.PR(4)) * (sq(f.C(f.z(), 4)) - pow4(f.C(f.z(), 2)));
    });
    d.lhs_unsquared = side([](const Family& f) { return f.S(2.0 * f.z()); });
    d.rhs_unsquared = side([](const Family& f) {
      return f.half() * f.PR(4) * std::sqrt(sq(f.C(f.z(), 4)) - pow4(f.C(f.z(), 2)));
    });
    add(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "q-Double5";
    d.statement_ref = "cos_q(2z) = cos_q(z)^4 - sin_q(z)^4";
    d.lhs = side([](const Family& f) { return f.C(2.0 * f.z()); });
    d.rhs = side([](const Family& f) { return pow4(f.C(f.z())) - pow4(f.S(f.z())); });
    add(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "q-Triple";
    d.statement_ref = "sin_q(3z) = 1/3 Pi_q/Pi_{q^9} sin_{q^9}(z) - (1 + 1/3 Pi_q/Pi_{q^9}) sin_{q^3}(z)^3";
    d.sensitive_to = {Mutation::pi_ratio_nine_to_eight};
    d.lhs = side([](const Family& f) { return f.S(3.0 * f.z()); });
    d.rhs = side([](const Family& f) {
      const Complex a = f.PR(f.nine()) / 3.0;
      return a * f.S(f.z(), 9) - (1.0 + a) * cube(f.S(f.z(), 3));
    });
    add(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "q-Triple2";
    d.statement_ref = "sin_q(3z) = Pi_q/Pi_{q^3} cos_{q^3}(z)^2 sin_{q^3}(z) - sin_{q^3}(z)^3";
    d.sensitive_to = {Mutation::sign_flip};
    d.lhs = side([](const Family& f) { return f.S(3.0 * f.z()); });
    d.rhs = side([](const Family& f) {
      const Complex s3 = f.S(f.z(), 3);
      return f.PR(3) * sq(f.C(f.z(), 3)) * s3 - f.sign() * cube(s3);
    });
    add(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "ratio";
    d.statement_ref = "sin_q(2z) / (sin_{q^2}(z) cos_{q^2}(z)) = C(q) = theta(pi/2|tau'/2)^2 / theta(pi/4|tau'/2)^2";
    d.divides_by_trig = true;
    d.lhs = side([](const Family& f) { return f.S(2.0 * f.z()) / (f.S(f.z(), 2) * f.C(f.z(), 2)); });
    d.rhs = side([](const Family& f) { return sq(f.Th(2)) / sq(f.Q4(2)); });
    add(std::move(d));
  }

  // Theta-form statements at tau'.
  {
    IdentityDescriptor d;
    d.id = "help-0";
    d.statement_ref =
        "theta(2z+pi/2|tau') theta(pi/2|tau'/2)^2 = theta(pi/2|tau') (theta(z+pi/2|tau'/2)^2 - theta(z|tau'/2)^2)";
    d.nome = IdentityNome::dual_tau;
    d.formal = true;
    d.formal_parts = {p_part(8, 160)};
    d.lhs = side([](const Family& f) { return f.T(2.0 * f.z() + kPi / 2) * sq(f.Th(2)); });
    d.rhs = side([](const Family& f) {
      return f.Th(1) * (sq(f.T(f.z() + kPi / 2, 2)) - sq(f.T(f.z(), 2)));
    });
    add(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "help";
    d.statement_ref = "theta(z|tau'/2) theta(z+pi/2|tau'/2) theta(pi/2|tau') = theta(2z|tau') theta(pi/4|tau'/2)^2";
    d.nome = IdentityNome::dual_tau;
    d.formal = true;
    d.formal_parts = {p_part(8, 160)};
    d.lhs = side([](const Family& f) { return f.T(f.z(), 2) * f.T(f.z() + kPi / 2, 2) * f.Th(1); });
    d.rhs = side([](const Family& f) { return f.T(2.0 * f.z()) * sq(f.Q4(2)); });
    add(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "thm-2.1";
    d.statement_ref =
        "theta^2(2z|tau') Th2^4 Th4^2 = (1/2 Pi_q/Pi_{q^4})^2 (theta^2(z|tau'/4) Th2^4 Th1^2 - theta^4(z|tau'/2) Th4^2 "
        "Th1^2), Thk = theta(pi/2|tau'/k)";
    d.nome = IdentityNome::dual_tau;
    d.formal = true;
    d.formal_parts = {p_part(16, 200)};
    d.sensitive_to = {Mutation::half_to_third};
    d.lhs = side([](const Family& f) { return sq(f.T(2.0 * f.z())) * pow4(f.Th(2)) * sq(f.Th(4)); });
    d.rhs = side([](const Family& f) {
      const Complex c = sq(f.half() * f.PR(4));
      const Complex th1 = sq(f.Th(1));
      return c * (sq(f.T(f.z(), 4)) * pow4(f.Th(2)) * th1 - pow4(f.T(f.z(), 2)) * sq(f.Th(4)) * th1);
    });
    add(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "thm-2.2";
    d.statement_ref =
        "theta(3z|tau') Th3^3 Th9 = A theta(z|tau'/9) Th1 Th3^3 - (A+1) theta^3(z|tau'/3) Th1 Th9, "
        "A = 1/3 Pi_q/Pi_{q^9}";
    d.nome = IdentityNome::dual_tau;
    d.formal = true;
    d.formal_parts = {p_part(36, 360)};
    d.sensitive_to = {Mutation::pi_ratio_nine_to_eight};
    d.lhs = side([](const Family& f) { return f.T(3.0 * f.z()) * cube(f.Th(3)) * f.Th(9); });
    d.rhs = side([](const Family& f) {
      const Complex a = f.PR(f.nine()) / 3.0;
      return a * f.T(f.z(), 9) * f.Th(1) * cube(f.Th(3)) - (a + 1.0) * cube(f.T(f.z(), 3)) * f.Th(1) * f.Th(9);
    });
    add(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "thm-2.3";
    d.statement_ref =
        "theta(3z|tau') Th3^3 + theta^3(z|tau'/3) Th1 = Pi_q/Pi_{q^3} theta(z|tau'/3) theta^2(z+pi/2|tau'/3) Th1";
    d.nome = IdentityNome::dual_tau;
    d.formal = true;
    d.formal_parts = {p_part(12, 200)};
    d.sensitive_to = {Mutation::sign_flip};
    d.lhs = side([](const Family& f) {
      return f.T(3.0 * f.z()) * cube(f.Th(3)) + f.sign() * cube(f.T(f.z(), 3)) * f.Th(1);
    });
    d.rhs = side([](const Family& f) {
      return f.PR(3) * f.T(f.z(), 3) * sq(f.T(f.z() + kPi / 2, 3)) * f.Th(1);
    });
    add(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "help-1-1";
    d.statement_ref =
        "theta^2(z|tau'/2) theta^2(z+pi/2|tau'/2) = r^2 Th2^2 theta^2(z|tau'/4) - r^2 (Th4/Th2)^2 theta^4(z|tau'/2), "
        "r = theta'(0|tau'/2)/theta'(0|tau'/4)";
    d.nome = IdentityNome::dual_tau;
    d.formal = true;
    d.formal_parts = {p_part(16, 200)};
    d.lhs = side([](const Family& f) { return sq(f.T(f.z(), 2)) * sq(f.T(f.z() + kPi / 2, 2)); });
    d.rhs = side([](const Family& f) {
      const Complex r2 = sq(f.D(2) / f.D(4));
      return r2 * sq(f.Th(2)) * sq(f.T(f.z(), 4)) - r2 * sq(f.Th(4) / f.Th(2)) * pow4(f.T(f.z(), 2));
    });
    add(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "help-2-0";
    d.statement_ref =
        "4 Th3^3 theta(3z|tau') - 4 theta^3(z|tau'/3) theta(3pi/2|tau') = 12 theta'(0|tau')/theta'(0|tau'/3) "
        "theta(z|tau'/3) theta(pi/2+z|tau'/3) theta(pi/2-z|tau'/3) Th3";
    d.nome = IdentityNome::dual_tau;
    d.formal = true;
    d.formal_parts = {p_part(12, 200)};
    d.lhs = side([](const Family& f) {
      return 4.0 * cube(f.Th(3)) * f.T(3.0 * f.z()) - 4.0 * cube(f.T(f.z(), 3)) * f.T(3.0 * kPi / 2);
    });
    d.rhs = side([](const Family& f) {
      return 12.0 * (f.D(1) / f.D(3)) * f.T(f.z(), 3) * f.T(kPi / 2 + f.z(), 3) * f.T(kPi / 2 - f.z(), 3) *
             f.Th(3);
    });
    add(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "help-2-1";
    d.statement_ref =
        "theta(3z|tau') Th3^3 Th9 + theta^3(z|tau'/3) Th1 Th9 = 3 theta'(0|tau')/theta'(0|tau'/3) theta(z|tau'/3) "
        "theta^2(z+pi/2|tau'/3) Th3 Th9";
    d.nome = IdentityNome::dual_tau;
    d.formal = true;
    d.formal_parts = {p_part(36, 360)};
    d.lhs = side([](const Family& f) {
      return f.T(3.0 * f.z()) * cube(f.Th(3)) * f.Th(9) + cube(f.T(f.z(), 3)) * f.Th(1) * f.Th(9);
    });
    d.rhs = side([](const Family& f) {
      return 3.0 * (f.D(1) / f.D(3)) * f.T(f.z(), 3) * sq(f.T(f.z() + kPi / 2, 3)) * f.Th(3) * f.Th(9);
    });
    add(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "help-2-2";
    d.statement_ref =
        "A (theta(z|tau'/9) Th3^3 - theta^3(z|tau'/3) Th9) = A theta'(0|tau'/9)/theta'(0|tau'/3) theta(z|tau'/3) "
        "theta^2(z+pi/2|tau'/3) Th3, A = 1/3 Pi_q/Pi_{q^9}";
    d.nome = IdentityNome::dual_tau;
    d.formal = true;
    d.formal_parts = {p_part(36, 360)};
    d.lhs = side([](const Family& f) {
      const Complex a = f.PR(f.nine()) / 3.0;
      return a * (f.T(f.z(), 9) * cube(f.Th(3)) - cube(f.T(f.z(), 3)) * f.Th(9));
    });
    d.rhs = side([](const Family& f) {
      const Complex a = f.PR(f.nine()) / 3.0;
      return a * (f.D(9) / f.D(3)) * f.T(f.z(), 3) * sq(f.T(f.z() + kPi / 2, 3)) * f.Th(3);
    });
    add(std::move(d));
  }

  // Nome-only lemmas.
  {
    IdentityDescriptor d;
    d.id = "help-1-3";
    d.statement_ref =
        "(theta'(0|tau'/2)/theta'(0|tau'/4))^2 Th2^2 Th4^2 / theta(pi/4|tau'/2)^4 = 1/4 (Pi_q/Pi_{q^4})^2";
    d.has_z = false;
    d.formal = true;
    d.formal_parts = {p_part(16, 200), q_part(4, 200)};
    d.lhs = side([](const Family& f) {
      return sq(f.D(2) / f.D(4)) * sq(f.Th(2)) * sq(f.Th(4)) / pow4(f.Q4(2));
    });
    d.rhs = side([](const Family& f) { return 0.25 * sq(f.PR(4)); });
    add(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "help-2-3";
    d.statement_ref = "9 theta'(0|tau')/theta'(0|tau'/9) Th9/Th1 = Pi_q/Pi_{q^9}";
    d.has_z = false;
    d.formal = true;
    d.formal_parts = {q_part(4, 360)};
    d.sensitive_to = {Mutation::pi_ratio_nine_to_eight};
    d.lhs = side([](const Family& f) { return 9.0 * (f.D(1) / f.D(9)) * (f.Th(9) / f.Th(1)); });
    d.rhs = side([](const Family& f) { return f.PR(f.nine()); });
    add(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "help-3-1";
    d.statement_ref = "3 theta'(0|tau')/theta'(0|tau'/3) Th3/Th1 = Pi_q/Pi_{q^3}";
    d.has_z = false;
    d.formal = true;
    d.formal_parts = {q_part(4, 200)};
    d.lhs = side([](const Family& f) { return 3.0 * (f.D(1) / f.D(3)) * (f.Th(3) / f.Th(1)); });
    d.rhs = side([](const Family& f) { return f.PR(3); });
    add(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.id = "Cq";
    d.statement_ref = "theta(pi/2|tau'/2)^2 / theta(pi/4|tau'/2)^2 = Pi_q/Pi_{q^2}";
    d.has_z = false;
    d.formal = true;
    d.formal_parts = {p_part(8, 160), q_part(4, 160)};
    d.lhs = side([](const Family& f) { return sq(f.Th(2)) / sq(f.Q4(2)); });
    d.rhs = side([](const Family& f) { return f.PR(2); });
    add(std::move(d));
  }
  return c;
}

Complex fd_derivative(const std::function<Complex(double)>& h, int l, double step) {
  if (l == 1) return (h(step) - h(-step)) / (2.0 * step);
  return (h(step) - 2.0 * h(0.0) + h(-step)) / (step * step);
}

std::string step_text(double step) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", step);
  return buf;
}

}  // namespace

const char* to_string(Mutation m) noexcept {
  switch (m) {
    case Mutation::none:
      return "none";
    case Mutation::half_to_third:
      return "half-to-third";
    case Mutation::pi_ratio_nine_to_eight:
      return "pi-ratio-9-to-8";
    case Mutation::sign_flip:
      return "sign-flip";
  }
  return "unknown";
}

std::optional<Mutation> parse_mutation(std::string_view name) {
  for (Mutation m : {Mutation::none, Mutation::half_to_third, Mutation::pi_ratio_nine_to_eight, Mutation::sign_flip}) {
    if (name == to_string(m)) return m;
  }
  return std::nullopt;
}

const char* to_string(IdentityNome n) noexcept { return n == IdentityNome::q ? "q" : "tau'"; }

bool IdentityDescriptor::is_sensitive_to(Mutation m) const {
  return std::find(sensitive_to.begin(), sensitive_to.end(), m) != sensitive_to.end();
}

ResidualRecord make_record(Complex z, Complex nome, Complex lhs, Complex rhs) {
  ResidualRecord r{z, nome, lhs, rhs, std::abs(lhs - rhs), 0.0};
  r.rel_err = r.abs_err / std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return r;
}

const std::vector<IdentityDescriptor>& catalog() {
  static const std::vector<IdentityDescriptor> entries = build_catalog();
  return entries;
}

const IdentityDescriptor& find_identity(std::string_view id) {
  for (const auto& d : catalog()) {
    if (d.id == id) return d;
  }
  throw ContractError("unknown identity id '" + std::string(id) + "'");
}

ResidualRecord evaluate(const IdentityDescriptor& d, Complex z, const QParameter& q, const TruncationPolicy& policy,
                        Mutation mutation, bool unsquared) {
  if (unsquared && !d.squared_form) {
    throw ContractError(d.id + ": unsquared evaluation applies only to square-root identities");
  }
  const EvalInput in{d.has_z ? z : Complex(0.0), q, policy, mutation};
  try {
    const Complex lhs = unsquared ? d.lhs_unsquared(in) : d.lhs(in);
    const Complex rhs = unsquared ? d.rhs_unsquared(in) : d.rhs(in);
    require_finite(lhs, "lhs");
    require_finite(rhs, "rhs");
    return make_record(in.z, q.q(), lhs, rhs);
  } catch (const Error& e) {
    rethrow_with_context(e, d.id);
  }
}

ResidualRecord evaluate(std::string_view id, Complex z, const QParameter& q, const TruncationPolicy& policy,
                        Mutation mutation, bool unsquared) {
  return evaluate(find_identity(id), z, q, policy, mutation, unsquared);
}

const char* to_string(ConstantRelation r) noexcept {
  switch (r) {
    case ConstantRelation::k2l2:
      return "k2l2";
    case ConstantRelation::k3l1a:
      return "k3l1a";
    case ConstantRelation::k3l1b:
      return "k3l1b";
  }
  return "unknown";
}

std::optional<ConstantRelation> parse_constant_relation(std::string_view name) {
  for (auto r : {ConstantRelation::k2l2, ConstantRelation::k3l1a, ConstantRelation::k3l1b}) {
    if (name == to_string(r)) return r;
  }
  return std::nullopt;
}

Complex central_difference(const std::function<Complex(double)>& f, int order, double step) {
  if (order != 1 && order != 2) throw ContractError("central_difference supports orders 1 and 2");
  const Complex d_h = fd_derivative(f, order, step);
  const Complex d_half = fd_derivative(f, order, step / 2);
  if (std::abs(d_h - d_half) > 10.0 * std::abs(d_half)) {
    throw NumericInstabilityError("finite difference dominated by cancellation at step " + step_text(step));
  }
  return d_h;
}

ConstantRelationResult verify_constant_relation(ConstantRelation which, Complex x, const QParameter& q,
                                                double fd_step, const TruncationPolicy& policy) {
  if (!(fd_step >= 1e-6 && fd_step <= 1e-2)) {
    throw ContractError("fd_step must lie in [1e-6, 1e-2]");
  }
  const EvalInput in{x, q, policy, Mutation::none};
  const Family f(in);

  int k = 0;
  int l = 0;
  std::function<Complex(Complex)> h1;
  std::function<Complex(Complex)> h2;
  Complex constant;
  switch (which) {
    case ConstantRelation::k2l2:
      k = 2;
      l = 2;
      h1 = [&f](Complex z) { return pow4(f.T(z, 2)); };
      h2 = [&f](Complex z) { return sq(f.T(z, 4)); };
      constant = 4.0 * sq(f.D(4) / f.D(2));
      break;
    case ConstantRelation::k3l1a:
      k = 3;
      l = 1;
      h1 = [&f](Complex z) { return cube(f.T(z, 3)); };
      h2 = [&f](Complex z) { return f.T(3.0 * z, 1); };
      constant = 12.0 * f.D(1) / f.D(3);
      break;
    case ConstantRelation::k3l1b:
      k = 3;
      l = 1;
      h1 = [&f](Complex z) { return cube(f.T(z, 3)); };
      h2 = [&f](Complex z) { return f.T(z, 9); };
      constant = 4.0 * f.D(9) / f.D(3);
      break;
  }

  auto derivative = [&](const std::function<Complex(Complex)>& h, const char* name) {
    try {
      return central_difference([&h](double t) { return h(Complex(t)); }, l, fd_step);
    } catch (const NumericInstabilityError& e) {
      rethrow_with_context(e, std::string(to_string(which)) + " " + name);
    }
  };

  const Complex d1 = derivative(h1, "h1");
  const Complex d2 = derivative(h2, "h2");
  const double parity = (l % 2 == 0) ? 1.0 : -1.0;
  const Complex lhs = d2 * (h1(x) + parity * h1(-x)) - d1 * (h2(x) + parity * h2(-x));
  const double l_factorial = (l == 2) ? 2.0 : 1.0;
  const Complex theta_x = f.T(x, k);
  const Complex rhs = constant * (l_factorial / 2.0) * std::pow(f.D(k), l) * std::pow(theta_x, 2 + l);
  return {make_record(x, q.q(), lhs, rhs), d1, d2, constant};
}

const char* catalog_id(EtaLemma which) noexcept {
  switch (which) {
    case EtaLemma::help_1_3:
      return "help-1-3";
    case EtaLemma::help_2_3:
      return "help-2-3";
    case EtaLemma::help_3_1:
      return "help-3-1";
    case EtaLemma::cq_closed_form:
      return "Cq";
  }
  return "unknown";
}

ResidualRecord eta_quotient_check(EtaLemma which, const QParameter& q, const TruncationPolicy& policy) {
  return evaluate(catalog_id(which), Complex(0.0), q, policy);
}

}  // namespace qtheta
