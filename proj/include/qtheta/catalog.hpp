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

#ifndef QTHETA_CATALOG_HPP
#define QTHETA_CATALOG_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtheta/formal/nome_series.hpp"
#include "qtheta/qtrig.hpp"

namespace qtheta {

/// Deliberate corruptions of a single constant, used to show that a check can fail.
enum class Mutation {
  none,
  half_to_third,           // 1/2 Pi_q/Pi_{q^4}  ->  1/3 Pi_q/Pi_{q^4}
  pi_ratio_nine_to_eight,  // Pi_q/Pi_{q^9}      ->  Pi_q/Pi_{q^8}
  sign_flip,               // sign of the second LHS term of the cubic theta identity
};

const char* to_string(Mutation m) noexcept;
std::optional<Mutation> parse_mutation(std::string_view name);

/// Which nome the identity is stated in. Theta-form identities are stated at
/// tau' = -1/tau but are still driven by a QParameter q.
enum class IdentityNome { q, dual_tau };

const char* to_string(IdentityNome n) noexcept;

struct EvalInput {
  Complex z;
  QParameter q;
  TruncationPolicy policy;
  Mutation mutation = Mutation::none;
};

using SideEvaluator = std::function<Complex(const EvalInput&)>;

struct FormalPartInfo {
  std::string label;  // "p" or "q": the nome t is a root of
  formal::FormalNome nome;
  int root_m;
  int default_order;
};

struct IdentityDescriptor {
  std::string id;
  std::string statement_ref;  // human-readable statement
  bool has_z = true;
  IdentityNome nome = IdentityNome::q;
  bool squared_form = false;
  bool divides_by_trig = false;
  bool numeric = true;
  bool formal = false;
  std::vector<Mutation> sensitive_to;
  SideEvaluator lhs;
  SideEvaluator rhs;
  // Principal-square-root form; set only when squared_form is true.
  SideEvaluator lhs_unsquared;
  SideEvaluator rhs_unsquared;
  std::vector<FormalPartInfo> formal_parts;

  bool is_sensitive_to(Mutation m) const;
};

struct ResidualRecord {
  Complex z;
  Complex nome;
  Complex lhs;
  Complex rhs;
  double abs_err = 0.0;
  double rel_err = 0.0;
};

ResidualRecord make_record(Complex z, Complex nome, Complex lhs, Complex rhs);

/// All identities in a fixed order.
const std::vector<IdentityDescriptor>& catalog();
/// ContractError for unknown ids.
const IdentityDescriptor& find_identity(std::string_view id);

/// Squared-form identities compare the squared statement unless unsquared is set.
/// Errors are rethrown with the identity id prefixed.
ResidualRecord evaluate(const IdentityDescriptor& d, Complex z, const QParameter& q,
                        const TruncationPolicy& policy = {}, Mutation mutation = Mutation::none,
                        bool unsquared = false);
ResidualRecord evaluate(std::string_view id, Complex z, const QParameter& q,
                        const TruncationPolicy& policy = {}, Mutation mutation = Mutation::none,
                        bool unsquared = false);

/// The three instances of the constant relation
///   h2^(l)(0) (h1(x) + (-1)^l h1(-x)) - h1^(l)(0) (h2(x) + (-1)^l h2(-x))
///     = C (l!/2) theta'(0|tau'/k)^l theta^(2+l)(x|tau'/k).
enum class ConstantRelation {
  k2l2,   // h1 = theta^4(z|tau'/2),  h2 = theta^2(z|tau'/4), l = 2
  k3l1a,  // h1 = theta^3(z|tau'/3),  h2 = theta(3z|tau'),    l = 1
  k3l1b,  // h1 = theta^3(z|tau'/3),  h2 = theta(z|tau'/9),   l = 1
};

const char* to_string(ConstantRelation r) noexcept;
std::optional<ConstantRelation> parse_constant_relation(std::string_view name);

struct ConstantRelationResult {
  ResidualRecord record;
  Complex h1_derivative;  // central difference at fd_step
  Complex h2_derivative;
  Complex constant;       // closed form of C
};

/// Central difference of order 1 or 2 at 0. Throws NumericInstabilityError when
/// the estimate at step and at step/2 differ by more than 10x the latter.
Complex central_difference(const std::function<Complex(double)>& f, int order, double step);

/// Derivatives at 0 by central differences. ContractError unless
/// fd_step is in [1e-6, 1e-2]; NumericInstabilityError when an estimate moves
/// by more than 10x its own size between fd_step and fd_step/2.
ConstantRelationResult verify_constant_relation(ConstantRelation which, Complex x, const QParameter& q,
                                                double fd_step, const TruncationPolicy& policy = {});

enum class EtaLemma { help_1_3, help_2_3, help_3_1, cq_closed_form };

const char* catalog_id(EtaLemma which) noexcept;

/// Theta-ratio side at the dual nome against the product side in q.
ResidualRecord eta_quotient_check(EtaLemma which, const QParameter& q, const TruncationPolicy& policy = {});

}  // namespace qtheta

#endif  // QTHETA_CATALOG_HPP
