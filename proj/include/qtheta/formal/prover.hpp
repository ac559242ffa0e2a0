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

#ifndef QTHETA_FORMAL_PROVER_HPP
#define QTHETA_FORMAL_PROVER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtheta/catalog.hpp"
#include "qtheta/formal/nome_series.hpp"

namespace qtheta::formal {

struct Mismatch {
  int t_exponent;
  int u_exponent;
  std::string lhs;
  std::string rhs;
};

/// One side-by-side comparison, in the variable t with t^root_m = nome.
struct PartReport {
  std::string label;
  FormalNome nome = FormalNome::dual;
  int root_m = 0;   // root actually used (may grow under a mutation)
  int order = 0;    // coefficients compared through t^order
  bool verified = false;
  bool inconclusive = false;
  int leading_exponent = 0;  // smallest exponent with a nonzero coefficient on either side
  std::size_t coefficients_compared = 0;
  std::optional<Mismatch> first_mismatch;
};

/// "verified" means every coefficient through t^order agrees exactly; it is
/// not a proof beyond that order.
struct ProofReport {
  std::string id;
  bool verified = false;
  bool inconclusive = false;
  int order = 0;   // requested order in units of the nominal root
  int root_m = 0;  // nominal root of the first part
  double elapsed_ms = 0.0;
  std::vector<PartReport> parts;
  std::optional<Mismatch> first_mismatch;  // from the first failing part
};

struct SidePair {
  NomeSeries lhs;
  NomeSeries rhs;
};

/// Root used for a part under a mutation; only the 9 -> 8 change needs a finer root.
int effective_root(const IdentityDescriptor& d, const FormalPartInfo& part, Mutation mutation);

/// Both sides of one part, each exact through at least t^order at root m.
/// ContractError if the id or part has no formal form or m cannot carry it.
SidePair build_sides(std::string_view id, std::string_view part_label, int m, int order,
                     Mutation mutation = Mutation::none);

/// Compares every coefficient through the requested order. `order` defaults to
/// each part's own default and is read in units of the part's nominal root.
ProofReport prove(std::string_view id, std::optional<int> order = std::nullopt,
                  Mutation mutation = Mutation::none);

/// Direct comparison of two series through t^order.
PartReport compare_series(const NomeSeries& lhs, const NomeSeries& rhs, int order);

}  // namespace qtheta::formal

#endif  // QTHETA_FORMAL_PROVER_HPP
