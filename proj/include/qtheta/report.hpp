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

#ifndef QTHETA_REPORT_HPP
#define QTHETA_REPORT_HPP

#include <string>
#include <vector>

#include "qtheta/catalog.hpp"
#include "qtheta/formal/prover.hpp"
#include "qtheta/sweep.hpp"

namespace qtheta {

// Serializers. JSON text is compact with a trailing newline; numbers use the
// shortest representation that round-trips, so output is byte-stable.

std::string catalog_json(const std::vector<IdentityDescriptor>& entries);
std::string catalog_text(const std::vector<IdentityDescriptor>& entries);
std::string catalog_csv(const std::vector<IdentityDescriptor>& entries);

std::string sweeps_json(const std::vector<SweepReport>& reports);
std::string sweeps_text(const std::vector<SweepReport>& reports);
/// Header plus one row per grid point of every report.
std::string sweeps_csv(const std::vector<SweepReport>& reports);

std::string proofs_json(const std::vector<formal::ProofReport>& reports);
std::string proofs_text(const std::vector<formal::ProofReport>& reports);
std::string proofs_csv(const std::vector<formal::ProofReport>& reports);

/// "1.5", "-2i", "0.25+3i".
std::string format_complex(Complex z);

}  // namespace qtheta

#endif  // QTHETA_REPORT_HPP
