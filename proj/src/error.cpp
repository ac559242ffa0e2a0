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

#include "qtheta/error.hpp"

#include <cmath>

namespace qtheta {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain:
      return "domain error";
    case ErrorKind::range:
      return "range error";
    case ErrorKind::non_converged:
      return "non-converged";
    case ErrorKind::contract:
      return "contract violation";
    case ErrorKind::numeric_instability:
      return "numeric instability";
  }
  return "error";
}

void rethrow_with_context(const Error& e, std::string_view context) {
  std::string msg(context);
  msg += ": ";
  msg += e.what();
  switch (e.kind()) {
    case ErrorKind::domain:
      throw DomainError(msg);
    case ErrorKind::range:
      throw RangeError(msg);
    case ErrorKind::non_converged:
      throw NonConvergedError(msg);
    case ErrorKind::contract:
      throw ContractError(msg);
    case ErrorKind::numeric_instability:
      throw NumericInstabilityError(msg);
  }
  throw Error(e.kind(), msg);
}

void require_finite(Complex value, std::string_view what) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw DomainError(std::string(what) + " must be finite");
  }
}

void require_finite(double value, std::string_view what) {
  if (!std::isfinite(value)) {
    throw DomainError(std::string(what) + " must be finite");
  }
}

}  // namespace qtheta
