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

#ifndef QTHETA_ERROR_HPP
#define QTHETA_ERROR_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qtheta {

enum class ErrorKind {
  domain,               // argument outside the mathematical domain
  range,                // result not representable in double precision
  non_converged,        // term/factor cap hit before the tolerance was met
  contract,             // caller violated a precondition
  numeric_instability,  // finite-difference estimate dominated by cancellation
};

const char* to_string(ErrorKind kind) noexcept;

/// Base of every error the library throws. The kind drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::domain, what) {}
};

class RangeError : public Error {
 public:
  explicit RangeError(const std::string& what) : Error(ErrorKind::range, what) {}
};

class NonConvergedError : public Error {
 public:
  explicit NonConvergedError(const std::string& what) : Error(ErrorKind::non_converged, what) {}
};

class ContractError : public Error {
 public:
  explicit ContractError(const std::string& what) : Error(ErrorKind::contract, what) {}
};

class NumericInstabilityError : public Error {
 public:
  explicit NumericInstabilityError(const std::string& what)
      : Error(ErrorKind::numeric_instability, what) {}
};

/// Throws an error of the same kind as `e`, with `context` prefixed to the message.
[[noreturn]] void rethrow_with_context(const Error& e, std::string_view context);

using Complex = std::complex<double>;

/// Rejects NaN/Inf components at operation boundaries.
void require_finite(Complex value, std::string_view what);
void require_finite(double value, std::string_view what);

}  // namespace qtheta

#endif  // QTHETA_ERROR_HPP
