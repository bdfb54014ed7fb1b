/*
 *   Copyright 2026 The leavitt-tower authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LEAVITT_ERROR_HPP_
#define LEAVITT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace leavitt {

  // Numeric values double as CLI exit codes.
  enum class ErrorCode : int {
    kVerificationFailed = 1,
    kInputError = 2,
    kBoundExceeded = 3,
    kInvalidCertificate = 4,
    kNotUnital = 5,
  };

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(what), _code(code) {}

    ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

  [[noreturn]] inline void throw_input(std::string const& what) {
    throw Error(ErrorCode::kInputError, what);
  }

  [[noreturn]] inline void throw_verification(std::string const& what) {
    throw Error(ErrorCode::kVerificationFailed, what);
  }

}  // namespace leavitt

#endif  // LEAVITT_ERROR_HPP_
