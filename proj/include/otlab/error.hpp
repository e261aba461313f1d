/*
 * Copyright 2026 otlab contributors
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

#ifndef OTLAB_ERROR_HPP
#define OTLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace otlab {

// Failure categories surfaced through Error::code(). The CLI maps these to
// exit codes, so the set is part of the tool's contract.
enum class ErrorCode {
  negative_weight,
  sum_out_of_tolerance,
  point_not_in_space,
  image_not_in_space,
  discrete_space_unsupported,
  dimension_mismatch,
  invalid_p,
  invalid_space,
  invalid_argument,
  infeasible_weights,
  iteration_limit,
  too_large,
  wrong_space,
  space_mismatch,
  support_too_large,
  not_bijective,
  not_orthogonal,
  degenerate_sample,
  image_not_dirac,
  parse_error,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::negative_weight: return "NEGATIVE_WEIGHT";
    case ErrorCode::sum_out_of_tolerance: return "SUM_OUT_OF_TOLERANCE";
    case ErrorCode::point_not_in_space: return "POINT_NOT_IN_SPACE";
    case ErrorCode::image_not_in_space: return "IMAGE_NOT_IN_SPACE";
    case ErrorCode::discrete_space_unsupported: return "DISCRETE_SPACE_UNSUPPORTED";
    case ErrorCode::dimension_mismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::invalid_p: return "INVALID_P";
    case ErrorCode::invalid_space: return "INVALID_SPACE";
    case ErrorCode::invalid_argument: return "INVALID_ARGUMENT";
    case ErrorCode::infeasible_weights: return "INFEASIBLE_WEIGHTS";
    case ErrorCode::iteration_limit: return "ITERATION_LIMIT";
    case ErrorCode::too_large: return "TOO_LARGE";
    case ErrorCode::wrong_space: return "WRONG_SPACE";
    case ErrorCode::space_mismatch: return "SPACE_MISMATCH";
    case ErrorCode::support_too_large: return "SUPPORT_TOO_LARGE";
    case ErrorCode::not_bijective: return "NOT_BIJECTIVE";
    case ErrorCode::not_orthogonal: return "NOT_ORTHOGONAL";
    case ErrorCode::degenerate_sample: return "DEGENERATE_SAMPLE";
    case ErrorCode::image_not_dirac: return "IMAGE_NOT_DIRAC";
    case ErrorCode::parse_error: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace otlab

#endif  // OTLAB_ERROR_HPP
