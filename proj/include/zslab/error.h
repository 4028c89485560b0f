// Copyright 2026 The zslab Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZSLAB_ERROR_H_
#define ZSLAB_ERROR_H_

#include <stdexcept>
#include <string>

namespace zslab {

enum class ErrorCode {
  kInvalidInput,
  kInvalidElement,
  kInvalidIndex,
  kSequenceTooShort,
  kInternal,
};

const char* ErrorCodeName(ErrorCode code);

// All library failures surface as this exception. The CLI maps every code
// except kInternal to exit status 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace zslab

#endif  // ZSLAB_ERROR_H_
