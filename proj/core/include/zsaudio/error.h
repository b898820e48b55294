// Copyright 2026 The zsaudio Authors. All Rights Reserved.
//
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

#ifndef ZSAUDIO_ERROR_H_
#define ZSAUDIO_ERROR_H_

#include <stdexcept>
#include <string>

namespace zsaudio {

// Failure categories. The numeric values double as CLI exit codes.
enum class ErrorKind : int {
  kIo = 1,
  kValidation = 2,
  kContract = 3,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Unreadable/unwritable files.
class IoError : public Error {
 public:
  explicit IoError(const std::string& message)
      : Error(ErrorKind::kIo, message) {}
};

// Malformed or inconsistent input data.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message)
      : Error(ErrorKind::kValidation, message) {}
};

// A caller broke an operation's precondition.
class ContractError : public Error {
 public:
  explicit ContractError(const std::string& message)
      : Error(ErrorKind::kContract, message) {}
};

}  // namespace zsaudio

#endif  // ZSAUDIO_ERROR_H_
