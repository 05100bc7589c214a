// Copyright 2026 The ODIC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace odic {

enum class ErrorCode {
  kArgument,
  kDegenerate,
  kIo,
  kUnsupportedFormat,
  kBadMagic,
  kUnsupportedVersion,
  kCorruptHeader,
  kTruncated,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Invalid dimensions, ranges or mutually inconsistent inputs.
class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& what)
      : Error(ErrorCode::kArgument, what) {}
};

// Inputs that are well-formed but make the quantity undefined
// (zero variance, all-zero weights, constant maps).
class DegenerateError : public Error {
 public:
  explicit DegenerateError(const std::string& what)
      : Error(ErrorCode::kDegenerate, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what,
                   ErrorCode code = ErrorCode::kIo)
      : Error(code, what) {}
};

class DecodeError : public Error {
 public:
  DecodeError(ErrorCode code, const std::string& what) : Error(code, what) {}
};

}  // namespace odic
