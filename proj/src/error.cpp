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

#include "odic/error.hpp"

namespace odic {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kArgument: return "argument";
    case ErrorCode::kDegenerate: return "degenerate";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kUnsupportedFormat: return "unsupported_format";
    case ErrorCode::kBadMagic: return "bad_magic";
    case ErrorCode::kUnsupportedVersion: return "unsupported_version";
    case ErrorCode::kCorruptHeader: return "corrupt_header";
    case ErrorCode::kTruncated: return "truncated";
  }
  return "unknown";
}

}  // namespace odic
