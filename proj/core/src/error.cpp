// Copyright 2026 The evtlab Authors.
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

#include "evtlab/error.hpp"

namespace evt {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDomain:
      return "domain error";
    case ErrorKind::kBracketing:
      return "bracketing error";
    case ErrorKind::kContract:
      return "contract violation";
    case ErrorKind::kDegenerateTail:
      return "degenerate tail";
    case ErrorKind::kInconsistentTail:
      return "inconsistent tail";
    case ErrorKind::kDegenerateNormalization:
      return "degenerate normalization";
    case ErrorKind::kUnsupportedBase:
      return "unsupported base";
    case ErrorKind::kNotFound:
      return "not found";
  }
  return "error";
}

}  // namespace evt
