// Copyright 2026 The Authors.
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

#ifndef INSTCOMP_UTIL_STATUS_MACROS_H_
#define INSTCOMP_UTIL_STATUS_MACROS_H_

#include <utility>

#include "absl/status/status.h"

#define INSTCOMP_RETURN_IF_ERROR(expr)            \
  do {                                            \
    const ::absl::Status instcomp_status = (expr); \
    if (!instcomp_status.ok()) return instcomp_status; \
  } while (false)

#define INSTCOMP_CONCAT_INNER(a, b) a##b
#define INSTCOMP_CONCAT(a, b) INSTCOMP_CONCAT_INNER(a, b)

#define INSTCOMP_ASSIGN_OR_RETURN(lhs, expr) \
  INSTCOMP_ASSIGN_OR_RETURN_IMPL(INSTCOMP_CONCAT(instcomp_or_, __LINE__), lhs, expr)

#define INSTCOMP_ASSIGN_OR_RETURN_IMPL(tmp, lhs, expr) \
  auto tmp = (expr);                                   \
  if (!tmp.ok()) return tmp.status();                  \
  lhs = *std::move(tmp)

#endif  // INSTCOMP_UTIL_STATUS_MACROS_H_
