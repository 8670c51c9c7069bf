// Copyright (c) 2026 cdfkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CDF_UTIL_ERROR_H_
#define CDF_UTIL_ERROR_H_

#include <stdexcept>
#include <string>

namespace cdf {

// Bad or inconsistent configuration / input contract violations. CLI exit 1.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A required upstream artifact is missing or stages were run out of order.
// CLI exit 2.
class OrderError : public std::runtime_error {
 public:
  explicit OrderError(const std::string& msg) : std::runtime_error(msg) {}
};

// Runtime numeric or I/O failure. CLI exit 3.
class RuntimeError : public std::runtime_error {
 public:
  explicit RuntimeError(const std::string& msg) : std::runtime_error(msg) {}
};

#define CDF_CHECK(cond, msg)                  \
  do {                                        \
    if (!(cond)) throw ::cdf::RuntimeError(msg); \
  } while (0)

#define CDF_CHECK_ARG(cond, msg)              \
  do {                                        \
    if (!(cond)) throw ::cdf::ConfigError(msg); \
  } while (0)

}  // namespace cdf

#endif  // CDF_UTIL_ERROR_H_
