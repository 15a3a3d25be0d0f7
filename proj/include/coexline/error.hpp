// Copyright 2026 The coexline Authors
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

#ifndef COEXLINE_ERROR_HPP
#define COEXLINE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace coexline {

// Parameter outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Requested problem size exceeds a configured enumeration or memory cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Paths or supports whose sizes do not fit together.
class LengthError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A numerical routine finished but did not meet its post-condition.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_domain(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace detail
}  // namespace coexline

#endif  // COEXLINE_ERROR_HPP
