// Copyright 2026 The fmopt Authors
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

#ifndef FMOPT_ERRORS_HPP
#define FMOPT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fmopt {

/// Invalid or inconsistent scenario/model/solution data.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Solver hit a node, time, or iteration limit without a proven answer.
class SolverLimitError : public std::runtime_error {
 public:
  explicit SolverLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fmopt

#endif  // FMOPT_ERRORS_HPP
