// Copyright 2026 The sqscram Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqscram {

/// Probability mass in the top band of a truncated Fock vector exceeds the tolerance.
class TailError : public std::runtime_error {
 public:
  TailError(const std::string& what, std::size_t dim, double tail)
      : std::runtime_error(what), dim_(dim), tail_(tail) {}
  std::size_t dim() const noexcept { return dim_; }
  double tail() const noexcept { return tail_; }

 private:
  std::size_t dim_;
  double tail_;
};

/// A numerical procedure failed its internal accuracy check.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input lies outside the mathematical domain of an operation (e.g. gamma not in (0,1)).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The information matrix is singular: the model is sloppy at this point.
class SingularError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OptimizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sqscram
