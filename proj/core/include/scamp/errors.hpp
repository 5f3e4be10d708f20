// Copyright 2025 The scamp Authors
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

#include <stdexcept>
#include <string>

namespace scamp {

/** Violated precondition on an argument (bad d, k, truncation, ...). */
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what)
      : std::invalid_argument(what) {}
};

/** Base class for failures of a numerical computation. */
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/** A zero vector where a normalizable state was required. */
class DegenerateError : public NumericError {
 public:
  explicit DegenerateError(const std::string& what) : NumericError(what) {}
};

/** Probability mass lost past the truncation exceeds the tolerance. */
class TruncationError : public NumericError {
 public:
  TruncationError(const std::string& what, double leaked)
      : NumericError(what), leaked_(leaked) {}
  double leaked() const { return leaked_; }

 private:
  double leaked_;
};

/** A quantity that has no finite value at the requested point. */
class DivergenceError : public NumericError {
 public:
  explicit DivergenceError(const std::string& what) : NumericError(what) {}
};

/** A heralded branch whose probability is numerically zero. */
class DegenerateHeraldError : public NumericError {
 public:
  DegenerateHeraldError(const std::string& what, double probability)
      : NumericError(what), probability_(probability) {}
  double probability() const { return probability_; }

 private:
  double probability_;
};

/** Objective returned a non-finite value. */
class NonFiniteError : public NumericError {
 public:
  NonFiniteError(const std::string& what, double abscissa)
      : NumericError(what), abscissa_(abscissa) {}
  double abscissa() const { return abscissa_; }

 private:
  double abscissa_;
};

/** Optimizer ran out of iterations; carries its best iterate. */
class ConvergenceError : public NumericError {
 public:
  ConvergenceError(const std::string& what, double best_x, double best_value)
      : NumericError(what), best_x_(best_x), best_value_(best_value) {}
  double best_x() const { return best_x_; }
  double best_value() const { return best_value_; }

 private:
  double best_x_;
  double best_value_;
};

/** Root search interval without a sign change. */
class BracketError : public NumericError {
 public:
  explicit BracketError(const std::string& what) : NumericError(what) {}
};

}  // namespace scamp
