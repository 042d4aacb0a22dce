/*
 * Copyright (c) 2026, The ucrc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef UCRC_COMMON_ERROR_HPP_
#define UCRC_COMMON_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ucrc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(int line, int col, std::string message,
             std::vector<std::string> expected = {});

  int line() const { return line_; }
  int col() const { return col_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& detail() const { return detail_; }

 private:
  int line_;
  int col_;
  std::string detail_;
  std::vector<std::string> expected_;
};

class LinkError : public Error {
 public:
  using Error::Error;
};

// A model is used in a way its interface does not allow (unknown export,
// malformed environment call, missing primitive implementation).
class ModelError : public Error {
 public:
  using Error::Error;
};

// Runtime evaluation failed on a validated model; always a validator escape.
class EvalError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed a configured ceiling.
class SpaceTooLarge : public Error {
 public:
  using Error::Error;
};

class UniverseTooLarge : public SpaceTooLarge {
 public:
  using SpaceTooLarge::SpaceTooLarge;
};

class GridMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownEnvironment : public Error {
 public:
  using Error::Error;
};

class MalformedPrefix : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class AxiomViolation : public Error {
 public:
  using Error::Error;
};

class ChainBroken : public Error {
 public:
  using Error::Error;
};

class PredicateViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ucrc

#endif  // UCRC_COMMON_ERROR_HPP_
