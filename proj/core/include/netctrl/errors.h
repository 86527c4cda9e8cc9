// Copyright 2026 The netctrl Authors. All Rights Reserved.
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

#ifndef NETCTRL_ERRORS_H_
#define NETCTRL_ERRORS_H_

#include <stdexcept>
#include <string>

namespace netctrl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed system file. `line()` is 1-based; 0 when the input is JSON and
// the parser does not report a line.
class SyntaxError : public Error {
 public:
  SyntaxError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Well-formed input describing an invalid system (index out of range,
// duplicate set member, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Raised by classify_nodes when no size-p (A-T)-linking exists.
class UnsolvableError : public Error {
 public:
  UnsolvableError(int achieved, int required)
      : Error("no admissible steering set: maximum linking " +
              std::to_string(achieved) + " < " + std::to_string(required)),
        achieved_(achieved),
        required_(required) {}
  int achieved() const { return achieved_; }
  int required() const { return required_; }

 private:
  int achieved_;
  int required_;
};

class SingularSampleError : public Error {
 public:
  using Error::Error;
};

}  // namespace netctrl

#endif  // NETCTRL_ERRORS_H_
