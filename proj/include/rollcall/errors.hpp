// Copyright 2026 The Rollcall Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ROLLCALL_ERRORS_HPP
#define ROLLCALL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rollcall {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the arguments failed (bad player id, negative mass,
// mismatched dimensions, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A computation refused to run because the input exceeds one of the size
// guards (player caps, enumeration limits).
class GuardError : public Error {
 public:
  using Error::Error;
};

// Input text (rationals, game/distribution files) could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace rollcall

#endif  // ROLLCALL_ERRORS_HPP
