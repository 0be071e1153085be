// Copyright 2026 The greenseq Authors.
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

namespace greenseq {

// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad shape, index out of range, frozen mutation, parse errors.
class InputError : public Error {
 public:
  using Error::Error;
};

// A matrix entry left the range of int64_t.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// A c-vector was zero or had entries of both signs. In the skew-symmetric case
// this means a bug; for valued inputs it would be a counterexample.
class SignIncoherentError : public Error {
 public:
  SignIncoherentError(int vertex, std::string message)
      : Error(std::move(message)), vertex_(vertex) {}
  int vertex() const { return vertex_; }

 private:
  int vertex_;
};

class NotAcyclicError : public Error {
 public:
  using Error::Error;
};

// An internal invariant of the oriented exchange graph failed.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace greenseq
