// Copyright 2026 The motivekit Authors
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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace motivekit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that cannot be parsed or does not describe a valid object.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition (includes model mismatch).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two values that must share a Brauer model do not.
class ModelMismatch : public PreconditionError {
 public:
  ModelMismatch() : PreconditionError("classes belong to different Brauer models") {}
  using PreconditionError::PreconditionError;
};

/// An enumeration guard was exceeded.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t cap)
      : Error(what + " exceeds cap " + std::to_string(cap)), cap_(cap) {}
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

/// Raised when two routes that must agree do not. Always a bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace motivekit
