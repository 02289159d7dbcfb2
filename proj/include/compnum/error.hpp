// Copyright 2026 The compnum Authors
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

namespace compnum {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that does not describe a valid graph or digraph (loops, bad indices,
/// syntax errors in the text formats).
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// A well-formed argument that violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The instance exceeds what an exact exponential routine is allowed to handle.
class UnsupportedSize : public Error {
 public:
  using Error::Error;
};

}  // namespace compnum
