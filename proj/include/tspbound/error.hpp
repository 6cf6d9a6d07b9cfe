// Copyright 2026 The tspbound Authors
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

namespace tspbound {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data: bad matrices, unparseable files,
/// traces that break their schema.
class DataError : public Error {
 public:
  using Error::Error;
};

/// A request beyond a documented size limit (exact oracles, sweeps).
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace tspbound
