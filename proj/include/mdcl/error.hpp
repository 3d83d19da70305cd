// Copyright 2026 The mdcl Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace mdcl {

// Error taxonomy. The CLI maps ConfigError to exit code 1 and everything
// else to exit code 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tensor dimensions do not line up for an operation.
struct ShapeError : Error {
  using Error::Error;
};

// Invalid configuration value (dims < 1, tau <= 0, unknown field, ...).
struct ConfigError : Error {
  using Error::Error;
};

// An operation's precondition was violated by the caller.
struct ContractError : Error {
  using Error::Error;
};

// Out-of-range domain, class or instance index.
struct IndexError : Error {
  using Error::Error;
};

// Malformed input file; message carries the line number where known.
struct ParseError : Error {
  using Error::Error;
};

// Operation not valid in the current dataset/model state (e.g. sampling
// from an empty pool).
struct StateError : Error {
  using Error::Error;
};

// Active-learning selection referenced a duplicate or stale instance.
struct SelectionError : Error {
  using Error::Error;
};

// Training aborted (non-finite loss component and similar).
struct TrainingError : Error {
  using Error::Error;
};

}  // namespace mdcl
