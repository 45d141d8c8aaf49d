// Copyright 2026 The blinddelegate Authors
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

namespace blinddelegate {

/// A measurement was forced onto an outcome with (numerically) zero weight.
struct DegenerateMeasurement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// More qubits than the dense simulator accepts.
struct CapacityExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A particle was lost more times than the retry cap allows.
struct RetryCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The unit-cell search found nothing; points at a convention bug.
struct UnreachableConfiguration : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed text input (circuit, graph, transcript files).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace blinddelegate
