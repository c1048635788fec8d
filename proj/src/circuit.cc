// Copyright 2026 The gchowf Authors
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

#include "gchowf/circuit.h"

#include <string>

#include "gchowf/errors.h"

namespace gchowf {

std::size_t ConstituentCircuit::gate_count() const {
    std::size_t total = 0;
    for (const auto &layer : layers) {
        total += layer.gates.size();
    }
    return total;
}

std::size_t CircuitFamily::gate_count() const {
    std::size_t total = 0;
    for (const auto &c : circuits) {
        total += c.gate_count();
    }
    return total;
}

void require_owf_size(std::size_t n) {
    if (n < 4 || n % 2) {
        throw InvalidArgument("the OWF needs an even qubit count >= 4, got " + std::to_string(n));
    }
}

}  // namespace gchowf
