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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gchowf {

/// Base class for every failure the library reports. Callers that only care
/// about "something went wrong" catch this; the CLI maps subclasses onto exit
/// codes.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A dense or exhaustive path was asked to exceed its size cap.
class TooLarge : public Error {
   public:
    TooLarge(const std::string &what, std::size_t requested, std::size_t cap)
        : Error(what + " (requested " + std::to_string(requested) + ", cap " + std::to_string(cap) + ")"),
          requested(requested),
          cap(cap) {
    }
    std::size_t requested;
    std::size_t cap;
};

/// A CNOT whose output would leave the GCH family.
class IncompatiblePair : public Error {
   public:
    IncompatiblePair(std::size_t control, std::size_t target, const std::string &why)
        : Error("incompatible CNOT(" + std::to_string(control + 1) + "->" + std::to_string(target + 1) + "): " + why),
          control(control),
          target(target) {
    }
    std::size_t control;
    std::size_t target;
};

class SamplingExhausted : public Error {
   public:
    using Error::Error;
};

class RetriesExhausted : public Error {
   public:
    using Error::Error;
};

/// Evaluation of a circuit family on a state whose basis it was not sampled for.
class OffBasisInput : public Error {
   public:
    using Error::Error;
};

class MalformedCircuitEncoding : public Error {
   public:
    MalformedCircuitEncoding(const std::string &what, std::size_t byte_offset)
        : Error(what + " at byte " + std::to_string(byte_offset)), byte_offset(byte_offset) {
    }
    std::size_t byte_offset;
};

class DimensionMismatch : public Error {
   public:
    using Error::Error;
};

/// Parameters outside a documented domain (odd n, n < 4, k = 0, ...).
class InvalidArgument : public Error {
   public:
    using Error::Error;
};

}  // namespace gchowf
