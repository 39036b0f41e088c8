// Copyright 2026 The luinv Authors
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

#include <stdexcept>
#include <string>

namespace luinv {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An argument outside its mathematical domain (d < 2, rank out of range, ...).
class DomainError : public Error {
   public:
    using Error::Error;
};

/// Operand shapes or party counts that do not fit together.
class ShapeError : public Error {
   public:
    using Error::Error;
};

enum class ValidationKind { Dimension, Hermiticity, Trace, Positivity, Unitarity, Determinant };

const char *to_string(ValidationKind kind);

/// A matrix failed one of the density-matrix / unitary checks. Carries the
/// measured deviation so callers can report how far off the input was.
class ValidationError : public Error {
   public:
    ValidationError(ValidationKind kind, double deviation, const std::string &what);

    ValidationKind kind() const { return kind_; }
    double deviation() const { return deviation_; }

   private:
    ValidationKind kind_;
    double deviation_;
};

/// A computed quantity that must be real (or orthogonal, ...) was not, beyond
/// the allowed residue. Signals corrupted input rather than a usage mistake.
class NumericalError : public Error {
   public:
    NumericalError(double residue, const std::string &what);

    double residue() const { return residue_; }

   private:
    double residue_;
};

/// Malformed state file. `location` names the offending field or entry.
class ParseError : public Error {
   public:
    ParseError(std::string location, const std::string &what);

    const std::string &location() const { return location_; }

   private:
    std::string location_;
};

/// Two fingerprints whose metadata differ cannot be compared.
class IncomparableError : public Error {
   public:
    using Error::Error;
};

}  // namespace luinv
