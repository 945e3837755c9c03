/*
   Copyright 2026 The edpoly Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef EDPOLY_ERRORS_HPP
#define EDPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace edpoly {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class NonExactDivision : public Error {
   public:
    using Error::Error;
};

class DivisionByZero : public Error {
   public:
    DivisionByZero() : Error("division by zero in prime field") {}
    using Error::Error;
};

class FieldMismatch : public Error {
   public:
    FieldMismatch() : Error("operands belong to different prime fields") {}
};

class InvalidField : public Error {
   public:
    using Error::Error;
};

class InvalidCurve : public Error {
   public:
    using Error::Error;
};

class NotOnCurve : public Error {
   public:
    using Error::Error;
};

class DegreeTooLarge : public Error {
   public:
    using Error::Error;
};

/// A rational function was evaluated at a point outside its domain.
class UndefinedAtPoint : public Error {
   public:
    using Error::Error;
};

/// A quotient whose denominator vanished at the requested point.
class ZeroDenominator : public Error {
   public:
    using Error::Error;
};

/// The affine twisted Edwards addition law hit 1 +/- d*x1*x2*y1*y2 = 0.
class DenominatorZero : public Error {
   public:
    using Error::Error;
};

class FieldTooLarge : public Error {
   public:
    using Error::Error;
};

/// A state the group-law argument rules out was reached.
class InternalInconsistency : public Error {
   public:
    using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
   public:
    using Error::Error;
};

}  // namespace edpoly

#endif  // EDPOLY_ERRORS_HPP
