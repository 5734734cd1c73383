/*
Copyright 2026 The peakaware Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef PEAKAWARE_ERROR_H_
#define PEAKAWARE_ERROR_H_

#include <stdexcept>
#include <string>

namespace peakaware {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mismatched lengths or otherwise malformed inputs.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A value violates a documented invariant (negative demand, infeasible
// schedule slot, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A parameter lies outside the domain where an operation is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A ratio whose denominator is zero.
class UndefinedRatioError : public Error {
 public:
  using Error::Error;
};

class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

// Unreadable input files; the message carries file and line.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace peakaware

#endif  // PEAKAWARE_ERROR_H_
