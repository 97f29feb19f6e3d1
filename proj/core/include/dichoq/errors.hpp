// Copyright 2026 The dichoq Authors
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

namespace dichoq {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  NotHermitian(const std::string& what, double deviation) : Error(what), deviation_(deviation) {}
  /// Largest |m(j,k) - conj(m(k,j))| found.
  double deviation() const noexcept { return deviation_; }

 private:
  double deviation_;
};

class NotTraceOne : public Error {
 public:
  NotTraceOne(const std::string& what, double deficit) : Error(what), deficit_(deficit) {}
  /// 1 - trace.
  double deficit() const noexcept { return deficit_; }

 private:
  double deficit_;
};

class NotPositive : public Error {
 public:
  NotPositive(const std::string& what, double min_eigenvalue)
      : Error(what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

class NotOrthogonal : public Error {
 public:
  using Error::Error;
};

class NotSpecial : public Error {
 public:
  using Error::Error;
};

class BadFactorization : public Error {
 public:
  using Error::Error;
};

class InvalidTable : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Raised when a result that must hold for valid input does not. Always a bug.
class InternalInvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON or a document that does not follow the expected schema.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace dichoq
