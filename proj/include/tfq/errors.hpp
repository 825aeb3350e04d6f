// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The tfq Authors

#pragma once

#include <stdexcept>
#include <string>

namespace tfq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SizeError : public Error {
 public:
  using Error::Error;
};

class GridError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Signal energy reaches the outer half of the window.
class AliasingError : public Error {
 public:
  using Error::Error;
};

class WindowError : public Error {
 public:
  using Error::Error;
};

class SingularPointError : public Error {
 public:
  using Error::Error;
};

class GenerationError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double achieved)
      : Error(what + " (achieved bound " + std::to_string(achieved) + ")"),
        achieved_(achieved) {}
  double achieved() const { return achieved_; }

 private:
  double achieved_;
};

class ResolutionError : public Error {
 public:
  ResolutionError(const std::string& what, double lambda)
      : Error(what + " at lambda=" + std::to_string(lambda)), lambda_(lambda) {}
  double lambda() const { return lambda_; }

 private:
  double lambda_;
};

}  // namespace tfq
