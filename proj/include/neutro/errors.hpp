//  Copyright 2026 The neutro Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef NEUTRO_ERRORS_HPP
#define NEUTRO_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace neutro {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// min/max/sort on a pair that compare_ns reports as Incomparable.
class IncomparableOperands : public Error {
 public:
  using Error::Error;
};

class EmptySet : public Error {
 public:
  using Error::Error;
};

class EmptyComponent : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedNonstandardConfig : public Error {
 public:
  using Error::Error;
};

class UnboundIdentifier : public Error {
 public:
  explicit UnboundIdentifier(const std::string& name)
      : Error("unbound identifier '" + name + "'"), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Parse failure. `offset` is 1-based and counts Unicode code points.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected,
              const std::string& found);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// A triple literal with other than three components.
class ArityError : public Error {
 public:
  ArityError(std::size_t offset, std::size_t found);

  std::size_t offset() const noexcept { return offset_; }
  std::size_t found() const noexcept { return found_; }

 private:
  std::size_t offset_;
  std::size_t found_;
};

}  // namespace neutro

#endif  // NEUTRO_ERRORS_HPP
