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

#include "neutro/errors.hpp"

#include <sstream>

namespace neutro {

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected,
                         const std::string& found)
    : Error([&] {
        std::ostringstream msg;
        msg << "syntax error at offset " << offset << ": expected ";
        for (std::size_t k = 0; k < expected.size(); ++k) {
          if (k > 0) msg << (k + 1 == expected.size() ? " or " : ", ");
          msg << expected[k];
        }
        msg << ", found " << found;
        return msg.str();
      }()),
      offset_(offset),
      expected_(std::move(expected)) {}

ArityError::ArityError(std::size_t offset, std::size_t found)
    : Error("triple at offset " + std::to_string(offset) + " has " + std::to_string(found) +
            " components, expected exactly 3"),
      offset_(offset),
      found_(found) {}

}  // namespace neutro
