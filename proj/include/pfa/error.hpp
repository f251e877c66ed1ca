// Copyright 2026 The pfa-reductions Authors.
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

#ifndef PFA_ERROR_HPP_
#define PFA_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace pfa {

// Malformed data: unknown symbols, out-of-range indices, bad digits,
// unparsable files.
class InvalidInput : public std::runtime_error {
 public:
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed input that a construction cannot accept, e.g. an empty word
// where a stage needs nonempty words or a blend constant that is too large.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace pfa

#endif  // PFA_ERROR_HPP_
