// Copyright 2026 The Baccara Solver Authors
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

#ifndef BACCARA_ERRORS_HPP_
#define BACCARA_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace baccara {

// Violated precondition on model parameters or card bookkeeping.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A strict-inequality classification hit an exact zero. The message names
// the offending decision point.
class TieError : public std::runtime_error {
 public:
  TieError(const std::string& point, const std::string& what)
      : std::runtime_error(what + " at " + point), point_(point) {}
  const std::string& point() const { return point_; }

 private:
  std::string point_;
};

// No certified solution could be produced.
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace baccara

#endif  // BACCARA_ERRORS_HPP_
