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

#ifndef ORTHOLOC_ERROR_HPP_
#define ORTHOLOC_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ortholoc {

enum class Errc {
  reflexivity_violation,
  antisymmetry_violation,
  transitivity_violation,
  not_a_lattice,
  index_out_of_range,
  not_comparable,
  no_bottom,
  size_cap_exceeded,
  precondition_failed,
  host_mismatch,
  not_symmetric,
  no_greatest_element,
  not_antitone,
  not_involutive,
  not_separating,
  not_prime,
  dimension_mismatch,
  not_a_basis,
  not_atomistic,
  condition_three_failed,
  parse_error,
  io_error,
  internal_check_failed,
};

/// Every failure carries a code plus the offending element indices, so a
/// caller can report exactly which pair or triple broke an axiom.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::vector<int> witness = {})
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  Errc code() const { return code_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  Errc code_;
  std::vector<int> witness_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message,
                              std::vector<int> witness = {}) {
  throw Error(code, message, std::move(witness));
}

inline void require(bool condition, Errc code, const std::string& message,
                    std::vector<int> witness = {}) {
  if (!condition) fail(code, message, std::move(witness));
}

// Trap for identities the surrounding theory guarantees; one firing is a bug
// in this library, not bad input.
inline void internal_check(bool condition, const char* what) {
  if (!condition) {
    throw Error(Errc::internal_check_failed,
                std::string("internal check failed: ") + what);
  }
}

}  // namespace ortholoc

#endif  // ORTHOLOC_ERROR_HPP_
