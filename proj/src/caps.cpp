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

#include "ortholoc/caps.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace ortholoc {

int enumeration_cap() {
  static const int cap = [] {
    const char* env = std::getenv("ORTHOLOC_CAP");
    if (env == nullptr) return kDefaultEnumerationCap;
    int value = kDefaultEnumerationCap;
    try {
      value = std::stoi(env);
    } catch (...) {
      return kDefaultEnumerationCap;
    }
    return std::clamp(value, 1, kHardEnumerationCap);
  }();
  return cap;
}

}  // namespace ortholoc
