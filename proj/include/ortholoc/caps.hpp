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

#ifndef ORTHOLOC_CAPS_HPP_
#define ORTHOLOC_CAPS_HPP_

namespace ortholoc {

// Compile-time hard caps. The ORTHOLOC_CAP environment variable can raise the
// enumeration cap up to the hard cap, never past it.
inline constexpr int kHardEnumerationCap = 10;
inline constexpr int kDefaultEnumerationCap = 8;

// Orthocomplementation / strongly-separating relation search.
inline constexpr int kSearchCap = 32;

// Subspace lattices: q^n for vector enumeration, and the number of subspaces
// a model may hold.
inline constexpr int kMaxVectorSpaceSize = 1 << 16;
inline constexpr int kMaxSubspaces = 4096;

// Explicit vector-level locality relations.
inline constexpr int kMaxVectorRelationSize = 1 << 12;

// Projective-plane classification.
inline constexpr int kMaxPlanePrime = 13;

// Completeness is quantified over all subsets up to this size; finite
// lattices beyond it are reported complete without the scan.
inline constexpr int kCompletenessQuantifyLimit = 20;

/// Current lattice/poset enumeration cap: kDefaultEnumerationCap unless
/// ORTHOLOC_CAP is set, clamped to [1, kHardEnumerationCap].
int enumeration_cap();

}  // namespace ortholoc

#endif  // ORTHOLOC_CAPS_HPP_
