// Copyright 2026 The motivekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstdint>

namespace motivekit {

/// Enumeration guards. Every exhaustive routine takes one of these and throws
/// CapExceeded instead of running away.
struct Caps {
  /// Largest subgroup closure subgroupGenerated / sigmaRing will build.
  std::uint64_t subgroup = 1'000'000;
  /// Largest number of prime-wise recombinations summandClasses will visit.
  std::uint64_t summands = 1'000'000;
  /// Largest number of search nodes bruteForceIso will visit.
  std::uint64_t search = 2'000'000'000;
  /// Largest group a Formal index table is validated over.
  std::uint64_t table = 4096;
  /// Largest ground-set size for subset enumeration in cspCheck.
  std::uint64_t subsetBits = 20;

  /// Defaults overridden by MOTIVEKIT_CAP_SUBGROUP, MOTIVEKIT_CAP_SUMMANDS,
  /// MOTIVEKIT_CAP_SEARCH, MOTIVEKIT_CAP_TABLE and MOTIVEKIT_CAP_SUBSET_BITS.
  static Caps fromEnvironment();
};

}  // namespace motivekit
