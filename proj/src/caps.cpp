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


#include "motivekit/caps.hpp"

#include <cstdlib>
#include <string>

#include "motivekit/errors.hpp"

namespace motivekit {

namespace {

void override(const char* name, std::uint64_t& slot) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(raw, &used);
    if (used != std::string(raw).size()) throw std::invalid_argument(raw);
    slot = v;
  } catch (const std::exception&) {
    throw MalformedInput(std::string("bad value for ") + name + ": '" + raw + "'");
  }
}

}  // namespace

Caps Caps::fromEnvironment() {
  Caps caps;
  override("MOTIVEKIT_CAP_SUBGROUP", caps.subgroup);
  override("MOTIVEKIT_CAP_SUMMANDS", caps.summands);
  override("MOTIVEKIT_CAP_SEARCH", caps.search);
  override("MOTIVEKIT_CAP_TABLE", caps.table);
  override("MOTIVEKIT_CAP_SUBSET_BITS", caps.subsetBits);
  return caps;
}

}  // namespace motivekit
