// Copyright 2026 The defall Authors.
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

#ifndef DEFALL_STREAM_H_
#define DEFALL_STREAM_H_

#include <cstdint>
#include <optional>

#include "defall/vertex_set.h"

namespace defall {

// Lazily produced sequence of vertex sets. Single consumer; call Next()
// until it returns nullopt.
class AllianceStream {
 public:
  virtual ~AllianceStream() = default;

  virtual std::optional<VertexSet> Next() = 0;

  std::uint64_t emissions() const { return emissions_; }
  // Basic-operation ticks spent producing the most recent emission,
  // measured from the previous one.
  std::uint64_t last_gap_ticks() const { return last_gap_ticks_; }

 protected:
  void RecordEmission(std::uint64_t gap_ticks) {
    ++emissions_;
    last_gap_ticks_ = gap_ticks;
  }

 private:
  std::uint64_t emissions_ = 0;
  std::uint64_t last_gap_ticks_ = 0;
};

}  // namespace defall

#endif  // DEFALL_STREAM_H_
