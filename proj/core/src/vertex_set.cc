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

#include "defall/vertex_set.h"

#include <string>

#include "defall/error.h"

namespace defall {
namespace {

std::size_t WordCount(int universe) {
  return (static_cast<std::size_t>(universe) + 63) / 64;
}

}  // namespace

void VertexSet::const_iterator::Advance(Vertex from) {
  const int n = set_->universe_;
  if (from >= n) {
    current_ = n;
    return;
  }
  std::size_t word = static_cast<std::size_t>(from) >> 6;
  std::uint64_t bits = set_->words_[word] & (~std::uint64_t{0} << (from & 63));
  while (bits == 0) {
    if (++word >= set_->words_.size()) {
      current_ = n;
      return;
    }
    bits = set_->words_[word];
  }
  current_ = static_cast<Vertex>(word * 64 + std::countr_zero(bits));
}

VertexSet::VertexSet(int universe)
    : universe_(universe), words_(WordCount(universe), 0) {
  if (universe < 0) throw PreconditionError("negative vertex-set universe");
}

VertexSet::VertexSet(int universe, std::span<const Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(),
                                                   members.size())) {}

VertexSet VertexSet::FromMask(int universe, std::uint64_t mask) {
  if (universe > 64) throw PreconditionError("mask universe exceeds 64");
  VertexSet set(universe);
  if (universe < 64) mask &= (std::uint64_t{1} << universe) - 1;
  if (universe > 0) set.words_[0] = mask;
  set.size_ = std::popcount(mask);
  return set;
}

VertexSet VertexSet::Full(int universe) {
  VertexSet set(universe);
  for (std::size_t w = 0; w < set.words_.size(); ++w) set.words_[w] = ~0ULL;
  if (universe % 64 != 0) {
    set.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  }
  set.size_ = universe;
  return set;
}

void VertexSet::insert(Vertex v) {
  if (v < 0 || v >= universe_) {
    throw PreconditionError("vertex " + std::to_string(v) +
                            " outside set universe");
  }
  std::uint64_t& word = words_[static_cast<std::size_t>(v) >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if ((word & bit) == 0) {
    word |= bit;
    ++size_;
  }
}

void VertexSet::erase(Vertex v) {
  if (v < 0 || v >= universe_) {
    throw PreconditionError("vertex " + std::to_string(v) +
                            " outside set universe");
  }
  std::uint64_t& word = words_[static_cast<std::size_t>(v) >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if ((word & bit) != 0) {
    word &= ~bit;
    --size_;
  }
}

void VertexSet::clear() {
  for (auto& w : words_) w = 0;
  size_ = 0;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (Vertex v : *this) out.push_back(v);
  return out;
}

Vertex VertexSet::front() const {
  if (empty()) return -1;
  return *begin();
}

std::uint64_t VertexSet::ToMask() const {
  if (universe_ > 64) throw PreconditionError("set universe exceeds 64");
  return words_.empty() ? 0 : words_[0];
}

bool VertexSet::IsSubsetOf(const VertexSet& other) const {
  CheckSameUniverse(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool VertexSet::Intersects(const VertexSet& other) const {
  CheckSameUniverse(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  CheckSameUniverse(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  Recount();
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  CheckSameUniverse(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  Recount();
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  CheckSameUniverse(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  Recount();
  return *this;
}

void VertexSet::CheckSameUniverse(const VertexSet& other) const {
  if (universe_ != other.universe_) {
    throw PreconditionError("vertex sets over different universes");
  }
}

void VertexSet::Recount() {
  size_ = 0;
  for (std::uint64_t w : words_) size_ += std::popcount(w);
}

}  // namespace defall
