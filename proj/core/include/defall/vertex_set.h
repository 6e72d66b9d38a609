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

#ifndef DEFALL_VERTEX_SET_H_
#define DEFALL_VERTEX_SET_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace defall {

// Internal vertex index, 0..n-1 within one graph.
using Vertex = std::int32_t;

// A subset of the vertices {0, ..., universe-1} of one graph, stored as a
// bitset. Iteration visits members in ascending index order.
class VertexSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    Vertex operator*() const { return current_; }
    const_iterator& operator++() {
      Advance(current_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      const_iterator copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const {
      return current_ == other.current_;
    }

   private:
    friend class VertexSet;
    const_iterator(const VertexSet* set, Vertex start) : set_(set) {
      Advance(start);
    }
    void Advance(Vertex from);

    const VertexSet* set_ = nullptr;
    Vertex current_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::span<const Vertex> members);
  VertexSet(int universe, std::initializer_list<Vertex> members);

  // Members are the set bits of `mask`; requires universe <= 64.
  static VertexSet FromMask(int universe, std::uint64_t mask);
  static VertexSet Full(int universe);

  int universe() const { return universe_; }
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool contains(Vertex v) const {
    return v >= 0 && v < universe_ &&
           ((words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U) != 0;
  }
  // Both throw PreconditionError when v is outside the universe.
  void insert(Vertex v);
  void erase(Vertex v);
  void clear();

  const_iterator begin() const { return const_iterator(this, 0); }
  const_iterator end() const { return const_iterator(this, universe_); }

  std::vector<Vertex> members() const;
  // Lowest member, or -1 when empty.
  Vertex front() const;
  // Requires universe <= 64.
  std::uint64_t ToMask() const;

  bool IsSubsetOf(const VertexSet& other) const;
  bool Intersects(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& other) const = default;

 private:
  void CheckSameUniverse(const VertexSet& other) const;
  void Recount();

  int universe_ = 0;
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace defall

#endif  // DEFALL_VERTEX_SET_H_
