#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace lincolor {

using Vertex = std::size_t;

/// A set of vertex indices drawn from [0, universe). Backed by a bitset so that
/// subset tests and intersections are word-parallel.
class VertexSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const Bits* bits, std::size_t pos) : bits_(bits), pos_(pos) {}

    Vertex operator*() const { return pos_; }
    const_iterator& operator++() {
      pos_ = bits_->find_next(pos_);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

   private:
    const Bits* bits_ = nullptr;
    std::size_t pos_ = Bits::npos;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : bits_(universe) {
    for (auto v : members) insert(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    s.bits_.set();
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool contains(Vertex v) const { return v < bits_.size() && bits_.test(v); }
  void insert(Vertex v) { bits_.set(v); }
  void erase(Vertex v) { bits_.reset(v); }

  /// Subset test; both sets must share a universe.
  bool is_subset_of(const VertexSet& other) const { return bits_.is_subset_of(other.bits_); }
  bool is_proper_subset_of(const VertexSet& other) const {
    return bits_.is_proper_subset_of(other.bits_);
  }
  bool intersects(const VertexSet& other) const { return bits_.intersects(other.bits_); }

  VertexSet& operator|=(const VertexSet& o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(const VertexSet& o) { bits_ &= o.bits_; return *this; }
  VertexSet& operator-=(const VertexSet& o) { bits_ -= o.bits_; return *this; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }

  /// Lowest member, or universe() when empty.
  Vertex front() const {
    auto p = bits_.find_first();
    return p == Bits::npos ? bits_.size() : p;
  }

  const_iterator begin() const { return {&bits_, bits_.find_first()}; }
  const_iterator end() const { return {&bits_, Bits::npos}; }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

 private:
  Bits bits_;
};

/// True when neither set contains the other.
inline bool incomparable(const VertexSet& a, const VertexSet& b) {
  return !a.is_subset_of(b) && !b.is_subset_of(a);
}

}  // namespace lincolor
