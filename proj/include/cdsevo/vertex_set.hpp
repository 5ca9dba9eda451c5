#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace cdsevo {

/// Internal vertex id, 0-based. Files and CLI output use 1-based ids.
using Vertex = std::size_t;

/// A subset of {0, ..., n-1} stored as an n-bit membership vector with a
/// cached cardinality. This is the individual encoding of the evolutionary
/// search: bit i is set iff vertex i is in the set.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
      : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet from_mask(std::size_t universe, std::uint64_t mask) {
    if (universe > 64) throw std::invalid_argument("from_mask: universe > 64");
    VertexSet s(universe);
    if (universe == 0) return s;
    if (universe < 64) mask &= (std::uint64_t{1} << universe) - 1;
    s.words_[0] = mask;
    s.size_ = static_cast<std::size_t>(std::popcount(mask));
    return s;
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool contains(Vertex v) const {
    check(v);
    return (words_[v >> 6] >> (v & 63)) & 1U;
  }

  void insert(Vertex v) {
    if (!contains(v)) flip(v);
  }

  void erase(Vertex v) {
    if (contains(v)) flip(v);
  }

  void flip(Vertex v) {
    check(v);
    std::uint64_t& w = words_[v >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    w ^= bit;
    if (w & bit) {
      ++size_;
    } else {
      --size_;
    }
  }

  /// Members in increasing order.
  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size_);
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w != 0) {
        out.push_back(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  std::size_t hamming_distance(const VertexSet& other) const {
    if (other.universe_ != universe_) {
      throw std::invalid_argument("hamming_distance: universe mismatch");
    }
    std::size_t d = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      d += static_cast<std::size_t>(std::popcount(words_[i] ^ other.words_[i]));
    }
    return d;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void check(Vertex v) const {
    if (v >= universe_) throw std::out_of_range("vertex id out of range");
  }

  std::size_t universe_ = 0;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace cdsevo
