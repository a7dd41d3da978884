#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "zforce/bits.hpp"

namespace zf {

/// A subset of the vertices 0..n-1 of a fixed graph.
///
/// Sets over different ambient sizes never compare equal, and set algebra
/// between them is a logic error. Ordering is by bit pattern read as an
/// unsigned integer, which is the order the subset search enumerates in.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n);
  VertexSet(int n, std::initializer_list<int> members);
  VertexSet(int n, const std::vector<int>& members);

  static VertexSet full(int n);
  static VertexSet from_bits(int n, const bits::Wide& b);
  static VertexSet from_word(int n, std::uint64_t word);

  int universe_size() const { return n_; }
  int size() const { return bits::popcount(bits_); }
  bool empty() const { return bits::none(bits_); }
  bool is_full() const { return size() == n_; }

  bool contains(int v) const;
  void insert(int v);
  void erase(int v);

  VertexSet complement() const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    return a.bits_ <=> b.bits_;
  }

  std::vector<int> members() const;
  const bits::Wide& raw() const { return bits_; }
  // Low word; only meaningful when universe_size() <= 64.
  std::uint64_t word() const { return bits_.w[0]; }

  template <class F>
  void for_each(F&& f) const {
    bits::for_each(bits_, f);
  }

  /// "{0,2,5}"
  std::string to_string() const;

 private:
  void check(int v) const;

  int n_ = 0;
  bits::Wide bits_{};
};

}  // namespace zf
