#include "zforce/vertex_set.hpp"

#include <stdexcept>

namespace zf {

VertexSet::VertexSet(int n) : n_(n) {
  if (n < 0 || static_cast<std::size_t>(n) > kMaxVertices) {
    throw std::out_of_range("vertex count " + std::to_string(n) + " outside [0, " +
                            std::to_string(kMaxVertices) + "]");
  }
}

VertexSet::VertexSet(int n, std::initializer_list<int> members) : VertexSet(n) {
  for (int v : members) insert(v);
}

VertexSet::VertexSet(int n, const std::vector<int>& members) : VertexSet(n) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::full(int n) {
  VertexSet s(n);
  s.bits_ = bits::universe<bits::Wide>(n);
  return s;
}

VertexSet VertexSet::from_bits(int n, const bits::Wide& b) {
  VertexSet s(n);
  s.bits_ = b & bits::universe<bits::Wide>(n);
  return s;
}

VertexSet VertexSet::from_word(int n, std::uint64_t word) {
  bits::Wide b;
  b.w[0] = word;
  return from_bits(n, b);
}

void VertexSet::check(int v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." +
                            std::to_string(n_ - 1));
  }
}

bool VertexSet::contains(int v) const {
  check(v);
  return bits::test(bits_, v);
}

void VertexSet::insert(int v) {
  check(v);
  bits::set(bits_, v);
}

void VertexSet::erase(int v) {
  check(v);
  bits::reset(bits_, v);
}

VertexSet VertexSet::complement() const {
  return from_bits(n_, ~bits_);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return (bits_ & other.bits_) == bits_;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  bits_ |= o.bits_;
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  bits_ &= o.bits_;
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  bits_ &= ~o.bits_;
  return *this;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

std::string VertexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for_each([&](int v) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  });
  s += '}';
  return s;
}

}  // namespace zf
