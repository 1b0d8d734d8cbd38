// SPDX-License-Identifier: Apache-2.0
//
// Dynamic bitset over vertex ids 0..n-1. All set operations require equal
// capacity; the tail bits above n-1 are always kept zero so that word-wise
// comparison is meaningful.

#ifndef PG_VERTEXSET_HPP
#define PG_VERTEXSET_HPP

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace pg {

class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

  static VertexSet of(int n, std::initializer_list<int> vs) {
    VertexSet s(n);
    for (int v : vs) s.set(v);
    return s;
  }
  static VertexSet full(int n) {
    VertexSet s(n);
    for (auto& w : s.w_) w = ~uint64_t{0};
    s.trim();
    return s;
  }

  int capacity() const { return n_; }

  bool test(int v) const {
    assert(v >= 0 && v < n_);
    return (w_[v >> 6] >> (v & 63)) & 1;
  }
  void set(int v) {
    assert(v >= 0 && v < n_);
    w_[v >> 6] |= uint64_t{1} << (v & 63);
  }
  void reset(int v) {
    assert(v >= 0 && v < n_);
    w_[v >> 6] &= ~(uint64_t{1} << (v & 63));
  }

  bool empty() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }
  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }

  // First member, or -1 when empty.
  int first() const { return scan(0); }
  // Next member strictly after v, or -1.
  int next(int v) const { return scan(v + 1); }

  VertexSet operator|(const VertexSet& o) const { return binop(o, [](uint64_t a, uint64_t b) { return a | b; }); }
  VertexSet operator&(const VertexSet& o) const { return binop(o, [](uint64_t a, uint64_t b) { return a & b; }); }
  // Set difference: members of *this not in o.
  VertexSet operator-(const VertexSet& o) const { return binop(o, [](uint64_t a, uint64_t b) { return a & ~b; }); }
  VertexSet operator~() const {
    VertexSet r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    r.trim();
    return r;
  }
  VertexSet& operator|=(const VertexSet& o) { return inplace(o, [](uint64_t& a, uint64_t b) { a |= b; }); }
  VertexSet& operator&=(const VertexSet& o) { return inplace(o, [](uint64_t& a, uint64_t b) { a &= b; }); }
  VertexSet& operator-=(const VertexSet& o) { return inplace(o, [](uint64_t& a, uint64_t b) { a &= ~b; }); }

  bool intersects(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  // Lexicographic order on the sorted member sequences (used for
  // deterministic tie-breaking among witnesses). The empty set sorts first.
  bool lex_less(const VertexSet& o) const {
    int a = first(), b = o.first();
    while (a >= 0 && b >= 0) {
      if (a != b) return a < b;
      a = next(a);
      b = o.next(b);
    }
    return a < 0 && b >= 0;
  }

  std::vector<int> to_vector() const {
    std::vector<int> r;
    for (int v = first(); v >= 0; v = next(v)) r.push_back(v);
    return r;
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;

  void trim() {
    if (n_ & 63) w_.back() &= (uint64_t{1} << (n_ & 63)) - 1;
  }
  int scan(int from) const {
    if (from >= n_) return -1;
    int wi = from >> 6;
    uint64_t w = w_[wi] & (~uint64_t{0} << (from & 63));
    while (true) {
      if (w) return (wi << 6) + __builtin_ctzll(w);
      if (++wi == (int)w_.size()) return -1;
      w = w_[wi];
    }
  }
  template <class F>
  VertexSet binop(const VertexSet& o, F f) const {
    assert(n_ == o.n_);
    VertexSet r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = f(w_[i], o.w_[i]);
    return r;
  }
  template <class F>
  VertexSet& inplace(const VertexSet& o, F f) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) f(w_[i], o.w_[i]);
    return *this;
  }
};

}  // namespace pg

#endif  // PG_VERTEXSET_HPP
