#ifndef SEMIGRAPH_BITSET_HPP
#define SEMIGRAPH_BITSET_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace semigraph {

/// Fixed-capacity dynamic bitset. Capacity is chosen at construction; all
/// binary operations require equal capacity.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

  int capacity() const { return n_; }

  void set(int i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  int count() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }
  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }
  bool none() const { return !any(); }

  /// Lowest set bit at position >= from, or -1.
  int next(int from = 0) const {
    if (from >= n_) return -1;
    int wi = from >> 6;
    std::uint64_t cur = w_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (cur) return (wi << 6) + std::countr_zero(cur);
      if (++wi >= static_cast<int>(w_.size())) return -1;
      cur = w_[wi];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (int i = next(); i >= 0; i = next(i + 1)) f(i);
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  /// this \ o
  Bitset& and_not(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }
  friend bool operator!=(const Bitset& a, const Bitset& b) { return !(a == b); }

  /// Strict weak order so bitsets can key ordered maps.
  friend bool operator<(const Bitset& a, const Bitset& b) { return a.w_ < b.w_; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace semigraph

#endif
