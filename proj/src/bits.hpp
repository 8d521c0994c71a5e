#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace phigraph::detail {

// Fixed-width dynamic bitset used by the exact solvers.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}
  Bits(std::size_t n, std::span<const std::uint64_t> words) : n_(n), w_(words.begin(), words.end()) {}

  static Bits full(std::size_t n) {
    Bits b(n);
    for (std::size_t i = 0; i < n; ++i) b.set(i);
    return b;
  }

  std::size_t width() const { return n_; }
  void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { w_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1u; }

  bool any() const {
    for (auto x : w_) {
      if (x) return true;
    }
    return false;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }

  // Index of the lowest set bit, or width() when empty.
  std::size_t first() const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
    }
    return n_;
  }

  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  // this &= ~o
  Bits& subtract(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  std::size_t and_count(const Bits& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }

  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      for (std::uint64_t x = w_[i]; x; x &= x - 1) f(i * 64 + std::countr_zero(x));
    }
  }

  bool operator==(const Bits&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace phigraph::detail
