#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstring>

namespace optbench::simd {

// Fixed-width lane pack. Every operation is an independent per-lane loop of
// constant trip count, which GCC and Clang lower to packed instructions at
// -O2 and above. W == 1 is the scalar fallback.
template <class T, std::size_t W>
struct Lanes {
  std::array<T, W> v;

  static Lanes broadcast(T x) {
    Lanes r;
    r.v.fill(x);
    return r;
  }
  // Unaligned load/store.
  static Lanes load(const T* p) {
    Lanes r;
    std::memcpy(r.v.data(), p, sizeof(T) * W);
    return r;
  }
  void store(T* p) const { std::memcpy(p, v.data(), sizeof(T) * W); }

  friend Lanes operator+(const Lanes& a, const Lanes& b) {
    Lanes r;
    for (std::size_t i = 0; i < W; ++i) r.v[i] = a.v[i] + b.v[i];
    return r;
  }
  friend Lanes operator-(const Lanes& a, const Lanes& b) {
    Lanes r;
    for (std::size_t i = 0; i < W; ++i) r.v[i] = a.v[i] - b.v[i];
    return r;
  }
  friend Lanes operator*(const Lanes& a, const Lanes& b) {
    Lanes r;
    for (std::size_t i = 0; i < W; ++i) r.v[i] = a.v[i] * b.v[i];
    return r;
  }
  friend Lanes operator/(const Lanes& a, const Lanes& b) {
    Lanes r;
    for (std::size_t i = 0; i < W; ++i) r.v[i] = a.v[i] / b.v[i];
    return r;
  }
};

template <class T, std::size_t W>
Lanes<T, W> floor(const Lanes<T, W>& a) {
  Lanes<T, W> r;
  for (std::size_t i = 0; i < W; ++i) r.v[i] = std::floor(a.v[i]);
  return r;
}

template <class T, std::size_t W>
Lanes<T, W> min(const Lanes<T, W>& a, const Lanes<T, W>& b) {
  Lanes<T, W> r;
  for (std::size_t i = 0; i < W; ++i) r.v[i] = a.v[i] < b.v[i] ? a.v[i] : b.v[i];
  return r;
}

template <class T, std::size_t W>
Lanes<T, W> max(const Lanes<T, W>& a, const Lanes<T, W>& b) {
  Lanes<T, W> r;
  for (std::size_t i = 0; i < W; ++i) r.v[i] = a.v[i] > b.v[i] ? a.v[i] : b.v[i];
  return r;
}

template <class T, std::size_t W>
Lanes<T, W> fma(const Lanes<T, W>& a, const Lanes<T, W>& b, const Lanes<T, W>& c) {
  Lanes<T, W> r;
  for (std::size_t i = 0; i < W; ++i) r.v[i] = std::fma(a.v[i], b.v[i], c.v[i]);
  return r;
}

}  // namespace optbench::simd
