#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace pindex {

// Deterministic random source. Every draw the generator makes flows through
// this class, so a seed plus the documented draw rules pins the output on
// any platform:
//   engine     std::mt19937_64 seeded with the configured seed (the output
//              sequence is fixed by the C++ standard)
//   below(n)   engine() % n
//   real()     (engine() >> 11) * 2^-53
//   shuffle    Fisher-Yates from the back using below()
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n); n must be positive.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

  // Uniform in [lo, hi], inclusive.
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::size_t>(hi - lo + 1)));
  }

  // Uniform in [0, 1).
  double real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return real() < p; }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[below(items.size())];
  }

  // Removes and returns a uniformly chosen element.
  template <typename T>
  T take(std::vector<T>& items) {
    std::size_t i = below(items.size());
    T out = std::move(items[i]);
    items.erase(items.begin() + static_cast<std::ptrdiff_t>(i));
    return out;
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = below(i);
      std::swap(items[i - 1], items[j]);
    }
  }

  // k distinct values from {0, ..., n-1} via partial Fisher-Yates.
  std::vector<std::size_t> sample(std::size_t n, std::size_t k) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    for (std::size_t i = 0; i < k && i < n; ++i) {
      std::size_t j = i + below(n - i);
      std::swap(idx[i], idx[j]);
    }
    idx.resize(k < n ? k : n);
    return idx;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pindex
