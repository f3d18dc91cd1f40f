#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace patchjudge {

// splitmix64 finalizer; used to derive independent stream seeds from a master seed.
uint64_t mix64(uint64_t x);

// Deterministic RNG wrapper. Every randomized operation in this project draws
// through this class so that results are bit-identical across platforms:
//   bounded(n)  = mt19937_64() % n
//   uniform01() = (mt19937_64() >> 11) * 2^-53
//   shuffle     = Fisher-Yates from the back, j = bounded(i + 1)
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next() { return gen_(); }
  uint64_t bounded(uint64_t n);
  double uniform01();

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(bounded(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  std::string state() const;
  void restore(const std::string& state);

 private:
  std::mt19937_64 gen_;
};

uint64_t fnv1a64(std::string_view s);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

std::string iso8601_utc_now();

}  // namespace patchjudge
