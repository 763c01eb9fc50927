#ifndef TTP_COMMON_HPP
#define TTP_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ttp {

// Distances and costs. Integral inputs stay exact (values well below 2^53);
// comparisons on real-valued data use kTol throughout.
using Weight = double;

inline constexpr Weight kTol = 1e-9;

enum class Errc {
  parse_error,
  odd_team_count,
  metric_violation,
  odd_vertex_count,
  not_a_matching,
  not_divisible,
  strategy_unavailable,
  wrong_kind,
  too_few_teams,
  not_spanning_core,
  too_small_for_packing,
  cover_mismatch,
  bad_shape,
  overlap,
  bad_pair_assignment,
  unsatisfiable,
  too_large_for_exact,
  size_mismatch,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

// Deterministic 64-bit generator (splitmix-seeded xoshiro-style stream via
// std::mt19937_64 is fine; the helpers below avoid libstdc++'s
// distribution objects so sequences are identical across platforms).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next_u64() {
    // splitmix64
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double next_real() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform in [0, bound)
  std::uint64_t next_below(std::uint64_t bound) {
    // rejection-free modulo is fine here; bias is < 2^-50 for our bounds
    return next_u64() % bound;
  }

 private:
  std::uint64_t s_;
};

}  // namespace ttp

#endif
