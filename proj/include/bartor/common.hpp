#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bartor {

/* All invariant violations and malformed inputs surface as bartor::error. */
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail(const std::string& msg) { throw error(msg); }

inline void require(bool ok, const std::string& msg) {
    if (!ok) throw error(msg);
}

/* Deterministic PRNG for sampled identity checks (SplitMix64). */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : s_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /* uniform in [0, n) */
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

  private:
    std::uint64_t s_;
};

}  // namespace bartor
