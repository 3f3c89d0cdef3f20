#pragma once

#include <cstdint>
#include <initializer_list>

#include "cbcert/field.hpp"

namespace cbcert {

namespace detail {

// splitmix64 finalizer
inline u64 mix64(u64 z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace detail

/// splitmix64. Tiny, fully specified, identical on every platform, so
/// certificates reproduce byte-for-byte across machines.
class SplitMix64 {
public:
    explicit SplitMix64(u64 seed) : state_(seed) {}

    u64 next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return detail::mix64(state_);
    }

    /// Uniform in [0, bound), unbiased via rejection. bound > 0.
    u64 below(u64 bound) {
        const u64 limit = bound * (~u64{0} / bound); // largest multiple of bound
        for (;;) {
            u64 r = next();
            if (r < limit) return r % bound;
        }
    }

    Fp field_element(const PrimeField& f) { return Fp{below(f.modulus())}; }

private:
    u64 state_;
};

/// Derives a child seed from a parent seed and a tag path. Order-sensitive,
/// so derive(s, {1, 2}) != derive(s, {2, 1}). All randomness in the toolkit
/// flows from one root seed through this function, which makes every
/// individual result reproducible from (seed, parameters) alone.
inline u64 derive_seed(u64 seed, std::initializer_list<u64> tags) {
    u64 s = seed;
    for (u64 t : tags) s = detail::mix64(s + 0x9e3779b97f4a7c15ULL + detail::mix64(t));
    return s;
}

} // namespace cbcert
