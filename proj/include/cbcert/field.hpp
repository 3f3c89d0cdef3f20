#pragma once

#include <cstdint>
#include <stdexcept>

namespace cbcert {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i64 = std::int64_t;

/// Default modulus: the Mersenne prime 2^61 - 1. Odd, so the field has
/// characteristic != 2, and reduction is two shift-adds.
inline constexpr u64 kDefaultPrime = (u64{1} << 61) - 1;

namespace detail {

inline u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

inline u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace detail

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = detail::powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = detail::mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Prime-field element in canonical form: 0 <= v < p. The modulus lives in
/// PrimeField; elements are plain values and safe to share across threads.
struct Fp {
    u64 v = 0;
    friend bool operator==(const Fp&, const Fp&) = default;
};

/// Arithmetic context for F_p. Small value type; copies are cheap and the
/// modulus is validated (odd prime) only on explicit construction.
class PrimeField {
public:
    PrimeField() : PrimeField(kDefaultPrime) {}

    explicit PrimeField(u64 p) : p_(p), mersenne61_(p == kDefaultPrime) {
        if (p < 3 || (p & 1) == 0)
            throw std::invalid_argument("PrimeField: modulus must be odd and >= 3");
        if (!is_prime_u64(p))
            throw std::invalid_argument("PrimeField: modulus is not prime");
    }

    u64 modulus() const noexcept { return p_; }

    Fp zero() const noexcept { return Fp{0}; }
    Fp one() const noexcept { return Fp{1}; }

    Fp from_uint(u64 x) const noexcept {
        if (mersenne61_) return Fp{reduce61(static_cast<u128>(x))};
        return Fp{x % p_};
    }

    Fp from_int(i64 x) const noexcept {
        i64 r = x % static_cast<i64>(p_);
        if (r < 0) r += static_cast<i64>(p_);
        return Fp{static_cast<u64>(r)};
    }

    Fp add(Fp a, Fp b) const noexcept {
        u64 s = a.v + b.v; // p < 2^63, no overflow
        if (s >= p_) s -= p_;
        return Fp{s};
    }

    Fp sub(Fp a, Fp b) const noexcept {
        return Fp{a.v >= b.v ? a.v - b.v : a.v + (p_ - b.v)};
    }

    Fp neg(Fp a) const noexcept { return a.v == 0 ? a : Fp{p_ - a.v}; }

    Fp mul(Fp a, Fp b) const noexcept {
        u128 t = static_cast<u128>(a.v) * b.v;
        return Fp{mersenne61_ ? reduce61(t) : static_cast<u64>(t % p_)};
    }

    Fp pow(Fp a, u64 e) const noexcept {
        Fp r = one();
        Fp base = a;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    /// Fermat inverse; p is prime by construction.
    Fp inv(Fp a) const {
        if (a.v == 0) throw std::domain_error("PrimeField::inv: inverse of zero");
        return pow(a, p_ - 2);
    }

    friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept {
        return a.p_ == b.p_;
    }

private:
    // Fold high bits for p = 2^61 - 1; input < 2^122 so two folds suffice.
    static u64 reduce61(u128 x) noexcept {
        constexpr u64 mask = kDefaultPrime;
        u128 t = (x & mask) + (x >> 61);
        u64 r = static_cast<u64>((t & mask) + (t >> 61));
        if (r >= mask) r -= mask;
        return r;
    }

    u64 p_;
    bool mersenne61_;
};

} // namespace cbcert
