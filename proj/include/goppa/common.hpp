#ifndef GOPPA_COMMON_HPP
#define GOPPA_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace goppa {

/* Size guards. All algorithms here are exact and enumerative, so the guards
 * bound what we accept rather than what we can represent. The CLI --force
 * flag swaps in forced() limits.
 */
struct Limits {
    uint64_t max_field_size = uint64_t(1) << 22;  // lookup-table allocation
    uint64_t max_root_set = 200000;               // orbit enumeration ground set
    uint64_t max_poly_set = 2000;                 // classification input
    uint64_t max_codewords = uint64_t(1) << 21;   // canonical-form / verification side
    int max_dim = 24;                             // codeword enumeration
    int max_len = 64;                             // equivalence search
    int max_brute_force_len = 8;                  // N! oracle

    static Limits forced() {
        Limits l;
        l.max_field_size <<= 4;
        l.max_root_set <<= 4;
        l.max_poly_set <<= 4;
        l.max_codewords <<= 3;
        l.max_dim = 30;
        return l;
    }
};

// Guard refusal; the CLI maps this to exit code 3.
struct size_guard_error : std::runtime_error {
    explicit size_guard_error(const std::string& what) : std::runtime_error(what) {}
};

// Mixing elements of different field contexts.
struct context_mismatch : std::invalid_argument {
    explicit context_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

// A verified property failed to verify; always an implementation fault signal.
struct falsification_error : std::logic_error {
    explicit falsification_error(const std::string& what) : std::logic_error(what) {}
};

inline bool is_prime(long long v) {
    if (v < 2) return false;
    for (long long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

// p^e with saturation at 2^62 so guard checks stay meaningful for silly inputs.
inline uint64_t ipow_sat(uint64_t base, unsigned e) {
    const uint64_t cap = uint64_t(1) << 62;
    uint64_t v = 1;
    while (e--) {
        if (v > cap / base) return cap;
        v *= base;
    }
    return v;
}

// b^e mod m, 64-bit safe for m < 2^32.
inline uint64_t modpow(uint64_t b, uint64_t e, uint64_t m) {
    if (m == 1) return 0;
    uint64_t r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

inline uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b) {
        uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace goppa

#endif
