#pragma once

#include <cstdint>

#include "rsalg/errors.hpp"
#include "rsalg/rational.hpp"

namespace rsalg {

inline std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

inline std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0)
        throw division_by_zero("inverse of zero mod " + std::to_string(p));
    return mod_pow(a, p - 2, p);   // p prime
}

// image of a rational in GF(p); denominator divisible by p is an error
inline std::uint64_t rational_mod(const Rational& q, std::uint64_t p) {
    mpz_class n = q.get_num() % static_cast<long>(p);
    mpz_class d = q.get_den() % static_cast<long>(p);
    std::uint64_t nu = n < 0 ? static_cast<std::uint64_t>(mpz_class(n + static_cast<long>(p)).get_ui())
                             : static_cast<std::uint64_t>(n.get_ui());
    std::uint64_t du = static_cast<std::uint64_t>(d.get_ui());
    if (du == 0)
        throw characteristic_error("denominator divisible by " + std::to_string(p));
    return mod_mul(nu, mod_inv(du, p), p);
}

// Element of GF(p); the modulus travels with the value.
struct PrimeFieldElement {
    std::uint64_t value = 0;
    std::uint64_t modulus = 0;

    PrimeFieldElement() = default;
    PrimeFieldElement(std::uint64_t v, std::uint64_t p) : value(v % p), modulus(p) {}

    bool operator==(const PrimeFieldElement& o) const = default;
};

inline void require_same_field(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    if (a.modulus != b.modulus)
        throw domain_mismatch("prime field moduli differ");
}

inline PrimeFieldElement operator+(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    require_same_field(a, b);
    return {mod_add(a.value, b.value, a.modulus), a.modulus};
}

inline PrimeFieldElement operator-(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    require_same_field(a, b);
    return {mod_sub(a.value, b.value, a.modulus), a.modulus};
}

inline PrimeFieldElement operator*(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    require_same_field(a, b);
    return {mod_mul(a.value, b.value, a.modulus), a.modulus};
}

inline PrimeFieldElement operator/(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    require_same_field(a, b);
    return {mod_mul(a.value, mod_inv(b.value, a.modulus), a.modulus), a.modulus};
}

inline PrimeFieldElement operator-(const PrimeFieldElement& a) {
    return {a.value == 0 ? 0 : a.modulus - a.value, a.modulus};
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % d == 0) return n == d;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = mod_pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < r - 1; ++i) {
            x = mod_mul(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

} // namespace rsalg
