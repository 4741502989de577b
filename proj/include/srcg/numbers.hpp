#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace srcg {

/// Deterministic primality test (trial division; inputs stay below 2^16
/// because the group order p^{2n} is capped at 2^31).
bool is_prime(std::int64_t x);

/// base^exp in exact integer arithmetic; throws UnsupportedSize on overflow
/// of int64 rather than wrapping.
std::int64_t ipow_checked(std::int64_t base, int exp);

/// Classical Moebius function.
std::int64_t mobius(std::int64_t k);

/// Euler totient.
std::int64_t euler_phi(std::int64_t k);

/// Largest e with p^e | x, capped for x == 0 (the valuation of 0 is
/// treated as `cap`).
int padic_valuation(std::int64_t x, std::int64_t p, int cap);

/// Inverse of a modulo m (gcd(a, m) == 1 required).
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

/// Binomial coefficient, exact, small arguments.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// Unsigned big integer, just enough for counting set realizations:
/// multiply by machine words and print in decimal.
class BigUint {
public:
    BigUint(std::uint64_t v = 0);

    BigUint& operator*=(std::uint64_t f);
    /// *= base^exp
    BigUint& mul_pow(std::uint64_t base, std::uint64_t exp);
    /// exact division by a small factor
    BigUint& div_exact(std::uint64_t d);
    /// *= C(m, k), exact
    BigUint& mul_binomial(std::uint64_t m, std::uint64_t k);

    bool operator==(const BigUint& o) const { return digits_ == o.digits_; }
    bool is_zero() const { return digits_.empty(); }

    /// Value if it fits in 64 bits.
    bool fits_u64(std::uint64_t& out) const;

    std::string str() const;

private:
    std::vector<std::uint32_t> digits_; // little-endian, base 10^9, no leading zeros
};

} // namespace srcg
