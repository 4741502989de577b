#include "srcg/numbers.hpp"

#include <algorithm>
#include <limits>

#include "srcg/errors.hpp"

namespace srcg {

bool is_prime(std::int64_t x) {
    if (x < 2) return false;
    if (x < 4) return true;
    if (x % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= x; d += 2)
        if (x % d == 0) return false;
    return true;
}

std::int64_t ipow_checked(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::int64_t>::max() / base)
            fail(ErrorCode::UnsupportedSize, "integer overflow computing power");
        r *= base;
    }
    return r;
}

std::int64_t mobius(std::int64_t k) {
    if (k < 1) fail(ErrorCode::UnsupportedSize, "mobius requires k >= 1");
    int factors = 0;
    for (std::int64_t d = 2; d * d <= k; ++d) {
        if (k % d == 0) {
            k /= d;
            ++factors;
            if (k % d == 0) return 0;
        }
    }
    if (k > 1) ++factors;
    return (factors % 2 == 0) ? 1 : -1;
}

std::int64_t euler_phi(std::int64_t k) {
    if (k < 1) fail(ErrorCode::UnsupportedSize, "euler_phi requires k >= 1");
    std::int64_t result = k;
    for (std::int64_t d = 2; d * d <= k; ++d) {
        if (k % d == 0) {
            while (k % d == 0) k /= d;
            result -= result / d;
        }
    }
    if (k > 1) result -= result / k;
    return result;
}

int padic_valuation(std::int64_t x, std::int64_t p, int cap) {
    if (x == 0) return cap;
    int v = 0;
    while (v < cap && x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    std::int64_t old_r = a % m, r = m;
    std::int64_t old_s = 1, s = 0;
    if (old_r < 0) old_r += m;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r; r = tmp;
        tmp = old_s - q * s;
        old_s = s; s = tmp;
    }
    if (old_r != 1) fail(ErrorCode::InternalInvariant, "mod_inverse: arguments not coprime");
    return ((old_s % m) + m) % m;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i; // exact at every step
    return r;
}

namespace {
constexpr std::uint64_t kBase = 1000000000ull;
}

BigUint::BigUint(std::uint64_t v) {
    while (v != 0) {
        digits_.push_back(static_cast<std::uint32_t>(v % kBase));
        v /= kBase;
    }
}

BigUint& BigUint::operator*=(std::uint64_t f) {
    if (f == 0 || digits_.empty()) {
        digits_.clear();
        return *this;
    }
    if (f >= kBase) fail(ErrorCode::InternalInvariant, "BigUint factor too large");
    std::uint64_t carry = 0;
    for (auto& d : digits_) {
        std::uint64_t t = static_cast<std::uint64_t>(d) * f + carry;
        d = static_cast<std::uint32_t>(t % kBase);
        carry = t / kBase;
    }
    while (carry) {
        digits_.push_back(static_cast<std::uint32_t>(carry % kBase));
        carry /= kBase;
    }
    return *this;
}

BigUint& BigUint::mul_pow(std::uint64_t base, std::uint64_t exp) {
    for (std::uint64_t i = 0; i < exp; ++i) *this *= base;
    return *this;
}

BigUint& BigUint::div_exact(std::uint64_t d) {
    if (d == 0 || d >= kBase) fail(ErrorCode::InternalInvariant, "BigUint divisor out of range");
    std::uint64_t rem = 0;
    for (size_t i = digits_.size(); i-- > 0;) {
        std::uint64_t cur = rem * kBase + digits_[i];
        digits_[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    if (rem != 0) fail(ErrorCode::InternalInvariant, "BigUint division not exact");
    while (!digits_.empty() && digits_.back() == 0) digits_.pop_back();
    return *this;
}

BigUint& BigUint::mul_binomial(std::uint64_t m, std::uint64_t k) {
    if (k > m) {
        digits_.clear();
        return *this;
    }
    k = std::min(k, m - k);
    for (std::uint64_t i = 1; i <= k; ++i) {
        *this *= (m - k + i);
        div_exact(i); // prefix products of C(m,k) terms divide exactly
    }
    return *this;
}

bool BigUint::fits_u64(std::uint64_t& out) const {
    if (digits_.size() > 3) return false;
    unsigned __int128 v = 0;
    for (size_t i = digits_.size(); i-- > 0;) v = v * kBase + digits_[i];
    if (v > std::numeric_limits<std::uint64_t>::max()) return false;
    out = static_cast<std::uint64_t>(v);
    return true;
}

std::string BigUint::str() const {
    if (digits_.empty()) return "0";
    std::string s = std::to_string(digits_.back());
    for (size_t i = digits_.size() - 1; i-- > 0;) {
        std::string part = std::to_string(digits_[i]);
        s += std::string(9 - part.size(), '0') + part;
    }
    return s;
}

} // namespace srcg
