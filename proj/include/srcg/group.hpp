#pragma once

#include <cstdint>
#include <string>

#include "srcg/errors.hpp"
#include "srcg/numbers.hpp"

namespace srcg {

/// Fixed ambient group Z_{p^n} x Z_{p^n}.
struct GroupContext {
    std::int64_t p = 0;
    int n = 0;
    std::int64_t modulus = 0; // p^n
    std::int64_t order = 0;   // p^{2n}

    bool operator==(const GroupContext& o) const {
        return p == o.p && n == o.n;
    }
};

/// Element (x, y), both residues mod p^n.
struct GroupElement {
    std::int64_t x = 0;
    std::int64_t y = 0;

    bool operator==(const GroupElement& o) const { return x == o.x && y == o.y; }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
};

/// Validates p prime, n >= 1 and p^{2n} < 2^31 (keeps adjacency oracles
/// addressable); all arithmetic stays exact in 64-bit integers.
GroupContext make_context(std::int64_t p, int n);

GroupElement reduce(const GroupContext& ctx, std::int64_t x, std::int64_t y);
GroupElement add(const GroupContext& ctx, GroupElement a, GroupElement b);
GroupElement negate(const GroupContext& ctx, GroupElement a);
GroupElement scalar_mul(const GroupContext& ctx, std::int64_t t, GroupElement a);

/// Dense vertex index x * p^n + y.
std::int64_t element_index(const GroupContext& ctx, GroupElement g);
GroupElement element_at(const GroupContext& ctx, std::int64_t index);

std::string to_string(GroupElement g);

} // namespace srcg
