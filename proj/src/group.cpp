#include "srcg/group.hpp"

namespace srcg {

GroupContext make_context(std::int64_t p, int n) {
    if (!is_prime(p)) fail(ErrorCode::NotPrime, "p = " + std::to_string(p) + " is not prime");
    if (n < 1) fail(ErrorCode::UnsupportedSize, "n must be >= 1");
    std::int64_t modulus = ipow_checked(p, n);
    std::int64_t order = ipow_checked(modulus, 2);
    if (order >= (std::int64_t{1} << 31))
        fail(ErrorCode::UnsupportedSize,
             "group order p^(2n) = " + std::to_string(order) + " exceeds the 2^31 cap");
    return GroupContext{p, n, modulus, order};
}

GroupElement reduce(const GroupContext& ctx, std::int64_t x, std::int64_t y) {
    x %= ctx.modulus;
    y %= ctx.modulus;
    if (x < 0) x += ctx.modulus;
    if (y < 0) y += ctx.modulus;
    return GroupElement{x, y};
}

GroupElement add(const GroupContext& ctx, GroupElement a, GroupElement b) {
    return reduce(ctx, a.x + b.x, a.y + b.y);
}

GroupElement negate(const GroupContext& ctx, GroupElement a) {
    return reduce(ctx, -a.x, -a.y);
}

GroupElement scalar_mul(const GroupContext& ctx, std::int64_t t, GroupElement a) {
    t %= ctx.modulus;
    if (t < 0) t += ctx.modulus;
    return reduce(ctx, t * a.x, t * a.y);
}

std::int64_t element_index(const GroupContext& ctx, GroupElement g) {
    return g.x * ctx.modulus + g.y;
}

GroupElement element_at(const GroupContext& ctx, std::int64_t index) {
    return GroupElement{index / ctx.modulus, index % ctx.modulus};
}

std::string to_string(GroupElement g) {
    return "(" + std::to_string(g.x) + "," + std::to_string(g.y) + ")";
}

} // namespace srcg
