#include "srcg/homogeneous.hpp"

#include <algorithm>
#include <random>

#include "srcg/errors.hpp"

namespace srcg {

std::string HomVector::str() const {
    std::string s;
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s;
}

HomVector make_hom_vector(const GroupContext& ctx, std::vector<int> a) {
    if (static_cast<int>(a.size()) != ctx.n)
        fail(ErrorCode::VectorOutOfRange, "vector must have n = " + std::to_string(ctx.n) + " entries");
    if (a[0] < 0 || a[0] > ctx.p + 1)
        fail(ErrorCode::VectorOutOfRange, "a_1 must lie in [0, p+1]");
    for (size_t i = 1; i < a.size(); ++i)
        if (a[i] < 0 || a[i] > static_cast<int>(ctx.p) - 1)
            fail(ErrorCode::VectorOutOfRange, "a_i must lie in [0, p-1] for i >= 2");
    return HomVector{std::move(a)};
}

BlockDecomposition blocks_of(const DeltaTree& tree, const NodeSet& s) {
    BlockDecomposition out;
    for (int l = 0; l < tree.ctx().n; ++l) {
        for (int h : tree.level(l)) {
            const auto& sons = tree.node(h).sons;
            int c = 0;
            for (int son : sons) c += s.test(son) ? 1 : 0;
            if (c == 0) continue;
            if (c != static_cast<int>(sons.size())) {
                out.ok = false;
                out.witness_father = h;
                out.fathers.clear();
                return out;
            }
            out.fathers.push_back(h);
        }
    }
    out.ok = true;
    return out;
}

bool block_equivalent(const DeltaTree& tree, const NodeSet& a, const NodeSet& b) {
    return blocks_of(tree, a ^ b).ok;
}

HomogeneityResult homogeneity_vector(const DeltaTree& tree, const NodeSet& s) {
    const GroupContext& ctx = tree.ctx();
    HomogeneityResult out;
    out.vec.a.assign(static_cast<size_t>(ctx.n), 0);
    for (int l = 0; l < ctx.n; ++l) {
        int expected = -2;
        int first_node = -1;
        for (int h : tree.level(l)) {
            int c = 0;
            for (int son : tree.node(h).sons) c += s.test(son) ? 1 : 0;
            const int value = c - (s.test(h) ? 1 : 0);
            if (expected == -2) {
                expected = value;
                first_node = h;
            } else if (value != expected) {
                out.ok = false;
                out.witness_a = first_node;
                out.witness_b = h;
                return out;
            }
        }
        const int hi = l == 0 ? static_cast<int>(ctx.p) + 1 : static_cast<int>(ctx.p) - 1;
        if (expected < 0 || expected > hi) {
            out.ok = false;
            out.witness_a = first_node;
            out.witness_b = first_node; // constant but outside the admissible range
            return out;
        }
        out.vec.a[static_cast<size_t>(l)] = expected;
    }
    out.ok = true;
    return out;
}

NodeSet build_homogeneous(const DeltaTree& tree, const HomVector& vec, BuildChoice choice,
                          std::uint64_t seed) {
    const GroupContext& ctx = tree.ctx();
    NodeSet s(tree.node_count());
    std::mt19937_64 rng(seed);
    for (int l = 0; l < ctx.n; ++l) {
        for (int h : tree.level(l)) {
            const auto& sons = tree.node(h).sons;
            int take = vec.a[static_cast<size_t>(l)] + ((l > 0 && s.test(h)) ? 1 : 0);
            if (choice == BuildChoice::DeterministicFirst) {
                for (int i = 0; i < take; ++i) s.set(sons[static_cast<size_t>(i)]);
            } else {
                std::vector<int> pick;
                std::sample(sons.begin(), sons.end(), std::back_inserter(pick),
                            take, rng);
                for (int id : pick) s.set(id);
            }
        }
    }
    return s;
}

BigUint count_homogeneous(const DeltaTree& tree, const HomVector& vec) {
    const GroupContext& ctx = tree.ctx();
    const std::uint64_t p = static_cast<std::uint64_t>(ctx.p);
    BigUint total(1);
    total.mul_binomial(p + 1, static_cast<std::uint64_t>(vec.a[0]));
    // realizations share the same per-level membership count
    std::int64_t members = vec.a[0];
    for (int l = 1; l < ctx.n; ++l) {
        const std::int64_t level_size = ipow_checked(ctx.p, l) + ipow_checked(ctx.p, l - 1);
        const std::uint64_t a = static_cast<std::uint64_t>(vec.a[static_cast<size_t>(l)]);
        auto apply = [&](std::uint64_t k, std::int64_t times) {
            BigUint factor(1);
            factor.mul_binomial(p, k);
            std::uint64_t small = 0;
            if (factor.fits_u64(small) && small < 1000000000ull) {
                total.mul_pow(small, static_cast<std::uint64_t>(times));
            } else {
                for (std::int64_t i = 0; i < times; ++i) total.mul_binomial(p, k);
            }
        };
        apply(a + 1, members);
        apply(a, level_size - members);
        members = level_size * vec.a[static_cast<size_t>(l)] + members;
    }
    return total;
}

std::int64_t expected_descendant_count(const GroupContext& ctx, int l, int m,
                                       const HomVector& vec) {
    if (l < 0 || l > m || m > ctx.n)
        fail(ErrorCode::VectorOutOfRange, "expected_descendant_count needs 0 <= l <= m <= n");
    if (l == m) return 0;
    std::int64_t total = 0;
    if (l == 0) {
        total = vec.a[0];
        for (int i = 2; i <= m; ++i)
            total += vec.a[static_cast<size_t>(i - 1)] *
                     (ipow_checked(ctx.p, i - 1) + ipow_checked(ctx.p, i - 2));
        return total;
    }
    for (int i = l + 1; i <= m; ++i)
        total += vec.a[static_cast<size_t>(i - 1)] * ipow_checked(ctx.p, i - l - 1);
    return total;
}

HomogenizeResult homogenize(const DeltaTree& tree, const NodeSet& s) {
    const GroupContext& ctx = tree.ctx();
    HomogenizeResult out;
    out.set = s; // level 1 is kept verbatim; deeper levels get adjusted in place
    for (int l = 2; l <= ctx.n; ++l) {
        int residue = -1;
        int first_father = -1;
        // pass 1: the residue of |S cap B| - [father in result] must agree
        for (int father : tree.level(l - 1)) {
            int c = 0;
            for (int son : tree.node(father).sons) c += s.test(son) ? 1 : 0;
            const int delta = out.set.test(father) ? 1 : 0;
            const int r = ((c - delta) % static_cast<int>(ctx.p) + static_cast<int>(ctx.p)) %
                          static_cast<int>(ctx.p);
            if (residue == -1) {
                residue = r;
                first_father = father;
            } else if (r != residue) {
                out.ok = false;
                out.witness_father_a = first_father;
                out.witness_father_b = father;
                return out;
            }
        }
        // pass 2: toggle the full blocks that sit on the wrong side
        if (residue == 0) {
            for (int father : tree.level(l - 1)) {
                if (out.set.test(father)) continue;
                int c = 0;
                for (int son : tree.node(father).sons) c += s.test(son) ? 1 : 0;
                if (c == static_cast<int>(ctx.p))
                    for (int son : tree.node(father).sons) out.set.reset(son);
            }
        } else if (residue == static_cast<int>(ctx.p) - 1) {
            for (int father : tree.level(l - 1)) {
                if (!out.set.test(father)) continue;
                int c = 0;
                for (int son : tree.node(father).sons) c += s.test(son) ? 1 : 0;
                if (c == 0)
                    for (int son : tree.node(father).sons) out.set.set(son);
            }
        }
    }
    HomogeneityResult check = homogeneity_vector(tree, out.set);
    if (!check.ok)
        fail(ErrorCode::InternalInvariant, "homogenize produced a non-homogeneous set");
    out.ok = true;
    out.vec = check.vec;
    return out;
}

HomVector complement_vector(const GroupContext& ctx, const HomVector& vec) {
    const int p = static_cast<int>(ctx.p);
    const int n = ctx.n;
    std::vector<int> out(static_cast<size_t>(n), 0);
    auto generic = [&]() {
        out[0] = p + 1 - vec.a[0];
        for (int i = 1; i < n; ++i) out[static_cast<size_t>(i)] = p - 1 - vec.a[static_cast<size_t>(i)];
    };
    if (vec.a[0] == 0) {
        int i = 1;
        while (i < n && vec.a[static_cast<size_t>(i)] == 0) ++i;
        if (i == n) {
            generic(); // all-zero vector: the complement is the full set
        } else {
            out[static_cast<size_t>(i)] = p - vec.a[static_cast<size_t>(i)];
            for (int j = i + 1; j < n; ++j) out[static_cast<size_t>(j)] = p - 1 - vec.a[static_cast<size_t>(j)];
        }
    } else if (vec.a[0] == p + 1) {
        int i = 1;
        while (i < n && vec.a[static_cast<size_t>(i)] == p - 1) ++i;
        if (i == n) {
            generic(); // the full set: the complement is empty
        } else {
            out[0] = p + 1;
            for (int j = 1; j < i; ++j) out[static_cast<size_t>(j)] = p - 1;
            out[static_cast<size_t>(i)] = p - 2 - vec.a[static_cast<size_t>(i)];
            for (int j = i + 1; j < n; ++j) out[static_cast<size_t>(j)] = p - 1 - vec.a[static_cast<size_t>(j)];
        }
    } else {
        generic();
    }
    return make_hom_vector(ctx, std::move(out));
}

std::int64_t x_min(const DeltaTree& tree, const NodeSet& s, int m) {
    if (m < 1 || m > tree.ctx().n)
        fail(ErrorCode::VectorOutOfRange, "x_min depth out of range");
    std::int64_t best = 0;
    bool first = true;
    for (int k : tree.level(m)) {
        const std::int64_t v = char_on_set(tree, k, s);
        if (first || v < best) best = v;
        first = false;
    }
    return best;
}

} // namespace srcg
