#include "srcg/delta_tree.hpp"

#include <algorithm>
#include <charconv>

namespace srcg {

DeltaTree::DeltaTree(GroupContext ctx) : ctx_(ctx) {
    const std::int64_t p = ctx_.p;
    const int n = ctx_.n;

    levels_.resize(static_cast<size_t>(n) + 1);
    level_offset_.assign(static_cast<size_t>(n) + 2, 0);
    level_offset_[0] = 0;
    level_offset_[1] = 1; // root only at level 0
    for (int l = 1; l <= n; ++l) {
        std::int64_t width = ipow_checked(p, l) + ipow_checked(p, l - 1);
        level_offset_[static_cast<size_t>(l) + 1] =
            level_offset_[static_cast<size_t>(l)] + static_cast<int>(width);
    }
    nodes_.resize(static_cast<size_t>(level_offset_[static_cast<size_t>(n) + 1]));

    DeltaNode& root = nodes_[0];
    root.id = 0;
    root.kind = NodeKind::Trivial;
    root.gen = GroupElement{0, 0};
    root.length = 0;
    root.father = 0;
    levels_[0].push_back(0);

    for (int l = 1; l <= n; ++l) {
        const int m = n - l;
        const std::int64_t pm = ipow_checked(p, m);
        const std::int64_t a_range = ipow_checked(p, l);     // p^{n-m}
        const std::int64_t b_range = ipow_checked(p, l - 1); // p^{n-m-1}
        int id = level_offset_[static_cast<size_t>(l)];
        for (std::int64_t a = 0; a < a_range; ++a, ++id) {
            DeltaNode& nd = nodes_[static_cast<size_t>(id)];
            nd.id = id;
            nd.kind = NodeKind::TypeA;
            nd.m = m;
            nd.param = a;
            nd.gen = reduce(ctx_, pm, a * pm);
            nd.length = l;
            levels_[static_cast<size_t>(l)].push_back(id);
        }
        for (std::int64_t b = 0; b < b_range; ++b, ++id) {
            DeltaNode& nd = nodes_[static_cast<size_t>(id)];
            nd.id = id;
            nd.kind = NodeKind::TypeB;
            nd.m = m;
            nd.param = b;
            nd.gen = reduce(ctx_, b * pm * p, pm);
            nd.length = l;
            levels_[static_cast<size_t>(l)].push_back(id);
        }
    }

    // Father(H) = pH; sons collected in id order.
    for (int id = 1; id < node_count(); ++id) {
        DeltaNode& nd = nodes_[static_cast<size_t>(id)];
        nd.father = node_of(scalar_mul(ctx_, p, nd.gen));
        nodes_[static_cast<size_t>(nd.father)].sons.push_back(id);
    }
}

int DeltaTree::id_of(NodeKind kind, int m, std::int64_t param) const {
    const int l = ctx_.n - m;
    int base = level_offset_[static_cast<size_t>(l)];
    if (kind == NodeKind::TypeB) base += static_cast<int>(ipow_checked(ctx_.p, l));
    return base + static_cast<int>(param);
}

int DeltaTree::node_of(GroupElement g) const {
    if (g.x == 0 && g.y == 0) return 0;
    const std::int64_t p = ctx_.p;
    const int n = ctx_.n;
    const int vx = padic_valuation(g.x, p, n);
    const int vy = padic_valuation(g.y, p, n);
    if (vx <= vy) {
        // normalize to (p^m, a p^m)
        const int m = vx;
        const std::int64_t pm = ipow_checked(p, m);
        const std::int64_t rest = ipow_checked(p, n - m);
        const std::int64_t unit = (g.x / pm) % rest;
        const std::int64_t t = mod_inverse(unit, rest);
        const std::int64_t a = (t * ((g.y / pm) % rest)) % rest;
        return id_of(NodeKind::TypeA, m, a);
    }
    // normalize to (b p^{m+1}, p^m)
    const int m = vy;
    const std::int64_t pm = ipow_checked(p, m);
    const std::int64_t rest = ipow_checked(p, n - m);
    const std::int64_t unit = (g.y / pm) % rest;
    const std::int64_t t = mod_inverse(unit, rest);
    const std::int64_t scaled = (t * ((g.x / pm) % rest)) % rest; // = b p, p | scaled
    return id_of(NodeKind::TypeB, m, scaled / p);
}

bool DeltaTree::is_ancestor(int anc, int id) const {
    int cur = id;
    while (true) {
        if (cur == anc) return true;
        if (cur == 0) return false;
        cur = nodes_[static_cast<size_t>(cur)].father;
    }
}

int DeltaTree::ancestor_at(int id, int depth) const {
    int cur = id;
    while (nodes_[static_cast<size_t>(cur)].length > depth)
        cur = nodes_[static_cast<size_t>(cur)].father;
    return cur;
}

std::vector<int> DeltaTree::descendants(int id, int dist) const {
    std::vector<int> frontier{id};
    for (int step = 0; step < dist; ++step) {
        std::vector<int> next;
        for (int f : frontier)
            for (int s : nodes_[static_cast<size_t>(f)].sons) next.push_back(s);
        frontier = std::move(next);
    }
    return frontier;
}

int DeltaTree::intersect(int f, int k) const {
    int a = f, b = k;
    while (nodes_[static_cast<size_t>(a)].length > nodes_[static_cast<size_t>(b)].length)
        a = nodes_[static_cast<size_t>(a)].father;
    while (nodes_[static_cast<size_t>(b)].length > nodes_[static_cast<size_t>(a)].length)
        b = nodes_[static_cast<size_t>(b)].father;
    while (a != b) {
        a = nodes_[static_cast<size_t>(a)].father;
        b = nodes_[static_cast<size_t>(b)].father;
    }
    return a;
}

std::int64_t DeltaTree::subgroup_order(int id) const {
    return ipow_checked(ctx_.p, nodes_[static_cast<size_t>(id)].length);
}

std::int64_t DeltaTree::orbit_size(int id) const {
    const int l = nodes_[static_cast<size_t>(id)].length;
    if (l == 0) return 1;
    return ipow_checked(ctx_.p, l - 1) * (ctx_.p - 1);
}

std::vector<GroupElement> DeltaTree::orbit(int id) const {
    const DeltaNode& nd = nodes_[static_cast<size_t>(id)];
    if (nd.length == 0) return {GroupElement{0, 0}};
    std::vector<GroupElement> out;
    const std::int64_t ord = subgroup_order(id);
    out.reserve(static_cast<size_t>(orbit_size(id)));
    for (std::int64_t t = 1; t < ord; ++t)
        if (t % ctx_.p != 0) out.push_back(scalar_mul(ctx_, t, nd.gen));
    return out;
}

std::vector<GroupElement> DeltaTree::subgroup_elements(int id) const {
    const DeltaNode& nd = nodes_[static_cast<size_t>(id)];
    std::vector<GroupElement> out;
    const std::int64_t ord = subgroup_order(id);
    out.reserve(static_cast<size_t>(ord));
    for (std::int64_t t = 0; t < ord; ++t) out.push_back(scalar_mul(ctx_, t, nd.gen));
    return out;
}

std::string DeltaTree::descriptor(int id) const {
    const DeltaNode& nd = nodes_[static_cast<size_t>(id)];
    switch (nd.kind) {
        case NodeKind::Trivial: return "T";
        case NodeKind::TypeA:
            return "A:" + std::to_string(nd.m) + "," + std::to_string(nd.param);
        case NodeKind::TypeB:
            return "B:" + std::to_string(nd.m) + "," + std::to_string(nd.param);
    }
    return "?";
}

int DeltaTree::node_from_descriptor(std::string_view desc) const {
    if (desc == "T") return 0;
    if (desc.size() < 5 || (desc[0] != 'A' && desc[0] != 'B') || desc[1] != ':')
        fail(ErrorCode::BadDescriptor, "bad node descriptor: " + std::string(desc));
    const NodeKind kind = desc[0] == 'A' ? NodeKind::TypeA : NodeKind::TypeB;
    const size_t comma = desc.find(',');
    if (comma == std::string_view::npos)
        fail(ErrorCode::BadDescriptor, "bad node descriptor: " + std::string(desc));
    int m = -1;
    std::int64_t param = -1;
    auto r1 = std::from_chars(desc.data() + 2, desc.data() + comma, m);
    auto r2 = std::from_chars(desc.data() + comma + 1, desc.data() + desc.size(), param);
    if (r1.ec != std::errc{} || r2.ec != std::errc{} || m < 0 || m >= ctx_.n || param < 0)
        fail(ErrorCode::BadDescriptor, "bad node descriptor: " + std::string(desc));
    const int l = ctx_.n - m;
    const std::int64_t range =
        kind == NodeKind::TypeA ? ipow_checked(ctx_.p, l) : ipow_checked(ctx_.p, l - 1);
    if (param >= range)
        fail(ErrorCode::BadDescriptor, "descriptor parameter out of range: " + std::string(desc));
    return id_of(kind, m, param);
}

CocyclicRep nabla_dual(const DeltaTree& tree, int f) {
    const GroupContext& ctx = tree.ctx();
    const DeltaNode& nd = tree.node(f);
    CocyclicRep rep;
    rep.dual_node = f;
    if (nd.kind == NodeKind::Trivial) {
        rep.gen1 = GroupElement{1, 0};
        rep.gen2 = GroupElement{0, 1};
        return rep;
    }
    const std::int64_t tail = ipow_checked(ctx.p, ctx.n - nd.m); // p^{n-m}
    if (nd.kind == NodeKind::TypeA) {
        // <(1, a), (0, p^{n-m})>
        rep.gen1 = reduce(ctx, 1, nd.param);
        rep.gen2 = reduce(ctx, 0, tail);
    } else {
        // <(b p, 1), (p^{n-m}, 0)>
        rep.gen1 = reduce(ctx, nd.param * ctx.p, 1);
        rep.gen2 = reduce(ctx, tail, 0);
    }
    return rep;
}

bool cocyclic_member(const DeltaTree& tree, int f, GroupElement g) {
    const GroupContext& ctx = tree.ctx();
    const DeltaNode& nd = tree.node(f);
    if (nd.kind == NodeKind::Trivial) return true; // dual of the root is G
    const std::int64_t md = ipow_checked(ctx.p, ctx.n - nd.m);
    if (nd.kind == NodeKind::TypeA) {
        std::int64_t v = (g.y - nd.param * g.x) % md;
        return (v % md + md) % md == 0;
    }
    std::int64_t v = (g.x - nd.param * ctx.p * g.y) % md;
    return (v % md + md) % md == 0;
}

std::int64_t cocyclic_order(const DeltaTree& tree, int f) {
    return ipow_checked(tree.ctx().p, 2 * tree.ctx().n - tree.node(f).length);
}

bool cocyclic_contains(const DeltaTree& tree, int k, int f) {
    const int lf = tree.node(f).length;
    const int lk = tree.node(k).length;
    const int li = tree.node(tree.intersect(f, k)).length;
    return lf - li <= tree.ctx().n - lk;
}

int dual_node_from_pair(const DeltaTree& tree, const CocyclicRep& rep) {
    const GroupContext& ctx = tree.ctx();
    const int m = ctx.n - tree.node(rep.dual_node).length;
    const std::int64_t pm = ipow_checked(ctx.p, m);
    const int n1 = tree.node_of(scalar_mul(ctx, pm, rep.gen1));
    const int n2 = tree.node_of(scalar_mul(ctx, pm, rep.gen2));
    return tree.node(n1).length >= tree.node(n2).length ? n1 : n2;
}

int phi_image(const DeltaTree& tree, int f, const DeltaTree& quotient) {
    const GroupContext& ctx = tree.ctx();
    if (ctx.n < 2) fail(ErrorCode::QuotientUndefined, "no quotient below n = 1");
    if (!(quotient.ctx().p == ctx.p && quotient.ctx().n == ctx.n - 1))
        fail(ErrorCode::WrongContext, "quotient tree must be the (p, n-1) tree");
    const GroupElement g = tree.node(f).gen;
    return quotient.node_of(reduce(quotient.ctx(), g.x, g.y));
}

int descend_two(const DeltaTree& tree, int f, const DeltaTree& small) {
    const GroupContext& ctx = tree.ctx();
    if (ctx.n < 3) fail(ErrorCode::QuotientUndefined, "descend_two needs n >= 3");
    if (!(small.ctx().p == ctx.p && small.ctx().n == ctx.n - 2))
        fail(ErrorCode::WrongContext, "small tree must be the (p, n-2) tree");
    const DeltaNode& nd = tree.node(f);
    if (nd.length < 1 || nd.length > ctx.n - 1)
        fail(ErrorCode::InternalInvariant, "descend_two: node not inside pG");
    // generator divisible by p: quotient then divide
    const GroupElement g = nd.gen;
    if (g.x % ctx.p != 0 || g.y % ctx.p != 0)
        fail(ErrorCode::InternalInvariant, "descend_two: generator not divisible by p");
    return small.node_of(reduce(small.ctx(), g.x / ctx.p, g.y / ctx.p));
}

} // namespace srcg
