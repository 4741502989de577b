#include "srcg/characters.hpp"

#include <algorithm>

#include "srcg/errors.hpp"
#include "srcg/numbers.hpp"

namespace srcg {

int nabla_level(const DeltaTree& tree, CharClass k) {
    return tree.node(k).length;
}

std::int64_t char_orbit(const DeltaTree& tree, CharClass k, int f) {
    if (f == 0) return 1; // the orbit of the trivial subgroup is {e}
    const std::int64_t p = tree.ctx().p;
    const int lf = tree.node(f).length;
    const int d = lf - tree.node(tree.intersect(f, k)).length;
    const int lim = tree.ctx().n - tree.node(k).length;
    const std::int64_t scale = ipow_checked(p, lf - 1); // |F| / p
    if (d <= lim) return scale * (p - 1);
    if (d == lim + 1) return -scale;
    return 0;
}

std::int64_t char_orbit_general(const DeltaTree& tree, const CocyclicRep& kernel, int f) {
    const std::int64_t p = tree.ctx().p;
    const int lf = tree.node(f).length;
    // deepest chain member of F whose generator lies in the kernel
    int contained = 0;
    for (int d = 1; d <= lf; ++d) {
        const int cd = tree.ancestor_at(f, d);
        if (!cocyclic_member(tree, kernel.dual_node, tree.node(cd).gen)) break;
        contained = d;
    }
    const std::int64_t order_f = ipow_checked(p, lf);
    const std::int64_t order_kf = ipow_checked(p, contained);
    const std::int64_t frattini = lf == 0 ? 1 : ipow_checked(p, lf - 1);
    if (order_kf % frattini != 0) return 0; // mu of a non-squarefree ratio
    return frattini * mobius(order_f / order_kf) * euler_phi(order_kf / frattini);
}

std::int64_t char_orbit_oracle(const DeltaTree& tree, CharClass k, int f) {
    const std::int64_t p = tree.ctx().p;
    const int lf = tree.node(f).length;
    std::int64_t total = 0;
    for (int d = 0; d <= lf; ++d) {
        const int cd = tree.ancestor_at(f, d);
        bool inside = true; // full elementwise membership of C_d in the kernel
        for (const GroupElement& g : tree.subgroup_elements(cd)) {
            if (!cocyclic_member(tree, k, g)) {
                inside = false;
                break;
            }
        }
        if (!inside) continue;
        total += mobius(ipow_checked(p, lf - d)) * ipow_checked(p, d);
    }
    return total;
}

std::int64_t char_on_set(const DeltaTree& tree, CharClass k, const NodeSet& s) {
    std::int64_t total = 0;
    for (int id : s.ids()) total += char_orbit(tree, k, id);
    return total;
}

CharVector char_table(const DeltaTree& tree, const NodeSet& s) {
    CharVector out;
    out.values.resize(static_cast<size_t>(tree.node_count()));
    for (int k = 0; k < tree.node_count(); ++k) out.values[static_cast<size_t>(k)] = char_on_set(tree, k, s);
    out.principal = out.values[0];
    return out;
}

std::vector<int> omega_set(const DeltaTree& tree, CharClass h) {
    if (tree.node(h).length != 1)
        fail(ErrorCode::InternalInvariant, "omega_set expects a depth-1 class");
    const int n = tree.ctx().n;
    std::vector<int> cone = tree.descendants(h, n - 1);
    std::sort(cone.begin(), cone.end());
    std::vector<int> out;
    for (int id : tree.level(n))
        if (!std::binary_search(cone.begin(), cone.end(), id)) out.push_back(id);
    return out;
}

bool omega_identity_check(const DeltaTree& tree, const NodeSet& s, CharClass h) {
    const std::int64_t lhs = char_on_set(tree, 0, s) - char_on_set(tree, h, s);
    std::int64_t inside = 0;
    for (int id : omega_set(tree, h))
        if (s.test(id)) ++inside;
    return lhs == tree.ctx().modulus * inside;
}

} // namespace srcg
