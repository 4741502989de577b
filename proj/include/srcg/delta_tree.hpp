#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "srcg/group.hpp"

namespace srcg {

enum class NodeKind : std::uint8_t { Trivial, TypeA, TypeB };

/// One cyclic subgroup of Z_{p^n} x Z_{p^n} in normal form:
///   TypeA(m, a): <(p^m, a p^m)>, 0 <= a < p^{n-m}
///   TypeB(m, b): <(b p^{m+1}, p^m)>, 0 <= b < p^{n-m-1}
/// both of order p^{n-m}; Trivial is the root.
struct DeltaNode {
    int id = 0;
    NodeKind kind = NodeKind::Trivial;
    int m = 0;
    std::int64_t param = 0; // a or b
    GroupElement gen{};     // canonical generator
    int length = 0;         // l(H): |H| = p^length
    int father = 0;         // Father(H) = pH; root points at itself
    std::vector<int> sons;  // ascending ids
};

/// The full forest of cyclic subgroups ordered by inclusion. Immutable
/// after construction; ids are assigned level by level, TypeA before
/// TypeB, parameters ascending, so catalogs are reproducible.
class DeltaTree {
public:
    explicit DeltaTree(GroupContext ctx);

    const GroupContext& ctx() const { return ctx_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    const DeltaNode& node(int id) const { return nodes_[static_cast<size_t>(id)]; }
    const std::vector<int>& level(int l) const { return levels_[static_cast<size_t>(l)]; }

    /// Canonical node of the subgroup generated by g (root for g = 0).
    /// Total over G; computed arithmetically, no stored per-element map.
    int node_of(GroupElement g) const;

    bool is_ancestor(int anc, int id) const;
    int ancestor_at(int id, int depth) const; // the chain member of length `depth`

    /// F `dist` levels further down, as ids.
    std::vector<int> descendants(int id, int dist) const;

    /// Intersection of two cyclic subgroups = deepest common ancestor
    /// (subgroups of a cyclic p-group form a chain).
    int intersect(int f, int k) const;

    std::int64_t subgroup_order(int id) const;
    std::int64_t orbit_size(int id) const; // |O_H| = phi(|H|)

    /// All generators of the subgroup (the orbit O_H).
    std::vector<GroupElement> orbit(int id) const;
    std::vector<GroupElement> subgroup_elements(int id) const;

    /// "T", "A:m,a" or "B:m,b".
    std::string descriptor(int id) const;
    int node_from_descriptor(std::string_view desc) const;

private:
    GroupContext ctx_;
    std::vector<DeltaNode> nodes_;
    std::vector<std::vector<int>> levels_;
    std::vector<int> level_offset_;

    int id_of(NodeKind kind, int m, std::int64_t param) const;
};

/// A cocyclic subgroup H (quotient is cyclic), represented by the cyclic
/// node it biject to (H^Delta = p^m H) plus an explicit generating pair.
struct CocyclicRep {
    int dual_node = 0;   // node id of H^Delta
    GroupElement gen1{}; // H = <gen1, gen2>
    GroupElement gen2{};
};

/// The antitone bijection node -> cocyclic subgroup: F |-> F^nabla with
/// |F^nabla| = p^{2n - l(F)}; root maps to G itself.
CocyclicRep nabla_dual(const DeltaTree& tree, int f);

/// Coordinate membership test of g in F^nabla:
///   TypeA(m,a): y = a x (mod p^{n-m});  TypeB(m,b): x = b p y (mod p^{n-m}).
bool cocyclic_member(const DeltaTree& tree, int f, GroupElement g);

std::int64_t cocyclic_order(const DeltaTree& tree, int f);

/// Containment F <= K^nabla via chain lengths only:
///   l(F) - l(F cap K) <= n - l(K).
bool cocyclic_contains(const DeltaTree& tree, int k, int f);

/// Recovers the dual node from a generating pair: multiply both
/// generators by p^m and take the longer of the two cyclic images.
int dual_node_from_pair(const DeltaTree& tree, const CocyclicRep& rep);

/// Image of F under the canonical map onto Z_{p^{n-1}} x Z_{p^{n-1}}
/// (reduce a generator); quotient must be the (p, n-1) tree.
int phi_image(const DeltaTree& tree, int f, const DeltaTree& quotient);

/// Image of F (length >= 1, generator divisible by p) in the (p, n-2)
/// tree under quotient-then-divide-by-p; used by the classifier to
/// re-root quotient subsets inside the image of pG.
int descend_two(const DeltaTree& tree, int f, const DeltaTree& small);

} // namespace srcg
