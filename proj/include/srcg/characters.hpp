#pragma once

#include <cstdint>
#include <vector>

#include "srcg/delta_tree.hpp"
#include "srcg/node_set.hpp"

namespace srcg {

/// Characters with a common kernel agree on every orbit sum, so a class
/// is identified by its kernel, a cocyclic subgroup, which we index by
/// its cyclic dual node. Class 0 (root) is the principal class.
using CharClass = int;

/// Depth of the class in the cocyclic tree = length of the dual node.
int nabla_level(const DeltaTree& tree, CharClass k);

/// chi_K(O_F), fast path. Writing d = l(F) - l(F cap K) and
/// lim = n - l(K):
///   |F|(p-1)/p  if d <= lim,
///   -|F|/p      if d == lim + 1,
///   0           otherwise;
/// and 1 for the root orbit {e}.
std::int64_t char_orbit(const DeltaTree& tree, CharClass k, int f);

/// chi(O_F) for a kernel given by an explicit cocyclic generating pair:
///   |Phi(F)| * mu(|F| / |F cap ker|) * phi(|F cap ker| / |Phi(F)|)
/// with Phi(F) the Frattini subgroup (index p for a nontrivial cyclic
/// p-group). The kernel intersection is found by generator membership,
/// independent of the chain-length route above.
std::int64_t char_orbit_general(const DeltaTree& tree, const CocyclicRep& kernel, int f);

/// Moebius-inversion oracle over subgroup sums:
///   chi(O_F) = sum_{d | |F|} mu(|F|/d) * chi(C_d),
/// where chi(C_d) is |C_d| or 0 by elementwise membership of the chain
/// subgroup C_d <= F in the kernel. Shares no logic with char_orbit.
std::int64_t char_orbit_oracle(const DeltaTree& tree, CharClass k, int f);

std::int64_t char_on_set(const DeltaTree& tree, CharClass k, const NodeSet& s);

struct CharVector {
    std::vector<std::int64_t> values; // by class node id; values[0] == principal
    std::int64_t principal = 0;
};

CharVector char_table(const DeltaTree& tree, const NodeSet& s);

/// Level-n nodes outside the descendant cone of the dual of a depth-1
/// class H; the identity chi_G[S] - chi_H[S] = p^n |Omega_H cap S| holds
/// for every subset S.
std::vector<int> omega_set(const DeltaTree& tree, CharClass h);
bool omega_identity_check(const DeltaTree& tree, const NodeSet& s, CharClass h);

} // namespace srcg
