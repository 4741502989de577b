#pragma once

#include <cstdint>
#include <vector>

#include "srcg/characters.hpp"
#include "srcg/delta_tree.hpp"
#include "srcg/node_set.hpp"
#include "srcg/numbers.hpp"

namespace srcg {

/// Son-count profile (a_1, ..., a_n): a subset S is a-homogeneous when
/// every internal node H has |Sons(H) cap S| = a_{l(H)+1} + [H in S].
/// Ranges: 0 <= a_1 <= p+1, 0 <= a_i <= p-1 for i >= 2.
struct HomVector {
    std::vector<int> a;

    bool operator==(const HomVector& o) const { return a == o.a; }
    std::string str() const;
};

/// Validates the ranges eagerly.
HomVector make_hom_vector(const GroupContext& ctx, std::vector<int> a);

struct BlockDecomposition {
    bool ok = false;
    std::vector<int> fathers; // one id per full block Sons(father)
    int witness_father = -1;  // partially covered block when !ok
};

/// S as a disjoint union of full sibling blocks, or the witness of a
/// partially covered one.
BlockDecomposition blocks_of(const DeltaTree& tree, const NodeSet& s);

/// Symmetric difference is a block set.
bool block_equivalent(const DeltaTree& tree, const NodeSet& a, const NodeSet& b);

struct HomogeneityResult {
    bool ok = false;
    HomVector vec;
    int witness_a = -1; // two internal nodes with inconsistent son counts
    int witness_b = -1;
};

HomogeneityResult homogeneity_vector(const DeltaTree& tree, const NodeSet& s);

enum class BuildChoice { DeterministicFirst, SeededRandom };

/// Realizes a vector by tree descent: pick a_1 sons of the root, then
/// a_{l+1} (+1 for members) sons below each internal node.
NodeSet build_homogeneous(const DeltaTree& tree, const HomVector& vec,
                          BuildChoice choice = BuildChoice::DeterministicFirst,
                          std::uint64_t seed = 0);

/// Exact number of realizations. The per-level membership counts are the
/// same for every realization, so this is a plain product of binomials.
BigUint count_homogeneous(const DeltaTree& tree, const HomVector& vec);

/// A_{l,m}: descendants of a non-member node of length l that land in S
/// at depth m - l. A_{0,m} = a_1 + sum a_i (p^{i-1} + p^{i-2}),
/// A_{l,m} = sum_{i=l+1}^{m} a_i p^{i-l-1}, A_{m,m} = 0; members get +1.
std::int64_t expected_descendant_count(const GroupContext& ctx, int l, int m,
                                       const HomVector& vec);

struct HomogenizeResult {
    bool ok = false;
    NodeSet set;
    HomVector vec;
    int witness_father_a = -1; // two blocks with different residues when !ok
    int witness_father_b = -1;
};

/// The unique homogeneous set block-equivalent to S with the same
/// depth-n character values. Level 1 is copied verbatim; at each level
/// i >= 2 the residue of |S cap B| - [father in result] mod p must be
/// constant across blocks B, and full blocks are removed (residue 0 over
/// a non-member father) or added (residue p-1 under a member father).
/// A non-constant residue is the congruence failure that disqualifies S
/// from being a strongly regular candidate.
HomogenizeResult homogenize(const DeltaTree& tree, const NodeSet& s);

/// Vector of a homogeneous set block-equivalent to the complement of an
/// a-homogeneous set, three-case rule:
///   generic: (p+1-a_1, p-1-a_2, ..., p-1-a_n);
///   a_1 = ... = a_{i-1} = 0:      (0,...,0, p-a_i, p-1-a_{i+1}, ...);
///   a_1 = p+1, a_2..a_{i-1} = p-1: (p+1, p-1,...,p-1, p-2-a_i, p-1-a_{i+1}, ...).
HomVector complement_vector(const GroupContext& ctx, const HomVector& vec);

/// Minimum character value over the classes of depth m.
std::int64_t x_min(const DeltaTree& tree, const NodeSet& s, int m);

} // namespace srcg
