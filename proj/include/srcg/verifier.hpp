#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "srcg/classifier.hpp"
#include "srcg/node_set.hpp"

namespace srcg {

/// Dense symmetric adjacency over the group elements, bit rows.
class AdjacencyMatrix {
public:
    explicit AdjacencyMatrix(std::int64_t order);

    std::int64_t order() const { return order_; }
    void set_edge(std::int64_t u, std::int64_t v);
    bool edge(std::int64_t u, std::int64_t v) const;
    std::int64_t degree(std::int64_t u) const;
    std::int64_t common_neighbors(std::int64_t u, std::int64_t v) const;

private:
    std::int64_t order_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

/// Vertex set G, g ~ h iff h - g lies in the element union of S.
/// Guarded at 2^16 vertices.
AdjacencyMatrix cayley_adjacency(const DeltaTree& tree, const NodeSet& s);

struct BruteSrgResult {
    bool is_srg = false;
    std::int64_t nu = 0, k = 0, lambda = 0, mu = 0;
    std::int64_t witness_u = -1, witness_v = -1;
};

/// Definition-level check: constant degree, constant common-neighbor
/// count over edges and over non-edges. No character theory involved.
/// Conventions for degenerate graphs: no edges => lambda = 0, no
/// non-edges => mu = 0.
BruteSrgResult brute_srg_check(const AdjacencyMatrix& a);

struct ClosureResult {
    bool closed = false;
    std::int64_t alpha = 0, beta = 0, gamma = 0; // = k, lambda, mu when closed
    std::int64_t witness_element = -1;
};

/// Group-algebra route: convolve the indicator of the element union with
/// itself and test membership in the module spanned by {1, S, G-S-1}.
ClosureResult sring_closure_check(const DeltaTree& tree, const NodeSet& s);

/// Closure of the module spanned by a partition of G \ {e} into
/// orbit-union classes: every pairwise convolution must be constant on
/// each class.
bool sring_partition_check(const DeltaTree& tree, const std::vector<NodeSet>& classes,
                           std::int64_t* witness = nullptr);

/// Exact rational character sum  sum_{h in S} zeta^{g . h}  evaluated by
/// counting dot products and Moebius-summing over exponent divisors;
/// verifies on the way that the count vector is constant on classes of
/// equal gcd with p^n (which makes the sum rational). Independent of the
/// tree character engine.
std::int64_t pairing_sum_exact(const DeltaTree& tree, GroupElement g, const NodeSet& s);

struct SearchEntry {
    std::uint32_t mask = 0; // bit i <-> node id i+1
    std::int64_t k = 0, r = 0, s = 0;
    std::int64_t nu = 0, lambda = 0, mu = 0;
    bool trivial = true;
};

struct SearchCatalog {
    GroupContext ctx;
    std::string descriptor;
    std::vector<SearchEntry> entries; // ascending mask
    std::vector<std::uint32_t> nontrivial_masks() const;
};

/// Every root-free orbit-union subset (guard: at most 24 orbit bits),
/// eigenvalue criterion per subset; every strongly regular hit is
/// recorded and a deterministic sample is re-checked against the
/// adjacency and group-algebra oracles. The parallel kernel partitions
/// the mask range across threads with private accumulators and merges
/// deterministically; the serial variant is the reference.
SearchCatalog exhaustive_orbit_search_serial(const DeltaTree& tree);
SearchCatalog exhaustive_orbit_search(const DeltaTree& tree, int max_threads = 0);

struct SymmetricEntry {
    std::uint32_t class_mask = 0; // over inverse-pair classes
    bool orbit_union = false;
    std::uint32_t node_mask = 0; // valid when orbit_union
    std::int64_t nu = 0, k = 0, lambda = 0, mu = 0;
};

struct SymmetricCatalog {
    GroupContext ctx;
    int class_count = 0;
    std::vector<SymmetricEntry> entries; // ascending class_mask, SRG hits only
};

/// Every symmetric subset of G \ {e} (guard: at most 20 inverse-pair
/// classes), checked by the adjacency oracle alone; confirms
/// computationally that every hit is a union of generator orbits.
SymmetricCatalog exhaustive_symmetric_search_serial(const DeltaTree& tree);
SymmetricCatalog exhaustive_symmetric_search(const DeltaTree& tree, int max_threads = 0);

struct DiffReport {
    std::vector<std::uint32_t> only_in_a;
    std::vector<std::uint32_t> only_in_b;
    bool empty() const { return only_in_a.empty() && only_in_b.empty(); }
};

/// Set difference of non-trivial subset keys.
DiffReport cross_validate(const std::vector<std::uint32_t>& a,
                          const std::vector<std::uint32_t>& b);

/// Worker cap: explicit argument wins, then the SRCG_MAX_THREADS
/// environment variable, then the OpenMP default.
int resolve_thread_count(int requested);

} // namespace srcg
