#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "srcg/delta_tree.hpp"

namespace srcg {

/// Subset of tree node ids with the root always excluded; the standard
/// currency for connection sets (union of generator orbits of members).
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(int node_count);

    static NodeSet from_ids(int node_count, std::initializer_list<int> ids);
    static NodeSet from_ids(int node_count, const std::vector<int>& ids);
    /// bit i of mask <-> node id i+1
    static NodeSet from_mask(int node_count, std::uint64_t mask);

    int universe() const { return node_count_; }
    void set(int id);
    void reset(int id);
    bool test(int id) const;

    int count() const;
    bool empty() const;

    NodeSet operator|(const NodeSet& o) const;
    NodeSet operator&(const NodeSet& o) const;
    NodeSet operator^(const NodeSet& o) const;
    NodeSet minus(const NodeSet& o) const;

    bool operator==(const NodeSet& o) const { return words_ == o.words_; }
    bool operator!=(const NodeSet& o) const { return !(*this == o); }
    bool operator<(const NodeSet& o) const; // canonical subset key order
    bool subset_of(const NodeSet& o) const;

    std::vector<int> ids() const;
    std::uint64_t to_mask() const; // universe must fit 65 ids

private:
    int node_count_ = 0;
    std::vector<std::uint64_t> words_;

    void check_id(int id) const;
};

/// All non-root nodes not in s.
NodeSet complement_subset(const DeltaTree& tree, const NodeSet& s);

/// Number of group elements covered: sum of orbit sizes.
std::int64_t element_count(const DeltaTree& tree, const NodeSet& s);

/// The element union as dense vertex indices, sorted.
std::vector<std::int64_t> element_indices(const DeltaTree& tree, const NodeSet& s);

} // namespace srcg
