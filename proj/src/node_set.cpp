#include "srcg/node_set.hpp"

#include <algorithm>
#include <bit>

#include "srcg/errors.hpp"

namespace srcg {

NodeSet::NodeSet(int node_count)
    : node_count_(node_count),
      words_(static_cast<size_t>((node_count + 63) / 64), 0) {}

NodeSet NodeSet::from_ids(int node_count, std::initializer_list<int> ids) {
    NodeSet s(node_count);
    for (int id : ids) s.set(id);
    return s;
}

NodeSet NodeSet::from_ids(int node_count, const std::vector<int>& ids) {
    NodeSet s(node_count);
    for (int id : ids) s.set(id);
    return s;
}

NodeSet NodeSet::from_mask(int node_count, std::uint64_t mask) {
    NodeSet s(node_count);
    while (mask) {
        int bit = std::countr_zero(mask);
        s.set(bit + 1);
        mask &= mask - 1;
    }
    return s;
}

void NodeSet::check_id(int id) const {
    if (id <= 0 || id >= node_count_)
        fail(ErrorCode::InternalInvariant,
             "node id " + std::to_string(id) + " not a valid subset member");
}

void NodeSet::set(int id) {
    check_id(id);
    words_[static_cast<size_t>(id) / 64] |= (std::uint64_t{1} << (id % 64));
}

void NodeSet::reset(int id) {
    check_id(id);
    words_[static_cast<size_t>(id) / 64] &= ~(std::uint64_t{1} << (id % 64));
}

bool NodeSet::test(int id) const {
    if (id < 0 || id >= node_count_) return false;
    return (words_[static_cast<size_t>(id) / 64] >> (id % 64)) & 1u;
}

int NodeSet::count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool NodeSet::empty() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

NodeSet NodeSet::operator|(const NodeSet& o) const {
    NodeSet r = *this;
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
    return r;
}

NodeSet NodeSet::operator&(const NodeSet& o) const {
    NodeSet r = *this;
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
}

NodeSet NodeSet::operator^(const NodeSet& o) const {
    NodeSet r = *this;
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] ^= o.words_[i];
    return r;
}

NodeSet NodeSet::minus(const NodeSet& o) const {
    NodeSet r = *this;
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
}

bool NodeSet::operator<(const NodeSet& o) const {
    // compare as reversed-word integers: ascending subset key
    for (size_t i = words_.size(); i-- > 0;) {
        if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
    }
    return false;
}

bool NodeSet::subset_of(const NodeSet& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

std::vector<int> NodeSet::ids() const {
    std::vector<int> out;
    for (size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w) {
            out.push_back(static_cast<int>(i * 64) + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

std::uint64_t NodeSet::to_mask() const {
    if (node_count_ > 65)
        fail(ErrorCode::InternalInvariant, "subset too wide for a 64-bit mask");
    std::uint64_t mask = 0;
    for (int id : ids()) mask |= std::uint64_t{1} << (id - 1);
    return mask;
}

NodeSet complement_subset(const DeltaTree& tree, const NodeSet& s) {
    NodeSet r(tree.node_count());
    for (int id = 1; id < tree.node_count(); ++id)
        if (!s.test(id)) r.set(id);
    return r;
}

std::int64_t element_count(const DeltaTree& tree, const NodeSet& s) {
    std::int64_t total = 0;
    for (int id : s.ids()) total += tree.orbit_size(id);
    return total;
}

std::vector<std::int64_t> element_indices(const DeltaTree& tree, const NodeSet& s) {
    std::vector<std::int64_t> out;
    for (int id : s.ids())
        for (const GroupElement& g : tree.orbit(id))
            out.push_back(element_index(tree.ctx(), g));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace srcg
