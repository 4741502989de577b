#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "srcg/classifier.hpp"
#include "srcg/verifier.hpp"

namespace srcg {

/// One catalog line: space-separated key=value fields, "-" for absent
/// values, subset as ;-joined canonical node descriptors.
struct CatalogRecord {
    std::int64_t p = 0;
    int n = 0;
    std::vector<std::string> subset;      // sorted canonical descriptors
    std::optional<std::vector<int>> vec;  // homogeneity vector when homogeneous
    std::string family;
    bool has_params = false;
    std::int64_t nu = 0, k = 0, lambda = 0, mu = 0, r = 0, s = 0;
    int trivial = -1; // -1 unknown, else 0/1

    bool operator==(const CatalogRecord& o) const;
};

CatalogRecord make_record(const DeltaTree& tree, const NodeSet& s,
                          const ClassificationReport& report);

std::string serialize_record(const CatalogRecord& rec);
CatalogRecord parse_record(std::string_view line);

NodeSet subset_from_record(const DeltaTree& tree, const CatalogRecord& rec);

/// Subset files: one canonical descriptor per line, '#' comments.
NodeSet read_subset(const DeltaTree& tree, std::istream& in);
void write_subset(const DeltaTree& tree, const NodeSet& s, std::ostream& out);

/// graph6, bit-exact: N(n) header (n+63, or '~' and three sextets for
/// n > 62), then the upper triangle column-packed six bits per byte.
std::string to_graph6(const AdjacencyMatrix& a);

/// "u v" per line, 0-indexed, u < v.
std::string to_edge_list(const AdjacencyMatrix& a);

} // namespace srcg
