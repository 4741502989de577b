#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "srcg/homogeneous.hpp"

namespace srcg {

enum class SquareType { Latin, NegativeLatin, NotApplicable };

struct SrgParams {
    std::int64_t nu = 0, k = 0, lambda = 0, mu = 0;
    std::int64_t r = 0, s = 0;
    SquareType square_type = SquareType::NotApplicable;

    bool operator==(const SrgParams& o) const {
        return nu == o.nu && k == o.k && lambda == o.lambda && mu == o.mu;
    }
    std::array<std::int64_t, 4> key() const { return {nu, k, lambda, mu}; }
};

struct SrcgTestResult {
    bool is_srcg = false;
    std::int64_t k = 0, r = 0, s = 0;      // r >= s; r == s for empty/complete
    std::array<int, 3> witnesses{-1, -1, -1}; // classes realizing three values
};

/// Rational eigenvalue criterion: S (root-free, automatically symmetric)
/// defines a strongly regular graph iff the non-principal character
/// values take at most two distinct values {r, s}.
SrcgTestResult srcg_test(const DeltaTree& tree, const NodeSet& s);

/// 0 or -1 among the eigenvalues marks a disjoint-clique graph or its
/// complement (including the empty/complete degenerate pair).
bool trivial_eigs(std::int64_t k, std::int64_t r, std::int64_t s);

/// nu = p^{2n}, mu = k + rs, lambda = mu + r + s; Latin type when
/// k = -s(p^n - 1), negative Latin when k = (s + p^n)(p^n + 1).
/// Degenerate empty/complete graphs are special-cased. With
/// require_nontrivial, failing both valency identities is an error.
SrgParams params_from_eigs(const GroupContext& ctx, std::int64_t k, std::int64_t r,
                           std::int64_t s, bool require_nontrivial = false);

enum class Verdict { NotSrcg, TrivialSrcg, NonTrivial };

enum class FamilyTag {
    None,
    HomogeneousConstant, // (a_1, a_2, ..., a_2)
    RecursiveCase,       // (a_1, 0, ..., 0, a_n) base plus lifted quotient solution
    ComplementOf,
    Gamma2,
    Gamma2c,
    Gamma3,
    Gamma3c,
    UnclassifiedP2, // certified p = 2 graph outside the catalogued families
};

struct ClassificationReport {
    Verdict verdict = Verdict::NotSrcg;
    FamilyTag tag = FamilyTag::None;
    int fam_a1 = 0, fam_a2 = 0; // (a_1, a_2) resp. (a_1, a_n)
    std::unique_ptr<ClassificationReport> inner; // RecursiveCase / ComplementOf
    std::optional<SrgParams> params;             // set for any SRCG verdict
    std::optional<HomVector> vec;                // set when S is homogeneous
    std::vector<int> witnesses;                  // offending classes when NotSrcg

    ClassificationReport() = default;
    ClassificationReport(const ClassificationReport& o);
    ClassificationReport& operator=(const ClassificationReport& o);
    ClassificationReport(ClassificationReport&&) = default;
    ClassificationReport& operator=(ClassificationReport&&) = default;
};

std::string family_string(const ClassificationReport& report);

/// Full decision procedure: eigenvalue test, constant-tail homogeneous
/// family, the quotient recursion for p > 2 and n >= 3, complements,
/// and the explicit p = 2 families; p = 2 survivors outside those are
/// reported UnclassifiedP2 (still certified strongly regular).
ClassificationReport classify(const DeltaTree& tree, const NodeSet& s);

struct CatalogSummary {
    std::int64_t total = 0;
    std::map<std::string, std::int64_t> per_family;
    std::set<std::array<std::int64_t, 4>> param_sets;
    bool truncated = false;
};

using CatalogSink = std::function<void(const NodeSet&, const ClassificationReport&)>;

/// Streams every non-trivial connection set the classification predicts:
/// constant-tail vectors and all realizations, the recursive family for
/// p > 2 and n >= 3 with its complements, and the p = 2 specials.
/// Deduplicated, deterministic order. Without a limit the realization
/// count is capped; exceeding it raises ContextTooLarge (counts are
/// still available through count_homogeneous).
CatalogSummary enumerate_catalog(const DeltaTree& tree, const CatalogSink& emit,
                                 std::optional<std::int64_t> limit = std::nullopt);

/// Class of the character x |-> zeta^{g . x} attached to the canonical
/// generator g of F (the pairing lambda((g1,g2),(h1,h2)) = zeta^{g1 h1 + g2 h2}).
CharClass pairing_class(const DeltaTree& tree, int f);

/// Dual connection set: g is kept iff its pairing character sums to r
/// over S. Requires a non-trivial input; the result is an orbit union by
/// construction of the pairing classes.
NodeSet dual_set(const DeltaTree& tree, const NodeSet& s);

struct GammaFamily {
    std::vector<NodeSet> members;     // Gamma_2 at (2,2), Gamma_3 at (2,3)
    std::vector<NodeSet> complements; // their complements
};

/// (2,2): each (2,0)-homogeneous set plus the unique disjoint top-level
/// block; (2,3): each (3,0,0)-homogeneous set plus all disjoint
/// top-level blocks. Any other context is an error.
GammaFamily gamma_family(const DeltaTree& tree);

/// ((p+1)/2, (p-1)/2, ..., (p-1)/2); realizations carry Paley parameters
/// (nu, (nu-1)/2, (nu-5)/4, (nu-1)/4). p must be odd.
HomVector paley_vector(const GroupContext& ctx);

} // namespace srcg
