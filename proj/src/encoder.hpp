#pragma once

#include "formula.hpp"

#include <cstdint>
#include <variant>

namespace satred {

// Indicator xi(i,j): "literal j of clause i is the pick".
struct IndicatorId {
    int clause = 0;  // 1-based clause index
    int pos = 0;     // 1-based position within the clause

    bool operator==(const IndicatorId&) const = default;
    auto operator<=>(const IndicatorId&) const = default;
};

// A forbidden pick pair: the two referenced literals are complementary.
struct ExclusionPair {
    IndicatorId first;   // first.clause < second.clause
    IndicatorId second;

    bool operator==(const ExclusionPair&) const = default;
};

struct Constraint {
    enum class Kind { ExactlyOne, Nand };
    Kind kind;
    std::vector<IndicatorId> vars;
};

// Ordered system: m exactly-one constraints (one per clause) followed by
// the exclusion (NAND) constraints.
struct ConstraintSystem {
    int num_clauses = 0;             // m
    std::vector<int> clause_sizes;   // n_i
    int indicator_count = 0;         // sum n_i
    int exclusion_count = 0;         // number of NAND constraints
    std::vector<Constraint> constraints;
    std::vector<int> flat_offset;    // clause i (1-based) -> flat base index

    // Dense 1-based numbering of indicators in (clause, position) order.
    int flat(IndicatorId id) const {
        return flat_offset[static_cast<size_t>(id.clause) - 1] + id.pos;
    }
    int total() const { return static_cast<int>(constraints.size()); }
};

struct SizeReport {
    int m = 0;
    int indicator_count = 0;
    int n = 0;                 // exclusion clause count, sum |B_ij|
    int t1 = 0;                // largest clause size
    int t2 = 0;                // second value in the sorted size row (0 when m < 2)
    uint64_t p = 0;            // DNF term count, saturating
    bool p_saturated = false;
    uint64_t e = 0;            // 9 * C(n,2)
};

// All cross-clause complementary pick pairs, lexicographic by (i, j, mu, nu).
std::vector<ExclusionPair> complementary_pairs(const CnfFormula& f);

ConstraintSystem build_system(const CnfFormula& f);

SizeReport size_report(const CnfFormula& f);

struct IndicatorConflict {
    IndicatorId first;
    IndicatorId second;
    int var = 0;
};

// Turns one pick per clause into the partial assignment that makes every
// picked literal true, or reports the first complementary pick pair.
std::variant<Assignment, IndicatorConflict> indicators_to_assignment(
    const std::vector<IndicatorId>& chosen, const CnfFormula& f);

// Debug dump, one line per constraint.
std::string dump_system(const ConstraintSystem& sys);

}  // namespace satred
