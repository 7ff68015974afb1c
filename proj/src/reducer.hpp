#pragma once

#include "compat.hpp"

#include <string>

namespace satred {

// h /\ w over the indicator variables plus one fresh variable per element
// of the box matrix S. Fresh variables are numbered after the indicators.
struct TwoSatInstance {
    int num_indicators = 0;
    std::vector<IndicatorId> indicator_names;        // flat id 1..T -> (clause, pos)
    std::vector<std::pair<int, int>> nand_clauses;   // (a, b) stands for (-a \/ -b)
    struct UnitMapping {
        int mu = 0, nu = 0;   // box coordinates
        int row = 0, col = 0; // cell within the box
        bool value = false;   // polarity of the unit
    };
    std::vector<UnitMapping> units;  // unit i is over variable num_indicators + i + 1

    int num_vars() const { return num_indicators + static_cast<int>(units.size()); }
};

enum class ReduceKind {
    Instance,        // ordinary h /\ w emission
    SingularFalse,   // all-false pattern within the first m steps
    SingularOneSat,  // no cross-clause complements (n = 0)
};

struct TwoSatReduction {
    ReduceKind kind = ReduceKind::Instance;
    std::optional<TwoSatInstance> instance;
};

TwoSatReduction reduce_to_2sat(const CnfFormula& f);
TwoSatReduction reduce_to_2sat(const ConstraintSystem& sys, const PipelineResult& pipeline);

std::string twosat_to_dimacs(const TwoSatReduction& red);

struct OneSatInstance {
    bool constant_false = false;
    struct Unit {
        int row = 0, col = 0;  // coordinate in R
        bool value = false;
    };
    std::vector<Unit> units;  // unit i is over fresh variable i + 1

    bool satisfiable() const { return !constant_false; }
};

OneSatInstance reduce_to_1sat(const CnfFormula& f);
OneSatInstance reduce_to_1sat(const PipelineResult& pipeline);

std::string onesat_to_dimacs(const OneSatInstance& inst);

struct TwoSatResult {
    bool sat = false;
    std::vector<bool> model;  // 1-based in spirit: model[v-1] is variable v
};

// Implication-graph strongly-connected-components decision. Clauses are
// signed DIMACS-style literals with 1 or 2 entries each.
TwoSatResult solve_2sat(int num_vars, const std::vector<std::vector<int>>& clauses);
TwoSatResult solve_2sat(const TwoSatInstance& inst);

}  // namespace satred
