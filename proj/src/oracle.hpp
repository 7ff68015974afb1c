#pragma once

#include "encoder.hpp"

#include <optional>

namespace satred {

class LimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleResult {
    bool sat = false;
    std::optional<Assignment> model;       // present iff sat
    std::optional<uint64_t> model_count;   // present iff counting was requested
    double elapsed_seconds = 0.0;
};

// Exhaustive enumeration over all 2^num_vars assignments. Early exit on the
// first model unless counting is requested.
OracleResult brute_force_sat(const CnfFormula& f, int var_limit = 26,
                             bool count_models = false);

// Exhaustive enumeration over indicator assignments of the system; Sat iff
// some assignment satisfies every exactly-one and every NAND constraint.
OracleResult brute_force_system(const ConstraintSystem& sys, int var_limit = 26);

}  // namespace satred
