#include "oracle.hpp"

#include <chrono>

namespace satred {

namespace {

Assignment from_mask(uint64_t mask, int num_vars) {
    Assignment a(num_vars);
    for (int v = 1; v <= num_vars; ++v)
        a.bind(v, (mask >> (v - 1)) & 1u);
    return a;
}

}  // namespace

OracleResult brute_force_sat(const CnfFormula& f, int var_limit, bool count_models) {
    if (f.num_vars > var_limit)
        throw LimitError("brute_force_sat: " + std::to_string(f.num_vars) +
                         " variables exceed limit " + std::to_string(var_limit));
    auto start = std::chrono::steady_clock::now();
    OracleResult res;
    uint64_t count = 0;
    const uint64_t space = uint64_t{1} << f.num_vars;
    for (uint64_t mask = 0; mask < space; ++mask) {
        bool ok = true;
        for (const auto& clause : f.clauses) {
            bool sat_clause = false;
            for (const auto& lit : clause) {
                bool value = (mask >> (lit.var - 1)) & 1u;
                if (value != lit.negated) {
                    sat_clause = true;
                    break;
                }
            }
            if (!sat_clause) {
                ok = false;
                break;
            }
        }
        if (ok) {
            if (!res.sat) {
                res.sat = true;
                res.model = from_mask(mask, f.num_vars);
            }
            ++count;
            if (!count_models)
                break;
        }
    }
    if (count_models)
        res.model_count = count;
    res.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

OracleResult brute_force_system(const ConstraintSystem& sys, int var_limit) {
    if (sys.indicator_count > var_limit)
        throw LimitError("brute_force_system: " + std::to_string(sys.indicator_count) +
                         " indicators exceed limit " + std::to_string(var_limit));
    auto start = std::chrono::steady_clock::now();
    OracleResult res;
    const uint64_t space = uint64_t{1} << sys.indicator_count;
    for (uint64_t mask = 0; mask < space; ++mask) {
        bool ok = true;
        for (const auto& c : sys.constraints) {
            if (c.kind == Constraint::Kind::ExactlyOne) {
                int trues = 0;
                for (const auto& v : c.vars)
                    trues += (mask >> (sys.flat(v) - 1)) & 1u;
                if (trues != 1) {
                    ok = false;
                    break;
                }
            } else {
                bool a = (mask >> (sys.flat(c.vars[0]) - 1)) & 1u;
                bool b = (mask >> (sys.flat(c.vars[1]) - 1)) & 1u;
                if (a && b) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            res.sat = true;
            res.model = from_mask(mask, sys.indicator_count);
            break;
        }
    }
    res.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

}  // namespace satred
