#pragma once

#include "oracle.hpp"
#include "reducer.hpp"

#include <functional>

namespace satred {

inline constexpr const char* kVersion = "0.1.0";

struct GenParams {
    int max_vars = 2;
    int max_clauses = 2;
    int max_width = 2;
    bool exhaustive = false;
    uint64_t seed = 0;
    int sample_count = 0;              // random mode only
    uint64_t space_cap = 10'000'000;   // exhaustive mode instance-count cap
};

// Exhaustive mode enumerates every formula whose clauses are distinct members
// of the clause alphabet (sorted duplicate-free literal sets over distinct
// variables, width in [1, max_width], vars in [1, max_vars]), as subsets of
// size 1..max_clauses in deterministic order. Random mode draws sample_count
// seeded instances without the distinct-clause / distinct-variable canon.
void generate(const GenParams& params, const std::function<void(const CnfFormula&)>& sink);
std::vector<CnfFormula> generate_all(const GenParams& params);
uint64_t exhaustive_count(const GenParams& params);

struct ComparisonRecord {
    std::string dimacs;
    bool oracle_sat = false;
    bool pipeline_sat = false;
    bool twosat_sat = false;   // literal satisfiability of the emitted 2-SAT
    bool onesat_sat = false;
    std::optional<int> early_stage;
    ReduceKind reduce_kind = ReduceKind::Instance;
    bool pipeline_agrees = false;
    bool twosat_agrees = false;
    bool onesat_agrees = false;
    double oracle_ms = 0.0;
    double pipeline_ms = 0.0;
};

ComparisonRecord compare(const CnfFormula& f, int var_limit = 26);
std::string record_to_json(const ComparisonRecord& rec);

class SoundnessViolationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct MiningReport {
    GenParams params;
    // Totals keyed oracle verdict then pipeline verdict (s = Sat, u = Unsat).
    uint64_t ss = 0, su = 0, us = 0, uu = 0;
    uint64_t iff_claim_violations = 0;   // oracle Unsat but emitted 2-SAT is Sat
    uint64_t soundness_violations = 0;   // pipeline Unsat but oracle Sat (fatal)
    struct Counterexample {
        std::string dimacs;
        bool oracle_sat = false;
        bool pipeline_sat = false;
        bool twosat_sat = false;
        std::optional<int> stage;
    };
    std::vector<Counterexample> counterexamples;  // capped; totals stay exact
    std::string version = kVersion;
};

// Folds compare over the generated stream. Throws SoundnessViolationError on
// any pipeline-Unsat/oracle-Sat record: that would falsify the engine itself.
MiningReport mine(const GenParams& params, size_t counterexample_cap = 100);
std::string report_to_json(const MiningReport& report);

struct ExtractResult {
    bool ok = false;
    Assignment model;            // total over f's variables when ok
    std::string contradiction;   // diagnostic when !ok
};

// Self-reducibility loop: bind each variable true, simplify, re-run the
// pipeline; keep the binding on Sat, otherwise flip it. The final total
// assignment is model-checked; a failing check is a completeness
// counterexample, reported rather than returned silently.
ExtractResult extract_model(const CnfFormula& f);

}  // namespace satred
