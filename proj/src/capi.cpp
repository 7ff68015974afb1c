#include "satred/satred.h"

#include <cstdlib>
#include <cstring>
#include <memory>

#include "harness.hpp"

using namespace satred;

extern "C" {

struct satred_formula {
    CnfFormula rep;
};

static char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

static void set_error(char** error, const std::string& msg) {
    if (error)
        *error = dup_string(msg);
}

const char* satred_version(void) { return SATRED_VERSION_STRING; }

void satred_string_free(char* s) { std::free(s); }

satred_status satred_formula_parse(const char* dimacs, satred_formula** out, char** error) {
    if (!dimacs || !out)
        return SATRED_ERR_INVALID;
    *out = nullptr;
    try {
        auto f = std::make_unique<satred_formula>();
        f->rep = parse_dimacs(dimacs);
        *out = f.release();
        return SATRED_OK;
    } catch (const ParseError& e) {
        set_error(error, e.what());
        return SATRED_ERR_PARSE;
    } catch (const std::exception& e) {
        set_error(error, e.what());
        return SATRED_ERR_INTERNAL;
    }
}

void satred_formula_free(satred_formula* f) { delete f; }

satred_status satred_formula_serialize(const satred_formula* f, char** out) {
    if (!f || !out)
        return SATRED_ERR_INVALID;
    *out = dup_string(serialize_dimacs(f->rep));
    return *out ? SATRED_OK : SATRED_ERR_INTERNAL;
}

int satred_formula_num_vars(const satred_formula* f) { return f ? f->rep.num_vars : -1; }

int satred_formula_num_clauses(const satred_formula* f) {
    return f ? static_cast<int>(f->rep.clauses.size()) : -1;
}

satred_status satred_solve(const satred_formula* f, satred_verdict* out) {
    if (!f || !out)
        return SATRED_ERR_INVALID;
    try {
        PipelineResult pr = run_simplified(build_system(f->rep));
        *out = pr.verdict.outcome == Verdict::Outcome::Sat ? SATRED_SAT : SATRED_UNSAT;
        return SATRED_OK;
    } catch (const std::exception&) {
        return SATRED_ERR_INTERNAL;
    }
}

satred_status satred_oracle(const satred_formula* f, int var_limit, satred_verdict* out,
                            char** error) {
    if (!f || !out)
        return SATRED_ERR_INVALID;
    try {
        OracleResult res = brute_force_sat(f->rep, var_limit > 0 ? var_limit : 26);
        *out = res.sat ? SATRED_SAT : SATRED_UNSAT;
        return SATRED_OK;
    } catch (const LimitError& e) {
        set_error(error, e.what());
        return SATRED_ERR_LIMIT;
    } catch (const std::exception& e) {
        set_error(error, e.what());
        return SATRED_ERR_INTERNAL;
    }
}

satred_status satred_reduce_2sat(const satred_formula* f, char** out_dimacs) {
    if (!f || !out_dimacs)
        return SATRED_ERR_INVALID;
    try {
        *out_dimacs = dup_string(twosat_to_dimacs(reduce_to_2sat(f->rep)));
        return *out_dimacs ? SATRED_OK : SATRED_ERR_INTERNAL;
    } catch (const std::exception&) {
        return SATRED_ERR_INTERNAL;
    }
}

satred_status satred_reduce_1sat(const satred_formula* f, char** out_dimacs) {
    if (!f || !out_dimacs)
        return SATRED_ERR_INVALID;
    try {
        *out_dimacs = dup_string(onesat_to_dimacs(reduce_to_1sat(f->rep)));
        return *out_dimacs ? SATRED_OK : SATRED_ERR_INTERNAL;
    } catch (const std::exception&) {
        return SATRED_ERR_INTERNAL;
    }
}

satred_status satred_verify(const satred_formula* f, char** out_json, char** error) {
    if (!f || !out_json)
        return SATRED_ERR_INVALID;
    try {
        *out_json = dup_string(record_to_json(compare(f->rep)));
        return *out_json ? SATRED_OK : SATRED_ERR_INTERNAL;
    } catch (const LimitError& e) {
        set_error(error, e.what());
        return SATRED_ERR_LIMIT;
    } catch (const std::exception& e) {
        set_error(error, e.what());
        return SATRED_ERR_INTERNAL;
    }
}

satred_status satred_mine(int max_vars, int max_clauses, int max_width, int exhaustive,
                          uint64_t seed, int sample_count, char** out_json, char** error) {
    if (!out_json)
        return SATRED_ERR_INVALID;
    try {
        GenParams params;
        params.max_vars = max_vars;
        params.max_clauses = max_clauses;
        params.max_width = max_width;
        params.exhaustive = exhaustive != 0;
        params.seed = seed;
        params.sample_count = sample_count;
        *out_json = dup_string(report_to_json(mine(params)));
        return *out_json ? SATRED_OK : SATRED_ERR_INTERNAL;
    } catch (const SoundnessViolationError& e) {
        set_error(error, e.what());
        return SATRED_ERR_SOUNDNESS;
    } catch (const std::invalid_argument& e) {
        set_error(error, e.what());
        return SATRED_ERR_INVALID;
    } catch (const std::exception& e) {
        set_error(error, e.what());
        return SATRED_ERR_INTERNAL;
    }
}

}  // extern "C"
