#include "harness.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "json.hpp"

namespace satred {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<Clause> clause_alphabet(int max_vars, int max_width) {
    std::vector<Clause> alphabet;
    for (int w = 1; w <= std::min(max_width, max_vars); ++w) {
        // variable subsets of size w, lexicographic
        std::vector<int> vars(static_cast<size_t>(w));
        for (int i = 0; i < w; ++i)
            vars[static_cast<size_t>(i)] = i + 1;
        while (true) {
            for (uint32_t signs = 0; signs < (1u << w); ++signs) {
                Clause clause;
                for (int i = 0; i < w; ++i)
                    clause.push_back({vars[static_cast<size_t>(i)], ((signs >> i) & 1u) != 0});
                alphabet.push_back(std::move(clause));
            }
            int pos = w - 1;
            while (pos >= 0 && vars[static_cast<size_t>(pos)] == max_vars - (w - 1 - pos))
                --pos;
            if (pos < 0)
                break;
            ++vars[static_cast<size_t>(pos)];
            for (int i = pos + 1; i < w; ++i)
                vars[static_cast<size_t>(i)] = vars[static_cast<size_t>(i - 1)] + 1;
        }
    }
    return alphabet;
}

uint64_t binomial_saturating(uint64_t n, uint64_t k) {
    if (k > n)
        return 0;
    uint64_t r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        if (r > UINT64_MAX / (n - k + i))
            return UINT64_MAX;
        r = r * (n - k + i) / i;
    }
    return r;
}

CnfFormula from_clauses(std::vector<Clause> clauses) {
    CnfFormula f;
    f.clauses = std::move(clauses);
    for (const auto& clause : f.clauses)
        for (const auto& lit : clause)
            f.num_vars = std::max(f.num_vars, lit.var);
    return f;
}

const char* verdict_str(bool sat) { return sat ? "sat" : "unsat"; }

ordered_json params_json(const GenParams& p) {
    return ordered_json{{"vars", p.max_vars},
                        {"clauses", p.max_clauses},
                        {"width", p.max_width},
                        {"mode", p.exhaustive ? "exhaustive" : "random"},
                        {"seed", p.seed},
                        {"count", p.exhaustive ? 0 : p.sample_count}};
}

}  // namespace

uint64_t exhaustive_count(const GenParams& params) {
    uint64_t a = clause_alphabet(params.max_vars, params.max_width).size();
    uint64_t total = 0;
    for (int k = 1; k <= params.max_clauses; ++k) {
        uint64_t c = binomial_saturating(a, static_cast<uint64_t>(k));
        if (c == UINT64_MAX || total > UINT64_MAX - c)
            return UINT64_MAX;
        total += c;
    }
    return total;
}

void generate(const GenParams& params, const std::function<void(const CnfFormula&)>& sink) {
    if (params.max_vars < 1 || params.max_clauses < 1 || params.max_width < 1)
        throw std::invalid_argument("generate: all bounds must be >= 1");

    if (params.exhaustive) {
        if (exhaustive_count(params) > params.space_cap)
            throw std::invalid_argument("generate: exhaustive space exceeds configured cap");
        auto alphabet = clause_alphabet(params.max_vars, params.max_width);
        const int a = static_cast<int>(alphabet.size());
        for (int k = 1; k <= std::min(params.max_clauses, a); ++k) {
            std::vector<int> pick(static_cast<size_t>(k));
            for (int i = 0; i < k; ++i)
                pick[static_cast<size_t>(i)] = i;
            while (true) {
                std::vector<Clause> clauses;
                for (int idx : pick)
                    clauses.push_back(alphabet[static_cast<size_t>(idx)]);
                sink(from_clauses(std::move(clauses)));

                int pos = k - 1;
                while (pos >= 0 && pick[static_cast<size_t>(pos)] == a - (k - pos))
                    --pos;
                if (pos < 0)
                    break;
                ++pick[static_cast<size_t>(pos)];
                for (int i = pos + 1; i < k; ++i)
                    pick[static_cast<size_t>(i)] = pick[static_cast<size_t>(i - 1)] + 1;
            }
        }
        return;
    }

    // Random mode. Plain modulo keeps the stream identical across platforms.
    std::mt19937_64 rng(params.seed);
    auto pick = [&rng](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
    };
    for (int s = 0; s < params.sample_count; ++s) {
        int v = pick(1, params.max_vars);
        int c = pick(1, params.max_clauses);
        std::vector<Clause> clauses;
        for (int ci = 0; ci < c; ++ci) {
            int w = pick(1, params.max_width);
            Clause clause;
            for (int li = 0; li < w; ++li) {
                Literal l{pick(1, v), rng() % 2 == 1};
                if (std::find(clause.begin(), clause.end(), l) == clause.end())
                    clause.push_back(l);
            }
            clauses.push_back(std::move(clause));
        }
        sink(from_clauses(std::move(clauses)));
    }
}

std::vector<CnfFormula> generate_all(const GenParams& params) {
    std::vector<CnfFormula> out;
    generate(params, [&](const CnfFormula& f) { out.push_back(f); });
    return out;
}

ComparisonRecord compare(const CnfFormula& f, int var_limit) {
    ComparisonRecord rec;
    rec.dimacs = serialize_dimacs(f);

    auto t0 = std::chrono::steady_clock::now();
    OracleResult oracle = brute_force_sat(f, var_limit);
    auto t1 = std::chrono::steady_clock::now();
    ConstraintSystem sys = build_system(f);
    PipelineResult pipeline = run_simplified(sys);
    auto t2 = std::chrono::steady_clock::now();

    rec.oracle_sat = oracle.sat;
    rec.pipeline_sat = pipeline.verdict.outcome == Verdict::Outcome::Sat;
    rec.early_stage = pipeline.verdict.early_step;

    TwoSatReduction red = reduce_to_2sat(sys, pipeline);
    rec.reduce_kind = red.kind;
    switch (red.kind) {
        case ReduceKind::SingularFalse:
            rec.twosat_sat = false;
            break;
        case ReduceKind::SingularOneSat:
            rec.twosat_sat = true;
            break;
        case ReduceKind::Instance:
            rec.twosat_sat = solve_2sat(*red.instance).sat;
            break;
    }
    rec.onesat_sat = reduce_to_1sat(pipeline).satisfiable();

    rec.pipeline_agrees = rec.oracle_sat == rec.pipeline_sat;
    rec.twosat_agrees = rec.oracle_sat == rec.twosat_sat;
    rec.onesat_agrees = rec.oracle_sat == rec.onesat_sat;
    rec.oracle_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    rec.pipeline_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
    return rec;
}

namespace {

const char* reduce_kind_str(ReduceKind k) {
    switch (k) {
        case ReduceKind::Instance: return "instance";
        case ReduceKind::SingularFalse: return "singular-false";
        case ReduceKind::SingularOneSat: return "singular-1sat";
    }
    return "?";
}

}  // namespace

std::string record_to_json(const ComparisonRecord& rec) {
    ordered_json j;
    j["dimacs"] = rec.dimacs;
    j["oracle"] = verdict_str(rec.oracle_sat);
    j["pipeline"] = verdict_str(rec.pipeline_sat);
    j["twosat"] = verdict_str(rec.twosat_sat);
    j["onesat"] = verdict_str(rec.onesat_sat);
    j["stage"] = rec.early_stage ? ordered_json(*rec.early_stage) : ordered_json(nullptr);
    j["reduction"] = reduce_kind_str(rec.reduce_kind);
    j["agreement"] = ordered_json{{"pipeline", rec.pipeline_agrees},
                                  {"twosat", rec.twosat_agrees},
                                  {"onesat", rec.onesat_agrees}};
    j["timingsMs"] = ordered_json{{"oracle", rec.oracle_ms}, {"pipeline", rec.pipeline_ms}};
    return j.dump(2) + "\n";
}

MiningReport mine(const GenParams& params, size_t counterexample_cap) {
    MiningReport report;
    report.params = params;
    generate(params, [&](const CnfFormula& f) {
        ComparisonRecord rec = compare(f);
        if (rec.oracle_sat)
            rec.pipeline_sat ? ++report.ss : ++report.su;
        else
            rec.pipeline_sat ? ++report.us : ++report.uu;

        if (!rec.oracle_sat && rec.twosat_sat)
            ++report.iff_claim_violations;
        if (rec.oracle_sat && !rec.pipeline_sat) {
            ++report.soundness_violations;
            throw SoundnessViolationError(
                "pipeline declared Unsat on a satisfiable instance:\n" + rec.dimacs);
        }
        if (!rec.oracle_sat && (rec.pipeline_sat || rec.twosat_sat) &&
            report.counterexamples.size() < counterexample_cap)
            report.counterexamples.push_back(
                {rec.dimacs, rec.oracle_sat, rec.pipeline_sat, rec.twosat_sat, rec.early_stage});
    });
    return report;
}

std::string report_to_json(const MiningReport& report) {
    ordered_json j;
    j["params"] = params_json(report.params);
    j["totals"] = ordered_json{
        {"ss", report.ss}, {"su", report.su}, {"us", report.us}, {"uu", report.uu}};
    j["iffClaimViolations"] = report.iff_claim_violations;
    j["soundnessViolations"] = report.soundness_violations;
    j["counterexamples"] = ordered_json::array();
    for (const auto& cx : report.counterexamples) {
        ordered_json e;
        e["dimacs"] = cx.dimacs;
        e["oracle"] = verdict_str(cx.oracle_sat);
        e["pipeline"] = verdict_str(cx.pipeline_sat);
        e["twosat"] = verdict_str(cx.twosat_sat);
        e["stage"] = cx.stage ? ordered_json(*cx.stage) : ordered_json(nullptr);
        j["counterexamples"].push_back(std::move(e));
    }
    j["version"] = report.version;
    return j.dump(2) + "\n";
}

ExtractResult extract_model(const CnfFormula& f) {
    PipelineResult first = run_simplified(build_system(f));
    if (first.verdict.outcome != Verdict::Outcome::Sat)
        throw std::invalid_argument("extract_model requires a pipeline-Sat instance");

    ExtractResult res;
    res.model = Assignment(f.num_vars);
    CnfFormula current = f;
    bool settled = false;  // formula already reduced to constant-true

    for (int v = 1; v <= f.num_vars; ++v) {
        if (settled) {
            res.model.bind(v, false);
            continue;
        }
        Assignment bind_true;
        bind_true.bind(v, true);
        SimplifyResult st = simplify(current, bind_true);
        bool keep_true = false;
        if (st.is_const_true()) {
            keep_true = true;
            settled = true;
        } else if (!st.is_const_false()) {
            PipelineResult pr = run_simplified(build_system(st.formula));
            keep_true = pr.verdict.outcome == Verdict::Outcome::Sat;
        }
        if (keep_true) {
            res.model.bind(v, true);
            if (!settled)
                current = st.formula;
            continue;
        }

        Assignment bind_false;
        bind_false.bind(v, false);
        SimplifyResult sf = simplify(current, bind_false);
        res.model.bind(v, false);
        if (sf.is_const_true()) {
            settled = true;
        } else if (sf.is_const_false()) {
            res.contradiction = "both bindings of variable " + std::to_string(v) +
                                " falsify the residual formula";
            return res;
        } else {
            current = sf.formula;
        }
    }

    if (evaluate(f, res.model)) {
        res.ok = true;
        return res;
    }
    res.contradiction = "self-reducibility loop produced a non-model";
    return res;
}

}  // namespace satred
