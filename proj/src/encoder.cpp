#include "encoder.hpp"

#include <algorithm>
#include <sstream>

namespace satred {

std::vector<ExclusionPair> complementary_pairs(const CnfFormula& f) {
    std::vector<ExclusionPair> out;
    const int m = static_cast<int>(f.clauses.size());
    for (int i = 1; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j) {
            const Clause& ci = f.clauses[static_cast<size_t>(i) - 1];
            const Clause& cj = f.clauses[static_cast<size_t>(j) - 1];
            for (int mu = 1; mu <= static_cast<int>(ci.size()); ++mu)
                for (int nu = 1; nu <= static_cast<int>(cj.size()); ++nu)
                    if (ci[static_cast<size_t>(mu) - 1] ==
                        complement(cj[static_cast<size_t>(nu) - 1]))
                        out.push_back({{i, mu}, {j, nu}});
        }
    }
    return out;
}

ConstraintSystem build_system(const CnfFormula& f) {
    ConstraintSystem sys;
    sys.num_clauses = static_cast<int>(f.clauses.size());
    int offset = 0;
    for (const auto& clause : f.clauses) {
        sys.clause_sizes.push_back(static_cast<int>(clause.size()));
        sys.flat_offset.push_back(offset);
        offset += static_cast<int>(clause.size());
    }
    sys.indicator_count = offset;

    for (int i = 1; i <= sys.num_clauses; ++i) {
        Constraint c{Constraint::Kind::ExactlyOne, {}};
        for (int j = 1; j <= sys.clause_sizes[static_cast<size_t>(i) - 1]; ++j)
            c.vars.push_back({i, j});
        sys.constraints.push_back(std::move(c));
    }
    for (const auto& pair : complementary_pairs(f)) {
        sys.constraints.push_back({Constraint::Kind::Nand, {pair.first, pair.second}});
        ++sys.exclusion_count;
    }
    return sys;
}

SizeReport size_report(const CnfFormula& f) {
    SizeReport r;
    r.m = static_cast<int>(f.clauses.size());
    std::vector<int> sizes;
    for (const auto& clause : f.clauses) {
        r.indicator_count += static_cast<int>(clause.size());
        sizes.push_back(static_cast<int>(clause.size()));
    }
    std::sort(sizes.rbegin(), sizes.rend());
    r.t1 = sizes.empty() ? 0 : sizes[0];
    r.t2 = sizes.size() < 2 ? 0 : sizes[1];
    r.n = static_cast<int>(complementary_pairs(f).size());
    r.p = dnf_term_count(f, &r.p_saturated);
    r.e = 9ull * static_cast<uint64_t>(r.n) * static_cast<uint64_t>(r.n - 1) / 2;
    return r;
}

std::variant<Assignment, IndicatorConflict> indicators_to_assignment(
    const std::vector<IndicatorId>& chosen, const CnfFormula& f) {
    if (chosen.size() != f.clauses.size())
        throw std::invalid_argument("expected exactly one indicator per clause");
    auto sorted = chosen;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i].clause != static_cast<int>(i) + 1)
            throw std::invalid_argument("expected exactly one indicator per clause");

    Assignment a(f.num_vars);
    std::vector<IndicatorId> binder(static_cast<size_t>(f.num_vars) + 1);
    for (const auto& id : sorted) {
        const Literal& lit =
            f.clauses[static_cast<size_t>(id.clause) - 1][static_cast<size_t>(id.pos) - 1];
        bool want = !lit.negated;
        auto prev = a.get(lit.var);
        if (prev && *prev != want)
            return IndicatorConflict{binder[static_cast<size_t>(lit.var)], id, lit.var};
        if (!prev) {
            a.bind(lit.var, want);
            binder[static_cast<size_t>(lit.var)] = id;
        }
    }
    return a;
}

std::string dump_system(const ConstraintSystem& sys) {
    std::ostringstream out;
    for (const auto& c : sys.constraints) {
        out << (c.kind == Constraint::Kind::ExactlyOne ? "EO" : "NAND");
        for (const auto& v : c.vars)
            out << " \xce\xbe(" << v.clause << ',' << v.pos << ')';
        out << '\n';
    }
    return out.str();
}

}  // namespace satred
