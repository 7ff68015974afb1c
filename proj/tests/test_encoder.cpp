#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "encoder.hpp"
#include "harness.hpp"
#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

using namespace satred;

namespace {

CnfFormula parse(const std::string& s) { return parse_dimacs(s); }

// Independent pair oracle: enumerate every cross-clause literal couple.
std::set<std::tuple<int, int, int, int>> pair_oracle(const CnfFormula& f) {
    std::set<std::tuple<int, int, int, int>> out;
    for (size_t i = 0; i < f.clauses.size(); ++i)
        for (size_t j = i + 1; j < f.clauses.size(); ++j)
            for (size_t mu = 0; mu < f.clauses[i].size(); ++mu)
                for (size_t nu = 0; nu < f.clauses[j].size(); ++nu)
                    if (f.clauses[i][mu] == complement(f.clauses[j][nu]))
                        out.insert({static_cast<int>(i) + 1, static_cast<int>(j) + 1,
                                    static_cast<int>(mu) + 1, static_cast<int>(nu) + 1});
    return out;
}

// Enumerate non-contradictory DNF terms by brute force over pick tuples.
uint64_t count_good_terms(const CnfFormula& f) {
    uint64_t good = 0;
    std::vector<size_t> pick(f.clauses.size(), 0);
    uint64_t p = dnf_term_count(f);
    for (uint64_t k = 0; k < p; ++k) {
        bool contradictory = false;
        for (size_t i = 0; i < f.clauses.size() && !contradictory; ++i)
            for (size_t j = i + 1; j < f.clauses.size() && !contradictory; ++j)
                if (f.clauses[i][pick[i]] == complement(f.clauses[j][pick[j]]))
                    contradictory = true;
        if (!contradictory)
            ++good;
        for (size_t i = pick.size(); i-- > 0;) {
            if (++pick[i] < f.clauses[i].size())
                break;
            pick[i] = 0;
        }
    }
    return good;
}

// Count satisfying indicator assignments of the full system.
uint64_t count_system_solutions(const ConstraintSystem& sys) {
    uint64_t good = 0;
    for (uint64_t mask = 0; mask < (uint64_t{1} << sys.indicator_count); ++mask) {
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
            } else if (((mask >> (sys.flat(c.vars[0]) - 1)) & 1u) &&
                       ((mask >> (sys.flat(c.vars[1]) - 1)) & 1u)) {
                ok = false;
                break;
            }
        }
        if (ok)
            ++good;
    }
    return good;
}

}  // namespace

TEST_CASE("complementary pairs on the written examples") {
    auto pairs = complementary_pairs(parse("p cnf 3 2\n1 2 0\n-1 3 0\n"));
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0] == ExclusionPair{{1, 1}, {2, 1}});

    CHECK(complementary_pairs(parse("p cnf 1 2\n1 0\n1 0\n")).empty());

    auto two = complementary_pairs(parse("p cnf 2 2\n1 -2 0\n-1 2 0\n"));
    REQUIRE(two.size() == 2);  // meets the min{n_i,n_j} bound
    CHECK(two[0] == ExclusionPair{{1, 1}, {2, 1}});
    CHECK(two[1] == ExclusionPair{{1, 2}, {2, 2}});
}

TEST_CASE("complementary pairs match the couple-enumeration oracle and the size bound") {
    GenParams p;
    p.max_vars = 3;
    p.max_clauses = 3;
    p.max_width = 3;
    p.exhaustive = true;
    generate(p, [](const CnfFormula& f) {
        auto pairs = complementary_pairs(f);
        auto expect = pair_oracle(f);
        REQUIRE(pairs.size() == expect.size());
        std::vector<std::tuple<int, int, int, int>> got;
        for (const auto& pr : pairs)
            got.push_back({pr.first.clause, pr.second.clause, pr.first.pos, pr.second.pos});
        CHECK(std::set(got.begin(), got.end()) == expect);
        // deterministic lexicographic order by (i, j, mu, nu)
        CHECK(std::is_sorted(got.begin(), got.end()));
        // |B_ij| <= min{n_i, n_j}
        std::map<std::pair<int, int>, int> per_pair;
        for (const auto& pr : pairs)
            ++per_pair[{pr.first.clause, pr.second.clause}];
        for (const auto& [key, cnt] : per_pair)
            CHECK(cnt <= std::min(f.clauses[key.first - 1].size(),
                                  f.clauses[key.second - 1].size()));
    });
}

TEST_CASE("build_system layout") {
    ConstraintSystem sys = build_system(parse("p cnf 1 2\n1 0\n-1 0\n"));
    REQUIRE(sys.constraints.size() == 3);
    CHECK(sys.constraints[0].kind == Constraint::Kind::ExactlyOne);
    CHECK(sys.constraints[0].vars == std::vector<IndicatorId>{{1, 1}});
    CHECK(sys.constraints[1].vars == std::vector<IndicatorId>{{2, 1}});
    CHECK(sys.constraints[2].kind == Constraint::Kind::Nand);
    CHECK(sys.constraints[2].vars == std::vector<IndicatorId>{{1, 1}, {2, 1}});

    ConstraintSystem single = build_system(parse("p cnf 2 1\n1 2 0\n"));
    REQUIRE(single.constraints.size() == 1);
    CHECK(single.exclusion_count == 0);
}

TEST_CASE("system solutions are in bijection with non-contradictory DNF terms") {
    GenParams p;
    p.max_vars = 3;
    p.max_clauses = 3;
    p.max_width = 3;
    p.exhaustive = true;
    generate(p, [](const CnfFormula& f) {
        ConstraintSystem sys = build_system(f);
        if (sys.indicator_count > 12)
            return;
        CHECK(count_system_solutions(sys) == count_good_terms(f));
    });
}

TEST_CASE("size_report on the written examples") {
    SizeReport r = size_report(parse("p cnf 3 3\n1 2 0\n-1 3 0\n-2 -3 0\n"));
    CHECK(r.m == 3);
    CHECK(r.n == 3);
    CHECK(r.e == 27);
    CHECK(r.t1 == 2);
    CHECK(r.t2 == 2);
    CHECK(r.p == 8);

    SizeReport u = size_report(parse("p cnf 1 2\n1 0\n-1 0\n"));
    CHECK(u.m == 2);
    CHECK(u.n == 1);
    CHECK(u.e == 0);
    CHECK(u.p == 1);

    SizeReport z = size_report(parse("p cnf 2 2\n1 0\n2 0\n"));
    CHECK(z.n == 0);
    CHECK(z.e == 0);
}

TEST_CASE("size_report invariants over the corpus") {
    GenParams p;
    p.max_vars = 3;
    p.max_clauses = 3;
    p.max_width = 3;
    p.exhaustive = true;
    generate(p, [](const CnfFormula& f) {
        SizeReport r = size_report(f);
        CHECK(r.n == static_cast<int>(complementary_pairs(f).size()));
        CHECK(r.e == 9ull * r.n * (r.n - 1) / 2);
        CHECK(r.t1 >= r.t2);
        bool saturated = false;
        CHECK(r.p == dnf_term_count(f, &saturated));
    });
}

TEST_CASE("indicators_to_assignment") {
    CnfFormula f = parse("p cnf 3 2\n1 2 0\n-1 3 0\n");
    auto res = indicators_to_assignment({{1, 2}, {2, 1}}, f);
    REQUIRE(std::holds_alternative<Assignment>(res));
    const auto& a = std::get<Assignment>(res);
    CHECK(a.get(2) == true);
    CHECK(a.get(1) == false);
    CHECK_FALSE(a.get(3).has_value());

    CnfFormula units = parse("p cnf 1 2\n1 0\n-1 0\n");
    auto conflict = indicators_to_assignment({{1, 1}, {2, 1}}, units);
    REQUIRE(std::holds_alternative<IndicatorConflict>(conflict));
    CHECK(std::get<IndicatorConflict>(conflict).var == 1);

    CnfFormula one = parse("p cnf 2 1\n1 2 0\n");
    auto single = indicators_to_assignment({{1, 1}}, one);
    REQUIRE(std::holds_alternative<Assignment>(single));
    CHECK(std::get<Assignment>(single).get(1) == true);

    CHECK_THROWS_AS(indicators_to_assignment({{1, 1}}, f), std::invalid_argument);
}

TEST_CASE("encoder equivalence: system satisfiability equals formula satisfiability") {
    GenParams p;
    p.max_vars = 3;
    p.max_clauses = 3;
    p.max_width = 2;
    p.exhaustive = true;
    generate(p, [](const CnfFormula& f) {
        CHECK(brute_force_system(build_system(f)).sat == brute_force_sat(f).sat);
    });
}

TEST_CASE("debug dump format") {
    std::string dump = dump_system(build_system(parse("p cnf 1 2\n1 0\n-1 0\n")));
    CHECK(dump ==
          "EO \xce\xbe(1,1)\n"
          "EO \xce\xbe(2,1)\n"
          "NAND \xce\xbe(1,1) \xce\xbe(2,1)\n");
}
