#include "formula.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace satred {

void Assignment::bind(int var, bool value) {
    if (var < 1)
        throw std::invalid_argument("variable index must be >= 1");
    if (var >= static_cast<int>(values_.size()))
        values_.resize(static_cast<size_t>(var) + 1);
    values_[static_cast<size_t>(var)] = value;
}

std::optional<bool> Assignment::get(int var) const {
    if (var < 1 || var >= static_cast<int>(values_.size()))
        return std::nullopt;
    return values_[static_cast<size_t>(var)];
}

bool Assignment::is_total(int num_vars) const {
    for (int v = 1; v <= num_vars; ++v)
        if (!get(v))
            return false;
    return true;
}

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

bool parse_int(const std::string& tok, long long& out) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && ptr == tok.data() + tok.size();
}

}  // namespace

CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_header = false;
    long long declared_vars = 0, declared_clauses = 0;
    CnfFormula f;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c')
            continue;
        auto toks = split_tokens(line);
        if (toks.empty())
            continue;
        if (toks[0] == "p") {
            if (have_header)
                throw ParseError(line_no, "duplicate header");
            if (toks.size() != 4 || toks[1] != "cnf")
                throw ParseError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
            if (!parse_int(toks[2], declared_vars) || !parse_int(toks[3], declared_clauses) ||
                declared_vars < 0 || declared_clauses < 0)
                throw ParseError(line_no, "malformed header counts");
            have_header = true;
            continue;
        }
        if (!have_header)
            throw ParseError(line_no, "clause data before 'p cnf' header");
        if (static_cast<long long>(f.clauses.size()) >= declared_clauses)
            throw ParseError(line_no, "more clauses than declared");

        Clause clause;
        bool terminated = false;
        for (size_t t = 0; t < toks.size(); ++t) {
            long long lit;
            if (!parse_int(toks[t], lit))
                throw ParseError(line_no, "bad literal token '" + toks[t] + "'");
            if (lit == 0) {
                if (t + 1 != toks.size())
                    throw ParseError(line_no, "trailing tokens after clause terminator");
                terminated = true;
                break;
            }
            long long var = lit < 0 ? -lit : lit;
            if (var > declared_vars)
                throw ParseError(line_no, "literal " + std::to_string(lit) +
                                              " exceeds declared variable count");
            Literal l{static_cast<int>(var), lit < 0};
            if (std::find(clause.begin(), clause.end(), l) == clause.end())
                clause.push_back(l);
        }
        if (!terminated)
            throw ParseError(line_no, "missing clause terminator '0'");
        if (clause.empty())
            throw ParseError(line_no, "empty clause");
        f.clauses.push_back(std::move(clause));
    }

    if (!have_header)
        throw ParseError(line_no == 0 ? 1 : line_no, "missing 'p cnf' header");
    if (static_cast<long long>(f.clauses.size()) != declared_clauses)
        throw ParseError(line_no, "declared " + std::to_string(declared_clauses) +
                                      " clauses, found " + std::to_string(f.clauses.size()));
    f.num_vars = static_cast<int>(declared_vars);
    return f;
}

std::string serialize_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& clause : f.clauses) {
        for (const auto& lit : clause)
            out << (lit.negated ? -lit.var : lit.var) << ' ';
        out << "0\n";
    }
    return out.str();
}

bool evaluate(const CnfFormula& f, const Assignment& a) {
    if (!a.is_total(f.num_vars))
        throw std::invalid_argument("evaluate requires a total assignment");
    for (const auto& clause : f.clauses) {
        bool satisfied = false;
        for (const auto& lit : clause) {
            if (*a.get(lit.var) != lit.negated) {
                satisfied = true;
                break;
            }
        }
        if (!satisfied)
            return false;
    }
    return true;
}

SimplifyResult simplify(const CnfFormula& f, const Assignment& partial) {
    CnfFormula out;
    out.num_vars = f.num_vars;
    for (const auto& clause : f.clauses) {
        Clause residual;
        bool satisfied = false;
        for (const auto& lit : clause) {
            auto val = partial.get(lit.var);
            if (!val) {
                residual.push_back(lit);
            } else if (*val != lit.negated) {
                satisfied = true;
                break;
            }
        }
        if (satisfied)
            continue;
        if (residual.empty())
            return {SimplifyResult::Kind::ConstFalse, {}};
        out.clauses.push_back(std::move(residual));
    }
    if (out.clauses.empty())
        return {SimplifyResult::Kind::ConstTrue, {}};
    return {SimplifyResult::Kind::Residual, std::move(out)};
}

uint64_t dnf_term_count(const CnfFormula& f, bool* saturated) {
    if (saturated)
        *saturated = false;
    uint64_t p = 1;
    for (const auto& clause : f.clauses) {
        uint64_t n = clause.size();
        if (n != 0 && p > UINT64_MAX / n) {
            if (saturated)
                *saturated = true;
            return UINT64_MAX;
        }
        p *= n;
    }
    return p;
}

std::optional<bool> dnf_expansion_satisfiable(const CnfFormula& f, uint64_t term_budget) {
    bool saturated = false;
    uint64_t p = dnf_term_count(f, &saturated);
    if (saturated || p > term_budget)
        return std::nullopt;

    const size_t m = f.clauses.size();
    std::vector<size_t> pick(m, 0);  // mixed-radix counter over clause positions
    std::vector<int> value(static_cast<size_t>(f.num_vars) + 1, 0);  // 0 unset, +1/-1

    for (uint64_t k = 0; k < p; ++k) {
        bool contradictory = false;
        std::vector<int> touched;
        for (size_t i = 0; i < m && !contradictory; ++i) {
            const Literal& l = f.clauses[i][pick[i]];
            int want = l.negated ? -1 : 1;
            int& slot = value[static_cast<size_t>(l.var)];
            if (slot == 0) {
                slot = want;
                touched.push_back(l.var);
            } else if (slot != want) {
                contradictory = true;
            }
        }
        for (int v : touched)
            value[static_cast<size_t>(v)] = 0;
        if (!contradictory)
            return true;

        for (size_t i = m; i-- > 0;) {
            if (++pick[i] < f.clauses[i].size())
                break;
            pick[i] = 0;
        }
    }
    return false;
}

}  // namespace satred
