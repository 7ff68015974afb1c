#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace satred {

struct Literal {
    int var = 0;       // 1-based variable index
    bool negated = false;

    bool operator==(const Literal&) const = default;
};

inline Literal complement(Literal l) { return {l.var, !l.negated}; }

// Nonempty disjunction of literals.
using Clause = std::vector<Literal>;

struct CnfFormula {
    std::vector<Clause> clauses;
    int num_vars = 0;   // every literal's var is in [1, num_vars]

    bool operator==(const CnfFormula&) const = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Partial or total map from variable index to a truth value.
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(int num_vars) : values_(static_cast<size_t>(num_vars) + 1) {}

    void bind(int var, bool value);
    std::optional<bool> get(int var) const;
    bool is_total(int num_vars) const;
    int capacity() const { return static_cast<int>(values_.size()) - 1; }

    bool operator==(const Assignment&) const = default;

private:
    std::vector<std::optional<bool>> values_;  // index 0 unused
};

CnfFormula parse_dimacs(const std::string& text);
std::string serialize_dimacs(const CnfFormula& f);

// Requires a total assignment over 1..f.num_vars.
bool evaluate(const CnfFormula& f, const Assignment& a);

struct SimplifyResult {
    enum class Kind { Residual, ConstTrue, ConstFalse };
    Kind kind = Kind::Residual;
    CnfFormula formula;  // meaningful only when kind == Residual

    bool is_const_true() const { return kind == Kind::ConstTrue; }
    bool is_const_false() const { return kind == Kind::ConstFalse; }
};

// Drops satisfied clauses and falsified literals; variable indices are kept.
SimplifyResult simplify(const CnfFormula& f, const Assignment& partial);

// Number of DNF terms n_1 * n_2 * ... * n_m, saturating at UINT64_MAX.
uint64_t dnf_term_count(const CnfFormula& f, bool* saturated = nullptr);

// Expands the formula into DNF terms and looks for one without a
// complementary literal pair. Returns nullopt when the term count
// exceeds the budget.
std::optional<bool> dnf_expansion_satisfiable(const CnfFormula& f, uint64_t term_budget);

}  // namespace satred
