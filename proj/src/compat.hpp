#pragma once

#include "encoder.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>

namespace satred {

// Satisfying rows of a constraint's truth table over its own variables.
// Exactly-one over k indicators: k one-hot rows in position order.
// NAND: 3 rows in fixed order (F,F), (F,T), (T,F).
struct TrueRows {
    std::vector<int> vars;                     // flat indicator ids
    std::vector<std::vector<uint8_t>> rows;    // row values aligned with vars
};

TrueRows true_rows(const Constraint& c, const ConstraintSystem& sys);

// Boolean matrix over two constraints' true-rows, bit-packed by row.
class CompatMatrix {
public:
    CompatMatrix() = default;
    CompatMatrix(int i, int j, int rows, int cols, bool fill);

    int i() const { return i_; }
    int j() const { return j_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const {
        return (words_[idx(r, c)] >> bit(c)) & 1u;
    }
    void clear(int r, int c) {
        uint64_t mask = uint64_t{1} << bit(c);
        if (words_[idx(r, c)] & mask) {
            words_[idx(r, c)] &= ~mask;
            --true_count_;
        }
    }
    int true_count() const { return true_count_; }
    bool all_false() const { return true_count_ == 0; }
    bool all_true() const { return true_count_ == rows_ * cols_; }

    // First true element in row-major order, if any.
    std::optional<std::pair<int, int>> first_true() const;

private:
    size_t idx(int r, int c) const {
        return static_cast<size_t>(r) * static_cast<size_t>(words_per_row_) +
               static_cast<size_t>(c) / 64;
    }
    static int bit(int c) { return c % 64; }

    int i_ = 0, j_ = 0;
    int rows_ = 0, cols_ = 0;
    int words_per_row_ = 0;
    int true_count_ = 0;
    std::vector<uint64_t> words_;
};

// Cell (r,s) is true iff row r of a and row s of b agree on shared variables.
CompatMatrix initial_matrix(const TrueRows& a, const TrueRows& b, int i, int j);

struct BoxMatrix {
    struct Box {
        int mu = 0, nu = 0;  // 1-based exclusion-constraint indices, mu < nu
        CompatMatrix matrix;
    };
    int n = 0;  // exclusion-constraint count
    std::vector<Box> boxes;  // lexicographic (mu, nu)

    uint64_t element_count() const;
};

struct Verdict {
    enum class Outcome { Sat, Unsat };
    Outcome outcome = Outcome::Sat;
    std::optional<int> early_step;                   // set on early all-false exit
    std::optional<std::pair<int, int>> witness;      // first true element of R
};

struct PipelineResult {
    Verdict verdict;
    std::optional<BoxMatrix> s;     // snapshot after step m, when n >= 2
    std::optional<CompatMatrix> r;  // final matrix, absent for n = 0 or early exit
};

// Sequential elimination state over one constraint system. Exposed for
// step-level tests; run_simplified drives it end to end.
class Eliminator {
public:
    explicit Eliminator(const ConstraintSystem& sys, std::ostream* trace = nullptr);

    // Eliminates constraint k (1-based). Returns false when some remaining
    // matrix became all-false.
    bool step(int k);

    const CompatMatrix& matrix(int i, int j) const;  // 1-based, i < j, both > last step
    int total() const { return total_; }

private:
    CompatMatrix& at(int i, int j);
    int total_ = 0;
    std::vector<TrueRows> rows_;
    std::vector<CompatMatrix> matrices_;  // (i-1)*total + (j-1)
    std::ostream* trace_ = nullptr;
};

PipelineResult run_simplified(const ConstraintSystem& sys, std::ostream* trace = nullptr);

struct PermutationRun {
    std::vector<int> order;  // position p of the permuted formula holds original clause order[p]
    CnfFormula permuted;
    PipelineResult result;
};

// Stable-sorts clauses by decreasing length so the shortest clauses end up
// last, then runs the pipeline on the permuted formula.
PermutationRun run_with_permutation(const CnfFormula& f, std::ostream* trace = nullptr);

}  // namespace satred
