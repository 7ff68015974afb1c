#include "compat.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace satred {

TrueRows true_rows(const Constraint& c, const ConstraintSystem& sys) {
    TrueRows out;
    for (const auto& v : c.vars)
        out.vars.push_back(sys.flat(v));
    if (c.kind == Constraint::Kind::ExactlyOne) {
        const size_t k = c.vars.size();
        for (size_t r = 0; r < k; ++r) {
            std::vector<uint8_t> row(k, 0);
            row[r] = 1;
            out.rows.push_back(std::move(row));
        }
    } else {
        out.rows = {{0, 0}, {0, 1}, {1, 0}};
    }
    return out;
}

CompatMatrix::CompatMatrix(int i, int j, int rows, int cols, bool fill)
    : i_(i), j_(j), rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64) {
    words_.assign(static_cast<size_t>(rows_) * static_cast<size_t>(words_per_row_), 0);
    if (fill) {
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                words_[idx(r, c)] |= uint64_t{1} << bit(c);
        true_count_ = rows_ * cols_;
    }
}

std::optional<std::pair<int, int>> CompatMatrix::first_true() const {
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (get(r, c))
                return std::make_pair(r, c);
    return std::nullopt;
}

CompatMatrix initial_matrix(const TrueRows& a, const TrueRows& b, int i, int j) {
    std::vector<std::pair<size_t, size_t>> shared;
    for (size_t pa = 0; pa < a.vars.size(); ++pa)
        for (size_t pb = 0; pb < b.vars.size(); ++pb)
            if (a.vars[pa] == b.vars[pb])
                shared.emplace_back(pa, pb);

    CompatMatrix m(i, j, static_cast<int>(a.rows.size()), static_cast<int>(b.rows.size()), true);
    if (shared.empty())
        return m;
    for (size_t r = 0; r < a.rows.size(); ++r)
        for (size_t s = 0; s < b.rows.size(); ++s)
            for (const auto& [pa, pb] : shared)
                if (a.rows[r][pa] != b.rows[s][pb]) {
                    m.clear(static_cast<int>(r), static_cast<int>(s));
                    break;
                }
    return m;
}

uint64_t BoxMatrix::element_count() const {
    uint64_t total = 0;
    for (const auto& box : boxes)
        total += static_cast<uint64_t>(box.matrix.rows()) *
                 static_cast<uint64_t>(box.matrix.cols());
    return total;
}

Eliminator::Eliminator(const ConstraintSystem& sys, std::ostream* trace)
    : total_(sys.total()), trace_(trace) {
    for (const auto& c : sys.constraints)
        rows_.push_back(true_rows(c, sys));
    matrices_.resize(static_cast<size_t>(total_) * static_cast<size_t>(total_));
    for (int i = 1; i <= total_; ++i)
        for (int j = i + 1; j <= total_; ++j)
            at(i, j) = initial_matrix(rows_[static_cast<size_t>(i) - 1],
                                      rows_[static_cast<size_t>(j) - 1], i, j);
}

CompatMatrix& Eliminator::at(int i, int j) {
    return matrices_[static_cast<size_t>(i - 1) * static_cast<size_t>(total_) +
                     static_cast<size_t>(j - 1)];
}

const CompatMatrix& Eliminator::matrix(int i, int j) const {
    return matrices_[static_cast<size_t>(i - 1) * static_cast<size_t>(total_) +
                     static_cast<size_t>(j - 1)];
}

bool Eliminator::step(int k) {
    const int num_k_rows = static_cast<int>(rows_[static_cast<size_t>(k) - 1].rows.size());
    int pairs = 0;
    int cleared = 0;
    bool all_false = false;

    for (int i = k + 1; i <= total_; ++i) {
        const CompatMatrix& ki = at(k, i);
        for (int j = i + 1; j <= total_; ++j) {
            const CompatMatrix& kj = at(k, j);
            ++pairs;
            if (ki.all_true() && kj.all_true())
                continue;  // every cell keeps a supporting row of k
            CompatMatrix& ij = at(i, j);
            for (int a = 0; a < ij.rows(); ++a) {
                for (int b = 0; b < ij.cols(); ++b) {
                    if (!ij.get(a, b))
                        continue;
                    bool supported = false;
                    for (int r = 0; r < num_k_rows; ++r)
                        if (ki.get(r, a) && kj.get(r, b)) {
                            supported = true;
                            break;
                        }
                    if (!supported) {
                        ij.clear(a, b);
                        ++cleared;
                    }
                }
            }
            if (ij.all_false())
                all_false = true;
        }
    }
    if (trace_)
        *trace_ << "step " << k << ": pairs=" << pairs << " cleared=" << cleared
                << " allfalse?=" << (all_false ? 1 : 0) << '\n';
    return !all_false;
}

namespace {

BoxMatrix snapshot_boxes(const Eliminator& elim, int m, int n) {
    BoxMatrix s;
    s.n = n;
    for (int mu = 1; mu <= n; ++mu)
        for (int nu = mu + 1; nu <= n; ++nu)
            s.boxes.push_back({mu, nu, elim.matrix(m + mu, m + nu)});
    return s;
}

// Collapses R0 onto its column constraint: column b survives iff some row
// supports it. Used for the single-exclusion case.
CompatMatrix project_columns(const CompatMatrix& r0) {
    CompatMatrix r(0, r0.j(), 1, r0.cols(), true);
    for (int b = 0; b < r0.cols(); ++b) {
        bool any = false;
        for (int a = 0; a < r0.rows(); ++a)
            if (r0.get(a, b)) {
                any = true;
                break;
            }
        if (!any)
            r.clear(0, b);
    }
    return r;
}

}  // namespace

PipelineResult run_simplified(const ConstraintSystem& sys, std::ostream* trace) {
    PipelineResult out;
    const int m = sys.num_clauses;
    const int n = sys.exclusion_count;

    // No cross-clause complements: every nonempty-clause pick is consistent.
    if (n == 0) {
        out.verdict.outcome = Verdict::Outcome::Sat;
        return out;
    }

    Eliminator elim(sys, trace);
    const int total = elim.total();
    for (int k = 1; k <= total - 2; ++k) {
        bool ok = elim.step(k);
        if (k == m && n >= 2)
            out.s = snapshot_boxes(elim, m, n);
        if (!ok) {
            out.verdict.outcome = Verdict::Outcome::Unsat;
            out.verdict.early_step = k;
            return out;
        }
    }

    CompatMatrix r = elim.matrix(total - 1, total);
    if (n == 1)
        r = project_columns(r);
    out.r = r;
    if (auto w = r.first_true()) {
        out.verdict.outcome = Verdict::Outcome::Sat;
        out.verdict.witness = w;
    } else {
        out.verdict.outcome = Verdict::Outcome::Unsat;
    }
    return out;
}

PermutationRun run_with_permutation(const CnfFormula& f, std::ostream* trace) {
    PermutationRun run;
    run.order.resize(f.clauses.size());
    std::iota(run.order.begin(), run.order.end(), 0);
    std::stable_sort(run.order.begin(), run.order.end(), [&](int a, int b) {
        return f.clauses[static_cast<size_t>(a)].size() >
               f.clauses[static_cast<size_t>(b)].size();
    });
    run.permuted.num_vars = f.num_vars;
    for (int idx : run.order)
        run.permuted.clauses.push_back(f.clauses[static_cast<size_t>(idx)]);
    run.result = run_simplified(build_system(run.permuted), trace);
    return run;
}

}  // namespace satred
