#include "reducer.hpp"

#include <sstream>

namespace satred {

namespace {

TwoSatInstance make_instance(const ConstraintSystem& sys, const PipelineResult& pipeline) {
    TwoSatInstance inst;
    inst.num_indicators = sys.indicator_count;
    inst.indicator_names.resize(static_cast<size_t>(sys.indicator_count));
    for (int i = 0; i < sys.num_clauses; ++i)
        for (int j = 1; j <= sys.clause_sizes[static_cast<size_t>(i)]; ++j) {
            IndicatorId id{i + 1, j};
            inst.indicator_names[static_cast<size_t>(sys.flat(id)) - 1] = id;
        }
    for (const auto& c : sys.constraints)
        if (c.kind == Constraint::Kind::Nand)
            inst.nand_clauses.emplace_back(sys.flat(c.vars[0]), sys.flat(c.vars[1]));

    // Elements of S in box (mu,nu) lexicographic order, cells row-major.
    if (pipeline.s) {
        for (const auto& box : pipeline.s->boxes)
            for (int r = 0; r < box.matrix.rows(); ++r)
                for (int c = 0; c < box.matrix.cols(); ++c)
                    inst.units.push_back({box.mu, box.nu, r, c, box.matrix.get(r, c)});
    }
    return inst;
}

}  // namespace

TwoSatReduction reduce_to_2sat(const ConstraintSystem& sys, const PipelineResult& pipeline) {
    if (sys.exclusion_count == 0)
        return {ReduceKind::SingularOneSat, std::nullopt};
    if (pipeline.verdict.early_step && *pipeline.verdict.early_step <= sys.num_clauses)
        return {ReduceKind::SingularFalse, std::nullopt};
    return {ReduceKind::Instance, make_instance(sys, pipeline)};
}

TwoSatReduction reduce_to_2sat(const CnfFormula& f) {
    ConstraintSystem sys = build_system(f);
    return reduce_to_2sat(sys, run_simplified(sys));
}

std::string twosat_to_dimacs(const TwoSatReduction& red) {
    std::ostringstream out;
    switch (red.kind) {
        case ReduceKind::SingularFalse:
            out << "c FALSE\np cnf 0 1\n0\n";
            return out.str();
        case ReduceKind::SingularOneSat:
            out << "c SINGULAR 1-SAT (no cross-clause complementary literals)\np cnf 0 0\n";
            return out.str();
        case ReduceKind::Instance:
            break;
    }
    const TwoSatInstance& inst = *red.instance;
    for (size_t k = 0; k < inst.indicator_names.size(); ++k)
        out << "c ind " << k + 1 << " = xi(" << inst.indicator_names[k].clause << ','
            << inst.indicator_names[k].pos << ")\n";
    for (size_t k = 0; k < inst.units.size(); ++k) {
        const auto& u = inst.units[k];
        out << "c map b" << k + 1 << " = box(" << u.mu << ',' << u.nu << ") cell(" << u.row
            << ',' << u.col << ") val(" << (u.value ? 1 : 0) << ")\n";
    }
    out << "p cnf " << inst.num_vars() << ' '
        << inst.nand_clauses.size() + inst.units.size() << '\n';
    for (const auto& [a, b] : inst.nand_clauses)
        out << -a << ' ' << -b << " 0\n";
    for (size_t k = 0; k < inst.units.size(); ++k) {
        int v = inst.num_indicators + static_cast<int>(k) + 1;
        out << (inst.units[k].value ? v : -v) << " 0\n";
    }
    return out.str();
}

OneSatInstance reduce_to_1sat(const PipelineResult& pipeline) {
    OneSatInstance inst;
    if (pipeline.verdict.outcome == Verdict::Outcome::Unsat) {
        inst.constant_false = true;
        return inst;
    }
    if (pipeline.r)
        for (int r = 0; r < pipeline.r->rows(); ++r)
            for (int c = 0; c < pipeline.r->cols(); ++c)
                inst.units.push_back({r, c, pipeline.r->get(r, c)});
    return inst;
}

OneSatInstance reduce_to_1sat(const CnfFormula& f) {
    return reduce_to_1sat(run_simplified(build_system(f)));
}

std::string onesat_to_dimacs(const OneSatInstance& inst) {
    std::ostringstream out;
    if (inst.constant_false) {
        out << "c FALSE\np cnf 0 1\n0\n";
        return out.str();
    }
    for (size_t k = 0; k < inst.units.size(); ++k)
        out << "c map b" << k + 1 << " = cell(" << inst.units[k].row << ','
            << inst.units[k].col << ") val(" << (inst.units[k].value ? 1 : 0) << ")\n";
    out << "p cnf " << inst.units.size() << ' ' << inst.units.size() << '\n';
    for (size_t k = 0; k < inst.units.size(); ++k)
        out << (inst.units[k].value ? static_cast<int>(k) + 1 : -(static_cast<int>(k) + 1))
            << " 0\n";
    return out.str();
}

namespace {

// Iterative Tarjan over the implication graph. Literal nodes: variable v
// maps to 2(v-1) positive, 2(v-1)+1 negative.
class ImplicationGraph {
public:
    explicit ImplicationGraph(int num_vars) : adj_(static_cast<size_t>(num_vars) * 2) {}

    static size_t node(int lit) {
        int v = lit > 0 ? lit : -lit;
        return static_cast<size_t>(v - 1) * 2 + (lit > 0 ? 0 : 1);
    }

    void add_implication(int from_lit, int to_lit) {
        adj_[node(from_lit)].push_back(node(to_lit));
    }

    std::vector<int> scc_components() const {
        const size_t n = adj_.size();
        std::vector<int> comp(n, -1), low(n), num(n, -1);
        std::vector<size_t> stack, call_node;
        std::vector<size_t> call_edge;
        std::vector<bool> on_stack(n, false);
        int counter = 0, comp_count = 0;

        for (size_t start = 0; start < n; ++start) {
            if (num[start] != -1)
                continue;
            call_node.push_back(start);
            call_edge.push_back(0);
            while (!call_node.empty()) {
                size_t u = call_node.back();
                if (call_edge.back() == 0) {
                    num[u] = low[u] = counter++;
                    stack.push_back(u);
                    on_stack[u] = true;
                }
                bool descended = false;
                while (call_edge.back() < adj_[u].size()) {
                    size_t v = adj_[u][call_edge.back()++];
                    if (num[v] == -1) {
                        call_node.push_back(v);
                        call_edge.push_back(0);
                        descended = true;
                        break;
                    }
                    if (on_stack[v])
                        low[u] = std::min(low[u], num[v]);
                }
                if (descended)
                    continue;
                if (low[u] == num[u]) {
                    size_t w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = comp_count;
                    } while (w != u);
                    ++comp_count;
                }
                call_node.pop_back();
                call_edge.pop_back();
                if (!call_node.empty()) {
                    size_t parent = call_node.back();
                    low[parent] = std::min(low[parent], low[u]);
                }
            }
        }
        return comp;
    }

private:
    std::vector<std::vector<size_t>> adj_;
};

}  // namespace

TwoSatResult solve_2sat(int num_vars, const std::vector<std::vector<int>>& clauses) {
    ImplicationGraph graph(num_vars);
    for (const auto& clause : clauses) {
        if (clause.empty() || clause.size() > 2)
            throw std::invalid_argument("solve_2sat: clause must have 1 or 2 literals");
        int a = clause[0];
        int b = clause.size() == 2 ? clause[1] : clause[0];
        graph.add_implication(-a, b);
        graph.add_implication(-b, a);
    }

    auto comp = graph.scc_components();
    TwoSatResult res;
    res.model.resize(static_cast<size_t>(num_vars));
    for (int v = 1; v <= num_vars; ++v) {
        int cp = comp[ImplicationGraph::node(v)];
        int cn = comp[ImplicationGraph::node(-v)];
        if (cp == cn)
            return {false, {}};
        // Tarjan numbers components in reverse topological order.
        res.model[static_cast<size_t>(v) - 1] = cp < cn;
    }
    res.sat = true;
    return res;
}

TwoSatResult solve_2sat(const TwoSatInstance& inst) {
    std::vector<std::vector<int>> clauses;
    for (const auto& [a, b] : inst.nand_clauses)
        clauses.push_back({-a, -b});
    for (size_t k = 0; k < inst.units.size(); ++k) {
        int v = inst.num_indicators + static_cast<int>(k) + 1;
        clauses.push_back({inst.units[k].value ? v : -v});
    }
    return solve_2sat(inst.num_vars(), clauses);
}

}  // namespace satred
