// Command-line front end over the satred C API.
#include "satred/satred.h"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open " << path << '\n';
        std::exit(1);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const char* text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << path << '\n';
        std::exit(1);
    }
    out << text;
}

satred_formula* parse_or_die(const std::string& path) {
    std::string text = read_file(path);
    satred_formula* f = nullptr;
    char* err = nullptr;
    if (satred_formula_parse(text.c_str(), &f, &err) != SATRED_OK) {
        std::cerr << "error: " << (err ? err : "parse failed") << '\n';
        satred_string_free(err);
        std::exit(1);
    }
    return f;
}

[[noreturn]] void die(const char* what, char* err) {
    std::cerr << "error: " << what;
    if (err)
        std::cerr << ": " << err;
    std::cerr << '\n';
    satred_string_free(err);
    std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SAT -> 2-SAT / 1-SAT reduction pipeline with a brute-force referee"};
    app.require_subcommand(1);
    app.set_version_flag("--version", satred_version());

    std::string input, output, target;
    int var_limit = 26;

    auto* reduce = app.add_subcommand("reduce", "emit the 2-SAT or 1-SAT reduction as DIMACS");
    reduce->add_option("input", input, "input DIMACS CNF file")->required();
    reduce->add_option("--to", target, "reduction target")
        ->required()
        ->check(CLI::IsMember({"2sat", "1sat"}));
    reduce->add_option("-o,--output", output, "output file (default stdout)");

    auto* solve = app.add_subcommand("solve", "pipeline verdict; exit 10 = sat, 20 = unsat");
    solve->add_option("input", input, "input DIMACS CNF file")->required();

    auto* oracle = app.add_subcommand("oracle", "brute-force verdict; exit 10 = sat, 20 = unsat");
    oracle->add_option("input", input, "input DIMACS CNF file")->required();
    oracle->add_option("--var-limit", var_limit, "enumeration variable limit (default 26)");

    int vars = 2, clauses = 2, width = 2, count = 0;
    uint64_t seed = 0;
    bool exhaustive = false;
    auto* mine = app.add_subcommand("mine", "generate instances, referee the claims, emit a JSON report");
    mine->add_option("--vars", vars, "max variables")->required();
    mine->add_option("--clauses", clauses, "max clauses")->required();
    mine->add_option("--width", width, "max clause width")->required();
    mine->add_option("--seed", seed, "random seed");
    mine->add_option("--count", count, "random sample count");
    mine->add_flag("--exhaustive", exhaustive, "enumerate the whole instance space");
    mine->add_option("-o,--output", output, "report file (default stdout)");

    auto* verify = app.add_subcommand("verify", "single comparison record as JSON on stdout");
    verify->add_option("input", input, "input DIMACS CNF file")->required();

    CLI11_PARSE(app, argc, argv);

    if (reduce->parsed()) {
        satred_formula* f = parse_or_die(input);
        char* text = nullptr;
        satred_status st = target == "2sat" ? satred_reduce_2sat(f, &text)
                                            : satred_reduce_1sat(f, &text);
        satred_formula_free(f);
        if (st != SATRED_OK)
            die("reduction failed", nullptr);
        write_output(output, text);
        satred_string_free(text);
        return 0;
    }

    if (solve->parsed()) {
        satred_formula* f = parse_or_die(input);
        satred_verdict v;
        satred_status st = satred_solve(f, &v);
        satred_formula_free(f);
        if (st != SATRED_OK)
            die("solve failed", nullptr);
        std::cout << (v == SATRED_SAT ? "s SATISFIABLE" : "s UNSATISFIABLE") << '\n';
        return v;
    }

    if (oracle->parsed()) {
        satred_formula* f = parse_or_die(input);
        satred_verdict v;
        char* err = nullptr;
        satred_status st = satred_oracle(f, var_limit, &v, &err);
        satred_formula_free(f);
        if (st != SATRED_OK)
            die("oracle failed", err);
        std::cout << (v == SATRED_SAT ? "s SATISFIABLE" : "s UNSATISFIABLE") << '\n';
        return v;
    }

    if (mine->parsed()) {
        if (!exhaustive && count <= 0)
            die("mine needs --count N or --exhaustive", nullptr);
        char* json = nullptr;
        char* err = nullptr;
        satred_status st =
            satred_mine(vars, clauses, width, exhaustive ? 1 : 0, seed, count, &json, &err);
        if (st != SATRED_OK)
            die("mine failed", err);
        write_output(output, json);
        satred_string_free(json);
        return 0;
    }

    if (verify->parsed()) {
        satred_formula* f = parse_or_die(input);
        char* json = nullptr;
        char* err = nullptr;
        satred_status st = satred_verify(f, &json, &err);
        satred_formula_free(f);
        if (st != SATRED_OK)
            die("verify failed", err);
        std::cout << json;
        satred_string_free(json);
        return 0;
    }
    return 1;
}
