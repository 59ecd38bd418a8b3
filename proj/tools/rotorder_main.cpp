#include <CLI11.hpp>

#include <iostream>

#include "rotorder/cli_commands.hpp"
#include "rotorder/errors.hpp"

namespace {

void emit(const rotorder::Report& rep, bool as_json) {
    if (as_json) {
        std::cout << rep.data.dump(2) << "\n";
    } else {
        for (const auto& line : rep.lines) std::cout << line << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rotorder — exact order decisions for products of finite-order rotations"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit the machine-readable report");

    std::string family;
    unsigned long minpoly_n = 0;
    auto* minpoly = app.add_subcommand("minpoly", "print a polynomial family member");
    minpoly->add_option("family", family, "psi|eta|cyclotomic|chebyshev")->required();
    minpoly->add_option("n", minpoly_n, "family index")->required();

    std::string decide_phi;
    auto* decide = app.add_subcommand("decide", "decide the perpendicular equal-angle product");
    decide->add_option("phi", decide_phi, "angle as p/q in units of π")->required();

    std::string gate_file, action = "product", gates_phi;
    unsigned max_len = 3;
    auto* gates = app.add_subcommand("gates", "analyze a gate set file");
    gates->add_option("file", gate_file, "gate-set JSON file")->required();
    gates->add_option("--action", action, "product|ht|search")->required();
    gates->add_option("--phi", gates_phi, "angle for the ht action, p/q in units of π");
    gates->add_option("--max-len", max_len, "maximum word length for search");

    unsigned qmax = 0;
    auto* sweep = app.add_subcommand("sweep", "verdicts vs numeric oracle over all q <= qmax");
    sweep->add_option("--qmax", qmax, "largest angle denominator")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        rotorder::Report rep;
        if (*minpoly)
            rep = rotorder::cmd_minpoly(family, minpoly_n);
        else if (*decide)
            rep = rotorder::cmd_decide(decide_phi);
        else if (*gates)
            rep = rotorder::cmd_gates(gate_file, action, gates_phi, max_len);
        else
            rep = rotorder::cmd_sweep(qmax);
        emit(rep, as_json);
        return rep.exit_code;
    } catch (const rotorder::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
