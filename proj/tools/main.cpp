// Command-line front end: capacity, dominated-type enumeration, homology
// tables, abelian-group decompositions, and the brute-force verifier.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "borsuk/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Capacity and homology calculator for classified polyhedra"};
    app.require_subcommand(1);

    borsuk::cli::Options options;
    app.add_flag("--json", options.json, "emit a machine-readable document instead of text");

    std::string expr;
    auto* capacity = app.add_subcommand("capacity", "capacity of a space expression");
    capacity->add_option("expr", expr, "space expression, e.g. \"S2 x S3\"")->required();

    auto* dominated =
        app.add_subcommand("dominated", "enumerate the dominated homotopy types");
    dominated->add_option("expr", expr, "space expression")->required();

    std::optional<int> max_dim;
    auto* homology = app.add_subcommand("homology", "integral homology table");
    homology->add_option("expr", expr, "space expression")->required();
    homology->add_option("--max-dim", max_dim, "top dimension of the table")
        ->check(CLI::NonNegativeNumber);

    std::string literal;
    auto* group = app.add_subcommand("group", "canonical form of an abelian group literal");
    group->add_option("literal", literal, "group literal, e.g. \"Z^2 + Z/4 + Z/2\"")->required();

    int max_order = 64;
    auto* oracle = app.add_subcommand("oracle", "brute-force cross-checks");
    auto* verify = oracle->add_subcommand(
        "verify", "compare brute-force summand classes against structure theory");
    verify->add_option("--max-order", max_order, "largest group order to check (default 64)");
    oracle->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    borsuk::cli::Command command;
    if (capacity->parsed()) {
        command = borsuk::cli::CapacityCommand{expr};
    } else if (dominated->parsed()) {
        command = borsuk::cli::DominatedCommand{expr};
    } else if (homology->parsed()) {
        command = borsuk::cli::HomologyCommand{expr, max_dim};
    } else if (group->parsed()) {
        command = borsuk::cli::GroupCommand{literal};
    } else {
        command = borsuk::cli::OracleVerifyCommand{max_order};
    }
    return borsuk::cli::run(command, options, std::cout, std::cerr);
}
