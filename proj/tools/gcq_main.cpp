#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gcq/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"division-free minimal period and (x-1)-multiplicity over GF(q)"};
    app.require_subcommand(1);

    gcq::RunConfig cfg;
    std::string inline_input;
    std::string input_path;

    auto add_q = [&](CLI::App* sub) {
        sub->add_option("--q", cfg.q, "field order (prime power, at most 2^16)")->required();
    };
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--in", inline_input,
                        "inline input: comma/whitespace-separated encodings, or 0x hex for q=2");
        sub->add_option("--file", input_path, "read input from this file");
    };

    CLI::App* mp = app.add_subcommand(
        "mp", "minimal period (linear complexity) of a sequence given by one period block");
    add_q(mp);
    add_input(mp);
    mp->add_flag("--json", cfg.json, "emit the recursion trace as one JSON line");
    mp->add_flag("--paper-literal", cfg.paper_literal,
                 "run the published recurrence verbatim (wrong for q > 2)");
    mp->add_flag("--no-shortcut", cfg.no_shortcut, "disable the block-sum early exit");

    CLI::App* mult =
        app.add_subcommand("mult", "multiplicity of (x-1) in a polynomial (coefficients c0,c1,...)");
    add_q(mult);
    add_input(mult);
    mult->add_flag("--json", cfg.json, "emit the recursion trace as one JSON line");

    CLI::App* verify = app.add_subcommand(
        "verify", "cross-check the recursion against the gcd oracle and planted instances");
    add_q(verify);
    verify->add_option("--n", cfg.n, "period exponent: blocks have length q^n")
        ->capture_default_str();
    verify->add_option("--mode", cfg.mode, "exhaustive | random")->capture_default_str();
    verify->add_option("--algorithm", cfg.algorithm, "corrected | paper-literal")
        ->capture_default_str();
    verify->add_option("--seed", cfg.seed, "seed for random mode and planted instances")
        ->capture_default_str();
    verify->add_option("--count", cfg.count, "random-mode sample count / planted case count")
        ->capture_default_str();
    verify->add_flag("--json", cfg.json, "emit the report as one JSON line");

    CLI::App* bench =
        app.add_subcommand("bench", "time the recursion, the q=2 bit-packed path, and the oracle");
    add_q(bench);
    bench->add_option("--n", cfg.n, "period exponent: the input has length q^n")
        ->capture_default_str();
    bench->add_option("--seed", cfg.seed, "seed for the benchmark input")->capture_default_str();
    bench->add_option("--count", cfg.count, "repetitions; the best time is reported")
        ->default_val(5);

    CLI::App* field = app.add_subcommand("field", "print characteristic, extension degree, modulus");
    add_q(field);
    field->add_flag("--json", cfg.json, "emit the field description as one JSON line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message to the error stream
        return 1;
    }

    CLI::App* sub = app.get_subcommands().front();
    if (sub == mp)
        cfg.command = gcq::Command::mp;
    else if (sub == mult)
        cfg.command = gcq::Command::mult;
    else if (sub == verify)
        cfg.command = gcq::Command::verify;
    else if (sub == bench) {
        cfg.command = gcq::Command::bench;
        if (!sub->count("--count")) cfg.count = 5;
    } else
        cfg.command = gcq::Command::field_info;

    const CLI::Option* in_opt = sub->get_option_no_throw("--in");
    if (in_opt && in_opt->count()) cfg.inline_input = inline_input;
    const CLI::Option* file_opt = sub->get_option_no_throw("--file");
    if (file_opt && file_opt->count()) cfg.input_path = input_path;

    return gcq::run(cfg, std::cin, std::cout, std::cerr);
}
