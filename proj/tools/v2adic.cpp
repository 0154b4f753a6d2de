// Command-line front end: every operation behind JSON (default) or CSV output.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "v2adic/analyzer.hpp"
#include "v2adic/dyadic.hpp"
#include "v2adic/oracle.hpp"
#include "v2adic/predictor.hpp"
#include "v2adic/valuation.hpp"

using nlohmann::json;
using namespace v2adic;

namespace {

constexpr int kExitPrecondition = 2;
constexpr int kExitCapExhausted = 3;
constexpr int kExitUsage = 64;

BigInt parse_bigint(const std::string& s, const std::string& name) {
    try {
        return BigInt(s);
    } catch (const std::exception&) {
        throw std::invalid_argument(name + ": not an integer: " + s);
    }
}

json prediction_json(const Prediction& p) {
    return {{"kind", p.is_exact() ? "Exact" : "AtLeast"}, {"value", p.value}};
}

std::string valuation_cell(const Prediction& p) {
    if (p.is_exact()) return std::to_string(p.value);
    return ">=" + std::to_string(p.value);
}

struct CapExhausted {};

void check_strict(const Prediction& p, bool strict) {
    if (strict && !p.is_exact())
        throw CapExhausted{};
}

int run(int argc, char** argv) {
    CLI::App app{"2-adic valuation of a^b - c^d: predictors, exact oracle, "
                 "periodicity tables and a truncated 2-adic solver"};
    app.require_subcommand(1);

    std::string arg_n, arg_a, arg_b, arg_c, arg_d;
    std::string prime = "2";
    std::uint64_t cap = kDefaultOracleCap;
    bool strict = false;
    bool use_paper = false, use_refined = false;
    std::uint64_t from = 1, to = 50;
    std::string format = "json";
    std::uint64_t precision = 512;
    if (const char* env = std::getenv("DYADIC_PRECISION"))
        precision = std::strtoull(env, nullptr, 10);
    std::string dbase = "2";
    std::uint64_t m_from = 3, m_to = 8;

    auto* val = app.add_subcommand("val", "p-adic valuation of an integer");
    val->add_option("N", arg_n)->required();
    val->add_option("--prime", prime, "valuation prime (default 2)");

    auto* predict = app.add_subcommand("predict", "closed-form prediction of v2(a^b - c^d)");
    predict->add_option("A", arg_a)->required();
    predict->add_option("B", arg_b)->required();
    predict->add_option("C", arg_c)->required();
    predict->add_option("D", arg_d)->required();
    auto* paper_flag = predict->add_flag("--paper", use_paper, "verbatim theorem prediction");
    predict->add_flag("--refined", use_refined, "sharpened prediction (default)")
        ->excludes(paper_flag);

    auto* oracle = app.add_subcommand("oracle", "exact v2(a^b - c^d) via modular doubling");
    oracle->add_option("A", arg_a)->required();
    oracle->add_option("B", arg_b)->required();
    oracle->add_option("C", arg_c)->required();
    oracle->add_option("D", arg_d)->required();
    oracle->add_option("--cap", cap, "precision cap in bits (default 4096)");
    oracle->add_flag("--strict", strict, "exit 3 if the cap is reached");

    auto* scan_cmd = app.add_subcommand("scan", "valuation of a^n - c^d over a range of n");
    scan_cmd->add_option("A", arg_a)->required();
    scan_cmd->add_option("C", arg_c)->required();
    scan_cmd->add_option("D", arg_d)->required();
    scan_cmd->add_option("--from", from)->required();
    scan_cmd->add_option("--to", to)->required();
    scan_cmd->add_option("--cap", cap);
    scan_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    scan_cmd->add_flag("--strict", strict);

    auto* table = app.add_subcommand("table", "periodicity table of a scan");
    table->add_option("A", arg_a)->required();
    table->add_option("C", arg_c)->required();
    table->add_option("D", arg_d)->required();
    table->add_option("--from", from)->required();
    table->add_option("--to", to)->required();
    table->add_option("--cap", cap);
    table->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* solve = app.add_subcommand("solve", "2-adic exponent solving a^b = c^d");
    solve->add_option("A", arg_a)->required();
    solve->add_option("C", arg_c)->required();
    solve->add_option("D", arg_d)->required();
    solve->add_option("--precision", precision, "digits of the solution (default 512)");

    auto* limit = app.add_subcommand("limit", "valuation grid for a^n - c^(dbase^m)");
    limit->add_option("A", arg_a)->required();
    limit->add_option("C", arg_c)->required();
    limit->add_option("--dbase", dbase);
    limit->add_option("--m-from", m_from)->required();
    limit->add_option("--m-to", m_to)->required();
    limit->add_option("--from", from)->required();
    limit->add_option("--to", to)->required();
    limit->add_option("--cap", cap);
    limit->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    limit->add_flag("--strict", strict);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    if (val->parsed()) {
        Valuation v = vp_extended(parse_bigint(arg_n, "N"), parse_bigint(prime, "prime"));
        json out;
        if (v.is_infinite())
            out["valuation"] = "infinity";
        else
            out["valuation"] = v.value();
        std::cout << out.dump() << "\n";
        return 0;
    }

    if (predict->parsed()) {
        PowerDiffQuery q(parse_bigint(arg_a, "A"), parse_bigint(arg_b, "B"),
                         parse_bigint(arg_c, "C"), parse_bigint(arg_d, "D"));
        Prediction p = use_paper ? predict_paper(q) : predict_refined(q);
        json out = prediction_json(p);
        out["regime"] = classify(q).name();
        std::cout << out.dump() << "\n";
        return 0;
    }

    if (oracle->parsed()) {
        Prediction p = v2_oracle(parse_bigint(arg_a, "A"), parse_bigint(arg_b, "B"),
                                 parse_bigint(arg_c, "C"), parse_bigint(arg_d, "D"), cap);
        std::cout << prediction_json(p).dump() << "\n";
        check_strict(p, strict);
        return 0;
    }

    if (scan_cmd->parsed()) {
        auto rows = scan(parse_bigint(arg_a, "A"), parse_bigint(arg_c, "C"),
                         parse_bigint(arg_d, "D"), from, to, cap);
        if (format == "csv") {
            std::cout << "n,valuation\n";
            for (const auto& r : rows)
                std::cout << r.n << "," << valuation_cell(r.valuation) << "\n";
        } else {
            json out = json::array();
            for (const auto& r : rows) {
                json row = prediction_json(r.valuation);
                row["n"] = r.n;
                out.push_back(row);
            }
            std::cout << out.dump() << "\n";
        }
        for (const auto& r : rows) check_strict(r.valuation, strict);
        return 0;
    }

    if (table->parsed()) {
        auto rows = scan(parse_bigint(arg_a, "A"), parse_bigint(arg_c, "C"),
                         parse_bigint(arg_d, "D"), from, to, cap);
        auto classes = infer_period_table(rows);
        if (format == "csv") {
            std::cout << "residue,modulus,valuation,verified_through\n";
            for (const auto& cls : classes) {
                if (cls.irregular) {
                    std::cerr << "irregular level " << cls.valuation << " (no residue class)\n";
                    continue;
                }
                std::cout << cls.residue << "," << cls.modulus << "," << cls.valuation << ","
                          << cls.verified_through << "\n";
            }
        } else {
            json out = json::array();
            for (const auto& cls : classes) {
                json row{{"valuation", cls.valuation},
                         {"verified_through", cls.verified_through},
                         {"irregular", cls.irregular},
                         {"lower_bound", cls.lower_bound}};
                if (!cls.irregular) {
                    row["residue"] = cls.residue;
                    row["modulus"] = cls.modulus;
                } else {
                    row["members"] = cls.members;
                }
                out.push_back(row);
            }
            std::cout << out.dump() << "\n";
        }
        return 0;
    }

    if (solve->parsed()) {
        DyadicInt beta = solve_exponent(parse_bigint(arg_a, "A"), parse_bigint(arg_c, "C"),
                                        parse_bigint(arg_d, "D"), precision);
        json out{{"residue", beta.residue.str()},
                 {"precision", beta.precision},
                 {"digit_positions", digit_positions(beta)}};
        std::cout << out.dump() << "\n";
        return 0;
    }

    if (limit->parsed()) {
        auto grid = limit_profile(parse_bigint(arg_a, "A"), parse_bigint(arg_c, "C"),
                                  parse_bigint(dbase, "dbase"), m_from, m_to, from, to, cap);
        if (format == "csv") {
            std::cout << "n,m,valuation,conjectured\n";
            for (std::size_t i = 0; i < grid.ns.size(); ++i)
                for (std::size_t j = 0; j < grid.ms.size(); ++j) {
                    std::cout << grid.ns[i] << "," << grid.ms[j] << ","
                              << valuation_cell(grid.cells[i][j]) << ",";
                    if (grid.conjectured[i])
                        std::cout << *grid.conjectured[i];
                    std::cout << "\n";
                }
        } else {
            json out = json::array();
            for (std::size_t i = 0; i < grid.ns.size(); ++i)
                for (std::size_t j = 0; j < grid.ms.size(); ++j) {
                    json row = prediction_json(grid.cells[i][j]);
                    row["n"] = grid.ns[i];
                    row["m"] = grid.ms[j];
                    if (grid.conjectured[i])
                        row["conjectured"] = *grid.conjectured[i];
                    out.push_back(row);
                }
            std::cout << out.dump() << "\n";
        }
        for (const auto& row : grid.cells)
            for (const auto& cell : row) check_strict(cell, strict);
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CapExhausted&) {
        std::cerr << "precision cap exhausted; valuation reported as a lower bound\n";
        return kExitCapExhausted;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::domain_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    }
}
