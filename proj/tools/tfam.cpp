#include "tfam/calculus.hpp"
#include "tfam/construct.hpp"
#include "tfam/errors.hpp"
#include "tfam/familyfile.hpp"
#include "tfam/rank.hpp"
#include "tfam/suites.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

namespace {

// Scheme arguments accept either a file path or an inline JSON object.
tfam::Scheme scheme_arg(const std::string& arg) {
    size_t i = arg.find_first_not_of(" \t\n\r");
    if (i != std::string::npos && arg[i] == '{') return tfam::parse_scheme_json(arg);
    return tfam::load_scheme(arg);
}

void emit_family(const tfam::Family& f, const std::string& out) {
    if (out.empty())
        std::cout << tfam::family_json(f) << "\n";
    else
        tfam::save_family(f, out);
}

std::string rank_str(const tfam::RankResult& r) {
    if (r.is_infinite) return "RS=INF ds=0";
    return "RS=" + std::to_string(r.rank) + " ds=" + std::to_string(r.degree);
}

void print_result(const tfam::CheckResult& r) {
    char line[512];
    std::snprintf(line, sizeof line, "%-22s %s  %s (%.2fs)", r.name.c_str(),
                  r.passed ? "PASS" : "FAIL", r.detail.c_str(), r.seconds);
    std::cout << line << "\n";
}

int cmd_check(const std::string& suite, uint64_t seed) {
    std::vector<tfam::CheckResult> results;
    if (suite == "all") {
        for (const std::string& name : tfam::suite_names()) {
            results.push_back(tfam::run_suite(name, seed));
            print_result(results.back());
        }
        for (tfam::CheckResult& r : tfam::run_acceptance()) {
            print_result(r);
            results.push_back(std::move(r));
        }
    } else if (suite == "acceptance") {
        for (tfam::CheckResult& r : tfam::run_acceptance()) {
            print_result(r);
            results.push_back(std::move(r));
        }
    } else {
        results.push_back(tfam::run_suite(suite, seed));
        print_result(results.back());
    }
    size_t failed = 0;
    for (const auto& r : results)
        if (!r.passed) ++failed;
    if (failed) {
        std::cout << failed << " of " << results.size() << " checks failed\n";
        return 2;
    }
    std::cout << "all " << results.size() << " checks passed\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decidable operations on closed regular families of complete theories"};
    app.require_subcommand(1);

    std::string file, out, phi_text, psi_text, lhs_text, rhs_text;
    std::string rank_text, suite = "all";
    uint64_t degree = 1, seed = 0;

    auto* rank_cmd = app.add_subcommand("rank", "Rank and degree of a family");
    rank_cmd->add_option("family", file, "family file")->required();

    auto* closure_cmd = app.add_subcommand("closure", "Close a family under accumulation points");
    closure_cmd->add_option("family", file, "family file")->required();
    closure_cmd->add_option("-o,--out", out, "output file (default: stdout)");

    auto* restrict_cmd = app.add_subcommand("restrict", "Restrict a family by a sentence");
    restrict_cmd->add_option("family", file, "family file")->required();
    auto* rphi = restrict_cmd->add_option("--phi", phi_text, "restricting sentence")->required();
    restrict_cmd->add_option("-o,--out", out, "output file (default: stdout)");

    auto* forces_cmd = app.add_subcommand("forces", "Decide forcing over a family");
    forces_cmd->add_option("family", file, "family file")->required();
    auto* fphi = forces_cmd->add_option("--phi", phi_text, "left sentence");
    auto* fpsi = forces_cmd->add_option("--psi", psi_text, "right sentence");
    auto* flhs = forces_cmd->add_option("--lhs-scheme", lhs_text, "left scheme (file or inline JSON)");
    auto* frhs = forces_cmd->add_option("--rhs-scheme", rhs_text, "right scheme (file or inline JSON)");
    fphi->needs(fpsi);
    fpsi->needs(fphi);
    flhs->needs(frhs);
    frhs->needs(flhs);
    fphi->excludes(flhs)->excludes(frhs);
    fpsi->excludes(flhs)->excludes(frhs);

    auto* construct_cmd = app.add_subcommand("construct", "Build a family of prescribed rank");
    construct_cmd->add_option("--rank", rank_text, "target rank (ordinal, e.g. 2 or w^2 + 1)")
        ->required();
    construct_cmd->add_option("--degree", degree, "target degree")->required();
    construct_cmd->add_option("-o,--out", out, "output family or recipe file");

    auto* decompose_cmd = app.add_subcommand("decompose", "Split a closed family into blocks");
    decompose_cmd->add_option("family", file, "family file")->required();

    auto* witness_cmd =
        app.add_subcommand("witness_nonsdef", "A point definable by a scheme but by no sentence");
    witness_cmd->add_option("family", file, "family file")->required();

    auto* check_cmd = app.add_subcommand("check", "Run the property and acceptance suites");
    check_cmd->add_option("--suite", suite,
                          "suite name, 'acceptance', or 'all' (default: all)");
    check_cmd->add_option("--seed", seed, "random seed (default: 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(rank_cmd)) {
            std::cout << rank_str(tfam::rank(tfam::load_family(file))) << "\n";
        } else if (app.got_subcommand(closure_cmd)) {
            emit_family(tfam::closure(tfam::load_family(file)), out);
        } else if (app.got_subcommand(restrict_cmd)) {
            (void)rphi;
            emit_family(tfam::restrict(tfam::load_family(file), tfam::parse_sentence(phi_text)),
                        out);
        } else if (app.got_subcommand(forces_cmd)) {
            tfam::Family f = tfam::load_family(file);
            bool verdict;
            if (fphi->count()) {
                verdict = tfam::forces(f, tfam::parse_sentence(phi_text),
                                       tfam::parse_sentence(psi_text));
            } else if (flhs->count()) {
                verdict = tfam::forces_scheme(f, scheme_arg(lhs_text), scheme_arg(rhs_text));
            } else {
                std::cerr << "forces: provide --phi/--psi or --lhs-scheme/--rhs-scheme\n";
                return 1;
            }
            std::cout << (verdict ? "YES" : "NO") << "\n";
        } else if (app.got_subcommand(construct_cmd)) {
            tfam::OrdinalCnf alpha = tfam::OrdinalCnf::parse(rank_text);
            if (alpha.is_finite()) {
                int a = static_cast<int>(std::min<uint64_t>(alpha.finite_value(), 65));
                tfam::RankingReport rep = tfam::build_family(a, degree);
                if (!out.empty()) tfam::save_family(*rep.witness, out);
                std::cout << "verified (" << alpha.str() << "," << degree << ")\n";
            } else {
                tfam::FamilyExpr rec = tfam::build_recipe(alpha, degree);
                if (!out.empty()) {
                    std::ofstream os(out);
                    if (!os) throw tfam::error("cannot write file: " + out);
                    os << "{\"kind\":\"expr\",\"expr\":" << tfam::expr_json(rec) << "}\n";
                } else {
                    std::cout << rec.str() << "\n";
                }
                std::cout << "recipe (" << alpha.str() << "," << degree
                          << "); transfinite rank, no finite-state witness\n";
            }
        } else if (app.got_subcommand(decompose_cmd)) {
            for (const auto& [s, blk] : tfam::decompose(tfam::load_family(file)))
                std::cout << s.str() << "  [" << rank_str(tfam::rank(blk)) << "]\n";
        } else if (app.got_subcommand(witness_cmd)) {
            auto [t, sch] = tfam::nonsdefinable_witness(tfam::load_family(file));
            std::cout << t.str() << "\n" << sch.str() << "\n";
        } else if (app.got_subcommand(check_cmd)) {
            return cmd_check(suite, seed);
        }
    } catch (const tfam::error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
