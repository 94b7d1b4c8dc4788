#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "npv/commands.hpp"
#include "npv/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for multipoint Virasoro-type algebras"};
    app.require_subcommand(1);
    app.fallthrough();  // let --seed etc. appear after the subcommand

    std::string field_text;
    std::string points_text;
    std::uint64_t seed = 1;
    int iters = 300;
    int slack = 6;
    bool json_flag = false;
    app.add_option("--field", field_text, "monic modulus polynomial in s (default: plain Q)");
    app.add_option("--points", points_text, "comma-separated marked points, expressions in s")
        ->required();
    app.add_option("--seed", seed, "seed for the verify suites");
    app.add_option("--iters", iters, "iteration count for the verify suites");
    app.add_option("--slack", slack, "degree slack for bounded membership solves");
    app.add_flag("--json", json_flag, "emit JSON (always on; accepted for stability)");

    auto* aut = app.add_subcommand("aut", "automorphism group of the configuration");

    std::string other_points;
    auto* iso = app.add_subcommand("iso", "isomorphisms onto another configuration");
    iso->add_option("other", other_points, "target marked points")->required();

    std::string expr1, expr2;
    auto* bracket = app.add_subcommand("bracket", "Lie bracket of two derivations");
    bracket->add_option("f", expr1, "coefficient of the first derivation")->required();
    bracket->add_option("g", expr2, "coefficient of the second derivation")->required();

    int cocycle_index = 1;
    auto* cocycle = app.add_subcommand("cocycle", "value of the i-th cocycle");
    cocycle->add_option("-i,--index", cocycle_index, "cocycle index, 1-based")->required();
    cocycle->add_option("f", expr1, "coefficient of the first derivation")->required();
    cocycle->add_option("g", expr2, "coefficient of the second derivation")->required();

    std::string alpha_text, beta_text;
    auto* act = app.add_subcommand("act", "density-module action (f d).(g z)");
    act->add_option("--alpha", alpha_text, "comma-separated weights, one per point")->required();
    act->add_option("--beta", beta_text, "conformal weight")->required();
    act->add_option("f", expr1, "coefficient of the derivation")->required();
    act->add_option("g", expr2, "coefficient of the module element")->required();

    auto* irr = app.add_subcommand("irreducible", "irreducibility of V(alpha, beta)");
    irr->add_option("--alpha", alpha_text, "comma-separated weights, one per point")->required();
    irr->add_option("--beta", beta_text, "conformal weight")->required();

    std::string suite;
    auto* verify = app.add_subcommand("verify", "seeded property-check suites");
    verify->add_option("suite", suite,
                       "jacobi | cocycle | cor21 | cor41 | closedform | module-axiom")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        npv::Session session =
            npv::Session::from_flags(field_text, points_text, seed, iters, slack);
        auto split = [](const std::string& text) {
            std::vector<std::string> out;
            std::string cur;
            int depth = 0;
            for (char c : text) {
                if (c == '(') ++depth;
                if (c == ')') --depth;
                if (c == ',' && depth == 0) {
                    out.push_back(cur);
                    cur.clear();
                } else {
                    cur.push_back(c);
                }
            }
            out.push_back(cur);
            return out;
        };

        nlohmann::json out;
        if (aut->parsed()) out = npv::cmd_aut(session);
        else if (iso->parsed()) out = npv::cmd_iso(session, other_points);
        else if (bracket->parsed()) out = npv::cmd_bracket(session, expr1, expr2);
        else if (cocycle->parsed()) out = npv::cmd_cocycle(session, cocycle_index, expr1, expr2);
        else if (act->parsed())
            out = npv::cmd_act(session, split(alpha_text), beta_text, expr1, expr2);
        else if (irr->parsed()) out = npv::cmd_irreducible(session, split(alpha_text), beta_text);
        else if (verify->parsed()) out = npv::cmd_verify(session, suite);
        std::cout << out.dump(2) << "\n";
        return 0;
    } catch (const npv::Error& e) {
        std::cerr << npv::error_code_name(e.code()) << ": " << e.what() << "\n";
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
