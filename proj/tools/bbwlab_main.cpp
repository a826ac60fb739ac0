// bbwlab: exact cohomology of equivariant bundles on (isotropic)
// Grassmannians, with certificate output, scenario verification, and replay
// of generation proofs.  Exit codes: 0 pass, 1 input error, 2 fail or
// inconclusive.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bbwlab/json_io.hpp"
#include "bbwlab/ktheory.hpp"
#include "bbwlab/ledger.hpp"
#include "bbwlab/odd_vanish.hpp"
#include "bbwlab/scenario.hpp"

#ifndef BBWLAB_DATA_DIR
#define BBWLAB_DATA_DIR "data"
#endif

namespace {

using namespace bbwlab;

GrassmannianSpec parse_space_arg(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3) throw std::invalid_argument("--space must be family:k:n");
    const int k = std::stoi(parts[1]);
    const int n = std::stoi(parts[2]);
    if (parts[0] == "gr") return GrassmannianSpec::gr(k, n);
    if (parts[0] == "igr" || parts[0] == "lgr") return GrassmannianSpec::igr(k, n);
    throw std::invalid_argument("unknown space family '" + parts[0] + "'");
}

void print_certificate(const Certificate& cert, bool quiet) {
    std::cout << cert.summary() << "\n";
    if (quiet) return;
    for (const auto& note : cert.notes) std::cout << "  note: " << note << "\n";
    for (const auto& leaf : cert.leaves) {
        std::cout << "  s=" << leaf.koszul_index << "  " << leaf.u_weight.str();
        if (leaf.q_weight.length() > 0) std::cout << " | " << leaf.q_weight.str();
        if (leaf.mult != 1) std::cout << " x" << leaf.mult;
        std::cout << "  -> " << leaf.outcome.str() << "  alpha=(";
        for (std::size_t i = 0; i < leaf.outcome.alpha.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << leaf.outcome.alpha[i];
        }
        std::cout << ")\n";
    }
}

int cmd_cohomology(const std::string& space_arg, const std::string& expr_text, bool as_json,
                   bool quiet) {
    const GrassmannianSpec space = parse_space_arg(space_arg);
    const BundleExpr expr = BundleExpr::parse(expr_text);
    const std::string claim = "H*(" + space.str() + ", " + expr.str() + ")";

    Certificate cert;
    if (space.family == Family::GrA) {
        cert = cohomology_on_gr(space, normalize(expr, space), claim);
    } else if (space.family == Family::IGrOdd) {
        cert = cohomology_on_X(space, expr);
        cert.notes.push_back("euler characteristic " + std::to_string(cert.euler) +
                             " (exact; alternating Koszul sum)");
    } else {
        cert = cohomology_on_igr_even(space, normalize(expr, space), claim);
    }

    if (as_json) {
        nlohmann::json j = with_schema(to_json(cert));
        std::cout << j.dump(2) << "\n";
    } else {
        print_certificate(cert, quiet);
    }
    return cert.verdict == Verdict::Inconclusive ? 2 : 0;
}

int cmd_verify(const std::string& scenario, const std::string& data_dir, bool as_json,
               bool quiet) {
    ScenarioResult res = run_scenario(scenario, data_dir);
    if (as_json) {
        std::cout << res.payload.dump(2) << "\n";
    } else {
        std::cout << res.id << ": " << res.verdict << "  (" << res.seconds << " s)\n";
        if (!quiet) {
            if (res.payload.contains("grid")) {
                const auto& g = res.payload["grid"];
                std::cout << "  cells: " << g["cells"] << ", identity " << g["identity_cells"]
                          << ", acyclic " << g["acyclic_cells"] << ", inconclusive "
                          << g["inconclusive_cells"] << "\n";
                for (const auto& f : g.value("failures", nlohmann::json::array()))
                    std::cout << "  FAIL " << f.get<std::string>() << "\n";
            }
            if (res.payload.contains("report"))
                std::cout << rank_consistency_igr37().summary();
            if (res.payload.contains("gram")) {
                const auto& g = res.payload["gram"];
                std::cout << "  unitriangular: " << g["unitriangular"] << ", determinant "
                          << g["determinant"] << "\n";
                std::cout << g["table"].get<std::string>();
            }
            if (res.payload.contains("replay")) {
                const auto& r = res.payload["replay"];
                std::cout << "  derivations " << r["derivations"] << ", derived members "
                          << r["derived_members"] << "\n";
                if (!r["pass"].get<bool>())
                    std::cout << "  FAIL at " << r["fail_step"] << ": "
                              << r["fail_reason"].get<std::string>() << "\n";
            }
        }
    }
    return res.exit_code();
}

int cmd_replay(const std::string& script_path, bool as_json, bool quiet) {
    ProofScript script = load_script(script_path);
    Ledger ledger(script);
    DeductionResult res = ledger.replay();
    if (as_json) {
        std::cout << with_schema(to_json(res)).dump(2) << "\n";
    } else {
        std::cout << (script.name.empty() ? script_path : script.name) << ": " << res.summary()
                  << "\n";
        if (!quiet && res.pass)
            std::cout << "  " << res.derivations_checked << " derivations, " << res.members
                      << " derived members, " << script.targets.size() << " targets\n";
    }
    return res.pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Borel-Bott-Weil cohomology and exceptional-collection verification"};
    app.require_subcommand(1);

    bool as_json = false, quiet = false;
    app.add_flag("--json", as_json, "emit JSON payloads (schema bbwlab/1)");
    app.add_flag("--quiet", quiet, "suppress per-leaf detail");
    std::string data_dir = BBWLAB_DATA_DIR;
    app.add_option("--data", data_dir, "data directory with scenarios/ and scripts/");

    std::string space = "igr:3:7", expr_text, scenario, script_path;

    auto* coh = app.add_subcommand("cohomology", "compute H*(X, E) with a certificate");
    coh->fallthrough();
    coh->add_option("--space", space, "family:k:n, e.g. gr:1:2 or igr:3:7");
    coh->add_option("expr", expr_text, "bundle expression, e.g. \"O(1)\" or \"Ud*wedge^2(Q)\"")
        ->required();

    auto* ver = app.add_subcommand("verify", "run a named or file scenario");
    ver->fallthrough();
    ver->add_option("scenario", scenario, "scenario name (e.g. igr37-main) or file path")
        ->required();

    auto* rep = app.add_subcommand("replay", "replay a deduction script");
    rep->fallthrough();
    rep->add_option("script", script_path, "script JSON path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage problems are input errors
    }

    try {
        if (coh->parsed()) return cmd_cohomology(space, expr_text, as_json, quiet);
        if (ver->parsed()) return cmd_verify(scenario, data_dir, as_json, quiet);
        if (rep->parsed()) return cmd_replay(script_path, as_json, quiet);
    } catch (const bbwlab::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
