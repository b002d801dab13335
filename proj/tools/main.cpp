#include "gha/io/suites.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <iostream>

using namespace gha;

namespace {

enum Exit { kPass = 0, kFail = 1, kInput = 2 };

LieAlgebra load_lie(const std::string& arg) {
    if (!std::filesystem::exists(arg)) {
        for (const auto& n : builtin_lie_names())
            if (n == arg) return builtin_lie(n);
        if (arg == "su2_corrupt") return builtin_lie(arg);
    }
    return lie_from_json(load_json_file(arg));
}

Json load_inline_or_file(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return parse_json_text(arg);
    return load_json_file(arg);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact graded homological algebra checks"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_text = false;
    auto* fmt = app.add_flag("--text", as_text, "Human-readable report");
    app.add_flag("--json", "JSON report (default)")->excludes(fmt);

    std::string lie, second, third;
    int trunc = 3, degree = 3, pages = 4, pmax = -1, length = 3;

    auto* verify = app.add_subcommand("verify", "Lie algebra, CE and Weil algebra, Cartan identities, alpha_CE");
    verify->add_option("algebra", lie, "Lie algebra file or built-in name")->required();
    verify->add_option("--trunc", trunc, "Weil truncation s")->check(CLI::NonNegativeNumber);

    auto* inv = app.add_subcommand("invariants", "Invariant polynomials against basic Weil elements");
    inv->add_option("algebra", lie)->required();
    inv->add_option("--degree", degree, "Largest polynomial degree k")->check(CLI::NonNegativeNumber);

    auto* cw = app.add_subcommand("chern-weil", "Chern-Weil image of an invariant polynomial");
    cw->add_option("algebra", lie)->required();
    cw->add_option("connection", second, "Connection file or inline JSON")->required();
    cw->add_option("polynomial", third, "Polynomial file or inline JSON")->required();

    auto* rv = app.add_subcommand("rep-verify", "Representation up to homotopy on a simplicial set");
    rv->add_option("sset", second)->required();
    rv->add_option("rep", third)->required();
    rv->add_option("--pmax", pmax, "Truncation dimension of the simplicial set")->check(CLI::NonNegativeNumber);

    auto* sp = app.add_subcommand("spectral", "Spectral sequence pages of a filtered complex");
    sp->add_option("input", second)->required();
    sp->add_option("--pages", pages, "Last page r")->check(CLI::NonNegativeNumber);

    auto* mc = app.add_subcommand("mc-check", "Maurer-Cartan equation in a DG Lie algebra, or alpha_CE for a Lie algebra");
    mc->add_option("input", second)->required();
    mc->add_option("--trunc", trunc)->check(CLI::NonNegativeNumber);

    auto* gm = app.add_subcommand("gauss-manin", "Cohomology of sections of the Gauss-Manin object");
    gm->add_option("algebra", lie)->required();
    gm->add_option("--trunc", trunc)->check(CLI::NonNegativeNumber);

    auto* ai = app.add_subcommand("ainfty-check", "Hochschild differential and A-infinity coherence on a DG category");
    ai->add_option("category", second)->required();
    ai->add_option("--length", length, "Largest word length")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInput;
    }

    Report rep;
    try {
        if (*verify) {
            rep = verify_suite(load_lie(lie), trunc);
        } else if (*inv) {
            rep = invariants_suite(load_lie(lie), degree);
        } else if (*cw) {
            LieAlgebra g = load_lie(lie);
            g.validate();
            rep = chern_weil_suite(connection_from_json(load_inline_or_file(second), g), load_inline_or_file(third));
        } else if (*rv) {
            SSetPtr K = sset_from_json(load_json_file(second), pmax);
            rep = rep_verify_suite(*K, rep_from_json(load_json_file(third), K));
        } else if (*sp) {
            rep = spectral_input_suite(load_json_file(second), pages);
        } else if (*mc) {
            Json j = load_json_file(second);
            if (j.contains("structure_constants") || j.value("schema", "") == "gha.lie/1") {
                rep = ce_object_suite(lie_from_json(j), trunc);
            } else {
                DGLieAlgebra L = dgla_from_json(j);
                if (!j.contains("element")) throw InputError("mc-check: missing field 'element'");
                rep = mc_check_suite(L, svec_from_json(j.at("element"), *L.space));
            }
        } else if (*gm) {
            rep = gauss_manin_suite(load_lie(lie), trunc);
        } else if (*ai) {
            rep = ainfty_suite(dgcat_from_json(load_json_file(second)), length);
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const Json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const StructuralError& e) {
        std::cerr << "structural failure: " << e.what() << "\n";
        return kFail;
    }

    rep.command.assign(argv + 1, argv + argc);
    rep.command.insert(rep.command.begin(), "gha");
    if (as_text)
        std::cout << rep.to_text();
    else
        std::cout << rep.to_json().dump(2) << "\n";
    return rep.ok() ? kPass : kFail;
}
