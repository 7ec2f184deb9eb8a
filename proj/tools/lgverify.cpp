#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lgv/abelmono.hpp"
#include "lgv/extalg.hpp"
#include "lgv/sdrep.hpp"
#include "lgv/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitChecksFailed = 1;
constexpr int kExitUsage = 2;

int emit(const lgv::verify::VerificationReport& report, bool json, bool quiet) {
    if (json)
        std::cout << lgv::verify::to_json(report);
    else
        std::cout << lgv::verify::to_text(report, quiet);
    return report.failed == 0 ? kExitOk : kExitChecksFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lgverify: exact-arithmetic verification suite for the LG-surface "
                 "construction (kernel bounds, invariant forms, intersection lattices, "
                 "torsion monodromy, elliptic quotients)"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    bool json = false, quiet = false;
    app.add_flag("--json", json, "emit the machine-readable report on stdout");
    app.add_flag("--quiet", quiet, "print only the summary line");

    auto* all = app.add_subcommand("all", "run every registered check");
    std::string only;
    all->add_option("--only", only, "restrict to one check group")
        ->check(CLI::IsMember(lgv::verify::known_groups()));

    auto* rep = app.add_subcommand("rep", "representation-theoretic checks");
    int rep_d = 0, rep_q = 0, rep_p = 0;
    rep->add_option("--d", rep_d, "covering degree");
    rep->add_option("--q", rep_q, "irregularity downstairs");
    rep->add_option("--p", rep_p, "form degree");

    auto* form = app.add_subcommand("form", "exterior-algebra checks");
    int form_d = 0;
    form->add_option("--d", form_d, "covering degree for the sum-form rank");

    app.add_subcommand("lattice", "intersection-lattice checks");

    auto* mono = app.add_subcommand("monodromy", "torsion monodromy checks");
    int mono_mod = 0;
    mono->add_option("--mod", mono_mod, "torsion order for the orbit of (1,0,0,0)")
        ->check(CLI::Range(2, 5));

    app.add_subcommand("elliptic", "elliptic quotient checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        lgv::verify::Options options;
        if (app.got_subcommand(all)) {
            options.only = only;
            return emit(lgv::verify::run_all(options), json, quiet);
        }
        if (app.got_subcommand(rep)) {
            if ((rep_d || rep_q || rep_p) && !json) {
                if (!(rep_d && rep_q && rep_p)) {
                    std::cerr << "rep: --d, --q and --p must be given together\n";
                    return kExitUsage;
                }
                auto kb = lgv::sdrep::kernel_lower_bound(rep_d, rep_q, rep_p);
                std::cout << "kernel_lower_bound(d=" << rep_d << ", q=" << rep_q
                          << ", p=" << rep_p << ") = (" << kb.bound << ", "
                          << kb.trivial_copies << ")\n";
            }
            options.only = "rep";
            return emit(lgv::verify::run_all(options), json, quiet);
        }
        if (app.got_subcommand(form)) {
            if (form_d && !json) {
                lgv::extalg::FormSpace s(form_d, 2);
                std::cout << "two_form_rank(d=" << form_d << ", q=2) = "
                          << lgv::extalg::two_form_rank(
                                 lgv::extalg::build_sum_form(s, {1, 2}))
                          << "\n";
            }
            options.only = "form";
            return emit(lgv::verify::run_all(options), json, quiet);
        }
        if (app.got_subcommand("lattice")) {
            options.only = "lattice";
            return emit(lgv::verify::run_all(options), json, quiet);
        }
        if (app.got_subcommand(mono)) {
            if (mono_mod && !json) {
                auto table = lgv::abelmono::tau_generators();
                std::vector<lgv::abelmono::IntMatrix4> gens(table.begin(), table.end());
                auto o = lgv::abelmono::orbit(
                    lgv::abelmono::TorsionVector(mono_mod, {1, 0, 0, 0}), gens);
                std::cout << "orbit of (1,0,0,0) mod " << mono_mod << ": " << o.size()
                          << " elements\n";
            }
            options.only = "monodromy";
            return emit(lgv::verify::run_all(options), json, quiet);
        }
        options.only = "elliptic";
        return emit(lgv::verify::run_all(options), json, quiet);
    } catch (const std::exception& e) {
        std::cerr << "lgverify: " << e.what() << "\n";
        return kExitUsage;
    }
}
