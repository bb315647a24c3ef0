// assoc: build association schemes and compute effective resistances.
#include <iostream>

#include <CLI11.hpp>

#include "assoc/commands.hpp"
#include "assoc/error.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Association schemes and effective resistances"};
    app.require_subcommand(1);

    assoc::BuildOptions build;
    std::string preset;
    auto* build_cmd = app.add_subcommand("build", "Build a scheme and write it as JSON");
    build_cmd->add_option("builder", build.builder,
                          "cycle | hypercube | triangular | group | s4 | s4-refined-a | s4-refined-b | z5z5 | square | hexagonal")
        ->required();
    build_cmd->add_option("--preset", preset, "group preset: s4, s4-refined-a, s4-refined-b");
    long n = 0, m = 0;
    auto* n_opt = build_cmd->add_option("--n", n, "cycle length, hypercube dimension or triangular n");
    auto* m_opt = build_cmd->add_option("--m", m, "lattice period");
    build_cmd->add_option("--out,-o", build.out_path, "output file (default: JSON on stdout)");

    assoc::ResistOptions resist;
    auto* resist_cmd = app.add_subcommand("resist", "Effective resistances per class");
    resist_cmd->add_option("scheme", resist.scheme_path, "scheme JSON file")->required()->check(CLI::ExistingFile);
    resist_cmd->add_option("--conductances,-c", resist.conductances, "c_1,...,c_d as decimals or p/q (default 1)");
    resist_cmd->add_option("--method", resist.methods, "oracle, spectral, polynomial, closed or all")->delimiter(',');
    resist_cmd->add_option("--out,-o", resist.out_path, "write the report here");
    resist_cmd->add_option("--format", resist.format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    resist_cmd->add_option("--tolerance", resist.tolerance, "method agreement tolerance");

    assoc::InfiniteOptions infinite;
    auto* inf_cmd = app.add_subcommand("infinite", "Resistance on an infinite lattice by quadrature");
    inf_cmd->add_option("kind", infinite.kind, "line | square | hexagonal")
        ->required()
        ->check(CLI::IsMember({"line", "square", "hexagonal"}));
    inf_cmd->add_option("--l", infinite.separation, "separation (one value for line, two for lattices)")
        ->required()
        ->expected(1, 2);
    bool no_check = false;
    inf_cmd->add_flag("--no-check", no_check, "skip the finite-lattice extrapolation");

    std::string verify_path;
    auto* verify_cmd = app.add_subcommand("verify", "Check the axioms and spectral invariants of a scheme file");
    verify_cmd->add_option("scheme", verify_path, "scheme JSON file")->required()->check(CLI::ExistingFile);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*build_cmd) {
            if (build.builder == "group") {
                if (preset.empty()) throw assoc::Error(assoc::Errc::BadParameter, "group needs --preset");
                build.builder = preset;
            }
            if (*n_opt) build.size = n;
            if (*m_opt) build.size = m;
            return assoc::cmd_build(build, std::cout);
        }
        if (*resist_cmd) return assoc::cmd_resist(resist, std::cout);
        if (*inf_cmd) {
            infinite.cross_check = !no_check;
            return assoc::cmd_infinite(infinite, std::cout);
        }
        if (*verify_cmd) return assoc::cmd_verify(verify_path, std::cout);
    } catch (const assoc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
