#include <cstdio>
#include <exception>

#include "CLI11.hpp"
#include "commands.hpp"
#include "secant/simd/kernels.hpp"

int main(int argc, char** argv) {
    using namespace secant::cli;
    CLI::App app{"Secant spectra of point sets in finite projective planes"};
    app.fallthrough();
    app.require_subcommand(1);

    Global g;
    app.add_option("--seed", g.seed, "Seed for randomized constructions and searches")->capture_default_str();
    app.add_option("--threads", g.threads, "Worker threads (0 = one per hardware thread)")->capture_default_str();
    app.add_option("--out", g.out, "Write output here instead of stdout");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--simd", g.simd, "Kernel ISA")->check(CLI::IsMember({"auto", "scalar", "avx2"}))->capture_default_str();

    Runner run;
    register_commands(app, g, run);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    if (g.simd == "scalar") secant::simd::set_isa(secant::simd::Isa::Scalar);
    if (g.simd == "avx2") secant::simd::set_isa(secant::simd::Isa::Avx2);

    try {
        return run ? run() : kUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    }
}
