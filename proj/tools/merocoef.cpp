#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "merocoef/errors.hpp"
#include "merocoef/report.hpp"

using namespace merocoef;

namespace {

struct Flags {
    std::string target;
    long n_from = 0, n_to = 10;
    std::int64_t cutoff = 10000;
    long precision_bits = 256;
    std::int64_t box_bound = 60;
    double tolerance = 0;
    std::string format = "json";
    std::string out;
    std::string tau0;
    std::string samples;
    unsigned threads = 0;
};

void add_common(CLI::App* sub, Flags& f) {
    sub->add_option("--target", f.target, "form name or identity name")->envname("MEROCOEF_TARGET");
    sub->add_option("--n-from", f.n_from, "first coefficient index")->envname("MEROCOEF_N_FROM");
    sub->add_option("--n-to", f.n_to, "last coefficient index")->envname("MEROCOEF_N_TO");
    sub->add_option("--cutoff", f.cutoff, "norm or lattice cutoff")->envname("MEROCOEF_CUTOFF");
    sub->add_option("--precision-bits", f.precision_bits, "target precision")->envname("MEROCOEF_PRECISION_BITS");
    sub->add_option("--box-bound", f.box_bound, "lattice box bound")->envname("MEROCOEF_BOX_BOUND");
    sub->add_option("--tolerance", f.tolerance, "pass threshold")->envname("MEROCOEF_TOLERANCE");
    sub->add_option("--format", f.format, "json, csv or text")->envname("MEROCOEF_FORMAT");
    sub->add_option("--out", f.out, "output file (default stdout)")->envname("MEROCOEF_OUT");
    sub->add_option("--tau0", f.tau0, "pole location, e.g. 2i")->envname("MEROCOEF_TAU0");
    sub->add_option("--samples", f.samples, "zr,zi,r,i;... sample points")->envname("MEROCOEF_SAMPLES");
    sub->add_option("--threads", f.threads, "worker threads (0 = all cores)")->envname("MEROCOEF_THREADS");
}

int emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        std::cerr << "merocoef: cannot write " << path << "\n";
        return kExitUsage;
    }
    os << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coefficients of meromorphic modular forms: exact oracles versus ideal-sum formulas"};
    app.require_subcommand(1);
    Flags f;
    const char* verbs[][2] = {
        {"oracle", "exact q-expansion coefficients"},
        {"compare", "formula versus oracle over an n range"},
        {"convergence", "error as the cutoff doubles"},
        {"poincare-check", "residuals of a lattice-sum identity"},
        {"pole-family", "coefficients of a form with a double pole at tau0"},
    };
    for (auto& v : verbs) add_common(app.add_subcommand(v[0], v[1]), f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    auto given = [&](const char* name) { return sub->get_option(name)->count() > 0; };
    RunConfig cfg;
    OutputFormat fmt = OutputFormat::Json;
    try {
        cfg.command = parse_command(sub->get_name());
        fmt = parse_format(f.format);
    } catch (const Error& e) {
        std::cerr << "merocoef: " << e.what() << "\n";
        return kExitUsage;
    }
    if (given("--target")) cfg.target = f.target;
    cfg.n_from = f.n_from;
    cfg.n_to = f.n_to;
    cfg.cutoff = f.cutoff;
    cfg.precision_bits = static_cast<Prec>(f.precision_bits);
    cfg.box_bound = f.box_bound;
    if (given("--tolerance")) cfg.tolerance = f.tolerance;
    cfg.format = fmt;
    if (given("--out")) cfg.output_path = f.out;
    if (given("--tau0")) cfg.tau0 = f.tau0;
    if (given("--samples")) cfg.samples = f.samples;
    cfg.threads = f.threads;
    if (f.precision_bits < 32) {
        std::cerr << "merocoef: --precision-bits must be >= 32\n";
        return kExitUsage;
    }

    CommandResult res = run_command(cfg);
    int wrc = emit(render(res.report, fmt), f.out);
    if (wrc != 0) return wrc;
    if (res.report.contains("error")) std::cerr << "merocoef: " << res.report["error"]["message"].get<std::string>() << "\n";
    return res.exit_code;
}
