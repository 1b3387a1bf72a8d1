/*
 * gghlab: exact-arithmetic toolkit for the wreath product graded
 * Hecke algebras.  Two command families:
 *
 *   verify  runs named identity suites over the algebra at (m, n)
 *           and writes a deterministic JSON report;
 *   module  builds, validates, induces, restricts, classifies and
 *           takes Dirac cohomology of finite dimensional modules
 *           stored as JSON files.
 *
 * Exit codes: 0 all pass / success, 1 verification failure,
 * 2 usage or parse error.
 */

#include "gghlab/io.hpp"
#include "gghlab/suites.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace gghlab;

/* ------------------------------------------------------------------ */
/* small helpers                                                       */
/* ------------------------------------------------------------------ */

std::vector<unsigned> parse_composition(const std::string& text) {
    std::vector<unsigned> comp;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw io::FileError("--composition: expected comma separated nonnegative integers, got \"" +
                                text + "\"");
        comp.push_back(unsigned(std::stoul(part)));
    }
    if (comp.empty()) throw io::FileError("--composition: empty composition");
    return comp;
}

std::string composition_text(const std::vector<unsigned>& comp) {
    std::string s = "(";
    for (std::size_t i = 0; i < comp.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(comp[i]);
    }
    return s + ")";
}

/* 1-based simple reflections interior to the blocks of a composition */
std::vector<unsigned> interior_simples(const std::vector<unsigned>& comp) {
    std::vector<unsigned> want;
    for (auto [lo, hi] : composition_blocks(comp))
        for (unsigned k = lo + 1; k < hi; ++k) want.push_back(k);
    return want;
}

std::string pick_input(const std::string& positional, const std::string& flag) {
    if (!flag.empty()) return flag;
    if (!positional.empty()) return positional;
    throw io::FileError("missing input file: pass it as a positional argument or via --input");
}

HModule load_module(const std::string& path, const std::string& kappa_text) {
    HModule X = io::read_module(path);
    if (!kappa_text.empty()) {
        const Rat expect = io::rat_from_text(kappa_text, "--kappa");
        if (X.kappa != expect)
            throw io::FileError(path + ": module has kappa " + io::rat_text(X.kappa) +
                                ", --kappa expects " + io::rat_text(expect));
    }
    return X;
}

/* Returns 0 when the module satisfies every defining relation. */
int report_validation(const HModule& X, const std::string& path) {
    const CheckReport rep = validate_module(X);
    for (const auto& it : rep.items)
        if (!it.pass)
            std::cerr << path << ": relation failed: " << it.name
                      << (it.witness.empty() ? "" : " [" + it.witness + "]") << "\n";
    return rep.all_pass() ? 0 : 1;
}

std::string derived_path(const std::string& out, const std::string& suffix) {
    const std::string ext = ".json";
    if (out.size() > ext.size() && out.compare(out.size() - ext.size(), ext.size(), ext) == 0)
        return out.substr(0, out.size() - ext.size()) + suffix + ext;
    return out + suffix + ext;
}

/* ------------------------------------------------------------------ */
/* verify                                                              */
/* ------------------------------------------------------------------ */

struct VerifyOptions {
    unsigned m = 1;
    unsigned n = 2;
    std::vector<std::string> suites;
    std::string out = "report.json";
    unsigned seed = 20260815;
    unsigned threads = 0;
    bool negative_controls = false;
    bool timing = false;
};

int run_verify(const VerifyOptions& opt) {
    Int work = 1;
    for (unsigned i = 0; i < opt.n; ++i) work *= opt.m;
    for (unsigned i = 2; i <= opt.n; ++i) work *= i;
    work <<= opt.n;
    if (work > Int(1000000)) {
        std::cerr << "verify: working set m^n * n! * 2^n = " << work
                  << " exceeds the 10^6 budget; choose smaller --m / --n\n";
        return 2;
    }

    /* normalize the suite list to canonical order, deduplicated */
    std::vector<std::string> names;
    for (const std::string& known : known_suites())
        if (opt.suites.empty() ||
            std::find(opt.suites.begin(), opt.suites.end(), known) != opt.suites.end())
            names.push_back(known);
    for (const std::string& given : opt.suites)
        if (std::find(known_suites().begin(), known_suites().end(), given) ==
            known_suites().end()) {
            std::cerr << "verify: unknown suite \"" << given << "\"; known suites:";
            for (const std::string& s : known_suites()) std::cerr << " " << s;
            std::cerr << "\n";
            return 2;
        }

    const GGHDescriptor d = dunkl_opdam_descriptor(opt.m, opt.n);
    const auto t0 = std::chrono::steady_clock::now();

    std::vector<std::function<CheckReport()>> tasks;
    for (const std::string& name : names)
        tasks.push_back([&d, &opt, name]() {
            CheckReport r;
            try {
                r = run_suite(name, d, opt.seed);
                if (opt.negative_controls) r.merge(suite_negative_controls(name, d, opt.seed));
            } catch (const std::exception& e) {
                r.add("suite runs to completion", false, e.what());
            }
            return r;
        });
    const std::vector<CheckReport> results =
        run_check_pool(tasks, resolve_thread_count(opt.threads));

    Report rep;
    rep.parameters["m"] = opt.m;
    rep.parameters["n"] = opt.n;
    rep.parameters["seed"] = opt.seed;
    rep.parameters["suites"] = names;
    rep.parameters["negative_controls"] = opt.negative_controls;
    for (std::size_t i = 0; i < names.size(); ++i)
        for (const CheckItem& it : results[i].items)
            rep.checks.push_back({names[i] + "/" + it.name, it.pass, it.witness});
    if (opt.timing)
        rep.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    io::write_report(rep, opt.out);
    std::cout << rep.to_text();
    std::cout << "report written to " << opt.out << "\n";
    return rep.all_pass() ? 0 : 1;
}

/* ------------------------------------------------------------------ */
/* module actions                                                      */
/* ------------------------------------------------------------------ */

int run_validate(const std::string& input, const std::string& kappa, const std::string& out) {
    const HModule X = load_module(input, kappa);
    const CheckReport r = validate_module(X);
    Report rep;
    rep.parameters["command"] = "module validate";
    rep.parameters["input"] = input;
    rep.checks = r.items;
    std::cout << rep.to_text();
    if (!out.empty()) {
        io::write_report(rep, out);
        std::cout << "report written to " << out << "\n";
    }
    return r.all_pass() ? 0 : 1;
}

int run_induce(const std::vector<unsigned>& comp, const std::string& input,
               const std::string& kappa, const std::string& out) {
    const HModule U = load_module(input, kappa);
    unsigned total = 0;
    for (unsigned a : comp) total += a;
    if (total != U.n)
        throw io::FileError("--composition " + composition_text(comp) + " sums to " +
                            std::to_string(total) + " but the input module has n = " +
                            std::to_string(U.n));
    if (U.pi != interior_simples(comp))
        throw io::FileError(input + ": the parabolic structure (pi) does not match --composition " +
                            composition_text(comp));
    if (U.m > 1 && block_label(U) != comp)
        throw io::FileError(input + ": the torus character does not lie on the staircase of block " +
                            composition_text(comp));
    if (int rc = report_validation(U, input)) return rc;
    const HModule X = parabolic_induce(U);
    io::write_module(X, out);
    std::cout << "induced module: dimension " << X.dim << ", block "
              << composition_text(block_label(X)) << ", written to " << out << "\n";
    return 0;
}

int run_restrict(const std::vector<unsigned>& comp, const std::string& input,
                 const std::string& kappa, const std::string& out) {
    const HModule X = load_module(input, kappa);
    if (comp.size() != X.m)
        throw io::FileError("--composition needs exactly m = " + std::to_string(X.m) +
                            " parts for this module");
    if (int rc = report_validation(X, input)) return rc;
    const HModule U = restrict_to_weight(X, comp);
    io::write_module(U, out);
    std::cout << "restricted module: dimension " << U.dim << ", written to " << out << "\n";
    return 0;
}

int run_dirac_cohomology(const std::string& input, const std::string& kappa,
                         const std::string& out) {
    const HModule X = load_module(input, kappa);
    if (!X.is_full())
        throw io::FileError(input + ": dirac cohomology needs a module of the full algebra");
    if (int rc = report_validation(X, input)) return rc;
    const DiracCohomology dc = dirac_cohomology(X);
    io::write_dirac_cohomology(dc, X, out);
    std::cout << "dirac cohomology: dimension " << dc.dim << ", written to " << out << "\n";
    return 0;
}

int run_classify(const std::string& input, const std::string& kappa, const std::string& out) {
    const HModule X = load_module(input, kappa);
    if (!X.is_full())
        throw io::FileError(input + ": classification needs a module of the full algebra");
    if (int rc = report_validation(X, input)) return rc;
    LanglandsDatum datum;
    try {
        datum = langlands_data(X);
    } catch (const std::exception& e) {
        std::cerr << input << ": classification failed: " << e.what() << "\n";
        return 1;
    }
    const std::string factor_path = derived_path(out, ".factor");
    io::write_classification(datum, block_label(X), factor_path, out);
    std::cout << "classification: P has " << datum.P.size() << " simple roots, nu = (";
    for (std::size_t i = 0; i < datum.nu.size(); ++i)
        std::cout << (i ? "," : "") << io::rat_text(datum.nu[i]);
    std::cout << "), tempered factor of dimension " << datum.tempered_factor.dim
              << " written to " << factor_path << "\n";
    std::cout << "uniqueness " << (datum.verified_unique ? "verified" : "NOT verified")
              << "; data written to " << out << "\n";
    return datum.verified_unique ? 0 : 1;
}

int run_blocks(unsigned m, unsigned n, const std::string& out) {
    const auto labels = all_block_labels(m, n);
    for (const auto& a : labels) std::cout << composition_text(a) << "\n";
    std::cout << labels.size() << " blocks\n";
    if (!out.empty()) {
        io::json j;
        j["m"] = m;
        j["n"] = n;
        j["blocks"] = labels;
        io::write_text_file(out, io::dump_json(j));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification and module toolkit for wreath product graded Hecke algebras"};
    app.require_subcommand(1);

    /* verify */
    VerifyOptions vo;
    CLI::App* verify = app.add_subcommand("verify", "run identity suites and write a JSON report");
    verify->add_option("--m", vo.m, "cyclic order m of the torus part")->check(CLI::PositiveNumber);
    verify->add_option("--n", vo.n, "number of strands n")->check(CLI::PositiveNumber);
    verify->add_option("--suite", vo.suites, "suites to run (default: all)")->delimiter(',');
    verify->add_option("--out", vo.out, "report path")->capture_default_str();
    verify->add_option("--seed", vo.seed, "seed for the randomized items")->capture_default_str();
    verify->add_option("--threads", vo.threads, "work pool size (0: GGHLAB_THREADS or hardware)");
    verify->add_flag("--negative-controls", vo.negative_controls,
                     "also run the deliberate-corruption companions");
    verify->add_flag("--timing", vo.timing, "record wall time in the report");

    /* module */
    CLI::App* module_cmd = app.add_subcommand("module", "operations on module files");
    module_cmd->require_subcommand(1);

    struct ModuleArgs {
        std::string positional, input, kappa, out, composition;
        unsigned m = 1, n = 1;
        explicit ModuleArgs(std::string default_out = "") : out(std::move(default_out)) {}
    };

    ModuleArgs va;
    CLI::App* mvalidate = module_cmd->add_subcommand("validate", "check the defining relations");
    mvalidate->add_option("file", va.positional, "module file");
    mvalidate->add_option("--input", va.input, "module file");
    mvalidate->add_option("--kappa", va.kappa, "expected deformation parameter");
    mvalidate->add_option("--out", va.out, "optional report path");

    ModuleArgs ia("induced.json");
    CLI::App* minduce =
        module_cmd->add_subcommand("induce", "induce from a parabolic module to the full algebra");
    minduce->add_option("file", ia.positional, "parabolic module file");
    minduce->add_option("--input", ia.input, "parabolic module file");
    minduce->add_option("--composition", ia.composition, "block sizes, e.g. 1,1")->required();
    minduce->add_option("--kappa", ia.kappa, "expected deformation parameter");
    minduce->add_option("--out", ia.out, "output module path")->capture_default_str();

    ModuleArgs ra("restricted.json");
    CLI::App* mrestrict =
        module_cmd->add_subcommand("restrict", "restrict to the staircase weight space of a block");
    mrestrict->add_option("file", ra.positional, "module file");
    mrestrict->add_option("--input", ra.input, "module file");
    mrestrict->add_option("--composition", ra.composition, "block label, e.g. 1,1")->required();
    mrestrict->add_option("--kappa", ra.kappa, "expected deformation parameter");
    mrestrict->add_option("--out", ra.out, "output module path")->capture_default_str();

    ModuleArgs da("dc.json");
    CLI::App* mdc = module_cmd->add_subcommand("dirac-cohomology",
                                               "kernel of the Dirac operator modulo boundaries");
    mdc->add_option("file", da.positional, "module file");
    mdc->add_option("--input", da.input, "module file");
    mdc->add_option("--kappa", da.kappa, "expected deformation parameter");
    mdc->add_option("--out", da.out, "output path")->capture_default_str();

    ModuleArgs ca("classification.json");
    CLI::App* mclassify =
        module_cmd->add_subcommand("classify", "Langlands data of an irreducible module");
    mclassify->add_option("file", ca.positional, "module file");
    mclassify->add_option("--input", ca.input, "module file");
    mclassify->add_option("--kappa", ca.kappa, "expected deformation parameter");
    mclassify->add_option("--out", ca.out, "output path")->capture_default_str();

    ModuleArgs ba;
    CLI::App* mblocks = module_cmd->add_subcommand("blocks", "list the block labels of (m, n)");
    mblocks->add_option("--m", ba.m, "cyclic order m")->required()->check(CLI::PositiveNumber);
    mblocks->add_option("--n", ba.n, "number of strands n")->required()->check(CLI::PositiveNumber);
    mblocks->add_option("--out", ba.out, "optional JSON output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return run_verify(vo);
        if (mvalidate->parsed())
            return run_validate(pick_input(va.positional, va.input), va.kappa, va.out);
        if (minduce->parsed())
            return run_induce(parse_composition(ia.composition),
                              pick_input(ia.positional, ia.input), ia.kappa, ia.out);
        if (mrestrict->parsed())
            return run_restrict(parse_composition(ra.composition),
                                pick_input(ra.positional, ra.input), ra.kappa, ra.out);
        if (mdc->parsed())
            return run_dirac_cohomology(pick_input(da.positional, da.input), da.kappa, da.out);
        if (mclassify->parsed())
            return run_classify(pick_input(ca.positional, ca.input), ca.kappa, ca.out);
        if (mblocks->parsed()) return run_blocks(ba.m, ba.n, ba.out);
    } catch (const io::FileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
