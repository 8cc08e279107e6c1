// mibcheck: finite-window verification of multiplier infinitesimal
// bialgebras (quiver path algebras, poset algebras, the infinite-cyclic
// dual pair) and derivator Lie bialgebra examples, over exact rationals.
//
// Exit codes: 0 all checks pass, 1 at least one check fails, 2 input error.

#include "mib/suites.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw mib::ConfigError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int emitAndExit(std::vector<mib::CheckRecord> records, const std::string& format) {
    if (format == "json-lines") mib::writeJsonLines(records, std::cout);
    else mib::writeText(records, std::cout);
    return mib::anyFailure(records) ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact finite-window checks for multiplier infinitesimal bialgebras"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string suitesCsv = "all";
    std::uint64_t seed = 0;
    long long sample = 0;

    auto* check = app.add_subcommand("check", "run verification suites");
    check->require_subcommand(1);

    auto addCommon = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "text or json-lines")
            ->check(CLI::IsMember({"text", "json-lines"}));
        cmd->add_option("--suites", suitesCsv, "comma-separated suite list, or 'all'");
        cmd->add_option("--sample", sample, "down-sample each suite to at most K witnesses");
        cmd->add_option("--seed", seed, "seed for deterministic down-sampling");
    };

    std::string quiverFile;
    int maxLen = 3;
    bool perturb = false;
    auto* quiverCmd = check->add_subcommand("quiver", "path algebra of a quiver file");
    quiverCmd->add_option("file", quiverFile, "quiver description")->required();
    quiverCmd->add_option("--max-len", maxLen, "maximum path length in the window");
    quiverCmd->add_flag("--perturb-delta", perturb,
                        "fault injection: double one coproduct coefficient");
    addCommon(quiverCmd);

    std::string posetFile;
    int maxSize = 4;
    auto* posetCmd = check->add_subcommand("poset", "algebra of bounded subposets of a poset file");
    posetCmd->add_option("file", posetFile, "poset description")->required();
    posetCmd->add_option("--max-size", maxSize, "maximum subposet size in the window");
    addCommon(posetCmd);

    int window = 4;
    auto* cyclicCmd = check->add_subcommand("cyclic", "infinite cyclic group algebra and its dual");
    cyclicCmd->add_option("--window", window, "exponent bound of the window");
    addCommon(cyclicCmd);

    std::string example;
    auto* lieCmd = check->add_subcommand("lie", "finite-dimensional derivator examples");
    lieCmd->add_option("--example", example, "dim1 | sl2 | functional | dim2:iotaX | dim2:zero")
        ->required();
    addCommon(lieCmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // prints help, exits 0
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        mib::Sampler sampler;
        if (sample > 0) sampler = mib::Sampler(static_cast<size_t>(sample), seed);

        if (*quiverCmd) {
            mib::PathAlgebra base(mib::Quiver::parse(readFile(quiverFile)));
            auto suites = mib::parseSuiteSelection(suitesCsv, false);
            auto window_ = base.enumerateWindow(maxLen);
            if (perturb) {
                auto fam = mib::PerturbedPathAlgebra::firstNonzero(base, maxLen);
                return emitAndExit(mib::runFamilySuites(fam, window_, suites, sampler), format);
            }
            return emitAndExit(mib::runFamilySuites(base, window_, suites, sampler), format);
        }
        if (*posetCmd) {
            mib::SubposetAlgebra fam(mib::AmbientPoset::parse(readFile(posetFile)));
            auto suites = mib::parseSuiteSelection(suitesCsv, false);
            return emitAndExit(
                mib::runFamilySuites(fam, fam.enumerateWindow(maxSize), suites, sampler), format);
        }
        if (*cyclicCmd) {
            auto suites = mib::parseSuiteSelection(suitesCsv, true);
            return emitAndExit(mib::runCyclicSuites(window, suites, sampler), format);
        }
        if (*lieCmd) {
            return emitAndExit(mib::runLieExample(example), format);
        }
        std::cerr << "error: no subcommand selected\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
