// Acceptance suite: one line per criterion, exit 0 iff all pass.
// Usage: acceptance <path-to-mibcheck-binary>

#include "mib/suites.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

using namespace mib;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void criterionLine(const std::string& label, bool ok, const std::string& what,
                   const std::string& detail) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << label << ": " << what;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
    if (!ok) ++g_failures;
}

void criterion(int n, bool ok, const std::string& what, const std::string& detail = "") {
    criterionLine(std::to_string(n), ok, what, detail);
}

struct SuiteOutcome {
    size_t checks = 0;
    size_t failures = 0;
    std::string firstWitness;
    std::string firstLhs, firstRhs;
};

SuiteOutcome tally(const std::vector<CheckRecord>& rs) {
    SuiteOutcome o;
    for (const auto& r : rs) {
        if (r.status == Status::Info) continue;
        ++o.checks;
        if (r.status == Status::Fail) {
            if (o.failures == 0) {
                o.firstWitness = r.witness;
                o.firstLhs = r.lhs;
                o.firstRhs = r.rhs;
            }
            ++o.failures;
        }
    }
    return o;
}

template <CoproductFamily F>
SuiteOutcome runOne(const char* suiteName, const F& fam, const std::vector<typename F::Basis>& w) {
    CheckSink sink(fam.familyName());
    runFamilySuite(suiteName, fam, w, {}, sink);
    return tally(sink.records());
}

PathAlgebra chainQuiver() {
    Quiver q;
    q.addVertex("u");
    q.addVertex("v");
    q.addVertex("w");
    q.addArrow("alpha", "u", "v");
    q.addArrow("beta", "v", "w");
    return PathAlgebra(std::move(q));
}

PathAlgebra loopQuiver() {
    Quiver q;
    q.addVertex("v");
    q.addArrow("l", "v", "v");
    return PathAlgebra(std::move(q));
}

struct CliResult {
    int exitCode = -1;
    std::string out;
    std::string err;
};

CliResult runCli(const std::string& cli, const std::string& args, const fs::path& dir,
                 const std::string& tag) {
    fs::path outP = dir / (tag + ".out"), errP = dir / (tag + ".err");
    std::string cmd = cli + " " + args + " > " + outP.string() + " 2> " + errP.string();
    int status = std::system(cmd.c_str());
    CliResult r;
    if (WIFEXITED(status)) r.exitCode = WEXITSTATUS(status);
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    r.out = slurp(outP);
    r.err = slurp(errP);
    return r;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-mibcheck>\n";
        return 2;
    }
    const std::string cli = argv[1];

    auto chain = chainQuiver();
    auto loop = loopQuiver();
    SubposetAlgebra chain4(AmbientPoset::chain(4));
    SubposetAlgebra diamond(AmbientPoset::diamond());
    CyclicGroupAlgebra kf;

    auto chainW4 = chain.enumerateWindow(4);
    auto chainW3 = chain.enumerateWindow(3);
    auto loopW4 = loop.enumerateWindow(4);
    auto posetChainW = chain4.enumerateWindow(4);
    auto posetDiamondW = diamond.enumerateWindow(4);
    auto kfW6 = kf.enumerateWindow(6);
    auto kfW3 = kf.enumerateWindow(3);

    const auto started = std::chrono::steady_clock::now();
    auto elapsedSec = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    };

    // 1. Coassociativity on the shipped windows.
    {
        auto qc = runOne(suite::kCoassoc, chain, chainW4);
        auto ql = runOne(suite::kCoassoc, loop, loopW4);
        auto kc = runOne(suite::kCoassoc, kf, kfW6);
        auto pc = runOne(suite::kCoassoc, chain4, posetChainW);
        auto pd = runOne(suite::kCoassoc, diamond, posetDiamondW);
        bool ok = qc.failures == 0 && ql.failures == 0 && kc.failures == 0 && pc.failures == 0 &&
                  pd.failures == 0;
        std::ostringstream detail;
        detail << "quiver chain " << qc.failures << "/" << qc.checks << ", loop " << ql.failures
               << "/" << ql.checks << ", cyclic " << kc.failures << "/" << kc.checks
               << ", poset chain " << pc.failures << "/" << pc.checks << ", diamond "
               << pd.failures << "/" << pd.checks << " failures";
        if (pc.failures > 0)
            detail << "; interval coproduct admits a double cut at one point on only one side of "
                      "the composite, first poset counterexample: "
                   << pc.firstWitness << " (lhs " << pc.firstLhs << ", rhs " << pc.firstRhs << ")";
        criterion(1, ok, "coassociativity on quiver/poset/cyclic windows", detail.str());
    }

    // 2. Derivation law on the same windows.
    {
        size_t fails = runOne(suite::kDeriv, chain, chainW4).failures +
                       runOne(suite::kDeriv, loop, loopW4).failures +
                       runOne(suite::kDeriv, kf, kfW6).failures +
                       runOne(suite::kDeriv, chain4, posetChainW).failures +
                       runOne(suite::kDeriv, diamond, posetDiamondW).failures;
        criterion(2, fails == 0, "derivation law on all shipped windows",
                  fails == 0 ? "" : std::to_string(fails) + " failures");
    }

    // 3. Multiplier compatibility on the same windows.
    {
        size_t fails = runOne(suite::kCompat, chain, chainW4).failures +
                       runOne(suite::kCompat, loop, loopW4).failures +
                       runOne(suite::kCompat, kf, kfW6).failures +
                       runOne(suite::kCompat, chain4, posetChainW).failures +
                       runOne(suite::kCompat, diamond, posetDiamondW).failures;
        criterion(3, fails == 0, "multiplier compatibility on all shipped windows",
                  fails == 0 ? "" : std::to_string(fails) + " failures");
        std::ostringstream t;
        t.precision(2);
        t << std::fixed << elapsedSec() << "s (budget 10s)";
        criterionLine("1-3", elapsedSec() < 10.0, "runtime of criteria 1-3", t.str());
    }

    // 4. Group-algebra coproduct: closed forms vs recursion, verbatim values.
    {
        bool ok = true;
        for (long long n = -20; n <= 20; ++n)
            ok = ok && CyclicGroupAlgebra::delta(n) == CyclicGroupAlgebra::deltaRecursive(n);
        ok = ok && CyclicGroupAlgebra::delta(1) == basisTensor<long long>(0, 0);
        ok = ok &&
             CyclicGroupAlgebra::delta(-1) == Rational(-1) * basisTensor<long long>(-1, -1);
        ok = ok && CyclicGroupAlgebra::delta(0).isZero();
        criterion(4, ok, "cyclic closed forms equal the recursion on -20..20");
    }

    // 5. The dual pair on K(F).
    {
        using E = FreeElement<long long>;
        CheckSink sink("cyclic");
        checkStarAssociativity(6, sink);
        checkGeneralizedDerivation(6, sink);
        checkDualityPairing(6, sink);
        bool ok = !anyFailure(sink.records());
        for (long long m = -6; m <= 6 && ok; ++m)
            for (long long n = -6; n <= 6 && ok; ++n) {
                E expect;
                if (m >= 0 && n >= 0) expect = E::basis(m + n + 1);
                else if (m < 0 && n < 0) expect = -E::basis(m + n + 1);
                ok = dualStar(E::basis(m), E::basis(n)) == expect;
            }
        criterion(5, ok, "dual star product, generalized derivation, duality pairing (|n| <= 6)");
    }

    // 6. Bracket identities and the convention oracle.
    {
        auto oracleStart = std::chrono::steady_clock::now();
        int passing = 0;
        bool winnerIsValidated = false;
        for (const auto& conv : allPropConventions()) {
            bool pass = propIdentitiesHold(chain, chainW3, conv) &&
                        propIdentitiesHold(chain4, posetChainW, conv) &&
                        propIdentitiesHold(kf, kfW3, conv);
            if (pass) {
                ++passing;
                winnerIsValidated = conv.deltaPairsWithOver ==
                                        kValidatedPropConvention.deltaPairsWithOver &&
                                    conv.eq8 == kValidatedPropConvention.eq8 &&
                                    conv.differenceXYFirst ==
                                        kValidatedPropConvention.differenceXYFirst;
            }
        }
        double oracleSec =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - oracleStart).count();
        size_t fails = runOne(suite::kProp, chain, chainW3).failures +
                       runOne(suite::kProp, chain4, posetChainW).failures +
                       runOne(suite::kProp, kf, kfW3).failures;
        std::ostringstream detail;
        detail.precision(2);
        detail << "conventions passing: " << passing << "/8, oracle " << std::fixed << oracleSec
               << "s (budget 60s), suite failures " << fails;
        criterion(6, passing == 1 && winnerIsValidated && fails == 0 && oracleSec < 60.0,
                  "bracket identities under the unique validated convention", detail.str());
    }

    // 7. Symmetric bibalanceator implies the co-Jacobi identity, over every
    //    shipped window.
    {
        bool ok = true;
        std::string symWindows, detail;
        auto checkWindow = [&](const auto& fam, const auto& w, const std::string& name) {
            if (!bibalanceatorSymmetricOn(fam, w)) return;
            symWindows += (symWindows.empty() ? "" : ", ") + name;
            CheckSink sink(fam.familyName());
            checkGeneralizedCoJacobi(fam, w, {}, sink);
            if (anyFailure(sink.records())) {
                ok = false;
                detail += name + " violates the implication; ";
            }
        };
        checkWindow(chain, chainW4, "quiver-chain-4");
        checkWindow(chain, chainW3, "quiver-chain-3");
        checkWindow(loop, loopW4, "quiver-loop-4");
        checkWindow(chain4, posetChainW, "poset-chain-4");
        checkWindow(diamond, posetDiamondW, "poset-diamond");
        checkWindow(kf, kfW6, "cyclic-6");
        checkWindow(kf, kfW3, "cyclic-3");
        criterion(7, ok, "symmetric windows satisfy generalized co-Jacobi",
                  detail + "symmetric windows: " + (symWindows.empty() ? "none" : symWindows));
    }

    // 8. Finite-dimensional examples.
    {
        bool dim1 = !anyFailure(runLieExample("dim1"));
        bool sl2ok = !anyFailure(runLieExample("sl2"));
        auto g = FinLieAlgebra::sl2();
        using Elem = FreeElement<int>;
        sl2ok = sl2ok &&
                coboundaryDelta(g, wedge(Elem::basis(1), Elem::basis(2)), 0).isZero();
        bool fun = !anyFailure(runLieExample("functional"));
        std::string vanishing;
        for (auto variant : {Dim2Variant::IotaX, Dim2Variant::Zero})
            if (derivatorCoJacobiBothSidesZero(buildDim2Example(variant)))
                vanishing += (vanishing.empty() ? "" : ", ") + dim2VariantName(variant);
        bool dim2 = !vanishing.empty() && !anyFailure(runLieExample("dim2:iotaX")) &&
                    !anyFailure(runLieExample("dim2:zero"));
        criterion(8, dim1 && sl2ok && fun && dim2,
                  "dim1, sl2 coboundary, functional, dim-2 examples",
                  "dim-2 variants with vanishing co-Jacobi sides: " + vanishing);
    }

    // 9. CLI determinism and the exit-code contract.
    {
        auto dir = fs::temp_directory_path() / ("mib-accept-" + std::to_string(::getpid()));
        fs::create_directories(dir);
        std::ofstream(dir / "chain.qv") << "v u\nv v\nv w\na alpha u v\na beta v w\n";
        std::ofstream(dir / "bad.po") << "e 0\ne 1\nle 0 1\nle 1 0\n";

        std::string quiverArgs =
            "check quiver " + (dir / "chain.qv").string() + " --max-len 3 --suites all";
        auto r1 = runCli(cli, quiverArgs + " --format json-lines", dir, "run1");
        auto r2 = runCli(cli, quiverArgs + " --format json-lines", dir, "run2");
        bool determinism = r1.exitCode == 0 && r1.out == r2.out && !r1.out.empty();

        auto allPass = runCli(cli, quiverArgs, dir, "allpass");
        auto cyc = runCli(cli, "check cyclic --window 4 --suites coassoc,deriv,gen-deriv", dir,
                          "cyclic");
        auto injected = runCli(
            cli, "check quiver " + (dir / "chain.qv").string() + " --max-len 3 --perturb-delta" +
                     " --suites deriv",
            dir, "injected");
        auto malformed = runCli(cli, "check poset " + (dir / "bad.po").string(), dir, "bad");
        bool exits = allPass.exitCode == 0 && cyc.exitCode == 0 && injected.exitCode == 1 &&
                     malformed.exitCode == 2 &&
                     malformed.err.find("cycle") != std::string::npos;

        std::ostringstream detail;
        detail << "byte-identical=" << (determinism ? "yes" : "no") << ", exits=["
               << allPass.exitCode << "," << cyc.exitCode << "," << injected.exitCode << ","
               << malformed.exitCode << "] want [0,0,1,2]";
        criterion(9, determinism && exits, "CLI determinism and exit codes", detail.str());
        fs::remove_all(dir);
    }

    // 10. Negative controls.
    {
        bool jacobiRejected = false;
        try {
            auto table = FinLieAlgebra::sl2Table();
            using Elem = FreeElement<int>;
            table[1][2] = Elem::basis(0) + Elem::basis(1);
            table[2][1] = -table[1][2];
            FinLieAlgebra bad({"h", "e", "f"}, std::move(table));
        } catch (const std::invalid_argument& e) {
            jacobiRejected = std::string(e.what()).find("Jacobi") != std::string::npos;
        }

        PerturbedPathAlgebra bad(chain, PathBasis::trivial(0), PathBasis::path({0, 1}));
        CheckSink sink(bad.familyName());
        checkDerivation(bad, chainW3, {}, sink);
        bool perturbedCaught = false;
        for (const auto& r : sink.records())
            if (r.status == Status::Fail && r.witness.find("a=alpha; b=beta") != std::string::npos)
                perturbedCaught = true;
        criterion(10, jacobiRejected && perturbedCaught,
                  "mutated sl2 rejected; perturbed coproduct caught with named pair");
    }

    std::cout << (g_failures == 0 ? "acceptance: all criteria pass"
                                  : "acceptance: " + std::to_string(g_failures) +
                                        " criterion(s) failing")
              << "\n";
    return g_failures == 0 ? 0 : 1;
}
