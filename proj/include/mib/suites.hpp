#pragma once

#include "mib/checks.hpp"
#include "mib/cyclic.hpp"
#include "mib/lie.hpp"
#include "mib/lie_finite.hpp"
#include "mib/poset.hpp"
#include "mib/quiver.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace mib {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Suites available on every coproduct family window.
inline const std::vector<std::string>& familySuiteNames() {
    static const std::vector<std::string> names = {
        suite::kAssoc, suite::kNondegen, suite::kCoassoc,  suite::kDeriv,
        suite::kCompat, suite::kProp,    suite::kBibalSym, suite::kBibalZero,
        suite::kCoJacobi};
    return names;
}

/// Extra suites of the cyclic family (the dual pair on K(F)).
inline const std::vector<std::string>& cyclicSuiteNames() {
    static const std::vector<std::string> names = {suite::kKfClosed, suite::kStarAssoc,
                                                   suite::kGenDeriv, suite::kDuality};
    return names;
}

inline std::set<std::string> parseSuiteSelection(const std::string& csv, bool cyclic) {
    std::set<std::string> known(familySuiteNames().begin(), familySuiteNames().end());
    if (cyclic)
        for (const auto& s : cyclicSuiteNames()) known.insert(s);
    if (csv == "all") return known;
    std::set<std::string> out;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) return;
        if (!known.count(cur)) throw ConfigError("unknown suite '" + cur + "'");
        out.insert(cur);
        cur.clear();
    };
    for (char c : csv) {
        if (c == ',') flush();
        else cur += c;
    }
    flush();
    if (out.empty()) throw ConfigError("empty suite selection");
    return out;
}

template <CoproductFamily F>
void runFamilySuite(const std::string& name, const F& fam,
                    const std::vector<typename F::Basis>& window, const Sampler& sampler,
                    CheckSink& sink) {
    if (name == suite::kAssoc) checkAssociativity(fam, window, sampler, sink);
    else if (name == suite::kNondegen) checkNondegeneracy(fam, window, sink);
    else if (name == suite::kCoassoc) checkCoassociativity(fam, window, sampler, sink);
    else if (name == suite::kDeriv) checkDerivation(fam, window, sampler, sink);
    else if (name == suite::kCompat) checkMultiplierCompat(fam, window, sampler, sink);
    else if (name == suite::kProp) checkPropIdentity(fam, window, sampler, sink);
    else if (name == suite::kBibalSym) checkBibalanceatorSymmetric(fam, window, sampler, sink);
    else if (name == suite::kBibalZero) checkBibalanced(fam, window, sampler, sink);
    else if (name == suite::kCoJacobi) checkCoJacobiConditional(fam, window, sampler, sink);
    else throw ConfigError("unknown suite '" + name + "'");
}

inline void runCyclicSuite(const std::string& name, int bound, CheckSink& sink) {
    if (name == suite::kKfClosed) checkKfClosedForm(std::max(bound, 20), sink);
    else if (name == suite::kStarAssoc) checkStarAssociativity(bound, sink);
    else if (name == suite::kGenDeriv) checkGeneralizedDerivation(bound, sink);
    else if (name == suite::kDuality) checkDualityPairing(bound, sink);
    else throw ConfigError("unknown suite '" + name + "'");
}

template <CoproductFamily F>
std::vector<CheckRecord> runFamilySuites(const F& fam, const std::vector<typename F::Basis>& window,
                                         const std::set<std::string>& suites, const Sampler& sampler) {
    CheckSink sink(fam.familyName());
    for (const auto& name : suites)
        if (std::find(cyclicSuiteNames().begin(), cyclicSuiteNames().end(), name) ==
            cyclicSuiteNames().end())
            runFamilySuite(name, fam, window, sampler, sink);
    auto records = sink.takeRecords();
    sortRecords(records);
    return records;
}

/// The cyclic family runs the generic suites on the group algebra and the
/// dual-pair suites on K(F), both over the same exponent bound.
inline std::vector<CheckRecord> runCyclicSuites(int bound, const std::set<std::string>& suites,
                                                const Sampler& sampler) {
    CyclicGroupAlgebra kf;
    CheckSink sink(kf.familyName());
    auto window = kf.enumerateWindow(bound);
    for (const auto& name : suites) {
        if (std::find(cyclicSuiteNames().begin(), cyclicSuiteNames().end(), name) !=
            cyclicSuiteNames().end())
            runCyclicSuite(name, bound, sink);
        else
            runFamilySuite(name, kf, window, sampler, sink);
    }
    auto records = sink.takeRecords();
    sortRecords(records);
    return records;
}

inline const std::vector<std::string>& lieExampleNames() {
    static const std::vector<std::string> names = {"dim1", "sl2", "functional", "dim2:iotaX",
                                                   "dim2:zero"};
    return names;
}

/// Runs the checks attached to one named finite-dimensional example.
inline std::vector<CheckRecord> runLieExample(const std::string& selector) {
    static const FinLieAlgebra sl2 = FinLieAlgebra::sl2();
    static const FinLieAlgebra dim1 = FinLieAlgebra::oneDim();
    static const TensorElement<int> rMatrix =
        wedge(FreeElement<int>::basis(1), FreeElement<int>::basis(2)); // e ^ f
    static const LinearCobracket sl2Beta = coboundaryCobracket(sl2, rMatrix);

    CheckSink sink("lie:" + selector);
    if (selector == "dim1") {
        checkLieBialgebra(dim1, LinearCobracket(1), sink);
    } else if (selector == "sl2") {
        checkLieBialgebra(sl2, sl2Beta, sink);
    } else if (selector == "functional") {
        // alpha = dual functional of h on sl2.
        auto d = buildFunctionalExample(sl2, sl2Beta, {Rational(1), Rational(0), Rational(0)});
        checkDerivatorAxioms(d, sink);
        checkDerivatorCoJacobiZero(d, sink);
    } else if (selector == "dim2:iotaX" || selector == "dim2:zero") {
        auto variant = selector == "dim2:iotaX" ? Dim2Variant::IotaX : Dim2Variant::Zero;
        auto d = buildDim2Example(variant);
        checkDerivatorAxioms(d, sink);
        checkDerivatorCoJacobiZero(d, sink);
        sink.info(suite::kDlbCoJacobiZero,
                  "variant=" + dim2VariantName(variant) + "; both co-Jacobi sides vanish: " +
                      (derivatorCoJacobiBothSidesZero(d) ? "yes" : "no"));
    } else {
        throw ConfigError("unknown lie example '" + selector + "' (choose from: dim1, sl2, "
                          "functional, dim2:iotaX, dim2:zero)");
    }
    auto records = sink.takeRecords();
    sortRecords(records);
    return records;
}

} // namespace mib
