#pragma once

#include "mib/algebra.hpp"
#include "mib/report.hpp"

#include <string>
#include <vector>

namespace mib {

namespace suite {
inline constexpr const char* kProp = "prop";
inline constexpr const char* kBibalSym = "bibal-sym";
inline constexpr const char* kBibalZero = "bibal-zero";
inline constexpr const char* kCoJacobi = "cojacobi";
} // namespace suite

/// Commutator bracket [x, y] = xy - yx of the associative product.
template <AlgebraFamily F>
FreeElement<typename F::Basis> commutator(const FreeElement<typename F::Basis>& x,
                                          const FreeElement<typename F::Basis>& y, const F& fam) {
    return mul(x, y, fam) - mul(y, x, fam);
}

/// Adjoint action of x on tensors: (ad_x (x) 1 + 1 (x) ad_x) t.
template <AlgebraFamily F>
TensorElement<typename F::Basis> adjointAct(const FreeElement<typename F::Basis>& x,
                                            const TensorElement<typename F::Basis>& t, const F& fam) {
    using E = FreeElement<typename F::Basis>;
    TensorElement<typename F::Basis> r;
    for (const auto& [uv, c] : t.terms()) {
        r += c * tensorProduct(commutator(x, E::basis(uv.first), fam), E::basis(uv.second));
        r += c * tensorProduct(E::basis(uv.first), commutator(x, E::basis(uv.second), fam));
    }
    return r;
}

/// delta_a(x) = (1 (x) a) Delta(x) - flip of it  (the t4-form cobracket).
template <CoproductFamily F>
TensorElement<typename F::Basis> cobracketDelta(const F& fam, const typename F::Basis& a,
                                                const FreeElement<typename F::Basis>& x) {
    auto t = t4Elem(fam, x, a);
    return t - flip(t);
}

/// zeta^a(x) = Delta(x)(a (x) 1) - flip of it  (the t3-form cobracket).
template <CoproductFamily F>
TensorElement<typename F::Basis> cobracketZeta(const F& fam, const typename F::Basis& a,
                                               const FreeElement<typename F::Basis>& x) {
    auto t = t3Elem(fam, a, x);
    return t - flip(t);
}

/// Intertwiners: T1(u (x) v) = (1 (x) u) Delta(v), T2(u (x) v) = Delta(u)(v (x) 1).
template <CoproductFamily F>
TensorElement<typename F::Basis> t1Op(const F& fam, const typename F::Basis& u,
                                      const typename F::Basis& v) {
    return fam.t4(v, u);
}
template <CoproductFamily F>
TensorElement<typename F::Basis> t2Op(const F& fam, const typename F::Basis& u,
                                      const typename F::Basis& v) {
    return fam.t3(v, u);
}

/// Under-balanceator
///   B_(a)(x (x) y) = (x (x) 1) tauDelta(y)(1 (x) a) - tauDelta(y)(1 (x) ax)
///                  + (1 (x) y) Delta(x)(a (x) 1)   - Delta(x)(ay (x) 1),
/// computed through the t3/t4 slices only (each term lands in A (x) A first).
template <CoproductFamily F>
TensorElement<typename F::Basis> bibalanceatorUnder(const F& fam, const typename F::Basis& a,
                                                    const typename F::Basis& x,
                                                    const typename F::Basis& y) {
    using T = TensorElement<typename F::Basis>;
    T term1 = rightMulSecond(flip(fam.t4(y, x)), a, fam);
    T term2; // tauDelta(y)(1 (x) ax) = flip(Delta(y)(ax (x) 1))
    for (auto ax = fam.basisProduct(a, x); const auto& [z, c] : ax.terms()) term2 += c * flip(fam.t3(z, y));
    T term3 = leftMulSecond(y, fam.t3(a, x), fam);
    T term4;
    for (auto ay = fam.basisProduct(a, y); const auto& [z, c] : ay.terms()) term4 += c * fam.t3(z, x);
    return term1 - term2 + term3 - term4;
}

/// Which coproduct argument the third over-balanceator term uses. The source
/// of the definition is ambiguous here; the convention oracle picks the
/// reading under which the bracket identities hold.
enum class Eq8Term3 { DeltaX, DeltaY };

/// Over-balanceator
///   B^(a)(x (x) y) = (xa (x) 1) tauDelta(y) - (a (x) 1) tauDelta(y)(1 (x) x)
///                  + (1 (x) ya) Delta(?)    - (1 (x) a) Delta(x)(y (x) 1),
/// with ? = x or y per `reading`.
template <CoproductFamily F>
TensorElement<typename F::Basis> bibalanceatorOver(const F& fam, const typename F::Basis& a,
                                                   const typename F::Basis& x,
                                                   const typename F::Basis& y,
                                                   Eq8Term3 reading = Eq8Term3::DeltaX) {
    using T = TensorElement<typename F::Basis>;
    T term1; // (xa (x) 1) tauDelta(y) = flip((1 (x) xa) Delta(y))
    for (auto xa = fam.basisProduct(x, a); const auto& [z, c] : xa.terms()) term1 += c * flip(fam.t4(y, z));
    T term2 = leftMulFirst(a, flip(fam.t3(x, y)), fam);
    T term3;
    const auto& deltaArg = (reading == Eq8Term3::DeltaX) ? x : y;
    for (auto ya = fam.basisProduct(y, a); const auto& [z, c] : ya.terms()) term3 += c * fam.t4(deltaArg, z);
    T term4 = leftMulSecond(a, fam.t3(y, x), fam);
    return term1 - term2 + term3 - term4;
}

/// Convention for the two bracket identities
///   delta_a[x,y] = x.delta_a(y) - y.delta_a(x) +/- (B?(a)(x,y) - B?(a)(y,x))
///   zeta^a[x,y]  = x.zeta^a(y)  - y.zeta^a(x)  +/- (B?(a)(x,y) - B?(a)(y,x)).
/// Three printed ambiguities are resolved empirically: which balanceator
/// pairs with which cobracket, the over-balanceator's third term, and the
/// orientation of the balanceator difference.
struct PropConvention {
    bool deltaPairsWithOver = true;      // delta(t4-form) <-> over, zeta(t3-form) <-> under
    Eq8Term3 eq8 = Eq8Term3::DeltaX;     // third over-balanceator term argument
    bool differenceXYFirst = true;       // +B(x,y) - B(y,x) rather than the reverse

    std::string describe() const {
        std::string s = "delta(t4-form) pairs with ";
        s += deltaPairsWithOver ? "over" : "under";
        s += "-balanceator; over third term = Delta(";
        s += (eq8 == Eq8Term3::DeltaX) ? "x" : "y";
        s += "); difference = B(x,y)-B(y,x)";
        if (!differenceXYFirst) s += " reversed";
        return s;
    }
};

/// The machine-validated convention (see the prop suite's oracle, which
/// asserts this is the unique survivor of all eight combinations).
inline constexpr PropConvention kValidatedPropConvention{true, Eq8Term3::DeltaX, true};

inline std::vector<PropConvention> allPropConventions() {
    std::vector<PropConvention> out;
    for (bool pairing : {true, false})
        for (auto reading : {Eq8Term3::DeltaX, Eq8Term3::DeltaY})
            for (bool orient : {true, false}) out.push_back({pairing, reading, orient});
    return out;
}

/// Checks both bracket identities for the triple (a, x, y) under `conv`.
/// Returns true when both hold; on failure `which`, `lhs`, `rhs` describe the
/// first violated identity.
template <CoproductFamily F>
bool propIdentityHoldsAt(const F& fam, const typename F::Basis& a, const typename F::Basis& x,
                         const typename F::Basis& y, const PropConvention& conv,
                         std::string* which = nullptr, std::string* lhs = nullptr,
                         std::string* rhs = nullptr) {
    using B = typename F::Basis;
    using E = FreeElement<B>;
    auto rb = [&](const B& b) { return fam.renderBasis(b); };
    auto bracket = commutator(E::basis(x), E::basis(y), fam);

    auto balanced = [&](bool over) {
        auto bxy = over ? bibalanceatorOver(fam, a, x, y, conv.eq8) : bibalanceatorUnder(fam, a, x, y);
        auto byx = over ? bibalanceatorOver(fam, a, y, x, conv.eq8) : bibalanceatorUnder(fam, a, y, x);
        return conv.differenceXYFirst ? bxy - byx : byx - bxy;
    };

    {
        auto L = cobracketDelta(fam, a, bracket);
        auto R = adjointAct(E::basis(x), cobracketDelta(fam, a, E::basis(y)), fam) -
                 adjointAct(E::basis(y), cobracketDelta(fam, a, E::basis(x)), fam) +
                 balanced(conv.deltaPairsWithOver);
        if (L != R) {
            if (which) *which = "delta";
            if (lhs) *lhs = renderTensor(L, rb);
            if (rhs) *rhs = renderTensor(R, rb);
            return false;
        }
    }
    {
        auto L = cobracketZeta(fam, a, bracket);
        auto R = adjointAct(E::basis(x), cobracketZeta(fam, a, E::basis(y)), fam) -
                 adjointAct(E::basis(y), cobracketZeta(fam, a, E::basis(x)), fam) +
                 balanced(!conv.deltaPairsWithOver);
        if (L != R) {
            if (which) *which = "zeta";
            if (lhs) *lhs = renderTensor(L, rb);
            if (rhs) *rhs = renderTensor(R, rb);
            return false;
        }
    }
    return true;
}

/// True when both identities hold on every window triple.
template <CoproductFamily F>
bool propIdentitiesHold(const F& fam, const std::vector<typename F::Basis>& w,
                        const PropConvention& conv, std::string* firstFailure = nullptr) {
    for (const auto& a : w)
        for (const auto& x : w)
            for (const auto& y : w) {
                std::string which;
                if (!propIdentityHoldsAt(fam, a, x, y, conv, &which)) {
                    if (firstFailure)
                        *firstFailure = "a=" + fam.renderBasis(a) + "; x=" + fam.renderBasis(x) +
                                        "; y=" + fam.renderBasis(y) + "; id=" + which;
                    return false;
                }
            }
    return true;
}

/// Per-triple records for both bracket identities under the validated
/// convention; a leading info record carries the convention trail.
template <CoproductFamily F>
void checkPropIdentity(const F& fam, const std::vector<typename F::Basis>& w, const Sampler& sampler,
                       CheckSink& sink) {
    sink.info(suite::kProp, "convention", kValidatedPropConvention.describe(), "");
    const size_t n = w.size();
    forEachSelected(n * n * n, sampler.forSuite(suite::kProp), [&](size_t idx) {
        const auto& a = w[idx % n];
        const auto& x = w[(idx / n) % n];
        const auto& y = w[idx / (n * n)];
        std::string which, lhs, rhs;
        bool ok = propIdentityHoldsAt(fam, a, x, y, kValidatedPropConvention, &which, &lhs, &rhs);
        std::string witness = "a=" + fam.renderBasis(a) + "; x=" + fam.renderBasis(x) +
                              "; y=" + fam.renderBasis(y);
        if (ok) sink.pass(suite::kProp, witness + "; id=both");
        else sink.fail(suite::kProp, witness + "; id=" + which, lhs, rhs);
    });
}

/// Symmetry verdict for the bibalanceator: B(a)(x,y) = B(a)(y,x), both
/// components, reported per unordered triple. These are info records: the
/// structures are not claimed symmetric, the verdict feeds the conditional
/// CoJacobi check.
template <CoproductFamily F>
void checkBibalanceatorSymmetric(const F& fam, const std::vector<typename F::Basis>& w,
                                 const Sampler& sampler, CheckSink& sink) {
    using B = typename F::Basis;
    auto rb = [&](const B& b) { return fam.renderBasis(b); };
    const size_t n = w.size();
    forEachSelected(n * n * n, sampler.forSuite(suite::kBibalSym), [&](size_t idx) {
        const auto& a = w[idx % n];
        const size_t xi = (idx / n) % n, yi = idx / (n * n);
        if (xi > yi) return;
        const auto& x = w[xi];
        const auto& y = w[yi];
        auto underXY = bibalanceatorUnder(fam, a, x, y);
        auto underYX = bibalanceatorUnder(fam, a, y, x);
        auto overXY = bibalanceatorOver(fam, a, x, y);
        auto overYX = bibalanceatorOver(fam, a, y, x);
        bool sym = underXY == underYX && overXY == overYX;
        std::string witness = "a=" + fam.renderBasis(a) + "; x=" + fam.renderBasis(x) +
                              "; y=" + fam.renderBasis(y) + "; symmetric=" + (sym ? "yes" : "no");
        if (sym) sink.info(suite::kBibalSym, witness);
        else if (underXY != underYX)
            sink.info(suite::kBibalSym, witness, renderTensor(underXY, rb), renderTensor(underYX, rb));
        else
            sink.info(suite::kBibalSym, witness, renderTensor(overXY, rb), renderTensor(overYX, rb));
    });
}

/// Verdict records for the bibalanceator vanishing outright.
template <CoproductFamily F>
void checkBibalanced(const F& fam, const std::vector<typename F::Basis>& w, const Sampler& sampler,
                     CheckSink& sink) {
    using B = typename F::Basis;
    auto rb = [&](const B& b) { return fam.renderBasis(b); };
    const size_t n = w.size();
    forEachSelected(n * n * n, sampler.forSuite(suite::kBibalZero), [&](size_t idx) {
        const auto& a = w[idx % n];
        const auto& x = w[(idx / n) % n];
        const auto& y = w[idx / (n * n)];
        auto under = bibalanceatorUnder(fam, a, x, y);
        auto over = bibalanceatorOver(fam, a, x, y);
        bool zero = under.isZero() && over.isZero();
        std::string witness = "a=" + fam.renderBasis(a) + "; x=" + fam.renderBasis(x) +
                              "; y=" + fam.renderBasis(y) + "; zero=" + (zero ? "yes" : "no");
        if (zero) sink.info(suite::kBibalZero, witness);
        else sink.info(suite::kBibalZero, witness, renderTensor(under, rb), renderTensor(over, rb));
    });
}

/// True when the bibalanceator is symmetric across the whole window.
template <CoproductFamily F>
bool bibalanceatorSymmetricOn(const F& fam, const std::vector<typename F::Basis>& w,
                              std::string* firstAsym = nullptr) {
    for (const auto& a : w)
        for (size_t xi = 0; xi < w.size(); ++xi)
            for (size_t yi = xi + 1; yi < w.size(); ++yi) {
                const auto& x = w[xi];
                const auto& y = w[yi];
                bool sym = bibalanceatorUnder(fam, a, x, y) == bibalanceatorUnder(fam, a, y, x) &&
                           bibalanceatorOver(fam, a, x, y) == bibalanceatorOver(fam, a, y, x);
                if (!sym) {
                    if (firstAsym)
                        *firstAsym = "a=" + fam.renderBasis(a) + "; x=" + fam.renderBasis(x) +
                                     "; y=" + fam.renderBasis(y);
                    return false;
                }
            }
    return true;
}

/// Generalized co-Jacobi identity with the Lie-ization data
/// (bracket = commutator, cobrackets delta/zeta, intertwiners T1/T2):
///   (Id+s+s^2)(zeta^b (x) Id)(T1(a (x) x)) =
///   (Id+s+s^2)(delta_a (x) Id)(tau(T2(x (x) b)))
/// asserted per window triple (a, b, x).
template <CoproductFamily F>
void checkGeneralizedCoJacobi(const F& fam, const std::vector<typename F::Basis>& w,
                              const Sampler& sampler, CheckSink& sink) {
    using B = typename F::Basis;
    using E = FreeElement<B>;
    auto rb = [&](const B& b) { return fam.renderBasis(b); };
    const size_t n = w.size();
    forEachSelected(n * n * n, sampler.forSuite(suite::kCoJacobi), [&](size_t idx) {
        const auto& a = w[idx % n];
        const auto& b = w[(idx / n) % n];
        const auto& x = w[idx / (n * n)];

        TripleTensorElement<B> lhs;
        for (auto outer = t1Op(fam, a, x); const auto& [uv, c] : outer.terms())
            for (auto zb = cobracketZeta(fam, b, E::basis(uv.first)); const auto& [pq, d] : zb.terms())
                lhs.addTerm({pq.first, pq.second, uv.second}, c * d);
        lhs = cyclicSum(lhs);

        TripleTensorElement<B> rhs;
        for (auto outer = flip(t2Op(fam, x, b)); const auto& [uv, c] : outer.terms())
            for (auto da = cobracketDelta(fam, a, E::basis(uv.first)); const auto& [pq, d] : da.terms())
                rhs.addTerm({pq.first, pq.second, uv.second}, c * d);
        rhs = cyclicSum(rhs);

        std::string witness = "a=" + fam.renderBasis(a) + "; b=" + fam.renderBasis(b) +
                              "; x=" + fam.renderBasis(x);
        sink.check(suite::kCoJacobi, std::move(witness), lhs == rhs, renderTriple(lhs, rb),
                   renderTriple(rhs, rb));
    });
}

/// The conditional form shipped as the `cojacobi` suite: when the symmetry
/// verdict holds on the window, the identity is asserted everywhere;
/// otherwise the implication is vacuous and a single info record says so.
template <CoproductFamily F>
void checkCoJacobiConditional(const F& fam, const std::vector<typename F::Basis>& w,
                              const Sampler& sampler, CheckSink& sink) {
    std::string firstAsym;
    if (!bibalanceatorSymmetricOn(fam, w, &firstAsym)) {
        sink.info(suite::kCoJacobi,
                  "window: bibalanceator not symmetric, implication vacuous; first asymmetry at " +
                      firstAsym);
        return;
    }
    sink.info(suite::kCoJacobi, "window: bibalanceator symmetric, identity asserted");
    checkGeneralizedCoJacobi(fam, w, sampler, sink);
}

} // namespace mib
