#pragma once

#include "mib/algebra.hpp"
#include "mib/report.hpp"

#include <string>
#include <vector>

namespace mib {

namespace suite {
inline constexpr const char* kAssoc = "assoc";
inline constexpr const char* kNondegen = "nondegen";
inline constexpr const char* kCoassoc = "coassoc";
inline constexpr const char* kDeriv = "deriv";
inline constexpr const char* kCompat = "compat";
} // namespace suite

/// Associativity of the bilinear product on all window triples.
template <AlgebraFamily F>
void checkAssociativity(const F& fam, const std::vector<typename F::Basis>& w, const Sampler& sampler,
                        CheckSink& sink) {
    using E = FreeElement<typename F::Basis>;
    const size_t n = w.size();
    forEachSelected(n * n * n, sampler.forSuite(suite::kAssoc), [&](size_t idx) {
        const auto& a = w[idx % n];
        const auto& b = w[(idx / n) % n];
        const auto& c = w[idx / (n * n)];
        E lhs = mul(fam.basisProduct(a, b), E::basis(c), fam);
        E rhs = mul(E::basis(a), fam.basisProduct(b, c), fam);
        std::string witness = "a=" + fam.renderBasis(a) + "; b=" + fam.renderBasis(b) +
                              "; c=" + fam.renderBasis(c);
        auto rb = [&](const typename F::Basis& x) { return fam.renderBasis(x); };
        sink.check(suite::kAssoc, std::move(witness), lhs == rhs, renderElement(lhs, rb),
                   renderElement(rhs, rb));
    });
}

/// Desk-scale nondegeneracy surrogate: every window basis element must admit
/// witnesses c, c' in the window with b*c != 0 and c'*b != 0.
template <AlgebraFamily F>
void checkNondegeneracy(const F& fam, const std::vector<typename F::Basis>& w, CheckSink& sink) {
    for (const auto& b : w) {
        const typename F::Basis* right = nullptr;
        const typename F::Basis* left = nullptr;
        for (const auto& c : w) {
            if (!right && !fam.basisProduct(b, c).isZero()) right = &c;
            if (!left && !fam.basisProduct(c, b).isZero()) left = &c;
            if (right && left) break;
        }
        std::string witness = "b=" + fam.renderBasis(b);
        if (right && left) {
            sink.pass(suite::kNondegen, witness + "; b*c!=0 for c=" + fam.renderBasis(*right) +
                                            "; c'*b!=0 for c'=" + fam.renderBasis(*left));
        } else {
            sink.fail(suite::kNondegen, witness,
                      right ? "right witness " + fam.renderBasis(*right) : "no right witness",
                      left ? "left witness " + fam.renderBasis(*left) : "no left witness");
        }
    }
}

/// Coassociativity of the multiplier coproduct on window triples:
/// (i (x) T4)(T3 (x) i) = (T3 (x) i)(i (x) T4) on a (x) b (x) c.
template <CoproductFamily F>
void checkCoassociativity(const F& fam, const std::vector<typename F::Basis>& w,
                          const Sampler& sampler, CheckSink& sink) {
    using B = typename F::Basis;
    const size_t n = w.size();
    auto rb = [&](const B& x) { return fam.renderBasis(x); };
    forEachSelected(n * n * n, sampler.forSuite(suite::kCoassoc), [&](size_t idx) {
        const B& a = w[idx % n];
        const B& b = w[(idx / n) % n];
        const B& c = w[idx / (n * n)];

        TripleTensorElement<B> lhs;
        for (auto outer = fam.t3(a, b); const auto& [uv, cuv] : outer.terms())
            for (auto inner = fam.t4(uv.second, c); const auto& [pq, cpq] : inner.terms())
                lhs.addTerm({uv.first, pq.first, pq.second}, cuv * cpq);

        TripleTensorElement<B> rhs;
        for (auto outer = fam.t4(b, c); const auto& [uv, cuv] : outer.terms())
            for (auto inner = fam.t3(a, uv.first); const auto& [pq, cpq] : inner.terms())
                rhs.addTerm({pq.first, pq.second, uv.second}, cuv * cpq);

        std::string witness =
            "a=" + fam.renderBasis(a) + "; b=" + fam.renderBasis(b) + "; c=" + fam.renderBasis(c);
        sink.check(suite::kCoassoc, std::move(witness), lhs == rhs, renderTriple(lhs, rb),
                   renderTriple(rhs, rb));
    });
}

/// Derivation law Delta(ab) = Delta(a)(1 (x) b) + (a (x) 1) Delta(b), probed
/// extensionally on both sides of the multiplier: for every window pair (a,b)
/// and probe pair (x,y) the left-action and right-action identities must hold.
template <CoproductFamily F>
void checkDerivation(const F& fam, const std::vector<typename F::Basis>& w, const Sampler& sampler,
                     CheckSink& sink) {
    using B = typename F::Basis;
    using E = FreeElement<B>;
    const size_t n = w.size();
    auto rb = [&](const B& x) { return fam.renderBasis(x); };
    forEachSelected(n * n * n * n, sampler.forSuite(suite::kDeriv), [&](size_t idx) {
        const B& a = w[idx % n];
        const B& b = w[(idx / n) % n];
        const B& x = w[(idx / (n * n)) % n];
        const B& y = w[idx / (n * n * n)];
        E ab = fam.basisProduct(a, b);
        std::string witness = "a=" + fam.renderBasis(a) + "; b=" + fam.renderBasis(b) +
                              "; x=" + fam.renderBasis(x) + "; y=" + fam.renderBasis(y);

        // Left actions on x (x) y.
        auto probe = basisTensor(x, y);
        auto lhsL = deltaLeftAct(fam, ab, probe);
        auto rhsL = deltaLeftAct(fam, E::basis(a), tensorProduct(E::basis(x), fam.basisProduct(b, y))) +
                    leftMulFirst(a, deltaLeftAct(fam, E::basis(b), probe), fam);
        sink.check(suite::kDeriv, witness + "; side=left", lhsL == rhsL, renderTensor(lhsL, rb),
                   renderTensor(rhsL, rb));

        // Right actions on x (x) y.
        auto lhsR = deltaRightAct(probe, fam, ab);
        auto rhsR = rightMulSecond(deltaRightAct(probe, fam, E::basis(a)), b, fam) +
                    deltaRightAct(tensorProduct(fam.basisProduct(x, a), E::basis(y)), fam, E::basis(b));
        sink.check(suite::kDeriv, witness + "; side=right", lhsR == rhsR, renderTensor(lhsR, rb),
                   renderTensor(rhsR, rb));
    });
}

/// Multiplier compatibility b lambda(c) = rho(b) c lifted to A (x) A:
/// (x (x) y)[Delta(c)(u (x) v)] = [(x (x) y) Delta(c)](u (x) v).
template <CoproductFamily F>
void checkMultiplierCompat(const F& fam, const std::vector<typename F::Basis>& w,
                           const Sampler& sampler, CheckSink& sink) {
    using B = typename F::Basis;
    using E = FreeElement<B>;
    const size_t n = w.size();
    auto rb = [&](const B& x) { return fam.renderBasis(x); };

    // Delta actions depend only on (c, u, v) / (c, x, y); cache them.
    std::vector<TensorElement<B>> leftAct(n * n * n), rightAct(n * n * n);
    for (size_t ci = 0; ci < n; ++ci)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                auto probe = basisTensor(w[i], w[j]);
                leftAct[(ci * n + i) * n + j] = deltaLeftAct(fam, E::basis(w[ci]), probe);
                rightAct[(ci * n + i) * n + j] = deltaRightAct(probe, fam, E::basis(w[ci]));
            }

    forEachSelected(n * n * n * n * n, sampler.forSuite(suite::kCompat), [&](size_t idx) {
        size_t r = idx;
        const size_t ci = r % n; r /= n;
        const size_t xi = r % n; r /= n;
        const size_t yi = r % n; r /= n;
        const size_t ui = r % n; r /= n;
        const size_t vi = r;
        auto lhs = leftMulSecond(w[yi], leftMulFirst(w[xi], leftAct[(ci * n + ui) * n + vi], fam), fam);
        auto rhs = rightMulSecond(rightMulFirst(rightAct[(ci * n + xi) * n + yi], w[ui], fam), w[vi], fam);
        std::string witness = "c=" + fam.renderBasis(w[ci]) + "; x=" + fam.renderBasis(w[xi]) +
                              "; y=" + fam.renderBasis(w[yi]) + "; u=" + fam.renderBasis(w[ui]) +
                              "; v=" + fam.renderBasis(w[vi]);
        sink.check(suite::kCompat, std::move(witness), lhs == rhs, renderTensor(lhs, rb),
                   renderTensor(rhs, rb));
    });
}

} // namespace mib
