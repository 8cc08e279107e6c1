#pragma once

#include "mib/linear.hpp"

#include <concepts>
#include <functional>
#include <string>

namespace mib {

/// An algebra family fixes a basis type, the product on basis elements
/// (extended bilinearly), and a rendering of basis elements.
template <class F>
concept AlgebraFamily = requires(const F& f, const typename F::Basis& a, const typename F::Basis& b) {
    { f.basisProduct(a, b) } -> std::same_as<FreeElement<typename F::Basis>>;
    { f.renderBasis(a) } -> std::same_as<std::string>;
    { f.familyName() } -> std::same_as<std::string>;
};

/// A coproduct carrier exposes the two primitive slices of the multiplier
/// coproduct, both landing in A (x) A:
///   t3(x, b) = Delta(b)(x (x) 1)     t4(b, y) = (1 (x) y) Delta(b)
/// Everything else (full actions, cobrackets, balanceators) derives from these.
template <class F>
concept CoproductFamily = AlgebraFamily<F> &&
    requires(const F& f, const typename F::Basis& a, const typename F::Basis& b) {
        { f.t3(a, b) } -> std::same_as<TensorElement<typename F::Basis>>;
        { f.t4(a, b) } -> std::same_as<TensorElement<typename F::Basis>>;
    };

template <AlgebraFamily F>
FreeElement<typename F::Basis> mul(const FreeElement<typename F::Basis>& a,
                                   const FreeElement<typename F::Basis>& b, const F& fam) {
    FreeElement<typename F::Basis> r;
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms())
            r += (cu * cv) * fam.basisProduct(u, v);
    return r;
}

/// Componentwise product on A (x) A.
template <AlgebraFamily F>
TensorElement<typename F::Basis> tensorMul(const TensorElement<typename F::Basis>& s,
                                           const TensorElement<typename F::Basis>& t, const F& fam) {
    TensorElement<typename F::Basis> r;
    for (const auto& [uv, c] : s.terms())
        for (const auto& [pq, d] : t.terms()) {
            auto left = fam.basisProduct(uv.first, pq.first);
            if (left.isZero()) continue;
            auto right = fam.basisProduct(uv.second, pq.second);
            if (right.isZero()) continue;
            r += (c * d) * tensorProduct(left, right);
        }
    return r;
}

// Leg multiplications by a single basis element.

/// (x (x) 1) * t
template <AlgebraFamily F>
TensorElement<typename F::Basis> leftMulFirst(const typename F::Basis& x,
                                              const TensorElement<typename F::Basis>& t, const F& fam) {
    TensorElement<typename F::Basis> r;
    for (const auto& [uv, c] : t.terms())
        for (auto prod = fam.basisProduct(x, uv.first); const auto& [w, cw] : prod.terms())
            r.addTerm({w, uv.second}, c * cw);
    return r;
}

/// (1 (x) y) * t
template <AlgebraFamily F>
TensorElement<typename F::Basis> leftMulSecond(const typename F::Basis& y,
                                               const TensorElement<typename F::Basis>& t, const F& fam) {
    TensorElement<typename F::Basis> r;
    for (const auto& [uv, c] : t.terms())
        for (auto prod = fam.basisProduct(y, uv.second); const auto& [w, cw] : prod.terms())
            r.addTerm({uv.first, w}, c * cw);
    return r;
}

/// t * (x (x) 1)
template <AlgebraFamily F>
TensorElement<typename F::Basis> rightMulFirst(const TensorElement<typename F::Basis>& t,
                                               const typename F::Basis& x, const F& fam) {
    TensorElement<typename F::Basis> r;
    for (const auto& [uv, c] : t.terms())
        for (auto prod = fam.basisProduct(uv.first, x); const auto& [w, cw] : prod.terms())
            r.addTerm({w, uv.second}, c * cw);
    return r;
}

/// t * (1 (x) y)
template <AlgebraFamily F>
TensorElement<typename F::Basis> rightMulSecond(const TensorElement<typename F::Basis>& t,
                                                const typename F::Basis& y, const F& fam) {
    TensorElement<typename F::Basis> r;
    for (const auto& [uv, c] : t.terms())
        for (auto prod = fam.basisProduct(uv.second, y); const auto& [w, cw] : prod.terms())
            r.addTerm({uv.first, w}, c * cw);
    return r;
}

/// Linear extension of t3 over the coproduct argument: Delta(b)(x (x) 1)
/// with b a combination, x a basis probe.
template <CoproductFamily F>
TensorElement<typename F::Basis> t3Elem(const F& fam, const typename F::Basis& probe,
                                        const FreeElement<typename F::Basis>& arg) {
    TensorElement<typename F::Basis> r;
    for (const auto& [b, c] : arg.terms()) r += c * fam.t3(probe, b);
    return r;
}

/// Linear extension of t4 over the coproduct argument: (1 (x) y) Delta(b).
template <CoproductFamily F>
TensorElement<typename F::Basis> t4Elem(const F& fam, const FreeElement<typename F::Basis>& arg,
                                        const typename F::Basis& probe) {
    TensorElement<typename F::Basis> r;
    for (const auto& [b, c] : arg.terms()) r += c * fam.t4(b, probe);
    return r;
}

/// Full left action Delta(b)(x (x) y), factored as [Delta(b)(x (x) 1)](1 (x) y)
/// so that only t3 output (already in A (x) A) is ever multiplied.
template <CoproductFamily F>
TensorElement<typename F::Basis> deltaLeftAct(const F& fam, const FreeElement<typename F::Basis>& b,
                                              const TensorElement<typename F::Basis>& probe) {
    TensorElement<typename F::Basis> r;
    for (const auto& [bb, cb] : b.terms())
        for (const auto& [xy, cp] : probe.terms())
            r += (cb * cp) * rightMulSecond(fam.t3(xy.first, bb), xy.second, fam);
    return r;
}

/// Full right action (x (x) y) Delta(b) = (x (x) 1)[(1 (x) y) Delta(b)].
template <CoproductFamily F>
TensorElement<typename F::Basis> deltaRightAct(const TensorElement<typename F::Basis>& probe,
                                               const F& fam, const FreeElement<typename F::Basis>& b) {
    TensorElement<typename F::Basis> r;
    for (const auto& [bb, cb] : b.terms())
        for (const auto& [xy, cp] : probe.terms())
            r += (cb * cp) * leftMulFirst(xy.first, fam.t4(bb, xy.second), fam);
    return r;
}

/// A multiplier as a compatible pair of linear actions. Equality of
/// multipliers is always probed extensionally through these actions.
template <class E>
struct MultiplierPair {
    std::function<E(const E&)> left;
    std::function<E(const E&)> right;
};

/// The canonical embedding a -> (left mult by a, right mult by a).
template <AlgebraFamily F>
MultiplierPair<FreeElement<typename F::Basis>> multEmbed(const FreeElement<typename F::Basis>& a,
                                                         const F& fam) {
    using E = FreeElement<typename F::Basis>;
    return {[a, &fam](const E& x) { return mul(a, x, fam); },
            [a, &fam](const E& x) { return mul(x, a, fam); }};
}

/// Product of multipliers: (l, r)(l', r') = (l o l', r' o r).
template <class E>
MultiplierPair<E> multCompose(const MultiplierPair<E>& m1, const MultiplierPair<E>& m2) {
    return {[m1, m2](const E& x) { return m1.left(m2.left(x)); },
            [m1, m2](const E& x) { return m2.right(m1.right(x)); }};
}

template <class E>
MultiplierPair<E> multIdentity() {
    return {[](const E& x) { return x; }, [](const E& x) { return x; }};
}

} // namespace mib
