#pragma once

#include "mib/rational.hpp"

#include <map>
#include <string>
#include <tuple>
#include <utility>

namespace mib {

/// Finite formal linear combination of basis elements of type B over Q.
/// Canonical form: no stored coefficient is zero, so equality is structural.
template <class B>
class FreeElement {
public:
    using Basis = B;
    using TermMap = std::map<B, Rational>;

    FreeElement() = default;

    static FreeElement zero() { return FreeElement(); }
    static FreeElement basis(B b) { return term(std::move(b), Rational(1)); }
    static FreeElement term(B b, Rational c) {
        FreeElement e;
        e.addTerm(b, c);
        return e;
    }

    bool isZero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    Rational coeff(const B& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    FreeElement& addTerm(const B& b, const Rational& c) {
        if (c.isZero()) return *this;
        auto [it, inserted] = terms_.emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second.isZero()) terms_.erase(it);
        }
        return *this;
    }

    FreeElement& operator+=(const FreeElement& o) {
        for (const auto& [b, c] : o.terms_) addTerm(b, c);
        return *this;
    }
    FreeElement& operator-=(const FreeElement& o) {
        for (const auto& [b, c] : o.terms_) addTerm(b, -c);
        return *this;
    }

    friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
    friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
    FreeElement operator-() const { return Rational(-1) * *this; }

    friend FreeElement operator*(const Rational& c, const FreeElement& e) {
        FreeElement r;
        if (c.isZero()) return r;
        for (const auto& [b, k] : e.terms_) r.terms_.emplace(b, c * k);
        return r;
    }

    bool operator==(const FreeElement&) const = default;

private:
    TermMap terms_;
};

template <class B>
using TensorElement = FreeElement<std::pair<B, B>>;

template <class B>
using TripleTensorElement = FreeElement<std::tuple<B, B, B>>;

/// Bilinear outer product A x A -> A (x) A.
template <class B>
TensorElement<B> tensorProduct(const FreeElement<B>& a, const FreeElement<B>& b) {
    TensorElement<B> r;
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms())
            r.addTerm({u, v}, cu * cv);
    return r;
}

template <class B>
TensorElement<B> basisTensor(B u, B v) {
    return TensorElement<B>::basis({std::move(u), std::move(v)});
}

/// The flip map tau: u (x) v -> v (x) u.
template <class B>
TensorElement<B> flip(const TensorElement<B>& t) {
    TensorElement<B> r;
    for (const auto& [uv, c] : t.terms()) r.addTerm({uv.second, uv.first}, c);
    return r;
}

/// Antisymmetrized tensor x ^ y = x (x) y - y (x) x.
template <class B>
TensorElement<B> wedge(const FreeElement<B>& x, const FreeElement<B>& y) {
    auto t = tensorProduct(x, y);
    return t - flip(t);
}

/// The cyclic permutation sigma = (Id (x) tau)(tau (x) Id) on triple tensors,
/// i.e. u (x) v (x) w -> v (x) w (x) u.
template <class B>
TripleTensorElement<B> cycle(const TripleTensorElement<B>& t) {
    TripleTensorElement<B> r;
    for (const auto& [uvw, c] : t.terms())
        r.addTerm({std::get<1>(uvw), std::get<2>(uvw), std::get<0>(uvw)}, c);
    return r;
}

/// (Id + sigma + sigma^2), the cyclic-orbit sum.
template <class B>
TripleTensorElement<B> cyclicSum(const TripleTensorElement<B>& t) {
    auto s = cycle(t);
    return t + s + cycle(s);
}

/// Extends fn: B -> FreeElement<C> linearly over a combination.
template <class B, class Fn>
auto extendLinearly(const FreeElement<B>& e, Fn&& fn) {
    using Out = decltype(fn(std::declval<const B&>()));
    Out r;
    for (const auto& [b, c] : e.terms()) r += c * fn(b);
    return r;
}

/// Renders "c1*b1 + c2*b2 + ..." with unit coefficients elided; zero is "0".
template <class B, class RB>
std::string renderElement(const FreeElement<B>& e, RB&& renderBasis) {
    if (e.isZero()) return "0";
    std::string out;
    for (const auto& [b, c] : e.terms()) {
        if (!out.empty()) out += " + ";
        if (c == Rational(1)) out += renderBasis(b);
        else if (c == Rational(-1)) out += "-" + renderBasis(b);
        else out += c.str() + "*" + renderBasis(b);
    }
    return out;
}

template <class B, class RB>
std::string renderTensor(const TensorElement<B>& t, RB&& rb) {
    return renderElement(t, [&](const std::pair<B, B>& p) {
        return rb(p.first) + "⊗" + rb(p.second);
    });
}

template <class B, class RB>
std::string renderTriple(const TripleTensorElement<B>& t, RB&& rb) {
    return renderElement(t, [&](const std::tuple<B, B, B>& p) {
        return rb(std::get<0>(p)) + "⊗" + rb(std::get<1>(p)) + "⊗" + rb(std::get<2>(p));
    });
}

} // namespace mib
