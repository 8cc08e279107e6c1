#pragma once

#include "mib/linear.hpp"
#include "mib/report.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mib {

namespace suite {
inline constexpr const char* kLieAntisym = "lie-antisym";
inline constexpr const char* kLieCocycle = "lie-cocycle";
inline constexpr const char* kLieCoJacobi = "lie-cojacobi";
inline constexpr const char* kDlbAntisym = "dlb-antisym";
inline constexpr const char* kDlbDerivation = "dlb-derivation";
inline constexpr const char* kDlbCoJacobi = "dlb-cojacobi";
inline constexpr const char* kDlbCoJacobiZero = "dlb-cojacobi-zero";
} // namespace suite

/// Finite-dimensional Lie algebra given by structure constants over Q.
/// Construction validates antisymmetry and the Jacobi identity exactly and
/// rejects bad tables.
class FinLieAlgebra {
public:
    using Elem = FreeElement<int>;
    using Table = std::vector<std::vector<Elem>>;

    FinLieAlgebra(std::vector<std::string> names, Table table)
        : names_(std::move(names)), table_(std::move(table)) {
        const int n = dim();
        if (static_cast<int>(table_.size()) != n)
            throw std::invalid_argument("bracket table size mismatch");
        for (const auto& row : table_)
            if (static_cast<int>(row.size()) != n)
                throw std::invalid_argument("bracket table size mismatch");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!(table_[i][j] == -table_[j][i]))
                    throw std::invalid_argument("bracket not antisymmetric at (" + names_[i] + "," +
                                                names_[j] + ")");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    Elem jac = bracket(bracketBasis(i, j), Elem::basis(k)) +
                               bracket(bracketBasis(j, k), Elem::basis(i)) +
                               bracket(bracketBasis(k, i), Elem::basis(j));
                    if (!jac.isZero())
                        throw std::invalid_argument("Jacobi identity violated at (" + names_[i] +
                                                    "," + names_[j] + "," + names_[k] + ")");
                }
    }

    int dim() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(i); }
    std::string renderBasis(int i) const { return names_.at(i); }

    const Elem& bracketBasis(int i, int j) const { return table_[i][j]; }

    Elem bracket(const Elem& x, const Elem& y) const {
        Elem r;
        for (const auto& [i, ci] : x.terms())
            for (const auto& [j, cj] : y.terms()) r += (ci * cj) * table_[i][j];
        return r;
    }

    /// (ad_x (x) 1 + 1 (x) ad_x) t.
    TensorElement<int> adjointAct(const Elem& x, const TensorElement<int>& t) const {
        TensorElement<int> r;
        for (const auto& [uv, c] : t.terms()) {
            r += c * tensorProduct(bracket(x, Elem::basis(uv.first)), Elem::basis(uv.second));
            r += c * tensorProduct(Elem::basis(uv.first), bracket(x, Elem::basis(uv.second)));
        }
        return r;
    }

    /// sl2 with basis h, e, f: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
    static FinLieAlgebra sl2() { return FinLieAlgebra({"h", "e", "f"}, sl2Table()); }

    static Table sl2Table() {
        Table t(3, std::vector<Elem>(3));
        auto set = [&](int i, int j, Elem v) {
            t[i][j] = v;
            t[j][i] = -v;
        };
        set(0, 1, Rational(2) * Elem::basis(1));  // [h,e] = 2e
        set(0, 2, Rational(-2) * Elem::basis(2)); // [h,f] = -2f
        set(1, 2, Elem::basis(0));                // [e,f] = h
        return t;
    }

    static FinLieAlgebra oneDim() { return FinLieAlgebra({"x"}, Table(1, std::vector<Elem>(1))); }

    /// Two-dimensional non-abelian algebra: [X,Y] = X.
    static FinLieAlgebra dim2NonAbelian() {
        Table t(2, std::vector<Elem>(2));
        t[0][1] = Elem::basis(0);
        t[1][0] = -Elem::basis(0);
        return FinLieAlgebra({"X", "Y"}, t);
    }

private:
    std::vector<std::string> names_;
    Table table_;
};

/// A cobracket given by its values on basis elements.
using LinearCobracket = std::vector<TensorElement<int>>;

inline TensorElement<int> applyCobracket(const LinearCobracket& beta, const FreeElement<int>& x) {
    TensorElement<int> r;
    for (const auto& [i, c] : x.terms()) r += c * beta.at(i);
    return r;
}

/// The inner cobracket determined by r: x -> (ad_x (x) 1 + 1 (x) ad_x) r.
inline TensorElement<int> coboundaryDelta(const FinLieAlgebra& g, const TensorElement<int>& r, int x) {
    return g.adjointAct(FreeElement<int>::basis(x), r);
}

inline LinearCobracket coboundaryCobracket(const FinLieAlgebra& g, const TensorElement<int>& r) {
    LinearCobracket beta;
    for (int i = 0; i < g.dim(); ++i) beta.push_back(coboundaryDelta(g, r, i));
    return beta;
}

/// Lie bialgebra axioms for (g, beta): antisymmetry, the 1-cocycle law
/// beta[x,y] = x.beta(y) - y.beta(x), and co-Jacobi
/// (Id+s+s^2)(beta (x) Id) beta = 0, all exact on basis elements.
inline void checkLieBialgebra(const FinLieAlgebra& g, const LinearCobracket& beta, CheckSink& sink) {
    using Elem = FreeElement<int>;
    auto rb = [&](int i) { return g.renderBasis(i); };
    for (int x = 0; x < g.dim(); ++x) {
        auto lhs = flip(beta[x]);
        auto rhs = -beta[x];
        sink.check(suite::kLieAntisym, "x=" + g.name(x), lhs == rhs, renderTensor(lhs, rb),
                   renderTensor(rhs, rb));
    }
    for (int x = 0; x < g.dim(); ++x)
        for (int y = 0; y < g.dim(); ++y) {
            auto lhs = applyCobracket(beta, g.bracketBasis(x, y));
            auto rhs = g.adjointAct(Elem::basis(x), beta[y]) - g.adjointAct(Elem::basis(y), beta[x]);
            sink.check(suite::kLieCocycle, "x=" + g.name(x) + "; y=" + g.name(y), lhs == rhs,
                       renderTensor(lhs, rb), renderTensor(rhs, rb));
        }
    for (int x = 0; x < g.dim(); ++x) {
        TripleTensorElement<int> t;
        for (const auto& [uv, c] : beta[x].terms())
            for (const auto& [pq, d] : beta[uv.first].terms())
                t.addTerm({pq.first, pq.second, uv.second}, c * d);
        auto s = cyclicSum(t);
        sink.check(suite::kLieCoJacobi, "x=" + g.name(x), s.isZero(), renderTriple(s, rb), "0");
    }
}

/// Derivator data on a finite-dimensional Lie algebra: cobracket tables
/// indexed [probe a][argument x] plus intertwiners given on basis pairs.
struct FiniteDerivator {
    const FinLieAlgebra* g = nullptr;
    std::vector<LinearCobracket> delta; // delta[a][x]
    std::vector<LinearCobracket> zeta;  // zeta[a][x]
    std::function<TensorElement<int>(int, int)> t1, t2;
    std::string label;
};

/// delta(x) = zeta(x) = alpha(x) beta, T1(a (x) x) = alpha(a) beta(x),
/// T2(x (x) b) = alpha(b) beta(x), over a validated Lie bialgebra (g, beta).
inline FiniteDerivator buildFunctionalExample(const FinLieAlgebra& g, const LinearCobracket& beta,
                                              const std::vector<Rational>& alpha) {
    CheckSink probe("lie");
    checkLieBialgebra(g, beta, probe);
    if (anyFailure(probe.records()))
        throw std::invalid_argument("functional example requires a Lie bialgebra");

    FiniteDerivator d;
    d.g = &g;
    d.label = "functional";
    for (int a = 0; a < g.dim(); ++a) {
        LinearCobracket row;
        for (int x = 0; x < g.dim(); ++x) row.push_back(alpha.at(a) * beta.at(x));
        d.delta.push_back(row);
        d.zeta.push_back(row);
    }
    d.t1 = [beta, alpha](int a, int x) { return alpha.at(a) * beta.at(x); };
    d.t2 = [beta, alpha](int x, int b) { return alpha.at(b) * beta.at(x); };
    return d;
}

enum class Dim2Variant { IotaX, Zero };

inline std::string dim2VariantName(Dim2Variant v) {
    return v == Dim2Variant::IotaX ? "iotaX" : "zero";
}

/// Two-dimensional example on [X,Y] = X: delta = zeta with delta(X) = iota_Y
/// (Z -> Z ^ Y); delta(Y) is ambiguous in the source and is chosen by the
/// variant (iota_X or 0). T1 = T2 = Id.
inline FiniteDerivator buildDim2Example(Dim2Variant variant) {
    static const FinLieAlgebra g = FinLieAlgebra::dim2NonAbelian();
    using Elem = FreeElement<int>;
    const int X = 0, Y = 1;

    auto iota = [&](int fixed) {
        LinearCobracket row;
        for (int z = 0; z < g.dim(); ++z)
            row.push_back(wedge(Elem::basis(z), Elem::basis(fixed)));
        return row;
    };

    FiniteDerivator d;
    d.g = &g;
    d.label = "dim2:" + dim2VariantName(variant);
    d.delta.resize(2);
    d.delta[X] = iota(Y);
    d.delta[Y] = variant == Dim2Variant::IotaX ? iota(X) : LinearCobracket(2);
    d.zeta = d.delta;
    d.t1 = [](int u, int v) { return basisTensor(u, v); };
    d.t2 = [](int u, int v) { return basisTensor(u, v); };
    return d;
}

namespace detail {

inline TripleTensorElement<int> applyCobracketFirstLeg(const LinearCobracket& cb,
                                                       const TensorElement<int>& t) {
    TripleTensorElement<int> r;
    for (const auto& [uv, c] : t.terms())
        for (const auto& [pq, d] : cb.at(uv.first).terms())
            r.addTerm({pq.first, pq.second, uv.second}, c * d);
    return r;
}

} // namespace detail

/// Both sides of the generalized co-Jacobi identity for the triple (a, b, x).
inline std::pair<TripleTensorElement<int>, TripleTensorElement<int>>
derivatorCoJacobiSides(const FiniteDerivator& d, int a, int b, int x) {
    auto lhs = cyclicSum(detail::applyCobracketFirstLeg(d.zeta.at(b), d.t1(a, x)));
    auto rhs = cyclicSum(detail::applyCobracketFirstLeg(d.delta.at(a), flip(d.t2(x, b))));
    return {lhs, rhs};
}

/// All axioms checkable on the data: antisymmetry of every cobracket value,
/// the value-level derivation property of each delta_a / zeta^a, and the
/// generalized co-Jacobi identity.
inline void checkDerivatorAxioms(const FiniteDerivator& d, CheckSink& sink) {
    const FinLieAlgebra& g = *d.g;
    using Elem = FreeElement<int>;
    auto rb = [&](int i) { return g.renderBasis(i); };

    for (int a = 0; a < g.dim(); ++a)
        for (int x = 0; x < g.dim(); ++x)
            for (auto [cb, tag] : {std::pair{&d.delta, "delta"}, std::pair{&d.zeta, "zeta"}}) {
                const auto& val = (*cb)[a][x];
                sink.check(suite::kDlbAntisym,
                           std::string("map=") + tag + "; a=" + g.name(a) + "; x=" + g.name(x),
                           flip(val) == -val, renderTensor(flip(val), rb), renderTensor(-val, rb));
            }

    for (int a = 0; a < g.dim(); ++a)
        for (int x = 0; x < g.dim(); ++x)
            for (int y = 0; y < g.dim(); ++y)
                for (auto [cb, tag] : {std::pair{&d.delta, "delta"}, std::pair{&d.zeta, "zeta"}}) {
                    auto lhs = applyCobracket((*cb)[a], g.bracketBasis(x, y));
                    auto rhs = g.adjointAct(Elem::basis(x), (*cb)[a][y]) -
                               g.adjointAct(Elem::basis(y), (*cb)[a][x]);
                    sink.check(suite::kDlbDerivation,
                               std::string("map=") + tag + "; a=" + g.name(a) + "; x=" + g.name(x) +
                                   "; y=" + g.name(y),
                               lhs == rhs, renderTensor(lhs, rb), renderTensor(rhs, rb));
                }

    for (int a = 0; a < g.dim(); ++a)
        for (int b = 0; b < g.dim(); ++b)
            for (int x = 0; x < g.dim(); ++x) {
                auto [lhs, rhs] = derivatorCoJacobiSides(d, a, b, x);
                std::string witness = "a=" + g.name(a) + "; b=" + g.name(b) + "; x=" + g.name(x);
                sink.check(suite::kDlbCoJacobi, witness, lhs == rhs, renderTriple(lhs, rb),
                           renderTriple(rhs, rb));
            }
}

/// Asserts both co-Jacobi sides vanish identically (the stronger property
/// the functional and dim-2 examples satisfy).
inline void checkDerivatorCoJacobiZero(const FiniteDerivator& d, CheckSink& sink) {
    const FinLieAlgebra& g = *d.g;
    auto rb = [&](int i) { return g.renderBasis(i); };
    for (int a = 0; a < g.dim(); ++a)
        for (int b = 0; b < g.dim(); ++b)
            for (int x = 0; x < g.dim(); ++x) {
                auto [lhs, rhs] = derivatorCoJacobiSides(d, a, b, x);
                std::string witness = "a=" + g.name(a) + "; b=" + g.name(b) + "; x=" + g.name(x);
                sink.check(suite::kDlbCoJacobiZero, witness, lhs.isZero() && rhs.isZero(),
                           renderTriple(lhs, rb), renderTriple(rhs, rb));
            }
}

inline bool derivatorCoJacobiBothSidesZero(const FiniteDerivator& d) {
    const FinLieAlgebra& g = *d.g;
    for (int a = 0; a < g.dim(); ++a)
        for (int b = 0; b < g.dim(); ++b)
            for (int x = 0; x < g.dim(); ++x) {
                auto [lhs, rhs] = derivatorCoJacobiSides(d, a, b, x);
                if (!lhs.isZero() || !rhs.isZero()) return false;
            }
    return true;
}

} // namespace mib
