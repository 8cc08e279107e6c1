#pragma once

#include "mib/algebra.hpp"
#include "mib/checks.hpp"
#include "mib/report.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mib {

/// Group algebra of the infinite cyclic group: basis a^n indexed by the
/// exponent, with the divided-power-style coproduct
///   Delta(a^n)   = sum_{i=0}^{n-1} a^i (x) a^{n-1-i}          (n > 0)
///   Delta(a^-n)  = -sum_{i=1}^{n} a^{-(n+1-i)} (x) a^{-i}     (n > 0)
///   Delta(e)     = 0.
/// The closed form is authoritative; deltaRecursive re-derives it from the
/// two one-step recursions as a cross-check.
class CyclicGroupAlgebra {
public:
    using Basis = long long;

    std::string familyName() const { return "cyclic"; }

    FreeElement<Basis> basisProduct(const Basis& m, const Basis& n) const {
        return FreeElement<Basis>::basis(m + n);
    }

    static TensorElement<Basis> delta(Basis n) {
        TensorElement<Basis> r;
        if (n > 0) {
            for (Basis i = 0; i < n; ++i) r.addTerm({i, n - 1 - i}, Rational(1));
        } else if (n < 0) {
            Basis p = -n;
            for (Basis i = 1; i <= p; ++i) r.addTerm({-(p + 1 - i), -i}, Rational(-1));
        }
        return r;
    }

    /// Delta(a^n) = (a (x) 1) Delta(a^{n-1}) + e (x) a^{n-1} for n > 1,
    /// Delta(a^{-n}) = -(a^{-n} (x) 1) Delta(a^n) (1 (x) a^{-n}) for n > 1,
    /// with Delta(a) = e (x) e and Delta(a^{-1}) = -a^{-1} (x) a^{-1}.
    static TensorElement<Basis> deltaRecursive(Basis n) {
        TensorElement<Basis> r;
        if (n == 0) return r;
        if (n == 1) return basisTensor<Basis>(0, 0);
        if (n == -1) return Rational(-1) * basisTensor<Basis>(-1, -1);
        if (n > 1) {
            for (auto prev = deltaRecursive(n - 1); const auto& [uv, c] : prev.terms())
                r.addTerm({uv.first + 1, uv.second}, c);
            r.addTerm({0, n - 1}, Rational(1));
            return r;
        }
        for (auto pos = deltaRecursive(-n); const auto& [uv, c] : pos.terms())
            r.addTerm({uv.first + n, uv.second + n}, -c);
        return r;
    }

    TensorElement<Basis> t3(const Basis& x, const Basis& b) const {
        return rightMulFirst(delta(b), x, *this);
    }
    TensorElement<Basis> t4(const Basis& b, const Basis& y) const {
        return leftMulSecond(y, delta(b), *this);
    }

    std::vector<Basis> enumerateWindow(int bound) const {
        std::vector<Basis> w;
        for (long long n = -bound; n <= bound; ++n) w.push_back(n);
        return w;
    }

    std::string renderBasis(const Basis& n) const {
        if (n == 0) return "e";
        if (n == 1) return "a";
        return "a^" + std::to_string(n);
    }
};

// ---------------------------------------------------------------------------
// The restricted dual K(F): finitely supported functions on the group,
// basis d_n (value 1 at a^n). Two products live on it.

inline std::string renderDualBasis(long long n) { return "d_" + std::to_string(n); }

/// d_m * d_n = d_{m+n+1} for m,n >= 0; -d_{m+n+1} for m,n < 0; 0 otherwise.
inline FreeElement<long long> dualStar(const FreeElement<long long>& f,
                                       const FreeElement<long long>& g) {
    FreeElement<long long> r;
    for (const auto& [m, cm] : f.terms())
        for (const auto& [n, cn] : g.terms()) {
            if (m >= 0 && n >= 0) r.addTerm(m + n + 1, cm * cn);
            else if (m < 0 && n < 0) r.addTerm(m + n + 1, -(cm * cn));
        }
    return r;
}

/// Pointwise product d_m . d_n = [m = n] d_m.
inline FreeElement<long long> dualDot(const FreeElement<long long>& f,
                                      const FreeElement<long long>& g) {
    FreeElement<long long> r;
    for (const auto& [m, cm] : f.terms()) {
        auto cn = g.coeff(m);
        if (!cn.isZero()) r.addTerm(m, cm * cn);
    }
    return r;
}

/// A finitely-described function on Z x Z, stored as rational multiples of
/// half-line indicators on anti-diagonals m+n = k. This is how multipliers of
/// (K(F) (x) K(F), . (x) .) are represented: equality is decided exactly on
/// the normal form, never on a sample of points.
class Kernel {
public:
    struct Term {
        long long diag = 0;
        std::optional<long long> lo, hi; // inclusive bounds on m; nullopt = unbounded
        Rational coeff;

        friend bool operator==(const Term&, const Term&) = default;
    };

    Kernel() = default;

    static Kernel diagonal(long long k, Rational c) { return term(k, std::nullopt, std::nullopt, c); }
    static Kernel term(long long k, std::optional<long long> lo, std::optional<long long> hi,
                       Rational c) {
        Kernel f;
        f.addTerm(k, lo, hi, c);
        return f;
    }

    void addTerm(long long k, std::optional<long long> lo, std::optional<long long> hi, Rational c) {
        if (c.isZero()) return;
        if (lo && hi && *lo > *hi) return;
        terms_.push_back({k, lo, hi, c});
    }

    const std::vector<Term>& rawTerms() const { return terms_; }

    Kernel operator+(const Kernel& o) const {
        Kernel r = *this;
        r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
        return r;
    }
    Kernel operator-() const {
        Kernel r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    Rational eval(long long m, long long n) const {
        Rational v(0);
        for (const auto& t : terms_) {
            if (t.diag != m + n) continue;
            if (t.lo && m < *t.lo) continue;
            if (t.hi && m > *t.hi) continue;
            v += t.coeff;
        }
        return v;
    }

    /// Canonical form: per diagonal, the partition of Z into maximal runs of
    /// constant nonzero value. Two kernels are equal iff normal forms match.
    std::vector<Term> normalized() const {
        std::map<long long, std::vector<const Term*>> byDiag;
        for (const auto& t : terms_) byDiag[t.diag].push_back(&t);
        std::vector<Term> out;
        for (const auto& [k, ts] : byDiag) {
            std::vector<long long> cuts;
            for (const Term* t : ts) {
                if (t->lo) cuts.push_back(*t->lo);
                if (t->hi) cuts.push_back(*t->hi + 1);
            }
            std::sort(cuts.begin(), cuts.end());
            cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

            struct Seg {
                std::optional<long long> lo, hi;
                Rational value;
            };
            std::vector<Seg> segs;
            auto valueAt = [&](long long m) {
                Rational v(0);
                for (const Term* t : ts) {
                    if (t->lo && m < *t->lo) continue;
                    if (t->hi && m > *t->hi) continue;
                    v += t->coeff;
                }
                return v;
            };
            if (cuts.empty()) {
                segs.push_back({std::nullopt, std::nullopt, valueAt(0)});
            } else {
                segs.push_back({std::nullopt, cuts.front() - 1, valueAt(cuts.front() - 1)});
                for (size_t i = 0; i + 1 < cuts.size(); ++i)
                    segs.push_back({cuts[i], cuts[i + 1] - 1, valueAt(cuts[i])});
                segs.push_back({cuts.back(), std::nullopt, valueAt(cuts.back())});
            }
            // Merge adjacent equal-valued runs, then drop zero runs.
            std::vector<Seg> merged;
            for (const auto& s : segs) {
                if (!merged.empty() && merged.back().value == s.value) merged.back().hi = s.hi;
                else merged.push_back(s);
            }
            for (const auto& s : merged)
                if (!s.value.isZero()) out.push_back({k, s.lo, s.hi, s.value});
        }
        return out;
    }

    friend bool operator==(const Kernel& a, const Kernel& b) {
        return a.normalized() == b.normalized();
    }

    std::string render() const {
        auto ts = normalized();
        if (ts.empty()) return "0";
        std::string s;
        for (const auto& t : ts) {
            if (!s.empty()) s += "; ";
            s += "{m+n=" + std::to_string(t.diag);
            if (t.lo && t.hi) s += ", " + std::to_string(*t.lo) + "<=m<=" + std::to_string(*t.hi);
            else if (t.lo) s += ", m>=" + std::to_string(*t.lo);
            else if (t.hi) s += ", m<=" + std::to_string(*t.hi);
            s += "}: " + t.coeff.str();
        }
        return s;
    }

private:
    std::vector<Term> terms_;
};

/// Delta(f)(a^m, a^n) = f(a^{m+n}): each d_k contributes the full diagonal k.
inline Kernel kernelDelta(const FreeElement<long long>& f) {
    Kernel r;
    for (const auto& [k, c] : f.terms()) r.addTerm(k, std::nullopt, std::nullopt, c);
    return r;
}

/// Left module action f |> F of (K(F), *) on diagonal kernels. On generators:
///   (d_p |> F)(m, n) =  F(m-p-1, n) on m >= p+1   (p >= 0)
///   (d_p |> F)(m, n) = -F(m-p-1, n) on m <= p     (p <= -1).
inline Kernel actLeft(const FreeElement<long long>& f, const Kernel& F) {
    Kernel r;
    for (const auto& [p, c] : f.terms())
        for (const auto& t : F.rawTerms()) {
            std::optional<long long> lo = t.lo ? std::optional(*t.lo + p + 1) : std::nullopt;
            std::optional<long long> hi = t.hi ? std::optional(*t.hi + p + 1) : std::nullopt;
            if (p >= 0) {
                lo = lo ? std::max(*lo, p + 1) : p + 1;
                r.addTerm(t.diag + p + 1, lo, hi, c * t.coeff);
            } else {
                hi = hi ? std::min(*hi, p) : p;
                r.addTerm(t.diag + p + 1, lo, hi, -(c * t.coeff));
            }
        }
    return r;
}

/// Right module action F <| g, mirrored on the second coordinate; the
/// half-line constraint in n converts to one in m along each diagonal.
inline Kernel actRight(const Kernel& F, const FreeElement<long long>& g) {
    Kernel r;
    for (const auto& [q, c] : g.terms())
        for (const auto& t : F.rawTerms()) {
            std::optional<long long> lo = t.lo, hi = t.hi;
            if (q >= 0) {
                // n >= q+1, i.e. m <= (old diag) on the shifted diagonal.
                hi = hi ? std::min(*hi, t.diag) : t.diag;
                r.addTerm(t.diag + q + 1, lo, hi, c * t.coeff);
            } else {
                // n <= q, i.e. m >= (old diag) + 1.
                lo = lo ? std::max(*lo, t.diag + 1) : t.diag + 1;
                r.addTerm(t.diag + q + 1, lo, hi, -(c * t.coeff));
            }
        }
    return r;
}

/// Pointwise multiplier action of a kernel on K(F) (x) K(F).
inline TensorElement<long long> kernelApply(const Kernel& F, const TensorElement<long long>& t) {
    TensorElement<long long> r;
    for (const auto& [mn, c] : t.terms()) r.addTerm(mn, F.eval(mn.first, mn.second) * c);
    return r;
}

// ---------------------------------------------------------------------------
// Dual-side suites.

namespace suite {
inline constexpr const char* kKfClosed = "kf-closed";
inline constexpr const char* kStarAssoc = "star-assoc";
inline constexpr const char* kGenDeriv = "gen-deriv";
inline constexpr const char* kDuality = "duality";
} // namespace suite

/// Closed form vs recursion for Delta(a^n) over |n| <= bound.
inline void checkKfClosedForm(int bound, CheckSink& sink) {
    CyclicGroupAlgebra kf;
    auto rb = [&](long long n) { return kf.renderBasis(n); };
    for (long long n = -bound; n <= bound; ++n) {
        auto closed = CyclicGroupAlgebra::delta(n);
        auto rec = CyclicGroupAlgebra::deltaRecursive(n);
        sink.check(suite::kKfClosed, "n=" + std::to_string(n), closed == rec,
                   renderTensor(closed, rb), renderTensor(rec, rb));
    }
}

/// Associativity of * on K(F) over window triples.
inline void checkStarAssociativity(int bound, CheckSink& sink) {
    using E = FreeElement<long long>;
    for (long long l = -bound; l <= bound; ++l)
        for (long long m = -bound; m <= bound; ++m)
            for (long long n = -bound; n <= bound; ++n) {
                auto lhs = dualStar(dualStar(E::basis(l), E::basis(m)), E::basis(n));
                auto rhs = dualStar(E::basis(l), dualStar(E::basis(m), E::basis(n)));
                std::string witness = "l=" + std::to_string(l) + "; m=" + std::to_string(m) +
                                      "; n=" + std::to_string(n);
                sink.check(suite::kStarAssoc, std::move(witness), lhs == rhs,
                           renderElement(lhs, renderDualBasis), renderElement(rhs, renderDualBasis));
            }
}

/// The generalized derivation law Delta(f * g) = f |> Delta(g) + Delta(f) <| g
/// as exact kernel equality over |m|, |n| <= bound.
inline void checkGeneralizedDerivation(int bound, CheckSink& sink) {
    using E = FreeElement<long long>;
    for (long long m = -bound; m <= bound; ++m)
        for (long long n = -bound; n <= bound; ++n) {
            auto lhs = kernelDelta(dualStar(E::basis(m), E::basis(n)));
            auto rhs = actLeft(E::basis(m), kernelDelta(E::basis(n))) +
                       actRight(kernelDelta(E::basis(m)), E::basis(n));
            std::string witness = "m=" + std::to_string(m) + "; n=" + std::to_string(n);
            sink.check(suite::kGenDeriv, std::move(witness), lhs == rhs, lhs.render(), rhs.render());
        }
}

/// Duality with the group algebra: (d_m * d_n)(a^k) equals the (a^m, a^n)
/// coefficient of Delta(a^k), and Delta on K(F) dualizes the group product.
inline void checkDualityPairing(int bound, CheckSink& sink) {
    using E = FreeElement<long long>;
    for (long long m = -bound; m <= bound; ++m)
        for (long long n = -bound; n <= bound; ++n) {
            auto starMN = dualStar(E::basis(m), E::basis(n));
            for (long long k = -bound; k <= bound; ++k) {
                auto lhs = starMN.coeff(k);
                auto rhs = CyclicGroupAlgebra::delta(k).coeff({m, n});
                std::string witness = "m=" + std::to_string(m) + "; n=" + std::to_string(n) +
                                      "; k=" + std::to_string(k) + "; side=product";
                sink.check(suite::kDuality, std::move(witness), lhs == rhs, lhs.str(), rhs.str());
            }
            // Delta(d_k)(m, n) = d_k(a^{m+n}).
            for (long long k = -bound; k <= bound; ++k) {
                auto lhs = kernelDelta(E::basis(k)).eval(m, n);
                Rational rhs(m + n == k ? 1 : 0);
                std::string witness = "m=" + std::to_string(m) + "; n=" + std::to_string(n) +
                                      "; k=" + std::to_string(k) + "; side=coproduct";
                sink.check(suite::kDuality, std::move(witness), lhs == rhs, lhs.str(), rhs.str());
            }
        }
}

} // namespace mib
