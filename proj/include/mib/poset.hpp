#pragma once

#include "mib/algebra.hpp"
#include "mib/quiver.hpp" // ParseError

#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace mib {

/// A finite ambient poset: named elements and a relation stored reflexively
/// and transitively closed. Construction rejects antisymmetry violations.
class AmbientPoset {
public:
    static AmbientPoset fromRelations(std::vector<std::string> names,
                                      const std::vector<std::pair<int, int>>& covers) {
        AmbientPoset p;
        p.names_ = std::move(names);
        if (p.names_.size() > 62) throw std::invalid_argument("ambient poset too large");
        size_t n = p.names_.size();
        p.leq_.assign(n, std::vector<bool>(n, false));
        for (size_t i = 0; i < n; ++i) p.leq_[i][i] = true;
        for (auto [a, b] : covers) p.leq_.at(a).at(b) = true;
        p.close();
        p.checkAntisymmetry(0);
        return p;
    }

    /// Line-oriented format: `e <name>` declares an element, `le <x> <y>`
    /// declares x <= y (generators; closure is computed); `#` comments.
    static AmbientPoset parse(const std::string& text) {
        std::vector<std::string> names;
        std::vector<std::pair<int, int>> rels;
        auto idOf = [&](const std::string& s) -> std::optional<int> {
            for (size_t i = 0; i < names.size(); ++i)
                if (names[i] == s) return static_cast<int>(i);
            return std::nullopt;
        };
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            std::string head;
            if (!(ls >> head)) continue;
            std::string where = "line " + std::to_string(lineno) + ": ";
            if (head == "e") {
                std::string name, extra;
                if (!(ls >> name) || (ls >> extra)) throw ParseError(where + "expected 'e <name>'");
                if (idOf(name)) throw ParseError(where + "duplicate element '" + name + "'");
                names.push_back(name);
            } else if (head == "le") {
                std::string x, y, extra;
                if (!(ls >> x >> y) || (ls >> extra)) throw ParseError(where + "expected 'le <x> <y>'");
                auto xi = idOf(x), yi = idOf(y);
                if (!xi) throw ParseError(where + "unknown element '" + x + "'");
                if (!yi) throw ParseError(where + "unknown element '" + y + "'");
                rels.emplace_back(*xi, *yi);
            } else {
                throw ParseError(where + "unknown directive '" + head + "'");
            }
        }
        return fromRelations(std::move(names), rels);
    }

    static AmbientPoset chain(int n) {
        std::vector<std::string> names;
        std::vector<std::pair<int, int>> rels;
        for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
        for (int i = 0; i + 1 < n; ++i) rels.emplace_back(i, i + 1);
        return fromRelations(std::move(names), rels);
    }

    /// 0 < a, b < 1 with a, b incomparable.
    static AmbientPoset diamond() {
        return fromRelations({"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    }

    size_t size() const { return names_.size(); }
    const std::string& name(int i) const { return names_.at(i); }
    bool leq(int i, int j) const { return leq_[i][j]; }

private:
    void close() {
        size_t n = names_.size();
        for (size_t k = 0; k < n; ++k)
            for (size_t i = 0; i < n; ++i)
                if (leq_[i][k])
                    for (size_t j = 0; j < n; ++j)
                        if (leq_[k][j]) leq_[i][j] = true;
    }
    void checkAntisymmetry(int) const {
        size_t n = names_.size();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (leq_[i][j] && leq_[j][i])
                    throw ParseError("cycle detected: " + names_[i] + " <= " + names_[j] +
                                     " <= " + names_[i]);
    }

    std::vector<std::string> names_;
    std::vector<std::vector<bool>> leq_;
};

/// A nonempty subset of the ambient poset; valid basis elements are bounded
/// (unique minimum and maximum under the induced order).
struct Subposet {
    std::uint64_t mask = 0;
    friend bool operator==(const Subposet&, const Subposet&) = default;
    friend bool operator<(const Subposet& a, const Subposet& b) { return a.mask < b.mask; }
};

/// Algebra of bounded subposets under the gluing product P*Q, with the
/// interval-split multiplier coproduct.
class SubposetAlgebra {
public:
    using Basis = Subposet;

    explicit SubposetAlgebra(AmbientPoset L) : L_(std::move(L)) {}

    const AmbientPoset& ambient() const { return L_; }
    std::string familyName() const { return "poset"; }

    std::optional<int> minOf(Basis p) const {
        for (int m : elems(p)) {
            bool ok = true;
            for (int y : elems(p))
                if (!L_.leq(m, y)) { ok = false; break; }
            if (ok) return m;
        }
        return std::nullopt;
    }
    std::optional<int> maxOf(Basis p) const {
        for (int m : elems(p)) {
            bool ok = true;
            for (int y : elems(p))
                if (!L_.leq(y, m)) { ok = false; break; }
            if (ok) return m;
        }
        return std::nullopt;
    }
    bool isBounded(Basis p) const { return p.mask != 0 && minOf(p) && maxOf(p); }

    /// P*Q = P u Q when 1_P = 0_Q and the union is bounded by 0_P and 1_Q;
    /// zero otherwise. With 1_P = 0_Q every element of the union sits between
    /// 0_P and 1_Q, so the guard never fires; it stays on so any violation
    /// would surface as a zero product in the assoc suite.
    FreeElement<Basis> basisProduct(const Basis& p, const Basis& q) const {
        auto topP = maxOf(p);
        auto botQ = minOf(q);
        if (!topP || !botQ || *topP != *botQ) return {};
        Basis u{p.mask | q.mask};
        int lo = *minOf(p), hi = *maxOf(q);
        for (int y : elems(u))
            if (!L_.leq(lo, y) || !L_.leq(y, hi)) return {};
        return FreeElement<Basis>::basis(u);
    }

    /// (-inf, x]_P when x lies in P_0 = P - {1_P}; nothing otherwise.
    std::optional<Basis> intervalDown(Basis p, int x) const {
        if (!inP0(p, x)) return std::nullopt;
        Basis r;
        for (int y : elems(p))
            if (L_.leq(y, x)) r.mask |= 1ull << y;
        return r;
    }
    /// [x, +inf)_P under the same guard.
    std::optional<Basis> intervalUp(Basis p, int x) const {
        if (!inP0(p, x)) return std::nullopt;
        Basis r;
        for (int y : elems(p))
            if (L_.leq(x, y)) r.mask |= 1ull << y;
        return r;
    }

    /// Delta(P)(S (x) 1): the single surviving split at x = 0_S,
    /// ((-inf, 0_S]_P * S) (x) [0_S, +inf)_P, or zero.
    TensorElement<Basis> t3(const Basis& s, const Basis& p) const {
        auto x0 = minOf(s);
        if (!x0) return {};
        auto down = intervalDown(p, *x0);
        if (!down) return {};
        auto up = intervalUp(p, *x0);
        return tensorProduct(basisProduct(*down, s), FreeElement<Basis>::basis(*up));
    }

    /// (1 (x) S) Delta(P): surviving split at x = 1_S,
    /// (-inf, 1_S]_P (x) (S * [1_S, +inf)_P), or zero.
    TensorElement<Basis> t4(const Basis& p, const Basis& s) const {
        auto x1 = maxOf(s);
        if (!x1) return {};
        auto down = intervalDown(p, *x1);
        if (!down) return {};
        auto up = intervalUp(p, *x1);
        return tensorProduct(FreeElement<Basis>::basis(*down), basisProduct(s, *up));
    }

    /// Cross-oracle for t3: the full sum over x in P_0 rather than the
    /// closed form. All terms but x = 0_S vanish.
    TensorElement<Basis> t3ViaSum(const Basis& s, const Basis& p) const {
        TensorElement<Basis> r;
        for (int x : elems(p)) {
            auto down = intervalDown(p, x);
            if (!down) continue;
            auto up = intervalUp(p, x);
            r += tensorProduct(basisProduct(*down, s), FreeElement<Basis>::basis(*up));
        }
        return r;
    }

    /// All bounded carriers of size <= maxSize, ordered by (size, elements).
    std::vector<Basis> enumerateWindow(int maxSize) const {
        std::vector<Basis> out;
        const int n = static_cast<int>(L_.size());
        for (int size = 1; size <= maxSize && size <= n; ++size) {
            std::vector<int> pick(size);
            for (int i = 0; i < size; ++i) pick[i] = i;
            while (true) {
                Basis b;
                for (int i : pick) b.mask |= 1ull << i;
                if (isBounded(b)) out.push_back(b);
                int i = size - 1;
                while (i >= 0 && pick[i] == n - size + i) --i;
                if (i < 0) break;
                ++pick[i];
                for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
        return out;
    }

    /// Left and right local units for a finite set of elements:
    /// sums of the distinct minimum / maximum singletons.
    std::pair<FreeElement<Basis>, FreeElement<Basis>>
    localUnitsFor(const std::vector<FreeElement<Basis>>& elems) const {
        std::set<int> mins, maxs;
        for (const auto& e : elems)
            for (const auto& [b, c] : e.terms()) {
                mins.insert(*minOf(b));
                maxs.insert(*maxOf(b));
            }
        FreeElement<Basis> u, v;
        for (int m : mins) u += FreeElement<Basis>::basis(Basis{1ull << m});
        for (int m : maxs) v += FreeElement<Basis>::basis(Basis{1ull << m});
        return {u, v};
    }

    std::string renderBasis(const Basis& b) const {
        std::string s = "{";
        bool first = true;
        for (int i : elems(b)) {
            if (!first) s += ",";
            s += L_.name(i);
            first = false;
        }
        return s + "}";
    }

private:
    bool inP0(Basis p, int x) const {
        if (x < 0 || x >= static_cast<int>(L_.size()) || !(p.mask >> x & 1)) return false;
        auto top = maxOf(p);
        return top && *top != x;
    }
    std::vector<int> elems(Basis p) const {
        std::vector<int> v;
        for (int i = 0; i < static_cast<int>(L_.size()); ++i)
            if (p.mask >> i & 1) v.push_back(i);
        return v;
    }

    AmbientPoset L_;
};

} // namespace mib
