#pragma once

#include "mib/algebra.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mib {

struct QuiverArrow {
    std::string name;
    int src = 0;
    int tgt = 0;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A finite quiver: named vertices plus named arrows between them.
class Quiver {
public:
    int addVertex(const std::string& name, int line = 0) {
        requireFresh(name, line);
        names_.insert(name);
        vertices_.push_back(name);
        return static_cast<int>(vertices_.size()) - 1;
    }

    int addArrow(const std::string& name, const std::string& src, const std::string& tgt, int line = 0) {
        requireFresh(name, line);
        auto s = vertexId(src);
        auto t = vertexId(tgt);
        if (!s) throw ParseError(atLine(line) + "unknown vertex '" + src + "'");
        if (!t) throw ParseError(atLine(line) + "unknown vertex '" + tgt + "'");
        names_.insert(name);
        arrows_.push_back({name, *s, *t});
        return static_cast<int>(arrows_.size()) - 1;
    }

    size_t vertexCount() const { return vertices_.size(); }
    size_t arrowCount() const { return arrows_.size(); }
    const std::string& vertexName(int v) const { return vertices_.at(v); }
    const QuiverArrow& arrow(int a) const { return arrows_.at(a); }

    std::optional<int> vertexId(const std::string& name) const {
        for (size_t i = 0; i < vertices_.size(); ++i)
            if (vertices_[i] == name) return static_cast<int>(i);
        return std::nullopt;
    }

    /// Line-oriented format: `v <name>` declares a vertex, `a <name> <src>
    /// <tgt>` an arrow; `#` starts a comment, blank lines are skipped.
    static Quiver parse(const std::string& text) {
        Quiver q;
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
            if (head == "v") {
                std::string name, extra;
                if (!(ls >> name) || (ls >> extra))
                    throw ParseError(atLine(lineno) + "expected 'v <name>'");
                q.addVertex(name, lineno);
            } else if (head == "a") {
                std::string name, src, tgt, extra;
                if (!(ls >> name >> src >> tgt) || (ls >> extra))
                    throw ParseError(atLine(lineno) + "expected 'a <name> <src> <tgt>'");
                q.addArrow(name, src, tgt, lineno);
            } else {
                throw ParseError(atLine(lineno) + "unknown directive '" + head + "'");
            }
        }
        return q;
    }

private:
    static std::string atLine(int line) {
        return line > 0 ? "line " + std::to_string(line) + ": " : std::string();
    }
    void requireFresh(const std::string& name, int line) const {
        if (names_.count(name))
            throw ParseError(atLine(line) + "duplicate name '" + name + "'");
    }

    std::vector<std::string> vertices_;
    std::vector<QuiverArrow> arrows_;
    std::set<std::string> names_;
};

/// Basis of the generalized path algebra: trivial paths at vertices, finite
/// composable arrow sequences, and the two inert idempotents +inf / -inf.
struct PathBasis {
    enum class Kind : std::uint8_t { Trivial = 0, Path = 1, PlusInf = 2, MinusInf = 3 };

    Kind kind = Kind::Trivial;
    int vertex = 0;
    std::vector<int> arrows;

    static PathBasis trivial(int v) { return {Kind::Trivial, v, {}}; }
    static PathBasis path(std::vector<int> a) { return {Kind::Path, 0, std::move(a)}; }
    static PathBasis plusInf() { return {Kind::PlusInf, 0, {}}; }
    static PathBasis minusInf() { return {Kind::MinusInf, 0, {}}; }

    size_t length() const { return kind == Kind::Path ? arrows.size() : 0; }

    friend bool operator==(const PathBasis&, const PathBasis&) = default;
    friend bool operator<(const PathBasis& a, const PathBasis& b) {
        auto ka = static_cast<int>(a.kind), kb = static_cast<int>(b.kind);
        auto la = a.arrows.size(), lb = b.arrows.size();
        return std::tie(ka, a.vertex, la, a.arrows) < std::tie(kb, b.vertex, lb, b.arrows);
    }
};

/// Path algebra of a finite quiver with concatenation product and the
/// positional-split multiplier coproduct. Trivial paths and the two infinity
/// idempotents have zero coproduct.
class PathAlgebra {
public:
    using Basis = PathBasis;

    explicit PathAlgebra(Quiver q) : q_(std::move(q)) {}

    const Quiver& quiver() const { return q_; }
    std::string familyName() const { return "quiver"; }

    // Endpoints; the infinities use sentinels so they compose only with themselves.
    int source(const Basis& b) const {
        switch (b.kind) {
            case Basis::Kind::Trivial: return b.vertex;
            case Basis::Kind::Path: return q_.arrow(b.arrows.front()).src;
            case Basis::Kind::PlusInf: return kPlusInfVertex;
            default: return kMinusInfVertex;
        }
    }
    int target(const Basis& b) const {
        switch (b.kind) {
            case Basis::Kind::Trivial: return b.vertex;
            case Basis::Kind::Path: return q_.arrow(b.arrows.back()).tgt;
            case Basis::Kind::PlusInf: return kPlusInfVertex;
            default: return kMinusInfVertex;
        }
    }

    /// Concatenation when target(p) = source(q); zero otherwise.
    FreeElement<Basis> basisProduct(const Basis& p, const Basis& q) const {
        if (target(p) != source(q)) return {};
        if (p.kind == Basis::Kind::Trivial) return FreeElement<Basis>::basis(q);
        if (q.kind == Basis::Kind::Trivial) return FreeElement<Basis>::basis(p);
        if (p.kind == Basis::Kind::Path && q.kind == Basis::Kind::Path) {
            std::vector<int> joined = p.arrows;
            joined.insert(joined.end(), q.arrows.begin(), q.arrows.end());
            return FreeElement<Basis>::basis(Basis::path(std::move(joined)));
        }
        return FreeElement<Basis>::basis(p); // +inf or -inf, idempotent
    }

    /// Delta(gamma)(x (x) 1): sum over arrow positions of
    /// (prefix * x) (x) suffix, empty prefix/suffix being trivial paths.
    TensorElement<Basis> t3(const Basis& x, const Basis& gamma) const {
        TensorElement<Basis> r;
        if (gamma.kind != Basis::Kind::Path) return r;
        for (size_t i = 0; i < gamma.arrows.size(); ++i)
            r += tensorProduct(mulPrefix(gamma, i, x), FreeElement<Basis>::basis(suffix(gamma, i)));
        return r;
    }

    /// (1 (x) x) Delta(gamma): sum of prefix (x) (x * suffix).
    TensorElement<Basis> t4(const Basis& gamma, const Basis& x) const {
        TensorElement<Basis> r;
        if (gamma.kind != Basis::Kind::Path) return r;
        for (size_t i = 0; i < gamma.arrows.size(); ++i)
            r += tensorProduct(FreeElement<Basis>::basis(prefix(gamma, i)),
                               basisProduct(x, suffix(gamma, i)));
        return r;
    }

    /// Trivial paths, composable paths of length <= maxLen, then the two
    /// infinities, in a fixed order.
    std::vector<Basis> enumerateWindow(int maxLen) const {
        std::vector<Basis> out;
        for (size_t v = 0; v < q_.vertexCount(); ++v) out.push_back(Basis::trivial(static_cast<int>(v)));
        std::vector<std::vector<int>> level;
        for (size_t a = 0; a < q_.arrowCount(); ++a) level.push_back({static_cast<int>(a)});
        for (int len = 1; len <= maxLen && !level.empty(); ++len) {
            std::vector<std::vector<int>> next;
            for (auto& seq : level) {
                out.push_back(Basis::path(seq));
                for (size_t a = 0; a < q_.arrowCount(); ++a)
                    if (q_.arrow(static_cast<int>(a)).src == q_.arrow(seq.back()).tgt) {
                        auto ext = seq;
                        ext.push_back(static_cast<int>(a));
                        next.push_back(std::move(ext));
                    }
            }
            level = std::move(next);
        }
        out.push_back(Basis::plusInf());
        out.push_back(Basis::minusInf());
        return out;
    }

    std::string renderBasis(const Basis& b) const {
        switch (b.kind) {
            case Basis::Kind::Trivial: return "e_" + q_.vertexName(b.vertex);
            case Basis::Kind::PlusInf: return "+inf";
            case Basis::Kind::MinusInf: return "-inf";
            default: {
                std::string s;
                for (int a : b.arrows) {
                    if (!s.empty()) s += ".";
                    s += q_.arrow(a).name;
                }
                return s;
            }
        }
    }

private:
    static constexpr int kPlusInfVertex = -1;
    static constexpr int kMinusInfVertex = -2;

    Basis prefix(const Basis& gamma, size_t i) const {
        if (i == 0) return Basis::trivial(source(gamma));
        return Basis::path({gamma.arrows.begin(), gamma.arrows.begin() + i});
    }
    Basis suffix(const Basis& gamma, size_t i) const {
        if (i + 1 == gamma.arrows.size()) return Basis::trivial(target(gamma));
        return Basis::path({gamma.arrows.begin() + i + 1, gamma.arrows.end()});
    }
    FreeElement<Basis> mulPrefix(const Basis& gamma, size_t i, const Basis& x) const {
        return basisProduct(prefix(gamma, i), x);
    }

    Quiver q_;
};

/// Fault-injection wrapper: doubles the first coefficient of t3 at one fixed
/// probe/path pair, so the derivation suite fails and names that pair.
class PerturbedPathAlgebra {
public:
    using Basis = PathBasis;

    PerturbedPathAlgebra(PathAlgebra base, Basis probe, Basis gamma)
        : base_(std::move(base)), probe_(std::move(probe)), gamma_(std::move(gamma)) {}

    /// Picks the first window pair with a nonzero t3 slice.
    static PerturbedPathAlgebra firstNonzero(const PathAlgebra& base, int maxLen) {
        auto w = base.enumerateWindow(maxLen);
        for (const auto& g : w)
            for (const auto& x : w)
                if (!base.t3(x, g).isZero()) return {base, x, g};
        throw std::invalid_argument("quiver has no nonzero coproduct slice to perturb");
    }

    std::string familyName() const { return base_.familyName(); }
    std::string renderBasis(const Basis& b) const { return base_.renderBasis(b); }
    FreeElement<Basis> basisProduct(const Basis& p, const Basis& q) const {
        return base_.basisProduct(p, q);
    }
    TensorElement<Basis> t4(const Basis& gamma, const Basis& x) const { return base_.t4(gamma, x); }
    std::vector<Basis> enumerateWindow(int maxLen) const { return base_.enumerateWindow(maxLen); }

    TensorElement<Basis> t3(const Basis& x, const Basis& gamma) const {
        auto r = base_.t3(x, gamma);
        if (x == probe_ && gamma == gamma_ && !r.isZero()) {
            const auto& [b, c] = *r.terms().begin();
            r.addTerm(b, c);
        }
        return r;
    }

private:
    PathAlgebra base_;
    Basis probe_;
    Basis gamma_;
};

} // namespace mib
