#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace mib {

enum class Status { Pass, Fail, Info };

inline std::string statusName(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        default: return "info";
    }
}

/// One verified (suite, witness) cell. lhs/rhs carry the two rendered sides
/// when they disagree; records are plain strings so output is reproducible.
struct CheckRecord {
    std::string suite;
    std::string family;
    std::string witness;
    Status status = Status::Pass;
    std::string lhs;
    std::string rhs;

    friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

class CheckSink {
public:
    explicit CheckSink(std::string family) : family_(std::move(family)) {}

    void pass(std::string_view suite, std::string witness) {
        records_.push_back({std::string(suite), family_, std::move(witness), Status::Pass, "", ""});
    }
    void fail(std::string_view suite, std::string witness, std::string lhs, std::string rhs) {
        records_.push_back({std::string(suite), family_, std::move(witness), Status::Fail,
                            std::move(lhs), std::move(rhs)});
    }
    void info(std::string_view suite, std::string witness, std::string lhs = "", std::string rhs = "") {
        records_.push_back({std::string(suite), family_, std::move(witness), Status::Info,
                            std::move(lhs), std::move(rhs)});
    }
    void check(std::string_view suite, std::string witness, bool ok, std::string lhs, std::string rhs) {
        if (ok) pass(suite, std::move(witness));
        else fail(suite, std::move(witness), std::move(lhs), std::move(rhs));
    }

    const std::vector<CheckRecord>& records() const { return records_; }
    std::vector<CheckRecord> takeRecords() { return std::move(records_); }
    const std::string& family() const { return family_; }

private:
    std::string family_;
    std::vector<CheckRecord> records_;
};

/// Total order used before any emission; parallel and serial runs agree.
inline void sortRecords(std::vector<CheckRecord>& rs) {
    std::sort(rs.begin(), rs.end(), [](const CheckRecord& a, const CheckRecord& b) {
        return std::tie(a.suite, a.witness, a.family, a.lhs, a.rhs) <
               std::tie(b.suite, b.witness, b.family, b.lhs, b.rhs);
    });
}

inline bool anyFailure(const std::vector<CheckRecord>& rs) {
    return std::any_of(rs.begin(), rs.end(),
                       [](const CheckRecord& r) { return r.status == Status::Fail; });
}

/// One JSON object per line, fixed field order, lhs/rhs only when present.
inline void writeJsonLines(const std::vector<CheckRecord>& rs, std::ostream& os) {
    for (const auto& r : rs) {
        nlohmann::ordered_json j;
        j["suite"] = r.suite;
        j["family"] = r.family;
        j["witness"] = r.witness;
        j["status"] = statusName(r.status);
        if (!r.lhs.empty() || !r.rhs.empty()) {
            j["lhs"] = r.lhs;
            j["rhs"] = r.rhs;
        }
        os << j.dump() << "\n";
    }
}

inline void writeText(const std::vector<CheckRecord>& rs, std::ostream& os) {
    struct Counts {
        size_t pass = 0, fail = 0, info = 0;
    };
    std::map<std::string, Counts> bySuite;
    for (const auto& r : rs) {
        auto& c = bySuite[r.suite];
        if (r.status == Status::Pass) ++c.pass;
        else if (r.status == Status::Fail) ++c.fail;
        else ++c.info;
    }
    for (const auto& [suite, c] : bySuite)
        os << suite << ": " << c.pass << " pass, " << c.fail << " fail, " << c.info << " info\n";
    for (const auto& r : rs) {
        if (r.status != Status::Fail) continue;
        os << "FAIL " << r.suite << " [" << r.witness << "]\n";
        os << "  lhs = " << r.lhs << "\n";
        os << "  rhs = " << r.rhs << "\n";
    }
    size_t fails = 0;
    for (const auto& r : rs)
        if (r.status == Status::Fail) ++fails;
    os << rs.size() << " checks, " << fails << " failures\n";
}

/// Deterministic witness down-sampling. Default-constructed sampler keeps
/// every witness; a (limit, seed) sampler picks the same subset on every run
/// with the same configuration.
class Sampler {
public:
    Sampler() = default;
    Sampler(size_t limit, std::uint64_t seed) : limit_(limit), seed_(seed) {}

    /// Mixes the suite name into the seed so distinct suites draw
    /// independently but reproducibly.
    Sampler forSuite(std::string_view suite) const {
        if (!limit_) return {};
        std::uint64_t h = 1469598103934665603ull;
        for (char ch : suite) {
            h ^= static_cast<unsigned char>(ch);
            h *= 1099511628211ull;
        }
        return Sampler(*limit_, seed_ ^ h);
    }

    std::optional<std::vector<size_t>> pick(size_t total) const {
        if (!limit_ || *limit_ >= total) return std::nullopt;
        std::vector<size_t> idx(total);
        for (size_t i = 0; i < total; ++i) idx[i] = i;
        std::mt19937_64 rng(seed_);
        for (size_t i = 0; i < *limit_; ++i) {
            size_t j = i + static_cast<size_t>(rng() % (total - i));
            std::swap(idx[i], idx[j]);
        }
        idx.resize(*limit_);
        std::sort(idx.begin(), idx.end());
        return idx;
    }

private:
    std::optional<size_t> limit_;
    std::uint64_t seed_ = 0;
};

template <class Fn>
void forEachSelected(size_t total, const Sampler& s, Fn&& fn) {
    auto sel = s.pick(total);
    if (!sel) {
        for (size_t i = 0; i < total; ++i) fn(i);
    } else {
        for (size_t i : *sel) fn(i);
    }
}

} // namespace mib
