#pragma once

#include <cstddef>
#include <string>
#include <utility>

namespace bq {

/// A homological dimension as known after a bounded computation.
struct DimValue {
    enum class Kind { exact, at_least, infinite };
    Kind kind = Kind::exact;
    std::size_t value = 0;    // the exact value, or the lower bound
    std::string certificate;  // how the value was established

    static DimValue exact(std::size_t n, std::string cert = "terminated") { return {Kind::exact, n, std::move(cert)}; }
    static DimValue at_least(std::size_t n, std::string cert) { return {Kind::at_least, n, std::move(cert)}; }
    static DimValue infinite(std::string cert) { return {Kind::infinite, 0, std::move(cert)}; }

    bool is_exact() const { return kind == Kind::exact; }
    bool is_infinite() const { return kind == Kind::infinite; }
    bool is(std::size_t n) const { return kind == Kind::exact && value == n; }
    /// Known to be at least n.
    bool at_least_known(std::size_t n) const { return kind == Kind::infinite || value >= n; }
    /// "3", ">=65" or "inf".
    std::string to_string() const
    {
        switch (kind) {
        case Kind::exact:
            return std::to_string(value);
        case Kind::at_least:
            return ">=" + std::to_string(value);
        default:
            return "inf";
        }
    }
    std::string kind_name() const
    {
        return kind == Kind::exact ? "exact" : kind == Kind::at_least ? "at_least" : "infinite";
    }
    friend bool operator==(const DimValue& a, const DimValue& b)
    {
        return a.kind == b.kind && (a.kind == Kind::infinite || a.value == b.value);
    }
};

}  // namespace bq
