#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <sstream>
#include <vector>

#include "mayachar/arith.hpp"

namespace mayachar {

/// A weakly decreasing sequence of positive integers. The empty
/// sequence is the unique partition of 0.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw input_error("partition parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw input_error("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    long size() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

    bool is_strict() const {
        for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
            if (parts_[i] <= parts_[i + 1]) return false;
        return true;
    }

    bool is_all_odd() const {
        return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 1; });
    }

    bool has_no_part_divisible_by(int m) const {
        return std::none_of(parts_.begin(), parts_.end(), [m](int p) { return p % m == 0; });
    }

    /// mu ∪ (m): append a part and re-sort.
    Partition cup(int m) const {
        if (m <= 0) throw input_error("appended part must be positive");
        std::vector<int> v = parts_;
        v.insert(std::upper_bound(v.begin(), v.end(), m, std::greater<int>()), m);
        return Partition(std::move(v));
    }

    /// mu ∪ nu as multisets.
    Partition cup(const Partition& nu) const {
        std::vector<int> v = parts_;
        v.insert(v.end(), nu.parts_.begin(), nu.parts_.end());
        std::sort(v.begin(), v.end(), std::greater<int>());
        return Partition(std::move(v));
    }

    int multiplicity(int p) const {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), p));
    }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// z_lambda = prod_i i^{m_i} m_i!, the centralizer order of the cycle type.
inline Int z_of(const Partition& p) {
    Int z(1);
    const auto& parts = p.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        long mult = static_cast<long>(j - i);
        z *= pow_int(Int(parts[i]), static_cast<unsigned long>(mult)) * factorial(mult);
        i = j;
    }
    return z;
}

/// "4,2,2" canonical comma form.
inline std::string to_string(const Partition& p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) os << ',';
        os << p.parts()[i];
    }
    return os.str();
}

namespace detail {

inline void partitions_rec(int remaining, int maxpart, std::vector<int>& acc,
                           const std::function<void(const Partition&)>& fn) {
    if (remaining == 0) {
        fn(Partition(acc));
        return;
    }
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
        acc.push_back(p);
        partitions_rec(remaining - p, p, acc, fn);
        acc.pop_back();
    }
}

} // namespace detail

/// Visit all partitions of n in reverse lexicographic order ((n) first, (1^n) last).
inline void for_each_partition(int n, const std::function<void(const Partition&)>& fn) {
    if (n < 0) return;
    std::vector<int> acc;
    detail::partitions_rec(n, n, acc, fn);
}

inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

inline std::vector<Partition> partitions_of(int n, const std::function<bool(const Partition&)>& pred) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) {
        if (pred(p)) out.push_back(p);
    });
    return out;
}

inline std::vector<Partition> strict_partitions_of(int n) {
    return partitions_of(n, [](const Partition& p) { return p.is_strict(); });
}

inline std::vector<Partition> all_odd_partitions_of(int n) {
    return partitions_of(n, [](const Partition& p) { return p.is_all_odd(); });
}

/// Accepts "4,2,2" and multiplicative "4^2 3 1^3"; "" is the empty partition.
/// Rejects non-decreasing input instead of sorting it.
inline Partition parse_partition(const std::string& text) {
    std::string s = text;
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return Partition{};
    std::size_t e = s.find_last_not_of(" \t");
    s = s.substr(b, e - b + 1);
    if (s.empty()) return Partition{};

    auto parse_int = [&](const std::string& tok, std::size_t pos) -> long {
        if (tok.empty()) throw input_error("empty number at position " + std::to_string(pos));
        for (char c : tok)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw input_error("malformed number '" + tok + "' at position " + std::to_string(pos));
        long v = std::stol(tok);
        return v;
    };

    std::vector<int> parts;
    if (s.find(',') != std::string::npos || (s.find('^') == std::string::npos && s.find(' ') == std::string::npos)) {
        // comma form
        std::size_t pos = 0;
        while (pos <= s.size()) {
            std::size_t comma = s.find(',', pos);
            std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            long v = parse_int(tok, pos);
            if (v <= 0) throw input_error("non-positive part at position " + std::to_string(pos));
            parts.push_back(static_cast<int>(v));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    } else {
        // multiplicative form: space-separated "base^exp" or "base" tokens
        std::size_t pos = 0;
        while (pos < s.size()) {
            while (pos < s.size() && s[pos] == ' ') ++pos;
            if (pos >= s.size()) break;
            std::size_t end = s.find(' ', pos);
            std::string tok = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
            std::size_t caret = tok.find('^');
            long base, exp = 1;
            if (caret == std::string::npos) {
                base = parse_int(tok, pos);
            } else {
                base = parse_int(tok.substr(0, caret), pos);
                exp = parse_int(tok.substr(caret + 1), pos + caret + 1);
                if (exp <= 0) throw input_error("non-positive exponent at position " + std::to_string(pos + caret + 1));
            }
            if (base <= 0) throw input_error("non-positive part at position " + std::to_string(pos));
            for (long i = 0; i < exp; ++i) parts.push_back(static_cast<int>(base));
            if (end == std::string::npos) break;
            pos = end + 1;
        }
    }
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1])
            throw input_error("parts not weakly decreasing at position " + std::to_string(i + 1));
    return Partition(std::move(parts));
}

/// Reverse lexicographic: (4) before (3,1) before (2,2) ... (1^n) last.
/// for_each_partition already emits this order; the comparator is for re-sorting labels.
struct RevLexLess {
    bool operator()(const Partition& a, const Partition& b) const {
        return a.parts() > b.parts();
    }
};

} // namespace mayachar
