#pragma once

#include <algorithm>
#include <compare>
#include <sstream>
#include <vector>

#include "mayachar/partition.hpp"

namespace mayachar {

// A maya diagram [x_1, x_2, ...] is strictly decreasing with x_i = -i for
// i >> 1. Only the prefix that differs from the vacuum tail is stored; a
// trimmed prefix never contains an entry equal to its vacuum value.
class MayaDiagram {
public:
    MayaDiagram() = default;

    /// entries = x_1, ..., x_k; the tail x_i = -i for i > k is implicit.
    explicit MayaDiagram(std::vector<int> entries) : entries_(std::move(entries)) {
        for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
            if (entries_[i] <= entries_[i + 1])
                throw input_error("maya entries must be strictly decreasing");
        if (!entries_.empty() && entries_.back() < -static_cast<int>(entries_.size()))
            throw input_error("maya entry collides with the vacuum tail");
        trim();
    }

    const std::vector<int>& prefix() const { return entries_; }
    std::size_t prefix_length() const { return entries_.size(); }

    /// x_i, 1-based, tail included.
    int entry(std::size_t i) const {
        return i <= entries_.size() ? entries_[i - 1] : -static_cast<int>(i);
    }

    bool is_vacuum() const { return entries_.empty(); }

    /// sum_i (x_i + i); equals |to_partition(*this)|.
    long size() const {
        long n = 0;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            n += entries_[i] + static_cast<long>(i) + 1;
        return n;
    }

    bool contains(int v) const {
        if (v < -static_cast<int>(entries_.size())) return true; // tail
        return std::binary_search(entries_.rbegin(), entries_.rend(), v);
    }

    auto operator<=>(const MayaDiagram&) const = default;

private:
    void trim() {
        while (!entries_.empty() && entries_.back() == -static_cast<int>(entries_.size()))
            entries_.pop_back();
    }

    std::vector<int> entries_;
};

/// Tail satisfies x_i = -i + charge for i > prefix; charge 0 is a plain diagram.
class ChargedMayaDiagram {
public:
    ChargedMayaDiagram() = default;

    ChargedMayaDiagram(std::vector<int> entries, int charge)
        : entries_(std::move(entries)), charge_(charge) {
        for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
            if (entries_[i] <= entries_[i + 1])
                throw input_error("maya entries must be strictly decreasing");
        if (!entries_.empty() && entries_.back() < -static_cast<int>(entries_.size()) + charge_)
            throw input_error("maya entry collides with the charged tail");
        trim();
    }

    explicit ChargedMayaDiagram(const MayaDiagram& d)
        : entries_(d.prefix()), charge_(0) {}

    const std::vector<int>& prefix() const { return entries_; }
    int charge() const { return charge_; }

    /// Entry-wise subtraction of m; charge drops by m.
    ChargedMayaDiagram shifted(int m) const {
        std::vector<int> v = entries_;
        for (int& x : v) x -= m;
        ChargedMayaDiagram r;
        r.entries_ = std::move(v);
        r.charge_ = charge_ - m;
        return r;
    }

    MayaDiagram to_maya() const {
        if (charge_ != 0) throw input_error("only charge-0 diagrams convert to MayaDiagram");
        return MayaDiagram(entries_);
    }

    auto operator<=>(const ChargedMayaDiagram&) const = default;

private:
    void trim() {
        while (!entries_.empty() &&
               entries_.back() == -static_cast<int>(entries_.size()) + charge_)
            entries_.pop_back();
    }

    std::vector<int> entries_;
    int charge_ = 0;
};

/// Result of straightening an integer sequence: a signed diagram, or ZERO
/// exactly when the sequence has a duplicate entry.
struct SignedMaya {
    int sign = 0; // 0 encodes ZERO
    MayaDiagram diagram;

    bool is_zero() const { return sign == 0; }
    static SignedMaya zero() { return {}; }
};

struct SignedChargedMaya {
    int sign = 0;
    ChargedMayaDiagram diagram;

    bool is_zero() const { return sign == 0; }
    static SignedChargedMaya zero() { return {}; }
};

/// Straighten [e_1, ..., e_k | tail at charge c]: sort descending, counting the
/// permutation sign; ZERO on duplicates (including collisions with the tail).
inline SignedChargedMaya normalize_charged(std::vector<int> entries, int charge) {
    const int k = static_cast<int>(entries.size());
    // Any entry at or below the tail head duplicates a tail entry.
    for (int v : entries)
        if (v < -k + charge) return SignedChargedMaya::zero();
    // Insertion sort, counting inversions; k is small.
    int inversions = 0;
    for (int i = 1; i < k; ++i) {
        int v = entries[i];
        int j = i - 1;
        while (j >= 0 && entries[j] < v) {
            entries[j + 1] = entries[j];
            --j;
            ++inversions;
        }
        if (j >= 0 && entries[j] == v) return SignedChargedMaya::zero();
        entries[j + 1] = v;
    }
    SignedChargedMaya r;
    r.sign = (inversions % 2 == 0) ? 1 : -1;
    r.diagram = ChargedMayaDiagram(std::move(entries), charge);
    return r;
}

inline SignedMaya normalize(std::vector<int> entries) {
    SignedChargedMaya r = normalize_charged(std::move(entries), 0);
    if (r.is_zero()) return SignedMaya::zero();
    return {r.sign, r.diagram.to_maya()};
}

/// (lambda_1, ..., lambda_l) -> [lambda_1 - 1, lambda_2 - 2, ...]
inline MayaDiagram to_maya(const Partition& p) {
    std::vector<int> v(p.length());
    for (std::size_t i = 0; i < p.length(); ++i)
        v[i] = p.parts()[i] - static_cast<int>(i) - 1;
    return MayaDiagram(std::move(v));
}

/// [x_1, x_2, ...] -> (x_1 + 1, x_2 + 2, ...), trailing zeros dropped.
inline Partition to_partition(const MayaDiagram& d) {
    std::vector<int> v(d.prefix_length());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = d.prefix()[i] + static_cast<int>(i) + 1;
    while (!v.empty() && v.back() == 0) v.pop_back();
    return Partition(std::move(v));
}

/// The increasing sequence y_1 < y_2 < ... of integers absent from d,
/// stored as the finite prefix differing from the eventual y_i = i - 1.
struct Complement {
    std::vector<int> prefix; // y_1, ..., y_t with y_i = i - 1 for i > t

    int entry(std::size_t i) const { // 1-based
        return i <= prefix.size() ? prefix[i - 1] : static_cast<int>(i) - 1;
    }
};

inline Complement complement(const MayaDiagram& d) {
    const int k = static_cast<int>(d.prefix_length());
    Complement c;
    // Absent values all lie in [-k, +inf); above max(x_1, k-1) everything is absent.
    int hi = std::max(d.prefix_length() ? d.prefix()[0] : -1, k - 1);
    for (int v = -k; v <= hi; ++v)
        if (!d.contains(v)) c.prefix.push_back(v);
    // Trim to the minimal prefix with y_i = i - 1 beyond it.
    while (!c.prefix.empty() && c.prefix.back() == static_cast<int>(c.prefix.size()) - 1)
        c.prefix.pop_back();
    return c;
}

/// Lemma-2 conjugation: the complement [-1 - y_1, -1 - y_2, ...] is the maya
/// diagram of the conjugate partition.
inline Partition conjugate(const Partition& p) {
    Complement c = complement(to_maya(p));
    std::vector<int> v(c.prefix.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = -1 - c.prefix[i];
    return to_partition(MayaDiagram(std::move(v)));
}

/// "[3,0,-1 | 4]": prefix, then the first implicit tail index.
inline std::string to_string(const MayaDiagram& d) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < d.prefix_length(); ++i) {
        if (i) os << ',';
        os << d.prefix()[i];
    }
    if (d.prefix_length()) os << ' ';
    os << "| " << d.prefix_length() + 1 << ']';
    return os.str();
}

inline MayaDiagram parse_maya(const std::string& text) {
    std::size_t open = text.find('[');
    std::size_t bar = text.find('|');
    std::size_t close = text.find(']');
    if (open == std::string::npos || bar == std::string::npos || close == std::string::npos ||
        !(open < bar && bar < close))
        throw input_error("maya text must look like \"[x1,...,xk | t]\"");
    std::string body = text.substr(open + 1, bar - open - 1);
    std::string tail = text.substr(bar + 1, close - bar - 1);
    std::vector<int> entries;
    std::istringstream bs(body);
    std::string tok;
    while (std::getline(bs, tok, ',')) {
        std::size_t p = tok.find_first_not_of(" \t");
        if (p == std::string::npos) continue;
        std::size_t q = tok.find_last_not_of(" \t");
        entries.push_back(std::stoi(tok.substr(p, q - p + 1)));
    }
    long t = std::stol(tail);
    if (t != static_cast<long>(entries.size()) + 1)
        throw input_error("maya tail index must be prefix length + 1");
    return MayaDiagram(std::move(entries));
}

} // namespace mayachar
