#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mayachar/maya.hpp"

namespace mayachar {

/// Finitely supported integer combination of maya diagrams; an element of F.
class FockVector {
public:
    FockVector() = default;

    static FockVector basis(const MayaDiagram& d) {
        FockVector v;
        v.terms_[d] = 1;
        return v;
    }

    static FockVector basis(const Partition& p) { return basis(to_maya(p)); }

    const std::map<MayaDiagram, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add(const MayaDiagram& d, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find(d);
        if (it == terms_.end()) {
            terms_.emplace(d, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    FockVector& operator+=(const FockVector& o) {
        for (const auto& [d, c] : o.terms_) add(d, c);
        return *this;
    }

    FockVector& operator-=(const FockVector& o) {
        for (const auto& [d, c] : o.terms_) add(d, -c);
        return *this;
    }

    FockVector& operator*=(const Int& s) {
        if (s == 0) { terms_.clear(); return *this; }
        for (auto& [d, c] : terms_) c *= s;
        return *this;
    }

    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend FockVector operator*(const Int& s, FockVector v) { return v *= s; }
    friend FockVector operator-(FockVector v) { return v *= Int(-1); }

    bool operator==(const FockVector&) const = default;

    Int coefficient(const MayaDiagram& d) const {
        auto it = terms_.find(d);
        return it == terms_.end() ? Int(0) : it->second;
    }

    /// Common size of all support diagrams, if homogeneous.
    std::optional<long> homogeneous_degree() const {
        std::optional<long> deg;
        for (const auto& [d, c] : terms_) {
            long n = d.size();
            if (!deg) deg = n;
            else if (*deg != n) return std::nullopt;
        }
        return deg;
    }

private:
    std::map<MayaDiagram, Int> terms_;
};

/// Integer combination of charged maya diagrams of one fixed charge.
class ChargedFockVector {
public:
    ChargedFockVector() = default;

    static ChargedFockVector basis(const ChargedMayaDiagram& d) {
        ChargedFockVector v;
        v.charge_ = d.charge();
        v.terms_[d] = 1;
        return v;
    }

    static ChargedFockVector from(const FockVector& f) {
        ChargedFockVector v;
        v.charge_ = 0;
        for (const auto& [d, c] : f.terms())
            v.terms_.emplace(ChargedMayaDiagram(d), c);
        return v;
    }

    const std::map<ChargedMayaDiagram, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::optional<int> charge() const { return charge_; }

    void add(const ChargedMayaDiagram& d, const Int& c) {
        if (c == 0) return;
        if (!charge_) charge_ = d.charge();
        else if (*charge_ != d.charge())
            throw input_error("mixing charges in one vector is rejected");
        auto it = terms_.find(d);
        if (it == terms_.end()) {
            terms_.emplace(d, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    ChargedFockVector& operator+=(const ChargedFockVector& o) {
        for (const auto& [d, c] : o.terms_) add(d, c);
        return *this;
    }

    ChargedFockVector& operator-=(const ChargedFockVector& o) {
        for (const auto& [d, c] : o.terms_) add(d, -c);
        return *this;
    }

    friend ChargedFockVector operator+(ChargedFockVector a, const ChargedFockVector& b) { return a += b; }
    friend ChargedFockVector operator-(ChargedFockVector a, const ChargedFockVector& b) { return a -= b; }

    bool operator==(const ChargedFockVector& o) const { return terms_ == o.terms_; }

    FockVector to_fock() const {
        FockVector f;
        for (const auto& [d, c] : terms_) f.add(d.to_maya(), c);
        return f;
    }

private:
    std::optional<int> charge_;
    std::map<ChargedMayaDiagram, Int> terms_;
};

namespace detail {

// One bead of the diagram moved down by r, straightened. Beads on the
// implicit tail always land on another tail bead, so only the prefix moves.
inline void apply_A_diagram(int r, const ChargedMayaDiagram& d, const Int& c,
                            ChargedFockVector& out) {
    const auto& pre = d.prefix();
    for (std::size_t i = 0; i < pre.size(); ++i) {
        std::vector<int> moved = pre;
        moved[i] -= r;
        SignedChargedMaya s = normalize_charged(std::move(moved), d.charge());
        if (!s.is_zero()) out.add(s.diagram, c * s.sign);
    }
}

} // namespace detail

/// A_r: sum over all single-bead moves x_i -> x_i - r (Murnaghan-Nakayama).
inline ChargedFockVector apply_A(int r, const ChargedFockVector& v) {
    if (r <= 0) throw input_error("A_r requires r >= 1");
    ChargedFockVector out;
    for (const auto& [d, c] : v.terms()) detail::apply_A_diagram(r, d, c, out);
    return out;
}

inline FockVector apply_A(int r, const FockVector& v) {
    if (r <= 0) throw input_error("A_r requires r >= 1");
    ChargedFockVector out;
    for (const auto& [d, c] : v.terms())
        detail::apply_A_diagram(r, ChargedMayaDiagram(d), c, out);
    return out.is_zero() ? FockVector{} : out.to_fock();
}

/// b~_r: prepend r and straighten; raises the charge by one.
inline ChargedFockVector prepend(int r, const ChargedFockVector& v) {
    ChargedFockVector out;
    for (const auto& [d, c] : v.terms()) {
        std::vector<int> seq;
        seq.reserve(d.prefix().size() + 1);
        seq.push_back(r);
        seq.insert(seq.end(), d.prefix().begin(), d.prefix().end());
        SignedChargedMaya s = normalize_charged(std::move(seq), d.charge() + 1);
        if (!s.is_zero()) out.add(s.diagram, c * s.sign);
    }
    return out;
}

/// Entry-wise subtraction of m; charge drops by m.
inline ChargedFockVector shift(int m, const ChargedFockVector& v) {
    ChargedFockVector out;
    for (const auto& [d, c] : v.terms()) out.add(d.shifted(m), c);
    return out;
}

namespace detail {

/// All m-tuples (a_0, ..., a_{m-1}) with a_j == j (mod m), sum = (0+...+(m-1)) - k*m,
/// and every a_j absent from d. Tuples outside this set contribute zero to phi.
inline std::vector<std::vector<int>> phi_tuples(const MayaDiagram& d, int m, int k) {
    Complement comp = complement(d);
    auto mod = [m](int v) { return ((v % m) + m) % m; };

    // Complement values per residue class, unbounded above; gather lazily.
    auto class_values = [&](int j, int upper) {
        std::vector<int> vals;
        for (std::size_t i = 1;; ++i) {
            int y = comp.entry(i);
            if (y > upper) break;
            if (mod(y) == j) vals.push_back(y);
        }
        return vals;
    };

    long target = static_cast<long>(m) * (m - 1) / 2 - static_cast<long>(k) * m;
    std::vector<long> min_of_class(m);
    for (int j = 0; j < m; ++j) {
        for (std::size_t i = 1;; ++i) {
            int y = comp.entry(i);
            if (mod(y) == j) { min_of_class[j] = y; break; }
        }
    }
    std::vector<long> min_suffix(m + 1, 0); // sum of minima for slots j..m-1
    for (int j = m - 1; j >= 0; --j) min_suffix[j] = min_suffix[j + 1] + min_of_class[j];

    std::vector<std::vector<int>> tuples;
    std::vector<int> acc(m);
    auto dfs = [&](auto&& self, int j, long remaining) -> void {
        if (j == m) {
            if (remaining == 0) tuples.push_back(acc);
            return;
        }
        long upper = remaining - min_suffix[j + 1];
        if (upper < min_of_class[j]) return;
        for (int y : class_values(j, static_cast<int>(upper))) {
            acc[j] = y;
            self(self, j + 1, remaining - y);
        }
    };
    dfs(dfs, 0, target);
    return tuples;
}

} // namespace detail

/// phi_k^(m): sum over admissible prepend-tuples, then shift by m.
/// Residues of the tuple slots are distinct mod m, so entries never collide
/// with each other; collisions with the diagram are excluded by construction.
inline FockVector phi(int m, int k, const FockVector& v) {
    if (m <= 0) throw input_error("phi requires m >= 1");
    FockVector out;
    for (const auto& [d, c] : v.terms()) {
        for (const auto& tuple : detail::phi_tuples(d, m, k)) {
            ChargedFockVector w = ChargedFockVector::basis(ChargedMayaDiagram(d));
            for (int j = 0; j < m; ++j) w = prepend(tuple[j], w);
            w = shift(m, w);
            for (const auto& [rd, rc] : w.terms()) out.add(rd.to_maya(), c * rc);
        }
    }
    return out;
}

inline FockVector phi(int m, int k, const MayaDiagram& d) {
    return phi(m, k, FockVector::basis(d));
}

/// chi_lambda(mu): the vacuum coefficient of A_{mu_1} ... A_{mu_l} lambda.
inline Int character(const FockVector& v, const Partition& mu) {
    for (const auto& [d, c] : v.terms())
        if (d.size() != mu.size())
            throw input_error("character: |mu| must equal the size of every support diagram");
    FockVector w = v;
    for (int part : mu.parts()) { // parts are stored descending: largest first
        if (w.is_zero()) return 0;
        w = apply_A(part, w);
    }
    return w.coefficient(MayaDiagram{});
}

inline Int character(const MayaDiagram& d, const Partition& mu) {
    return character(FockVector::basis(d), mu);
}

inline Int character(const Partition& lambda, const Partition& mu) {
    return character(to_maya(lambda), mu);
}

struct RelationCheck {
    Int lhs;
    Int rhs;
    bool equal() const { return lhs == rhs; }
};

/// Checks chi_lambda(mu u (m)) = chi_{-phi(lambda)}(mu) for m > 1 and
/// mu of size |lambda| - m with no part divisible by m.
inline RelationCheck mainthm_check(const MayaDiagram& lambda, int m, const Partition& mu) {
    if (m <= 1) throw input_error("mainthm_check requires m > 1");
    if (mu.size() + m != lambda.size())
        throw input_error("mainthm_check: |mu| must be |lambda| - m");
    if (!mu.has_no_part_divisible_by(m))
        throw input_error("mainthm_check: mu must have no part divisible by m");
    RelationCheck r;
    r.lhs = character(lambda, mu.cup(m));
    r.rhs = character(-phi(m, 1, lambda), mu);
    return r;
}

/// Right-hand side of the m^k expansion:
///   -sum_{i=0}^{k-1} (-m)^i C(k-1,i) chi_{phi_{i+1}(lambda)}(mu u m^{k-1-i}).
inline Int multim_expand(const MayaDiagram& lambda, int m, int k, const Partition& mu) {
    if (m <= 0) throw input_error("multim_expand requires m >= 1");
    if (k < 1) throw input_error("multim_expand requires k >= 1");
    if (mu.size() + static_cast<long>(k) * m != lambda.size())
        throw input_error("multim_expand: |mu| + km must be |lambda|");
    if (!mu.has_no_part_divisible_by(m))
        throw input_error("multim_expand: mu must have no part divisible by m");
    Int rhs = 0;
    Int power(1); // (-m)^i
    for (int i = 0; i <= k - 1; ++i) {
        FockVector image = phi(m, i + 1, FockVector::basis(lambda));
        Partition cls = mu;
        for (int t = 0; t < k - 1 - i; ++t) cls = cls.cup(m);
        rhs += power * binomial(k - 1, i) * character(image, cls);
        power *= -m;
    }
    return -rhs;
}

namespace detail {

/// sum over assignments of the distinct `values` to positions 1..l of
/// sgn * prod_i factor(alpha_i, suffix_sum_i), where alpha_i = value - (l - i)
/// and the suffix sums are determined by the fixed total.
template <class Factor>
Int signed_assignment_sum(const std::vector<long>& values, long total, Factor&& factor) {
    const int l = static_cast<int>(values.size());
    if (l == 0) return 1;
    if (l > 20) throw input_error("determinant expansion limited to 20 rows");
    std::vector<Int> dp(std::size_t(1) << l, Int(0));
    std::vector<long> used_sum(std::size_t(1) << l, 0);
    dp[0] = 1;
    for (std::size_t mask = 0; mask < dp.size(); ++mask) {
        if (dp[mask] == 0 && mask != 0) continue;
        int i = __builtin_popcountll(mask); // next position, 0-based
        if (i == l) continue;
        long suffix = total - used_sum[mask];
        for (int j = 0; j < l; ++j) {
            if (mask & (std::size_t(1) << j)) continue;
            long alpha = values[j] - (l - 1 - i);
            Int f = factor(alpha, suffix);
            if (f == 0) continue;
            int smaller_unused = 0;
            for (int j2 = 0; j2 < j; ++j2)
                if (!(mask & (std::size_t(1) << j2))) ++smaller_unused;
            std::size_t next = mask | (std::size_t(1) << j);
            used_sum[next] = used_sum[mask] + alpha;
            Int term = dp[mask] * f;
            if (smaller_unused % 2) term = -term;
            dp[next] += term;
        }
    }
    return dp[dp.size() - 1];
}

} // namespace detail

/// chi_lambda(1^k) = sum_w sgn(w) f(w(lambda+rho)-rho) with
/// f(alpha) = prod C(alpha_i+...+alpha_l-1, alpha_i-1), zero if some alpha_i <= 0.
inline Int degree_via_f(const Partition& lambda) {
    const int l = static_cast<int>(lambda.length());
    std::vector<long> v(l);
    for (int i = 0; i < l; ++i) v[i] = lambda.parts()[i] + (l - 1 - i);
    return detail::signed_assignment_sum(v, lambda.size(), [](long alpha, long suffix) {
        return binomial(suffix - 1, alpha - 1);
    });
}

/// Classical determinant form with g(alpha) = (sum alpha)! / prod alpha_i!,
/// zero on any negative entry; evaluated as a chain of binomials.
inline Int degree_via_g(const Partition& lambda) {
    const int l = static_cast<int>(lambda.length());
    std::vector<long> v(l);
    for (int i = 0; i < l; ++i) v[i] = lambda.parts()[i] + (l - 1 - i);
    return detail::signed_assignment_sum(v, lambda.size(), [](long alpha, long suffix) {
        return binomial(suffix, alpha);
    });
}

inline std::string to_string(const FockVector& v) {
    if (v.is_zero()) return "0";
    std::string out;
    for (const auto& [d, c] : v.terms()) {
        if (!out.empty()) out += ' ';
        Int a = c > 0 ? c : Int(-c);
        out += (c > 0 ? '+' : '-');
        if (a != 1) out += a.get_str();
        out += '(' + to_string(to_partition(d)) + ')';
    }
    return out;
}

/// Same combination written with canonical maya text instead of partitions.
inline std::string to_maya_string(const FockVector& v) {
    if (v.is_zero()) return "0";
    std::string out;
    for (const auto& [d, c] : v.terms()) {
        if (!out.empty()) out += ' ';
        Int a = c > 0 ? c : Int(-c);
        out += (c > 0 ? '+' : '-');
        if (a != 1) out += a.get_str();
        out += to_string(d);
    }
    return out;
}

} // namespace mayachar
