#pragma once

#include <map>
#include <vector>

#include "mayachar/lambda.hpp"

namespace mayachar {

enum class GBasis { PowerOdd, QFun };

/// An arbitrary finite integer sequence indexing Q_alpha.
using QIndexSequence = std::vector<int>;

namespace detail {

/// p_r^perp acts on Gamma's power basis as (r/2) d/dp_r.
inline Poly podd_perp_monomial(const Partition& nu, const Poly& g) {
    Poly out;
    for (const auto& [mu, c] : g) {
        std::vector<int> rest = mu.parts();
        Rat factor(1);
        bool ok = true;
        for (int r : nu.parts()) {
            auto it = std::find(rest.begin(), rest.end(), r);
            if (it == rest.end()) { ok = false; break; }
            long mult = std::count(rest.begin(), rest.end(), r);
            factor *= Rat(r, 2) * Rat(mult);
            rest.erase(it);
        }
        if (ok) poly_add(out, Partition(rest), c * factor);
    }
    return out;
}

inline Poly podd_perp(const Poly& f, const Poly& g) {
    Poly out;
    for (const auto& [nu, a] : f) poly_add_all(out, podd_perp_monomial(nu, g), a);
    return out;
}

/// <p_lambda, p_mu> = delta * z_lambda / 2^{l(lambda)} on Gamma.
inline Rat podd_inner(const Poly& a, const Poly& b) {
    Rat acc(0);
    const Poly& small = a.size() <= b.size() ? a : b;
    const Poly& large = a.size() <= b.size() ? b : a;
    for (const auto& [mu, c] : small) {
        auto it = large.find(mu);
        if (it != large.end())
            acc += c * it->second * Rat(z_of(mu)) * pow2(-static_cast<long>(mu.length()));
    }
    return acc;
}

/// q_n = sum_i h_{n-i} e_i, expanded over odd power sums.
inline const Poly& q_in_podd(int n) {
    static Cache<int, Poly> cache;
    return cache.get(n, [n]() -> Poly {
        if (n < 0) return {};
        if (n == 0) return {{Partition{}, Rat(1)}};
        Poly acc;
        for (int i = 0; i <= n; ++i)
            poly_add_all(acc, poly_mul(h_in_power(n - i), e_in_power(i)));
        for (const auto& [k, c] : acc)
            if (!k.is_all_odd())
                throw std::logic_error("q_n acquired an even power sum");
        return acc;
    });
}

/// calB_n = sum_{i>=0} (-1)^i q_{n+i} q_i^perp on the odd power basis.
inline Poly calB_podd(int n, const Poly& f) {
    long deg = poly_degree(f);
    Poly out;
    for (long i = 0; i <= deg; ++i) {
        if (n + i < 0) continue;
        Poly t = podd_perp(q_in_podd(static_cast<int>(i)), f);
        if (t.empty()) continue;
        t = poly_mul(q_in_podd(static_cast<int>(n + i)), t);
        poly_add_all(out, t, Rat(i % 2 ? -1 : 1));
    }
    return out;
}

/// Q_lambda = calB_{lambda_1} ... calB_{lambda_l}(1).
inline const Poly& qfun_in_podd(const Partition& lambda) {
    static Cache<Partition, Poly> cache;
    return cache.get(lambda, [&lambda]() -> Poly {
        Poly acc{{Partition{}, Rat(1)}};
        for (auto it = lambda.parts().rbegin(); it != lambda.parts().rend(); ++it)
            acc = calB_podd(*it, acc);
        return acc;
    });
}

} // namespace detail

/// An element of Gamma (x) Q, over odd power-sum monomials or Schur Q-functions.
class GammaElement {
public:
    explicit GammaElement(GBasis tag = GBasis::PowerOdd) : tag_(tag) {}

    static GammaElement zero(GBasis tag = GBasis::PowerOdd) { return GammaElement(tag); }

    static GammaElement one(GBasis tag = GBasis::PowerOdd) {
        GammaElement r(tag);
        r.terms_.emplace(Partition{}, Rat(1));
        return r;
    }

    static GammaElement monomial(GBasis tag, const Partition& label, const Rat& c = Rat(1)) {
        GammaElement r(tag);
        r.add(label, c);
        return r;
    }

    static GammaElement qfun(const Partition& lambda) {
        return monomial(GBasis::QFun, lambda);
    }

    GBasis tag() const { return tag_; }
    const std::map<Partition, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long degree() const { return detail::poly_degree(terms_); }

    Rat coefficient(const Partition& label) const {
        auto it = terms_.find(label);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add(const Partition& label, const Rat& c) {
        if (c == 0) return;
        if (tag_ == GBasis::PowerOdd && !label.is_all_odd())
            throw input_error("PowerOdd support must be all-odd partitions");
        if (tag_ == GBasis::QFun && !label.is_strict())
            throw input_error("QFun support must be strict partitions");
        detail::poly_add(terms_, label, c);
    }

    GammaElement& operator+=(const GammaElement& o) {
        detail::poly_add_all(terms_, o.convert(tag_).terms_);
        return *this;
    }
    GammaElement& operator-=(const GammaElement& o) {
        detail::poly_add_all(terms_, o.convert(tag_).terms_, Rat(-1));
        return *this;
    }
    GammaElement& operator*=(const Rat& s) {
        terms_ = detail::poly_scale(std::move(terms_), s);
        return *this;
    }
    friend GammaElement operator+(GammaElement a, const GammaElement& b) { return a += b; }
    friend GammaElement operator-(GammaElement a, const GammaElement& b) { return a -= b; }
    friend GammaElement operator*(const Rat& s, GammaElement a) { return a *= s; }
    friend GammaElement operator-(GammaElement a) { return a *= Rat(-1); }

    bool operator==(const GammaElement& o) const {
        if (tag_ == o.tag_) return terms_ == o.terms_;
        return to_podd_map() == o.to_podd_map();
    }

    detail::Poly to_podd_map() const {
        if (tag_ == GBasis::PowerOdd) return terms_;
        detail::Poly out;
        for (const auto& [lam, c] : terms_)
            detail::poly_add_all(out, detail::qfun_in_podd(lam), c);
        return out;
    }

    static GammaElement from_podd(const detail::Poly& p, GBasis target) {
        GammaElement r(target);
        if (target == GBasis::PowerOdd) {
            for (const auto& [k, c] : p) r.add(k, c);
            return r;
        }
        for (const auto& [deg, comp] : detail::by_degree(p)) {
            for_each_partition(static_cast<int>(deg), [&](const Partition& lam) {
                if (!lam.is_strict()) return;
                Rat c = detail::podd_inner(comp, detail::qfun_in_podd(lam)) *
                        pow2(-static_cast<long>(lam.length()));
                if (c != 0) r.terms_.emplace(lam, c);
            });
        }
        return r;
    }

    GammaElement convert(GBasis target) const {
        if (target == tag_) return *this;
        return from_podd(to_podd_map(), target);
    }

private:
    GBasis tag_;
    std::map<Partition, Rat> terms_;
};

/// q_n generator; q_0 = 1, q_n = 0 for n < 0.
inline GammaElement q_gen(int n) {
    if (n < 0) return GammaElement::zero();
    GammaElement r(GBasis::PowerOdd);
    for (const auto& [k, c] : detail::q_in_podd(n)) r.add(k, c);
    return r;
}

inline GammaElement multiply(const GammaElement& f, const GammaElement& g) {
    detail::Poly prod = detail::poly_mul(f.to_podd_map(), g.to_podd_map());
    return GammaElement::from_podd(prod, f.tag());
}

inline Rat gamma_inner(const GammaElement& f, const GammaElement& g) {
    return detail::podd_inner(f.to_podd_map(), g.to_podd_map());
}

inline GammaElement perp_gamma(const GammaElement& f, const GammaElement& g) {
    return GammaElement::from_podd(detail::podd_perp(f.to_podd_map(), g.to_podd_map()),
                                   g.tag());
}

/// Creation operator calB_n; Q_lambda = calB_{lambda_1}...calB_{lambda_l}(1).
inline GammaElement creation_calB(int n, const GammaElement& f) {
    return GammaElement::from_podd(detail::calB_podd(n, f.to_podd_map()), f.tag());
}

/// psi~_lambda(mu) = p_{mu_1}^perp ... p_{mu_l}^perp Q_lambda, linear in the label.
inline Rat psi_tilde(const GammaElement& f, const Partition& mu) {
    if (!mu.is_all_odd()) throw input_error("psi_tilde: mu must be all-odd");
    const GammaElement labels = f.convert(GBasis::QFun);
    for (const auto& [lam, c] : labels.terms())
        if (lam.size() != mu.size())
            throw input_error("psi_tilde: |lambda| must equal |mu|");
    detail::Poly g = f.to_podd_map();
    for (int r : mu.parts())
        g = detail::podd_perp_monomial(Partition{r}, g);
    auto it = g.find(Partition{});
    return it == g.end() ? Rat(0) : it->second;
}

inline Rat psi_tilde(const Partition& lambda, const Partition& mu) {
    if (!lambda.is_strict()) throw input_error("psi_tilde: lambda must be strict");
    return psi_tilde(GammaElement::qfun(lambda), mu);
}

/// Phi_n^(m) = sum_{i>=0} (-1)^i (q_{n+i} o p_m)(q_i o p_m)^perp, m odd.
inline GammaElement Phi_plethystic(int m, int n, const GammaElement& f) {
    if (m < 1 || m % 2 == 0) throw input_error("Phi_plethystic requires odd m >= 1");
    detail::Poly g = f.to_podd_map();
    long deg = detail::poly_degree(g);
    auto scaled = [m](const detail::Poly& p) {
        detail::Poly out;
        for (const auto& [key, c] : p) {
            std::vector<int> parts = key.parts();
            for (int& part : parts) part *= m;
            out.emplace(Partition(parts), c);
        }
        return out;
    };
    detail::Poly out;
    for (long i = 0; i * m <= deg; ++i) {
        if (n + i < 0) continue;
        detail::Poly t = detail::podd_perp(scaled(detail::q_in_podd(static_cast<int>(i))), g);
        if (t.empty()) continue;
        t = detail::poly_mul(scaled(detail::q_in_podd(static_cast<int>(n + i))), t);
        detail::poly_add_all(out, t, Rat(i % 2 ? -1 : 1));
    }
    return GammaElement::from_podd(out, f.tag());
}

/// Q_alpha straightened to a coefficient times Q_lambda for a strict lambda.
/// The coefficient is (-1)^{a_1+...+a_r} 2^r eps; zero exactly when some
/// +-i subsequence fails the alternation rule.
struct Reordered {
    Int coeff = 0;
    Partition lambda;

    bool is_zero() const { return coeff == 0; }
};

inline Reordered reorder(const QIndexSequence& alpha) {
    // Occurrence lists per absolute value, in original order.
    std::map<int, std::vector<std::size_t>> classes; // |v| -> positions
    for (std::size_t i = 0; i < alpha.size(); ++i)
        classes[std::abs(alpha[i])].push_back(i);

    long pair_value_sum = 0;
    long pair_count = 0;
    std::vector<int> lambda_parts; // collected ascending in |v|, sorted later
    for (const auto& [a, positions] : classes) {
        if (a == 0) continue;
        // Signs must alternate and end with +a.
        for (std::size_t t = 0; t + 1 < positions.size(); ++t)
            if (alpha[positions[t]] == alpha[positions[t + 1]]) return {};
        if (alpha[positions.back()] != a) return {};
        bool has_single = alpha[positions.front()] == a && positions.size() % 2 == 1;
        if (!has_single && positions.size() % 2 == 1) return {};
        if (has_single) lambda_parts.push_back(a);
        long pairs = static_cast<long>(positions.size()) / 2;
        pair_count += pairs;
        pair_value_sum += pairs * a;
    }
    std::sort(lambda_parts.begin(), lambda_parts.end(), std::greater<int>());
    Partition lambda(lambda_parts);

    // eps: sign of the permutation into (lambda, -a_1, a_1, ..., 0, ..., 0)
    // that keeps each class's occurrence order.
    std::vector<std::size_t> target_order;
    target_order.reserve(alpha.size());
    for (int part : lambda_parts) // the first occurrence of a "+-starting" class
        target_order.push_back(classes[part].front());
    for (auto it = classes.rbegin(); it != classes.rend(); ++it) { // pair blocks, larger first
        if (it->first == 0) continue;
        const auto& positions = it->second;
        std::size_t start = alpha[positions.front()] == it->first ? 1 : 0;
        for (std::size_t t = start; t < positions.size(); ++t)
            target_order.push_back(positions[t]);
    }
    if (auto it = classes.find(0); it != classes.end())
        for (std::size_t pos : it->second) target_order.push_back(pos);

    long inversions = 0;
    for (std::size_t i = 0; i < target_order.size(); ++i)
        for (std::size_t j = i + 1; j < target_order.size(); ++j)
            if (target_order[i] > target_order[j]) ++inversions;

    Reordered r;
    r.coeff = pow_int(Int(2), static_cast<unsigned long>(pair_count));
    if ((pair_value_sum + inversions) % 2) r.coeff = -r.coeff;
    r.lambda = std::move(lambda);
    return r;
}

/// Q_{(prefix, lambda)} reduced against an already strict tail.
inline Reordered reorder_prefixed(const QIndexSequence& prefix, const Partition& lambda) {
    QIndexSequence seq = prefix;
    seq.insert(seq.end(), lambda.parts().begin(), lambda.parts().end());
    return reorder(seq);
}

/// Phi on the formal span of integer index sequences: sum over odd-length
/// sequences alpha (pairs with residues {2c_i, -2c_i} mod m, a multiple-of-m
/// tail, total sum -m) of eps_alpha Q_{(alpha, lambda)}. Candidate entries are
/// limited to [-(|lambda|+m), |lambda|+m]; the cross-check against
/// Phi_plethystic enforces that this loses nothing.
inline GammaElement Phi_corollary(const Partition& lambda, int m) {
    if (m < 1 || m % 2 == 0) throw input_error("Phi_corollary requires odd m >= 1");
    if (!lambda.is_strict()) throw input_error("Phi_corollary: lambda must be strict");
    const int bound = static_cast<int>(lambda.size()) + m;
    const int half = (m - 1) / 2;
    auto mod = [m](long v) { return static_cast<int>(((v % m) + m) % m); };

    GammaElement out(GBasis::QFun);
    std::vector<int> cs;      // c_1 > c_2 > ... > c_s
    std::vector<int> entries; // alpha so far (pairs)

    auto emit = [&](long pair_sum, int n_alpha) {
        long tail = -static_cast<long>(m) - pair_sum;
        if (tail < -bound || tail > bound) return;
        QIndexSequence alpha = entries;
        alpha.push_back(static_cast<int>(tail));
        Reordered r = reorder_prefixed(alpha, lambda);
        if (r.is_zero()) return;
        Rat c(r.coeff);
        if (n_alpha % 2) c = -c;
        out.add(r.lambda, c);
    };

    auto pair_dfs = [&](auto&& self, std::size_t idx, long pair_sum, int n_alpha) -> void {
        if (idx == cs.size()) {
            emit(pair_sum, n_alpha);
            return;
        }
        int rp = mod(2 * cs[idx]);  // residue +2c
        int rn = mod(-2 * cs[idx]); // residue -2c
        for (int x = -bound; x <= bound; ++x) {
            int rx = mod(x);
            if (rx != rp && rx != rn) continue;
            for (int y = -bound; y < x; ++y) {
                int needed = rx == rp ? rn : rp;
                if (mod(y) != needed) continue;
                entries.push_back(x);
                entries.push_back(y);
                self(self, idx + 1, pair_sum + x + y, n_alpha + (mod(y) == rn ? 1 : 0));
                entries.pop_back();
                entries.pop_back();
            }
        }
    };

    auto choose_cs = [&](auto&& self, int next_c) -> void {
        pair_dfs(pair_dfs, 0, 0, 0);
        for (int c = next_c; c >= 1; --c) {
            cs.push_back(c);
            self(self, c - 1);
            cs.pop_back();
        }
    };
    choose_cs(choose_cs, half);
    return out;
}

/// Coefficient of u^d in the ordered product
///   (1 + sum B_{i,j} u^{i+j})_{i=-2,j=2} ... (1 + ...)_{i=-(m-1),j=m-1} (sum B_k u^k)_{k=0}
/// applied to f; residues mod m. Evaluated with the reordering calculus.
inline GammaElement projthm_rhs_coeff(int m, long d, const GammaElement& f) {
    if (m < 1 || m % 2 == 0) throw input_error("projthm_rhs_coeff requires odd m >= 1");
    GammaElement out(GBasis::QFun);
    if (d % m != 0) return out;
    auto mod = [m](long v) { return static_cast<int>(((v % m) + m) % m); };

    GammaElement qf = f.convert(GBasis::QFun);
    std::map<long, std::map<Partition, Rat>> pieces; // degree -> terms
    for (const auto& [lam, c] : qf.terms()) pieces[lam.size()][lam] = c;

    for (const auto& [deg, terms] : pieces) {
        const long lo = -deg;
        const long hi = d + (m - 1) * deg;
        if (hi < lo) continue;

        using State = std::map<long, std::map<Partition, Rat>>; // u-exponent -> terms
        State state;
        // Rightmost factor: sum_{k == 0 (m)} B_k u^k.
        for (long k = lo; k <= hi; ++k) {
            if (mod(k) != 0) continue;
            for (const auto& [lam, c] : terms) {
                Reordered r = reorder_prefixed({static_cast<int>(k)}, lam);
                if (!r.is_zero()) detail::poly_add(state[k], r.lambda, c * Rat(r.coeff));
            }
        }
        // Pair factors, applied inner to outer.
        for (int l = (m - 1) / 2; l >= 1; --l) {
            State next = state; // choosing the 1 term
            int ri = mod(-2 * l), rj = mod(2 * l);
            for (const auto& [e, comp] : state) {
                for (long i = lo; i <= hi; ++i) {
                    if (mod(i) != ri) continue;
                    for (long j = lo; j <= hi; ++j) {
                        if (mod(j) != rj || i == j) continue;
                        // B_{i,j} = B_i B_j for i > j, -B_j B_i for i < j.
                        QIndexSequence word = i > j
                            ? QIndexSequence{static_cast<int>(i), static_cast<int>(j)}
                            : QIndexSequence{static_cast<int>(j), static_cast<int>(i)};
                        Rat sign(i > j ? 1 : -1);
                        for (const auto& [lam, c] : comp) {
                            Reordered r = reorder_prefixed(word, lam);
                            if (!r.is_zero())
                                detail::poly_add(next[e + i + j], r.lambda, sign * c * Rat(r.coeff));
                        }
                    }
                }
            }
            state = std::move(next);
        }
        if (auto it = state.find(d); it != state.end())
            for (const auto& [lam, c] : it->second) out.add(lam, c);
    }
    return out;
}

inline std::string to_string(const GammaElement& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : f.terms()) {
        Rat a = c > 0 ? c : Rat(-c);
        if (!out.empty()) out += ' ';
        out += (c > 0 ? '+' : '-');
        if (a != 1) out += to_string(a) + '*';
        out += (f.tag() == GBasis::QFun ? "Q(" : "p(") + to_string(k) + ')';
    }
    return out;
}

} // namespace mayachar
