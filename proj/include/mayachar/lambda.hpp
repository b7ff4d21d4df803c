#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "mayachar/fock.hpp"
#include "mayachar/maya.hpp"
#include "mayachar/partition.hpp"

namespace mayachar {

enum class Basis { Power, Schur, Homog, Elem };

inline const char* basis_name(Basis b) {
    switch (b) {
        case Basis::Power: return "p";
        case Basis::Schur: return "s";
        case Basis::Homog: return "h";
        case Basis::Elem: return "e";
    }
    return "?";
}

namespace detail {

using Poly = std::map<Partition, Rat>; // monomials labelled by partitions

inline void poly_add(Poly& p, const Partition& key, const Rat& c) {
    if (c == 0) return;
    auto it = p.find(key);
    if (it == p.end()) {
        p.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

inline Poly poly_scale(Poly p, const Rat& s) {
    if (s == 0) return {};
    for (auto& [k, c] : p) c *= s;
    return p;
}

inline void poly_add_all(Poly& p, const Poly& q, const Rat& s = Rat(1)) {
    for (const auto& [k, c] : q) poly_add(p, k, c * s);
}

/// Product in a multiplicative monomial basis: keys concatenate as multisets.
inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b)
            poly_add(out, ka.cup(kb), ca * cb);
    return out;
}

inline long poly_degree(const Poly& p) {
    long d = 0;
    for (const auto& [k, c] : p) d = std::max(d, k.size());
    return d;
}

/// p_nu^perp on the power basis, where p_r^perp = r d/dp_r.
inline Poly power_perp_monomial(const Partition& nu, const Poly& g) {
    Poly out;
    for (const auto& [mu, c] : g) {
        std::vector<int> rest = mu.parts();
        Rat factor(1);
        bool ok = true;
        for (int r : nu.parts()) {
            auto it = std::find(rest.begin(), rest.end(), r);
            if (it == rest.end()) { ok = false; break; }
            long mult = std::count(rest.begin(), rest.end(), r);
            factor *= Rat(r) * Rat(mult);
            rest.erase(it);
        }
        if (ok) poly_add(out, Partition(rest), c * factor);
    }
    return out;
}

inline Poly power_perp(const Poly& f, const Poly& g) {
    Poly out;
    for (const auto& [nu, a] : f) poly_add_all(out, power_perp_monomial(nu, g), a);
    return out;
}

template <class K, class V>
class Cache {
public:
    template <class F>
    const V& get(const K& key, F&& compute) {
        std::unique_lock<std::mutex> lk(mu_);
        auto it = map_.find(key);
        if (it != map_.end()) return it->second;
        lk.unlock(); // compute outside the lock; fills may recurse into get()
        V value = compute();
        lk.lock();
        // Map nodes are stable, so the returned reference survives later fills.
        return map_.emplace(key, std::move(value)).first->second;
    }

private:
    std::mutex mu_;
    std::map<K, V> map_;
};

inline const Poly& h_in_power(int n);
inline const Poly& e_in_power(int n);

inline const Poly& h_in_power(int n) {
    static Cache<int, Poly> cache;
    return cache.get(n, [n]() -> Poly {
        if (n < 0) return {};
        if (n == 0) return {{Partition{}, Rat(1)}};
        // n h_n = sum_{r=1}^n p_r h_{n-r}
        Poly acc;
        for (int r = 1; r <= n; ++r)
            poly_add_all(acc, poly_mul({{Partition{r}, Rat(1)}}, h_in_power(n - r)));
        return poly_scale(std::move(acc), Rat(1, n));
    });
}

inline const Poly& e_in_power(int n) {
    static Cache<int, Poly> cache;
    return cache.get(n, [n]() -> Poly {
        if (n < 0) return {};
        if (n == 0) return {{Partition{}, Rat(1)}};
        // n e_n = sum_{r=1}^n (-1)^{r-1} p_r e_{n-r}
        Poly acc;
        for (int r = 1; r <= n; ++r) {
            Rat sign(r % 2 ? 1 : -1);
            poly_add_all(acc, poly_mul({{Partition{r}, Rat(1)}}, e_in_power(n - r)), sign);
        }
        return poly_scale(std::move(acc), Rat(1, n));
    });
}

/// p_n as a polynomial in the h (sign=+1) or e (sign=-1) generators.
inline const Poly& p_in_he(int n, bool homog);

inline const Poly& p_in_he(int n, bool homog) {
    static Cache<std::pair<int, bool>, Poly> cache;
    return cache.get({n, homog}, [n, homog]() -> Poly {
        // From n g_n = sum_{i=1}^n (±1)^{i-1} p_i g_{n-i} with g = h (+) or e (-).
        Poly acc{{Partition{n}, Rat(n)}}; // n g_n
        for (int i = 1; i < n; ++i) {
            Rat c(homog ? 1 : (i % 2 ? 1 : -1));
            poly_add_all(acc, poly_mul(p_in_he(i, homog), {{Partition{n - i}, Rat(1)}}), -c);
        }
        if (!homog && n % 2 == 0) return poly_scale(std::move(acc), Rat(-1));
        return acc;
    });
}

/// Jacobi-Trudi determinant of s_lambda expanded over h-monomials (or, when the
/// conjugate is shorter, the dual determinant over e-monomials).
inline Poly jt_monomials(const Partition& lambda, bool& used_elem) {
    Partition lam = lambda;
    used_elem = false;
    if (!lambda.empty() && lambda.length() > static_cast<std::size_t>(lambda.parts()[0])) {
        lam = conjugate(lambda);
        used_elem = true;
    }
    const int l = static_cast<int>(lam.length());
    if (l == 0) return {{Partition{}, Rat(1)}};
    std::vector<Poly> dp(std::size_t(1) << l);
    dp[0] = {{Partition{}, Rat(1)}};
    for (std::size_t mask = 0; mask < dp.size(); ++mask) {
        if (dp[mask].empty()) continue;
        int i = __builtin_popcountll(mask);
        if (i == l) continue;
        for (int j = 0; j < l; ++j) {
            if (mask & (std::size_t(1) << j)) continue;
            int idx = lam.parts()[i] - (i + 1) + (j + 1);
            if (idx < 0) continue;
            int above = 0;
            for (int j2 = j + 1; j2 < l; ++j2)
                if (mask & (std::size_t(1) << j2)) ++above;
            Rat sign(above % 2 ? -1 : 1);
            std::size_t next = mask | (std::size_t(1) << j);
            for (const auto& [key, c] : dp[mask]) {
                Partition k2 = idx == 0 ? key : key.cup(idx);
                poly_add(dp[next], k2, c * sign);
            }
        }
    }
    return dp[dp.size() - 1];
}

inline const Poly& schur_in_power(const Partition& lambda) {
    static Cache<Partition, Poly> cache;
    return cache.get(lambda, [&lambda]() -> Poly {
        bool used_elem = false;
        Poly mono = jt_monomials(lambda, used_elem);
        Poly out;
        for (const auto& [key, c] : mono) {
            Poly prod{{Partition{}, Rat(1)}};
            for (int part : key.parts())
                prod = poly_mul(prod, used_elem ? e_in_power(part) : h_in_power(part));
            poly_add_all(out, prod, c);
        }
        return out;
    });
}

inline Rat power_inner(const Poly& a, const Poly& b) {
    Rat acc(0);
    const Poly& small = a.size() <= b.size() ? a : b;
    const Poly& large = a.size() <= b.size() ? b : a;
    for (const auto& [mu, c] : small) {
        auto it = large.find(mu);
        if (it != large.end()) acc += c * it->second * Rat(z_of(mu));
    }
    return acc;
}

/// Split into homogeneous components keyed by degree.
inline std::map<long, Poly> by_degree(const Poly& p) {
    std::map<long, Poly> out;
    for (const auto& [k, c] : p) out[k.size()].emplace(k, c);
    return out;
}

} // namespace detail

/// An element of the ring of symmetric functions, expressed over one of the
/// classical bases. Conversions between bases are exact.
class LambdaElement {
public:
    explicit LambdaElement(Basis tag = Basis::Power) : tag_(tag) {}

    static LambdaElement zero(Basis tag = Basis::Power) { return LambdaElement(tag); }

    static LambdaElement one(Basis tag = Basis::Power) {
        LambdaElement r(tag);
        r.terms_.emplace(Partition{}, Rat(1));
        return r;
    }

    static LambdaElement monomial(Basis tag, const Partition& label, const Rat& c = Rat(1)) {
        LambdaElement r(tag);
        if (c != 0) r.terms_.emplace(label, c);
        return r;
    }

    static LambdaElement p(int n) {
        if (n < 1) throw input_error("p_n requires n >= 1");
        return monomial(Basis::Power, Partition{n});
    }
    static LambdaElement h(int n) {
        if (n < 0) return zero(Basis::Homog);
        return n == 0 ? one(Basis::Homog) : monomial(Basis::Homog, Partition{n});
    }
    static LambdaElement e(int n) {
        if (n < 0) return zero(Basis::Elem);
        return n == 0 ? one(Basis::Elem) : monomial(Basis::Elem, Partition{n});
    }
    static LambdaElement schur(const Partition& lambda) {
        return monomial(Basis::Schur, lambda);
    }

    Basis tag() const { return tag_; }
    const std::map<Partition, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    long degree() const { return detail::poly_degree(terms_); }

    bool is_integral() const {
        for (const auto& [k, c] : terms_)
            if (c.get_den() != 1) return false;
        return true;
    }

    Rat coefficient(const Partition& label) const {
        auto it = terms_.find(label);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add(const Partition& label, const Rat& c) { detail::poly_add(terms_, label, c); }

    LambdaElement& operator+=(const LambdaElement& o) {
        detail::poly_add_all(terms_, o.convert(tag_).terms_);
        return *this;
    }
    LambdaElement& operator-=(const LambdaElement& o) {
        detail::poly_add_all(terms_, o.convert(tag_).terms_, Rat(-1));
        return *this;
    }
    LambdaElement& operator*=(const Rat& s) {
        terms_ = detail::poly_scale(std::move(terms_), s);
        return *this;
    }
    friend LambdaElement operator+(LambdaElement a, const LambdaElement& b) { return a += b; }
    friend LambdaElement operator-(LambdaElement a, const LambdaElement& b) { return a -= b; }
    friend LambdaElement operator*(const Rat& s, LambdaElement a) { return a *= s; }
    friend LambdaElement operator-(LambdaElement a) { return a *= Rat(-1); }

    bool operator==(const LambdaElement& o) const {
        if (tag_ == o.tag_) return terms_ == o.terms_;
        return to_power_map() == o.to_power_map();
    }

    LambdaElement convert(Basis target) const {
        if (target == tag_) return *this;
        return from_power(to_power_map(), target);
    }

    detail::Poly to_power_map() const {
        switch (tag_) {
            case Basis::Power: return terms_;
            case Basis::Homog:
            case Basis::Elem: {
                detail::Poly out;
                for (const auto& [key, c] : terms_) {
                    detail::Poly prod{{Partition{}, Rat(1)}};
                    for (int part : key.parts())
                        prod = detail::poly_mul(prod, tag_ == Basis::Homog
                                                          ? detail::h_in_power(part)
                                                          : detail::e_in_power(part));
                    detail::poly_add_all(out, prod, c);
                }
                return out;
            }
            case Basis::Schur: {
                detail::Poly out;
                for (const auto& [lam, c] : terms_)
                    detail::poly_add_all(out, detail::schur_in_power(lam), c);
                return out;
            }
        }
        return {};
    }

    static LambdaElement from_power(const detail::Poly& p, Basis target) {
        LambdaElement r(target);
        switch (target) {
            case Basis::Power:
                r.terms_ = p;
                break;
            case Basis::Schur: {
                for (const auto& [deg, comp] : detail::by_degree(p)) {
                    for_each_partition(static_cast<int>(deg), [&](const Partition& lam) {
                        Rat c = detail::power_inner(comp, detail::schur_in_power(lam));
                        if (c != 0) r.terms_.emplace(lam, c);
                    });
                }
                break;
            }
            case Basis::Homog:
            case Basis::Elem: {
                for (const auto& [key, c] : p) {
                    detail::Poly prod{{Partition{}, Rat(1)}};
                    for (int part : key.parts())
                        prod = detail::poly_mul(prod, detail::p_in_he(part, target == Basis::Homog));
                    detail::poly_add_all(r.terms_, prod, c);
                }
                break;
            }
        }
        return r;
    }

private:
    Basis tag_;
    std::map<Partition, Rat> terms_;
};

inline LambdaElement multiply(const LambdaElement& f, const LambdaElement& g) {
    if (f.tag() == g.tag() && f.tag() != Basis::Schur) {
        LambdaElement r(f.tag());
        for (const auto& [k, c] : detail::poly_mul(f.terms(), g.terms())) r.add(k, c);
        return r;
    }
    return LambdaElement::from_power(detail::poly_mul(f.to_power_map(), g.to_power_map()),
                                     f.tag());
}

inline Rat hall_inner(const LambdaElement& f, const LambdaElement& g) {
    return detail::power_inner(f.to_power_map(), g.to_power_map());
}

/// f^perp g, the adjoint of multiplication by f.
inline LambdaElement perp(const LambdaElement& f, const LambdaElement& g) {
    return LambdaElement::from_power(detail::power_perp(f.to_power_map(), g.to_power_map()),
                                     g.tag());
}

/// f o p_m: substitutes p_r -> p_{rm}.
inline LambdaElement plethysm_pm(const LambdaElement& f, int m) {
    if (m < 1) throw input_error("plethysm_pm requires m >= 1");
    detail::Poly out;
    for (const auto& [key, c] : f.to_power_map()) {
        std::vector<int> parts = key.parts();
        for (int& part : parts) part *= m;
        out.emplace(Partition(parts), c);
    }
    return LambdaElement::from_power(out, f.tag());
}

/// Bernstein operator B_n = sum_{i>=0} (-1)^i h_{n+i} e_i^perp, truncated at
/// i = deg f (e_i^perp kills everything below degree i).
inline LambdaElement bernstein(int n, const LambdaElement& f) {
    detail::Poly g = f.to_power_map();
    long deg = detail::poly_degree(g);
    detail::Poly out;
    for (long i = 0; i <= deg; ++i) {
        if (n + i < 0) continue;
        detail::Poly t = detail::power_perp(detail::e_in_power(static_cast<int>(i)), g);
        if (t.empty()) continue;
        t = detail::poly_mul(detail::h_in_power(static_cast<int>(n + i)), t);
        detail::poly_add_all(out, t, Rat(i % 2 ? -1 : 1));
    }
    return LambdaElement::from_power(out, f.tag());
}

/// Schur function labelled by an arbitrary integer sequence, straightened via
/// the maya rule. Returns {sign, label}, sign 0 when the function vanishes.
inline std::pair<int, Partition> schur_straighten(const std::vector<int>& alpha) {
    std::vector<int> entries(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i)
        entries[i] = alpha[i] - static_cast<int>(i) - 1;
    SignedMaya s = normalize(std::move(entries));
    if (s.is_zero()) return {0, Partition{}};
    return {s.sign, to_partition(s.diagram)};
}

/// phi_k^(m) through iterated Bernstein operators (sum over m-tuples of
/// multiples of m summing to -km). Only tuples whose prepended maya sequence
/// survives act nonzero, which bounds the enumeration.
inline LambdaElement phi_creation(int m, int k, const LambdaElement& f) {
    if (m < 1) throw input_error("phi_creation requires m >= 1");
    LambdaElement fs = f.convert(Basis::Schur);
    detail::Poly out;
    for (const auto& [lam, c] : fs.terms()) {
        for (const auto& tuple : detail::phi_tuples(to_maya(lam), m, k)) {
            LambdaElement g = LambdaElement::schur(lam).convert(Basis::Power);
            for (int j = 0; j < m; ++j) g = bernstein(tuple[j] - j, g);
            detail::poly_add_all(out, g.terms(), c);
        }
    }
    return LambdaElement::from_power(out, f.tag());
}

/// phi_{-n}^(m) = sum_{i>=0} (-1)^i (h_{n+i} o p_m)(e_i o p_m)^perp.
inline LambdaElement phi_plethystic(int m, int n, const LambdaElement& f) {
    if (m < 1) throw input_error("phi_plethystic requires m >= 1");
    detail::Poly g = f.to_power_map();
    long deg = detail::poly_degree(g);
    detail::Poly out;
    for (long i = 0; i * m <= deg; ++i) {
        if (n + i < 0) continue;
        detail::Poly ei;
        for (const auto& [key, c] : detail::e_in_power(static_cast<int>(i))) {
            std::vector<int> parts = key.parts();
            for (int& part : parts) part *= m;
            ei.emplace(Partition(parts), c);
        }
        detail::Poly t = detail::power_perp(ei, g);
        if (t.empty()) continue;
        detail::Poly hn;
        for (const auto& [key, c] : detail::h_in_power(static_cast<int>(n + i))) {
            std::vector<int> parts = key.parts();
            for (int& part : parts) part *= m;
            hn.emplace(Partition(parts), c);
        }
        detail::poly_add_all(out, detail::poly_mul(hn, t), Rat(i % 2 ? -1 : 1));
    }
    return LambdaElement::from_power(out, f.tag());
}

/// F -> Lambda identification: each maya diagram becomes its Schur function.
inline LambdaElement schur_of_fock(const FockVector& v) {
    LambdaElement r(Basis::Schur);
    for (const auto& [d, c] : v.terms()) r.add(to_partition(d), Rat(c));
    return r;
}

inline std::string to_string(const LambdaElement& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : f.terms()) {
        Rat a = c > 0 ? c : Rat(-c);
        if (!out.empty()) out += ' ';
        out += (c > 0 ? '+' : '-');
        if (a != 1) out += to_string(a) + '*';
        out += basis_name(f.tag());
        out += '(' + to_string(k) + ')';
    }
    return out;
}

} // namespace mayachar
