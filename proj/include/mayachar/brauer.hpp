#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mayachar/lambda.hpp"

namespace mayachar {

/// Label of an irreducible D_n(x) character: |lambda| = n - 2i.
struct BrauerLabel {
    int n = 0;
    Partition lambda;

    BrauerLabel(int n_, Partition lambda_) : n(n_), lambda(std::move(lambda_)) {
        long rest = n - lambda.size();
        if (rest < 0 || rest % 2 != 0)
            throw input_error("BrauerLabel: n - |lambda| must be even and nonnegative");
    }
};

/// Label of an irreducible D_{r,s}(x) character: (|lambda|,|kappa|) = (r-i, s-i).
struct WalledLabel {
    int r = 0, s = 0;
    Partition lambda, kappa;

    WalledLabel(int r_, int s_, Partition lambda_, Partition kappa_)
        : r(r_), s(s_), lambda(std::move(lambda_)), kappa(std::move(kappa_)) {
        if (r - lambda.size() != s - kappa.size() || r - lambda.size() < 0)
            throw input_error("WalledLabel: r - |lambda| and s - |kappa| must agree and be nonnegative");
    }
};

/// Element of Lambda (x) Lambda with a shared basis tag on both slots.
class TensorLambda {
public:
    using Key = std::pair<Partition, Partition>;

    explicit TensorLambda(Basis tag = Basis::Power) : tag_(tag) {}

    static TensorLambda one(Basis tag = Basis::Power) {
        TensorLambda t(tag);
        t.terms_[{Partition{}, Partition{}}] = Rat(1);
        return t;
    }

    static TensorLambda tensor(const LambdaElement& x, const LambdaElement& y, Basis tag = Basis::Power) {
        TensorLambda t(tag);
        const LambdaElement cx_elem = x.convert(tag);
        const LambdaElement cy_elem = y.convert(tag);
        for (const auto& [kx, cx] : cx_elem.terms())
            for (const auto& [ky, cy] : cy_elem.terms())
                t.add({kx, ky}, cx * cy);
        return t;
    }

    Basis tag() const { return tag_; }
    const std::map<Key, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Key& k, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TensorLambda& operator+=(const TensorLambda& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    friend TensorLambda operator+(TensorLambda a, const TensorLambda& b) { return a += b; }

    bool operator==(const TensorLambda&) const = default;

    Rat constant_term() const {
        auto it = terms_.find({Partition{}, Partition{}});
        return it == terms_.end() ? Rat(0) : it->second;
    }

private:
    Basis tag_;
    std::map<Key, Rat> terms_;
};

namespace detail {

// p_i * and p_i^perp on a single power-basis slot.
inline void slot_mult_p(int i, bool slot_x, const TensorLambda::Key& k, const Rat& c,
                        TensorLambda& out) {
    TensorLambda::Key nk = k;
    (slot_x ? nk.first : nk.second) = (slot_x ? k.first : k.second).cup(i);
    out.add(nk, c);
}

inline void slot_perp_p(int i, bool slot_x, const TensorLambda::Key& k, const Rat& c,
                        TensorLambda& out) {
    const Partition& target = slot_x ? k.first : k.second;
    long mult = target.multiplicity(i);
    if (mult == 0) return;
    std::vector<int> rest = target.parts();
    rest.erase(std::find(rest.begin(), rest.end(), i));
    TensorLambda::Key nk = k;
    (slot_x ? nk.first : nk.second) = Partition(rest);
    out.add(nk, c * Rat(i) * Rat(mult));
}

} // namespace detail

/// A^+_i = p_i^perp(X) + p_i(Y);  A^-_i = p_i(X) + p_i^perp(Y).
inline TensorLambda walled_apply(char sign, int i, const TensorLambda& t) {
    if (i < 1) throw input_error("walled_apply requires i >= 1");
    if (sign != '+' && sign != '-') throw input_error("walled_apply: sign must be '+' or '-'");
    if (t.tag() != Basis::Power)
        throw input_error("walled_apply expects power-basis tensors");
    TensorLambda out(Basis::Power);
    const bool plus = sign == '+';
    for (const auto& [k, c] : t.terms()) {
        detail::slot_perp_p(i, plus, k, c, out);
        detail::slot_mult_p(i, !plus, k, c, out);
    }
    return out;
}

/// A^br_r = p_r + p_r^perp + eps_r with eps_r = 1 for even r, 0 for odd r.
inline LambdaElement abr_apply(int r, const LambdaElement& f) {
    if (r < 1) throw input_error("abr_apply requires r >= 1");
    detail::Poly g = f.to_power_map();
    detail::Poly out;
    for (const auto& [mu, c] : g) {
        detail::poly_add(out, mu.cup(r), c); // p_r *
        long mult = mu.multiplicity(r);      // p_r^perp
        if (mult > 0) {
            std::vector<int> rest = mu.parts();
            rest.erase(std::find(rest.begin(), rest.end(), r));
            detail::poly_add(out, Partition(rest), c * Rat(r) * Rat(mult));
        }
        if (r % 2 == 0) detail::poly_add(out, mu, c); // eps_r
    }
    return LambdaElement::from_power(out, f.tag());
}

/// Constant term of A^br_{mu_1} ... A^br_{mu_l} f; the Frobenius side of the
/// Brauer character formula, defined for any f.
inline Rat brauer_char_formula(const LambdaElement& f, const Partition& mu) {
    LambdaElement g = f.convert(Basis::Power);
    for (int r : mu.parts()) g = abr_apply(r, g);
    return g.coefficient(Partition{});
}

inline Rat brauer_char(const BrauerLabel& label, const Partition& mu) {
    if (mu.size() != label.n)
        throw input_error("brauer_char: |mu| must equal n");
    return brauer_char_formula(LambdaElement::schur(label.lambda), mu);
}

struct BrauerRelationResult {
    Rat lhs;
    Rat rhs_first;  // phi = -phi_1^(m) + eps_m
    Rat rhs_second; // phi = -phi_1^(m) + eps_m phi_0^(m)
    std::vector<std::string> flagged;

    bool equal() const { return lhs == rhs_first && lhs == rhs_second; }
};

/// chi^(n)_lambda(mu u (m)) = chi^(n)_{phi(lambda)}(mu), checked for both
/// stated phi variants. Terms of phi(lambda) that do not form a valid
/// D_{n-m} label are evaluated anyway (their constant term vanishes) and
/// reported in `flagged`.
inline BrauerRelationResult brauer_relation_check(const BrauerLabel& label, int m,
                                                  const Partition& mu) {
    if (m <= 1) throw input_error("brauer_relation_check requires m > 1");
    if (!mu.has_no_part_divisible_by(m))
        throw input_error("brauer_relation_check: mu must have no part divisible by m");
    if (mu.size() + m != label.n)
        throw input_error("brauer_relation_check: |mu| + m must equal n");

    BrauerRelationResult res;
    res.lhs = brauer_char(label, mu.cup(m));

    LambdaElement s = LambdaElement::schur(label.lambda);
    LambdaElement minus_phi1 = -phi_plethystic(m, -1, s);
    LambdaElement first = minus_phi1;
    LambdaElement second = minus_phi1;
    if (m % 2 == 0) {
        first += s;
        second += phi_plethystic(m, 0, s);
    }
    res.rhs_first = brauer_char_formula(first, mu);
    res.rhs_second = brauer_char_formula(second, mu);

    const long n_after = label.n - m;
    for (const LambdaElement& variant : {first.convert(Basis::Schur), second.convert(Basis::Schur)}) {
        for (const auto& [kappa, c] : variant.terms()) {
            long rest = n_after - kappa.size();
            if (rest < 0 || rest % 2 != 0) {
                std::string name = to_string(kappa);
                if (std::find(res.flagged.begin(), res.flagged.end(), name) == res.flagged.end())
                    res.flagged.push_back(name);
            }
        }
    }
    return res;
}

/// Constant term of A^+_{mu_1}...A^+_{mu_l} A^-_{nu_1}...A^-_{nu_{l'}} t,
/// rightmost operator first.
inline Rat walled_char_formula(TensorLambda t, const Partition& mu, const Partition& nu) {
    for (auto it = nu.parts().rbegin(); it != nu.parts().rend(); ++it)
        t = walled_apply('-', *it, t);
    for (auto it = mu.parts().rbegin(); it != mu.parts().rend(); ++it)
        t = walled_apply('+', *it, t);
    return t.constant_term();
}

inline Rat walled_char(const WalledLabel& label, const Partition& mu, const Partition& nu) {
    if (mu.size() != label.r || nu.size() != label.s)
        throw input_error("walled_char: need |mu| = r and |nu| = s");
    TensorLambda t = TensorLambda::tensor(LambdaElement::schur(label.lambda),
                                          LambdaElement::schur(label.kappa));
    return walled_char_formula(std::move(t), mu, nu);
}

enum class WalledSide { Left, Right };

struct WalledRelationResult {
    Rat lhs;
    Rat rhs;
    std::vector<std::string> flagged;

    bool equal() const { return lhs == rhs; }
};

/// chi^(r,s)_{[l,k]}(mu u (m), nu) = chi_{[-phi_1(l), k]}(mu, nu) for the left
/// side, and the mirrored statement on the right side.
inline WalledRelationResult walled_relation_check(const WalledLabel& label, int m,
                                                  WalledSide side, const Partition& mu,
                                                  const Partition& nu) {
    if (m <= 1) throw input_error("walled_relation_check requires m > 1");
    if (!mu.has_no_part_divisible_by(m) || !nu.has_no_part_divisible_by(m))
        throw input_error("walled_relation_check: mu, nu must have no part divisible by m");
    const bool left = side == WalledSide::Left;
    if (left && (mu.size() + m != label.r || nu.size() != label.s))
        throw input_error("walled_relation_check: need |mu| + m = r and |nu| = s");
    if (!left && (mu.size() != label.r || nu.size() + m != label.s))
        throw input_error("walled_relation_check: need |mu| = r and |nu| + m = s");

    WalledRelationResult res;
    res.lhs = walled_char(label, left ? mu.cup(m) : mu, left ? nu : nu.cup(m));

    LambdaElement image = -phi_plethystic(m, -1, LambdaElement::schur(left ? label.lambda
                                                                           : label.kappa));
    LambdaElement other = LambdaElement::schur(left ? label.kappa : label.lambda);
    TensorLambda t = left ? TensorLambda::tensor(image, other)
                          : TensorLambda::tensor(other, image);
    res.rhs = walled_char_formula(std::move(t), mu, nu);

    const long r_after = label.r - (left ? m : 0);
    const long s_after = label.s - (left ? 0 : m);
    const LambdaElement image_schur = image.convert(Basis::Schur);
    for (const auto& [kappa, c] : image_schur.terms()) {
        long i = left ? r_after - kappa.size() : s_after - kappa.size();
        long other_i = left ? s_after - label.kappa.size() : r_after - label.lambda.size();
        if (i < 0 || i != other_i)
            res.flagged.push_back(to_string(kappa));
    }
    return res;
}

} // namespace mayachar
