// Test-only oracle: expands symmetric functions into honest polynomials in a
// fixed number of variables, straight from the combinatorial definitions.
#pragma once

#include <map>
#include <vector>

#include "mayachar/lambda.hpp"

namespace oracle {

using mayachar::Partition;
using mayachar::Rat;

using Expo = std::vector<int>;          // one exponent per variable
using VarPoly = std::map<Expo, Rat>;    // polynomial in x_1..x_d

inline VarPoly var_one(int d) { return {{Expo(d, 0), Rat(1)}}; }

inline VarPoly var_mul(const VarPoly& a, const VarPoly& b) {
    VarPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Expo e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            auto it = out.find(e);
            if (it == out.end()) out.emplace(std::move(e), ca * cb);
            else {
                it->second += ca * cb;
                if (it->second == 0) out.erase(it);
            }
        }
    return out;
}

inline void var_add(VarPoly& a, const VarPoly& b, const Rat& s = Rat(1)) {
    for (const auto& [e, c] : b) {
        auto it = a.find(e);
        if (it == a.end()) a.emplace(e, c * s);
        else {
            it->second += c * s;
            if (it->second == 0) a.erase(it);
        }
    }
}

/// p_r = sum_i x_i^r
inline VarPoly direct_p(int r, int d) {
    VarPoly out;
    for (int i = 0; i < d; ++i) {
        Expo e(d, 0);
        e[i] = r;
        out.emplace(std::move(e), Rat(1));
    }
    return out;
}

/// h_r: all monomials of total degree r
inline VarPoly direct_h(int r, int d) {
    VarPoly out;
    Expo e(d, 0);
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == d - 1) {
            e[var] = remaining;
            out.emplace(e, Rat(1));
            e[var] = 0;
            return;
        }
        for (int take = 0; take <= remaining; ++take) {
            e[var] = take;
            self(self, var + 1, remaining - take);
        }
        e[var] = 0;
    };
    if (d == 0) return r == 0 ? VarPoly{{Expo{}, Rat(1)}} : VarPoly{};
    rec(rec, 0, r);
    return out;
}

/// e_r: squarefree monomials of degree r
inline VarPoly direct_e(int r, int d) {
    VarPoly out;
    Expo e(d, 0);
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (remaining == 0) {
            out.emplace(e, Rat(1));
            return;
        }
        if (var >= d || d - var < remaining) return;
        e[var] = 1;
        self(self, var + 1, remaining - 1);
        e[var] = 0;
        self(self, var + 1, remaining);
    };
    rec(rec, 0, r);
    return out;
}

/// s_lambda: sum over semistandard tableaux with entries 1..d of x^{content}.
inline VarPoly direct_schur(const Partition& lambda, int d) {
    const auto& parts = lambda.parts();
    const int rows = static_cast<int>(parts.size());
    if (rows == 0) return var_one(d);
    VarPoly out;
    std::vector<std::vector<int>> tab(rows);
    for (int i = 0; i < rows; ++i) tab[i].assign(parts[i], 0);
    Expo content(d, 0);
    auto rec = [&](auto&& self, int row, int col) -> void {
        if (row == rows) {
            auto it = out.find(content);
            if (it == out.end()) out.emplace(content, Rat(1));
            else it->second += 1;
            return;
        }
        int next_row = row, next_col = col + 1;
        if (next_col >= parts[row]) {
            next_row = row + 1;
            next_col = 0;
        }
        int lo = 1;
        if (col > 0) lo = std::max(lo, tab[row][col - 1]);       // rows weakly increase
        if (row > 0) lo = std::max(lo, tab[row - 1][col] + 1);   // columns strictly increase
        for (int v = lo; v <= d; ++v) {
            tab[row][col] = v;
            ++content[v - 1];
            self(self, next_row, next_col);
            --content[v - 1];
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// Expansion of a power-basis element.
inline VarPoly expand_power(const mayachar::detail::Poly& p, int d) {
    VarPoly out;
    for (const auto& [nu, c] : p) {
        VarPoly prod = var_one(d);
        for (int r : nu.parts()) prod = var_mul(prod, direct_p(r, d));
        var_add(out, prod, c);
    }
    return out;
}

inline VarPoly expand(const mayachar::LambdaElement& f, int d) {
    return expand_power(f.to_power_map(), d);
}

} // namespace oracle
