#pragma once

#include <atomic>
#include <sstream>
#include <string>
#include <vector>

#include "mayachar/brauer.hpp"
#include "mayachar/fock.hpp"
#include "mayachar/gamma.hpp"
#include "mayachar/lambda.hpp"
#include "mayachar/parallel.hpp"

namespace mayachar {

struct SweepResult {
    bool ok = true;
    long cases = 0;
    std::string counterexample;
};

namespace detail {

/// Runs check(i) over tasks; merges per-task case counts and reports the
/// first counterexample by task index.
template <class Check>
SweepResult run_sweep(std::size_t tasks, Check&& check) {
    std::vector<SweepResult> results(tasks);
    parallel_for(tasks, [&](std::size_t i) { results[i] = check(i); });
    SweepResult total;
    for (const auto& r : results) {
        total.cases += r.cases;
        if (!r.ok && total.ok) {
            total.ok = false;
            total.counterexample = r.counterexample;
        }
    }
    return total;
}

inline std::vector<Partition> partitions_up_to(int max_size) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_size; ++n)
        for (const auto& p : partitions_of(n)) out.push_back(p);
    return out;
}

} // namespace detail

/// chi_lambda(mu u (m)) = chi_{-phi(lambda)}(mu), m in {2,3,4,5}.
inline SweepResult verify_main(int max_size) {
    std::vector<Partition> lambdas = detail::partitions_up_to(max_size);
    return detail::run_sweep(lambdas.size(), [&](std::size_t idx) {
        SweepResult r;
        const Partition& lam = lambdas[idx];
        for (int m = 2; m <= 5; ++m) {
            if (lam.size() < m) continue;
            for (const auto& mu : partitions_of(static_cast<int>(lam.size()) - m,
                                                [m](const Partition& p) {
                                                    return p.has_no_part_divisible_by(m);
                                                })) {
                RelationCheck c = mainthm_check(to_maya(lam), m, mu);
                ++r.cases;
                if (!c.equal()) {
                    r.ok = false;
                    std::ostringstream os;
                    os << "lambda=(" << to_string(lam) << ") m=" << m << " mu=(" << to_string(mu)
                       << "): lhs=" << c.lhs.get_str() << " rhs=" << c.rhs.get_str();
                    r.counterexample = os.str();
                    return r;
                }
            }
        }
        return r;
    });
}

/// chi_lambda(mu u m^k) against the binomial expansion, m in {2,3}, k in {1,2,3}.
inline SweepResult verify_multim(int max_size) {
    std::vector<Partition> lambdas = detail::partitions_up_to(max_size);
    return detail::run_sweep(lambdas.size(), [&](std::size_t idx) {
        SweepResult r;
        const Partition& lam = lambdas[idx];
        MayaDiagram d = to_maya(lam);
        for (int m : {2, 3}) {
            for (int k = 1; k <= 3; ++k) {
                long rest = lam.size() - static_cast<long>(k) * m;
                if (rest < 0) continue;
                for (const auto& mu : partitions_of(static_cast<int>(rest),
                                                    [m](const Partition& p) {
                                                        return p.has_no_part_divisible_by(m);
                                                    })) {
                    Partition cls = mu;
                    for (int t = 0; t < k; ++t) cls = cls.cup(m);
                    Int direct = character(d, cls);
                    Int expanded = multim_expand(d, m, k, mu);
                    ++r.cases;
                    if (direct != expanded) {
                        r.ok = false;
                        std::ostringstream os;
                        os << "lambda=(" << to_string(lam) << ") m=" << m << " k=" << k
                           << " mu=(" << to_string(mu) << "): direct=" << direct.get_str()
                           << " expansion=" << expanded.get_str();
                        r.counterexample = os.str();
                        return r;
                    }
                }
            }
        }
        return r;
    });
}

/// degree_via_f = degree_via_g = chi_lambda(1^{|lambda|}).
inline SweepResult verify_degree(int max_size) {
    std::vector<Partition> lambdas = detail::partitions_up_to(max_size);
    return detail::run_sweep(lambdas.size(), [&](std::size_t idx) {
        SweepResult r;
        const Partition& lam = lambdas[idx];
        Int f = degree_via_f(lam);
        Int g = degree_via_g(lam);
        Partition ones;
        for (long i = 0; i < lam.size(); ++i) ones = ones.cup(1);
        Int c = character(lam, ones);
        ++r.cases;
        if (f != g || g != c) {
            r.ok = false;
            std::ostringstream os;
            os << "lambda=(" << to_string(lam) << "): f=" << f.get_str() << " g=" << g.get_str()
               << " chi=" << c.get_str();
            r.counterexample = os.str();
        }
        return r;
    });
}

/// Triple agreement of phi: Fock, iterated-Bernstein, plethystic.
inline SweepResult verify_bernpm(int max_degree) {
    std::vector<Partition> lambdas = detail::partitions_up_to(max_degree);
    return detail::run_sweep(lambdas.size(), [&](std::size_t idx) {
        SweepResult r;
        const Partition& lam = lambdas[idx];
        for (int m : {1, 2, 3}) {
            for (int k : {-1, 0, 1, 2}) {
                LambdaElement via_fock = schur_of_fock(phi(m, k, to_maya(lam)));
                LambdaElement via_creation =
                    phi_creation(m, k, LambdaElement::schur(lam)).convert(Basis::Schur);
                LambdaElement via_plethysm =
                    phi_plethystic(m, -k, LambdaElement::schur(lam)).convert(Basis::Schur);
                ++r.cases;
                if (!(via_fock == via_creation && via_creation == via_plethysm)) {
                    r.ok = false;
                    std::ostringstream os;
                    os << "lambda=(" << to_string(lam) << ") m=" << m << " k=" << k
                       << ": fock=" << to_string(via_fock)
                       << " creation=" << to_string(via_creation)
                       << " plethysm=" << to_string(via_plethysm);
                    r.counterexample = os.str();
                    return r;
                }
            }
        }
        return r;
    });
}

/// The ordered creation-operator product reproduces Phi_n^(m), m in {1,3}.
inline SweepResult verify_projthm(int max_degree) {
    std::vector<Partition> lambdas;
    for (int n = 0; n <= max_degree; ++n)
        for (const auto& p : strict_partitions_of(n)) lambdas.push_back(p);
    return detail::run_sweep(lambdas.size(), [&](std::size_t idx) {
        SweepResult r;
        const Partition& lam = lambdas[idx];
        GammaElement q = GammaElement::qfun(lam);
        for (int m : {1, 3}) {
            for (int n : {-2, -1, 0}) {
                GammaElement product = projthm_rhs_coeff(m, static_cast<long>(n) * m, q);
                GammaElement plethystic = Phi_plethystic(m, n, q).convert(GBasis::QFun);
                ++r.cases;
                if (!(product == plethystic)) {
                    r.ok = false;
                    std::ostringstream os;
                    os << "lambda=(" << to_string(lam) << ") m=" << m << " n=" << n
                       << ": product=" << to_string(product)
                       << " plethystic=" << to_string(plethystic);
                    r.counterexample = os.str();
                    return r;
                }
            }
        }
        return r;
    });
}

/// psi~_lambda(mu u (m)) = psi~ at -1/2 Phi(lambda), m in {3,5}, plus the
/// identification Q_{Phi(lambda)} = Phi_{-1}^{(m)} Q_lambda.
inline SweepResult verify_corollary(int max_size) {
    std::vector<Partition> lambdas;
    for (int n = 0; n <= max_size; ++n)
        for (const auto& p : strict_partitions_of(n)) lambdas.push_back(p);
    return detail::run_sweep(lambdas.size(), [&](std::size_t idx) {
        SweepResult r;
        const Partition& lam = lambdas[idx];
        for (int m : {3, 5}) {
            if (lam.size() < m) continue;
            GammaElement image = Phi_corollary(lam, m);
            GammaElement plethystic =
                Phi_plethystic(m, -1, GammaElement::qfun(lam)).convert(GBasis::QFun);
            ++r.cases;
            if (!(image == plethystic)) {
                r.ok = false;
                std::ostringstream os;
                os << "lambda=(" << to_string(lam) << ") m=" << m
                   << ": corollary=" << to_string(image)
                   << " plethystic=" << to_string(plethystic);
                r.counterexample = os.str();
                return r;
            }
            GammaElement scaled = Rat(-1, 2) * image;
            for (const auto& mu : partitions_of(static_cast<int>(lam.size()) - m,
                                                [m](const Partition& p) {
                                                    return p.is_all_odd() &&
                                                           p.has_no_part_divisible_by(m);
                                                })) {
                Rat lhs = psi_tilde(lam, mu.cup(m));
                Rat rhs = psi_tilde(scaled, mu);
                ++r.cases;
                if (lhs != rhs) {
                    r.ok = false;
                    std::ostringstream os;
                    os << "lambda=(" << to_string(lam) << ") m=" << m << " mu=(" << to_string(mu)
                       << "): lhs=" << to_string(lhs) << " rhs=" << to_string(rhs);
                    r.counterexample = os.str();
                    return r;
                }
            }
        }
        return r;
    });
}

/// Brauer relation for both phi variants, plus chi_lambda(1^n) consistency.
inline SweepResult verify_brauer(int max_n, int max_consistency = 8) {
    struct Task {
        int n;
        Partition lambda;
    };
    std::vector<Task> tasks;
    for (int n = 0; n <= max_n; ++n)
        for (int size = n; size >= 0; size -= 2)
            for (const auto& lam : partitions_of(size)) tasks.push_back({n, lam});
    SweepResult relation = detail::run_sweep(tasks.size(), [&](std::size_t idx) {
        SweepResult r;
        const auto& [n, lam] = tasks[idx];
        for (int m : {2, 3}) {
            if (n < m) continue;
            BrauerLabel label(n, lam);
            for (const auto& mu : partitions_of(n - m, [m](const Partition& p) {
                     return p.has_no_part_divisible_by(m);
                 })) {
                BrauerRelationResult res = brauer_relation_check(label, m, mu);
                ++r.cases;
                if (!res.equal()) {
                    r.ok = false;
                    std::ostringstream os;
                    os << "n=" << n << " lambda=(" << to_string(lam) << ") m=" << m << " mu=("
                       << to_string(mu) << "): lhs=" << to_string(res.lhs)
                       << " rhs1=" << to_string(res.rhs_first)
                       << " rhs2=" << to_string(res.rhs_second);
                    r.counterexample = os.str();
                    return r;
                }
            }
        }
        return r;
    });
    if (!relation.ok) return relation;

    std::vector<Partition> lambdas = detail::partitions_up_to(max_consistency);
    SweepResult consistency = detail::run_sweep(lambdas.size(), [&](std::size_t idx) {
        SweepResult r;
        const Partition& lam = lambdas[idx];
        int n = static_cast<int>(lam.size());
        Partition ones;
        for (int i = 0; i < n; ++i) ones = ones.cup(1);
        Rat b = brauer_char(BrauerLabel(n, lam), ones);
        Int c = character(lam, ones);
        ++r.cases;
        if (b != Rat(c)) {
            r.ok = false;
            r.counterexample = "brauer_char((" + to_string(lam) + "), 1^n) = " + to_string(b) +
                               " but chi = " + c.get_str();
        }
        return r;
    });
    relation.cases += consistency.cases;
    if (!consistency.ok) return consistency;
    return relation;
}

/// Walled relation, both sides, r+s <= max_rs, m in {2,3}.
inline SweepResult verify_walled(int max_rs) {
    struct Task {
        int r, s;
    };
    std::vector<Task> tasks;
    for (int r = 0; r <= max_rs; ++r)
        for (int s = 0; r + s <= max_rs; ++s) tasks.push_back({r, s});
    return detail::run_sweep(tasks.size(), [&](std::size_t idx) {
        SweepResult out;
        const auto& [r, s] = tasks[idx];
        for (int m : {2, 3}) {
            for (WalledSide side : {WalledSide::Left, WalledSide::Right}) {
                const bool left = side == WalledSide::Left;
                int mu_size = left ? r - m : r;
                int nu_size = left ? s : s - m;
                if (mu_size < 0 || nu_size < 0) continue;
                for (int i = 0; i <= std::min(r, s); ++i) {
                    for (const auto& lam : partitions_of(r - i)) {
                        for (const auto& kap : partitions_of(s - i)) {
                            WalledLabel label(r, s, lam, kap);
                            auto no_div = [m](const Partition& p) {
                                return p.has_no_part_divisible_by(m);
                            };
                            for (const auto& mu : partitions_of(mu_size, no_div)) {
                                for (const auto& nu : partitions_of(nu_size, no_div)) {
                                    WalledRelationResult res =
                                        walled_relation_check(label, m, side, mu, nu);
                                    ++out.cases;
                                    if (!res.equal()) {
                                        out.ok = false;
                                        std::ostringstream os;
                                        os << "(r,s)=(" << r << ',' << s << ") [lambda|kappa]=[("
                                           << to_string(lam) << ")|(" << to_string(kap)
                                           << ")] m=" << m << (left ? " left" : " right")
                                           << " mu=(" << to_string(mu) << ") nu=("
                                           << to_string(nu) << "): lhs=" << to_string(res.lhs)
                                           << " rhs=" << to_string(res.rhs);
                                        out.counterexample = os.str();
                                        return out;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        return out;
    });
}

} // namespace mayachar
