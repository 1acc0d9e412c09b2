#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "chains.hpp"
#include "multipoly.hpp"

namespace charpoly {

inline const std::vector<std::string>& ptau_vars() {
    static const std::vector<std::string> v{"z", "w"};
    return v;
}

namespace detail {

inline MultiPoly p_tau_compute(const ChainType& tau);

inline const MultiPoly& p_tau_memo(const ChainType& tau) {
    static std::map<std::string, MultiPoly> memo;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = memo.find(tau.key());
        if (it != memo.end())
            return it->second;
    }
    MultiPoly p = p_tau_compute(tau);
    std::lock_guard<std::mutex> lock(mtx);
    return memo.emplace(tau.key(), std::move(p)).first->second;
}

inline MultiPoly p_tau_compute(const ChainType& tau) {
    const auto& vars = ptau_vars();
    long r = tau.length(), d = tau.degree(), nu = tau.rank;
    if (r == d)
        return MultiPoly::constant(vars, 1);

    MultiPoly result(vars);
    if (tau.m(1) >= 1) {
        // strip one size-1 chain
        long m = tau.m(1);
        long ell = r - d - 1;
        long gamma = nu + 1;
        const MultiPoly& prev = p_tau_memo(tau.dotted());
        MultiPoly z = MultiPoly::variable(vars, "z");
        MultiPoly w = MultiPoly::variable(vars, "w");
        MultiPoly one = MultiPoly::constant(vars, 1);
        MultiPoly linear = z * w * Rat(ell) + z * Rat(3 * ell + gamma) +
                           w * Rat(r + 2 * ell) +
                           MultiPoly::constant(vars, Rat(4 * ell + 2 * gamma));
        result = linear * prev;
        result -= z * (z + one) * (w + MultiPoly::constant(vars, 2)) * prev.derivative("z");
        result -= w * (w + one) * (z + MultiPoly::constant(vars, 2)) * prev.derivative("w");
        result = result * Rat(Int(1), Int(m));
    } else {
        // reduced: substitute through the derivative type
        ChainType omega = tau.derivative();
        long s = omega.degree();
        MultiPoly z = MultiPoly::variable(vars, "z");
        MultiPoly w = MultiPoly::variable(vars, "w");
        MultiPoly wp1 = w + MultiPoly::constant(vars, 1);
        MultiPoly zsub = z * w + z + w;  // image of z
        for (long sp = s; sp <= d; ++sp)
            for (long nup = nu; nup <= sp; ++nup) {
                if (sp - nup < s - nu)
                    continue;
                MultiPoly inner(vars);
                for (const ChainType& omp : enum_chain_types(d, sp, nup)) {
                    Int zeta = zeta_count(omega, omp);
                    if (zeta == 0)
                        continue;
                    inner += p_tau_memo(omp).compose({zsub, w}) * Rat(zeta);
                }
                if (inner.is_zero())
                    continue;
                MultiPoly weight = MultiPoly::constant(vars, ((sp - s) % 2 == 0) ? 1 : -1);
                weight *= z.pow(sp - s);
                weight *= w.pow((sp - nup) - (s - nu));
                weight *= wp1.pow(nup - nu);
                result += weight * inner;
            }
    }

    if (!result.integer_coefficients())
        throw error("p_tau: non-integer coefficients for " + tau.str() + ": " +
                    result.str());
    if (result.total_degree() != r - d)
        throw error("p_tau: degree " + std::to_string(result.total_degree()) +
                    " != r-d for " + tau.str());
    return result;
}

} // namespace detail

/// The integer polynomial P^tau in (z, w) of total degree r - d that
/// determines the generating function of h^tau; memoized.
inline const MultiPoly& p_tau(const ChainType& tau) {
    return detail::p_tau_memo(tau);
}

} // namespace charpoly
