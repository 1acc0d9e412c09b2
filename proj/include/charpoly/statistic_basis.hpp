#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "characters.hpp"
#include "multipoly.hpp"
#include "partitions.hpp"

namespace charpoly {

/// Variables m_1, ..., m_J for permutation statistics; m_j counts j-cycles
/// and carries graded degree j.
inline std::vector<std::string> stat_vars(long J) {
    std::vector<std::string> v;
    for (long j = 1; j <= J; ++j)
        v.push_back("m" + std::to_string(j));
    return v;
}

inline long graded_degree(const MultiPoly& f) {
    long d = 0;
    for (const auto& [e, c] : f.terms()) {
        long g = 0;
        for (size_t i = 0; i < e.size(); ++i)
            g += static_cast<long>(i + 1) * e[i];
        d = std::max(d, g);
    }
    return d;
}

/// binom(m_j, c) as a polynomial in m_j.
inline MultiPoly cycle_count_binomial(const std::vector<std::string>& vars, long j,
                                      long c) {
    MultiPoly mj = MultiPoly::variable(vars, "m" + std::to_string(j));
    MultiPoly p = MultiPoly::constant(vars, 1);
    for (long i = 0; i < c; ++i)
        p *= mj - MultiPoly::constant(vars, Rat(i));
    return p * Rat(Int(1), factorial(c));
}

/// I^rho = prod_j binom(m_j, m_j(rho)): the number of invariant subsets on
/// which the permutation restricts to cycle type rho.
inline MultiPoly subset_count_poly(const std::vector<std::string>& vars,
                                   const Partition& rho) {
    MultiPoly p = MultiPoly::constant(vars, 1);
    for (long j = 1; j <= rho.largest(); ++j) {
        long c = rho.m(j);
        if (c > 0)
            p *= cycle_count_binomial(vars, j, c);
    }
    return p;
}

/// Macdonald's character polynomial X^lambda over m_1..m_max(1,|lambda|):
/// evaluating it at the cycle counts of pi in S_n gives chi^{lambda[n]}(pi)
/// whenever n >= |lambda| + lambda_1.
inline MultiPoly x_lambda(const Partition& lambda) {
    long l = lambda.size();
    long lp = lambda.shaved().size();
    std::vector<std::string> vars = stat_vars(std::max(1L, l));
    MultiPoly X(vars);
    for (long r = lp; r <= l; ++r) {
        Int phi_sign = ((l - r) % 2 == 0) ? 1 : -1;
        for (const Partition& rho : all_partitions(r)) {
            Int phi = 0;
            for (const Partition& mu : all_partitions(r))
                if (young_contains(lambda, mu) && young_contains(mu, lambda.shaved()))
                    phi += mn_character(mu, rho);
            phi *= phi_sign;
            if (phi != 0)
                X += subset_count_poly(vars, rho) * Rat(phi);
        }
    }
    return X;
}

/// Evaluate a statistic polynomial at the cycle counts of a cycle type.
inline Rat eval_at_cycle_type(const MultiPoly& f, const Partition& cycle_type) {
    std::vector<Rat> point;
    point.reserve(f.vars().size());
    for (size_t j = 1; j <= f.vars().size(); ++j)
        point.push_back(Rat(cycle_type.m(static_cast<long>(j))));
    return f.eval(point);
}

namespace detail {

inline std::vector<std::vector<int>> graded_monomials(long r) {
    // exponent vectors e over m_1..m_r with sum i*e_i <= r
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(std::max(1L, r)), 0);
    std::function<void(long, long)> rec = [&](long var, long budget) {
        if (var > std::max(1L, r)) {
            out.push_back(cur);
            return;
        }
        for (long e = 0; e * var <= budget; ++e) {
            cur[static_cast<size_t>(var - 1)] = static_cast<int>(e);
            rec(var + 1, budget - e * var);
        }
        cur[static_cast<size_t>(var - 1)] = 0;
    };
    rec(1, r);
    return out;
}

} // namespace detail

/// Expand f (graded degree <= r) in the basis {X^lambda : |lambda| <= r}.
/// Returns the coefficient of each X^lambda; exact linear solve.
inline std::map<Partition, Rat> expand_in_x_basis(const MultiPoly& f, long r) {
    if (graded_degree(f) > r)
        throw error("expand_in_x_basis: graded degree exceeds r");
    std::vector<std::string> vars = stat_vars(std::max(1L, r));
    MultiPoly fe = f.extend_vars(vars);

    std::vector<Partition> lambdas;
    for (long s = 0; s <= r; ++s)
        for (const Partition& p : all_partitions(s))
            lambdas.push_back(p);
    std::vector<MultiPoly> basis;
    basis.reserve(lambdas.size());
    for (const auto& lam : lambdas)
        basis.push_back(x_lambda(lam).extend_vars(vars));

    std::vector<std::vector<int>> monos = detail::graded_monomials(r);
    std::map<std::vector<int>, size_t> mono_index;
    for (size_t i = 0; i < monos.size(); ++i)
        mono_index[monos[i]] = i;
    if (monos.size() != lambdas.size())
        throw error("expand_in_x_basis: basis/monomial count mismatch");

    size_t N = monos.size();
    std::vector<std::vector<Rat>> A(N, std::vector<Rat>(N + 1));
    for (size_t c = 0; c < N; ++c)
        for (const auto& [e, v] : basis[c].terms())
            A[mono_index.at(e)][c] = v;
    for (const auto& [e, v] : fe.terms())
        A[mono_index.at(e)][N] = v;

    // gaussian elimination with partial pivoting (exact)
    std::vector<size_t> perm(N);
    for (size_t col = 0, row = 0; col < N && row < N; ++col) {
        size_t piv = row;
        while (piv < N && A[piv][col].is_zero())
            ++piv;
        if (piv == N)
            throw error("expand_in_x_basis: singular system");
        std::swap(A[piv], A[row]);
        for (size_t i = 0; i < N; ++i) {
            if (i == row || A[i][col].is_zero())
                continue;
            Rat factor = A[i][col] / A[row][col];
            for (size_t j = col; j <= N; ++j)
                A[i][j] -= factor * A[row][j];
        }
        perm[col] = row;
        ++row;
    }
    std::map<Partition, Rat> out;
    for (size_t c = 0; c < N; ++c) {
        Rat v = A[perm[c]][N] / A[perm[c]][c];
        if (!v.is_zero())
            out.emplace(lambdas[c], v);
    }
    return out;
}

} // namespace charpoly
