#pragma once

#include <map>
#include <vector>

#include "multipoly.hpp"
#include "rational.hpp"
#include "unipoly.hpp"

namespace charpoly {

/// Newton interpolation through distinct nodes; exact.
inline UniPoly newton_interpolate(const std::vector<Rat>& xs,
                                  const std::vector<Rat>& ys) {
    if (xs.size() != ys.size() || xs.empty())
        throw error("newton_interpolate: bad point set");
    size_t m = xs.size();
    std::vector<Rat> dd(ys);  // divided differences, in place
    for (size_t level = 1; level < m; ++level)
        for (size_t i = m - 1; i >= level; --i) {
            Rat dx = xs[i] - xs[i - level];
            if (dx.is_zero())
                throw error("newton_interpolate: repeated node");
            dd[i] = (dd[i] - dd[i - 1]) / dx;
        }
    UniPoly p = UniPoly::constant(dd[m - 1]);
    for (size_t i = m - 1; i-- > 0;) {
        p = p * (UniPoly::x() - UniPoly::constant(xs[i]));
        p += UniPoly::constant(dd[i]);
    }
    return p;
}

namespace detail {

// Recursive tensor interpolation.  Points are grouped by the value of the
// last variable; each group is interpolated in the remaining variables (the
// groups' node sets for those variables may differ, which is what makes
// sheared grids work), then every monomial coefficient is interpolated in
// the last variable.
inline MultiPoly interp_rec(const std::map<std::vector<long>, Rat>& values,
                            const std::vector<std::string>& vars,
                            const std::vector<int>& bounds) {
    size_t d = vars.size();
    if (values.empty())
        throw error("interp_grid: empty point set");
    if (d == 1) {
        if (values.size() != static_cast<size_t>(bounds[0]) + 1)
            throw error("interp_grid: incomplete grid line");
        std::vector<Rat> xs, ys;
        for (const auto& [pt, v] : values) {
            xs.push_back(Rat(pt[0]));
            ys.push_back(v);
        }
        return newton_interpolate(xs, ys).to_multipoly(vars[0]);
    }
    std::map<long, std::map<std::vector<long>, Rat>> groups;
    for (const auto& [pt, v] : values) {
        if (pt.size() != d)
            throw error("interp_grid: point arity mismatch");
        std::vector<long> rest(pt.begin(), pt.end() - 1);
        groups[pt.back()].emplace(std::move(rest), v);
    }
    if (groups.size() != static_cast<size_t>(bounds[d - 1]) + 1)
        throw error("interp_grid: incomplete grid");
    std::vector<std::string> sub_vars(vars.begin(), vars.end() - 1);
    std::vector<int> sub_bounds(bounds.begin(), bounds.end() - 1);
    std::vector<Rat> xs;
    std::vector<MultiPoly> slices;
    for (const auto& [x, sub] : groups) {
        xs.push_back(Rat(x));
        slices.push_back(interp_rec(sub, sub_vars, sub_bounds));
    }
    // interpolate each monomial coefficient across the last variable
    MultiPoly result(vars);
    std::map<std::vector<int>, std::vector<Rat>> columns;
    for (size_t s = 0; s < slices.size(); ++s)
        for (const auto& [e, c] : slices[s].terms())
            columns.try_emplace(e, std::vector<Rat>(slices.size())).first->second[s] = c;
    for (const auto& [e, col] : columns) {
        UniPoly q = newton_interpolate(xs, col);
        for (size_t i = 0; i < q.coeffs().size(); ++i) {
            if (q.coeffs()[i].is_zero())
                continue;
            std::vector<int> exps(e);
            exps.push_back(static_cast<int>(i));
            result.add_term(std::move(exps), q.coeffs()[i]);
        }
    }
    return result;
}

} // namespace detail

/// Exact polynomial through a grid of integer points with the given
/// per-variable degree bounds.  The grid must have (bound+1) nodes in the
/// trailing variable, and recursively for each slice; slices may use
/// different node sets for the earlier variables (sheared grids).
inline MultiPoly interp_grid(const std::map<std::vector<long>, Rat>& values,
                             const std::vector<std::string>& vars,
                             const std::vector<int>& degree_bounds) {
    if (vars.empty() || vars.size() != degree_bounds.size())
        throw error("interp_grid: bad variable/bound lists");
    return detail::interp_rec(values, vars, degree_bounds);
}

} // namespace charpoly
