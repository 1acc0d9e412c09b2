#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "rational.hpp"

namespace charpoly {

/// Graded-lexicographic term order, largest term first, so that map
/// iteration yields the canonical serialization order.
struct GradedLexGreater {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        long da = std::accumulate(a.begin(), a.end(), 0L);
        long db = std::accumulate(b.begin(), b.end(), 0L);
        if (da != db)
            return da > db;
        return a > b;
    }
};

/// Sparse multivariate polynomial with exact rational coefficients over a
/// fixed, ordered list of named variables.  Zero coefficients are never
/// stored.
class MultiPoly {
  public:
    using TermMap = std::map<std::vector<int>, Rat, GradedLexGreater>;

    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, const Rat& c) {
        MultiPoly p(std::move(vars));
        p.add_term(std::vector<int>(p.vars_.size(), 0), c);
        return p;
    }

    static MultiPoly variable(std::vector<std::string> vars, const std::string& name) {
        MultiPoly p(std::move(vars));
        std::vector<int> e(p.vars_.size(), 0);
        e.at(p.var_index(name)) = 1;
        p.add_term(e, 1);
        return p;
    }

    static MultiPoly monomial(std::vector<std::string> vars, std::vector<int> exps,
                              const Rat& c) {
        MultiPoly p(std::move(vars));
        if (exps.size() != p.vars_.size())
            throw error("MultiPoly: exponent vector length mismatch");
        p.add_term(std::move(exps), c);
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    size_t var_index(const std::string& name) const {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name)
                return i;
        throw error("MultiPoly: unknown variable " + name);
    }

    Rat coeff(const std::vector<int>& exps) const {
        auto it = terms_.find(exps);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(std::vector<int> exps, const Rat& c) {
        if (exps.size() != vars_.size())
            throw error("MultiPoly: exponent vector length mismatch");
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.emplace(std::move(exps), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    int degree(const std::string& var) const {
        size_t i = var_index(var);
        int d = -1;
        for (const auto& [e, c] : terms_)
            d = std::max(d, e[i]);
        return d;  // -1 for the zero polynomial
    }

    long total_degree() const {
        long d = -1;
        for (const auto& [e, c] : terms_)
            d = std::max(d, std::accumulate(e.begin(), e.end(), 0L));
        return d;
    }

    bool integer_coefficients() const {
        for (const auto& [e, c] : terms_)
            if (!c.is_integer())
                return false;
        return true;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_vars(b);
        MultiPoly r(a.vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                std::vector<int> e(ea);
                for (size_t i = 0; i < e.size(); ++i)
                    e[i] += eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        return r;
    }

    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly operator*(const Rat& c) const {
        MultiPoly r(vars_);
        if (c.is_zero())
            return r;
        for (const auto& [e, v] : terms_)
            r.terms_.emplace(e, v * c);
        return r;
    }

    MultiPoly operator-() const { return *this * Rat(-1); }

    MultiPoly pow(long e) const {
        if (e < 0)
            throw error("MultiPoly: negative power");
        MultiPoly acc = constant(vars_, 1), base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1)
                acc *= base;
            if (e > 1)
                base *= base;
        }
        return acc;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    Rat eval(const std::vector<Rat>& point) const {
        if (point.size() != vars_.size())
            throw error("MultiPoly: evaluation point arity mismatch");
        Rat r = 0;
        for (const auto& [e, c] : terms_) {
            Rat t = c;
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0)
                    t *= point[i].pow(e[i]);
            r += t;
        }
        return r;
    }

    MultiPoly derivative(const std::string& var) const {
        size_t i = var_index(var);
        MultiPoly r(vars_);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0)
                continue;
            std::vector<int> e2(e);
            --e2[i];
            r.add_term(std::move(e2), c * Rat(e[i]));
        }
        return r;
    }

    /// Simultaneous substitution: images[i] replaces vars()[i].  All images
    /// must share one variable list, which becomes the result's.
    MultiPoly compose(const std::vector<MultiPoly>& images) const {
        if (images.size() != vars_.size())
            throw error("MultiPoly: compose arity mismatch");
        std::vector<std::string> out_vars =
            images.empty() ? vars_ : images.front().vars();
        for (const auto& im : images)
            if (im.vars() != out_vars)
                throw error("MultiPoly: compose images over mismatched variables");
        // power caches, one per variable
        std::vector<std::vector<MultiPoly>> powers(images.size());
        auto power_of = [&](size_t i, int e) -> const MultiPoly& {
            auto& cache = powers[i];
            if (cache.empty())
                cache.push_back(MultiPoly::constant(out_vars, 1));
            while (static_cast<int>(cache.size()) <= e)
                cache.push_back(cache.back() * images[i]);
            return cache[e];
        };
        MultiPoly r(out_vars);
        for (const auto& [e, c] : terms_) {
            MultiPoly t = MultiPoly::constant(out_vars, c);
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0)
                    t *= power_of(i, e[i]);
            r += t;
        }
        return r;
    }

    /// Re-express over another variable list.  Variables absent from the
    /// new list must be unused (exponent zero throughout).
    MultiPoly extend_vars(const std::vector<std::string>& new_vars) const {
        std::vector<long> where(vars_.size(), -1);
        for (size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
            if (it != new_vars.end())
                where[i] = it - new_vars.begin();
        }
        MultiPoly r(new_vars);
        for (const auto& [e, c] : terms_) {
            std::vector<int> e2(new_vars.size(), 0);
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0)
                    continue;
                if (where[i] < 0)
                    throw error("MultiPoly: extend_vars drops used variable " + vars_[i]);
                e2[static_cast<size_t>(where[i])] = e[i];
            }
            r.add_term(std::move(e2), c);
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty())
            return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rat a = c.abs();
            if (first)
                s += (c.sign() < 0 ? "-" : "");
            else
                s += (c.sign() < 0 ? " - " : " + ");
            first = false;
            std::string mono;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0)
                    continue;
                if (!mono.empty())
                    mono += "*";
                mono += vars_[i];
                if (e[i] > 1)
                    mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty())
                s += a.str();
            else if (a == Rat(1))
                s += mono;
            else
                s += a.str() + "*" + mono;
        }
        return s;
    }

  private:
    void check_vars(const MultiPoly& o) const {
        if (vars_ != o.vars_)
            throw error("MultiPoly: mixed variable lists");
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

} // namespace charpoly
