#pragma once

#include <string>
#include <utility>
#include <vector>

#include "multipoly.hpp"
#include "rational.hpp"

namespace charpoly {

/// Dense univariate polynomial over Rat, coefficients in ascending order.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(const Rat& c) { return UniPoly({c}); }
    static UniPoly x() { return UniPoly({Rat(0), Rat(1)}); }

    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 when zero
    Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

    Rat eval(const Rat& x) const {
        Rat r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            r = r * x + *it;
        return r;
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero())
            return UniPoly();
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(r));
    }
    UniPoly operator*(const Rat& s) const {
        if (s.is_zero())
            return UniPoly();
        std::vector<Rat> r(c_);
        for (auto& v : r)
            v *= s;
        return UniPoly(std::move(r));
    }
    UniPoly operator-() const { return *this * Rat(-1); }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly derivative() const {
        if (c_.size() <= 1)
            return UniPoly();
        std::vector<Rat> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = c_[i] * Rat(static_cast<long>(i));
        return UniPoly(std::move(r));
    }

    /// Euclidean remainder of *this by d (exact rational arithmetic).
    UniPoly rem(const UniPoly& d) const {
        if (d.is_zero())
            throw error("UniPoly: remainder by zero");
        UniPoly r = *this;
        while (!r.is_zero() && r.degree() >= d.degree()) {
            Rat q = r.leading() / d.leading();
            long shift = r.degree() - d.degree();
            for (long i = 0; i <= d.degree(); ++i)
                r.c_[i + shift] -= q * d.c_[i];
            r.trim();
        }
        return r;
    }

    /// Scale to integer coefficients with content 1 and positive leading sign
    /// preserved (scaling factor is always positive).
    UniPoly primitive() const {
        if (is_zero())
            return UniPoly();
        Int lcm_den = 1;
        for (const auto& v : c_)
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.den().get_mpz_t());
        Int gcd_num = 0;
        for (const auto& v : c_) {
            Int scaled = v.num() * (lcm_den / v.den());
            mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_mpz_t());
        }
        Rat scale = Rat(lcm_den, gcd_num);
        return *this * scale;
    }

    static UniPoly gcd(UniPoly a, UniPoly b) {
        a = a.primitive();
        b = b.primitive();
        while (!b.is_zero()) {
            UniPoly r = a.rem(b).primitive();
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero())
            a = a * (Rat(1) / a.leading());
        return a;
    }

    /// p / gcd(p, p'): same distinct roots, all simple.
    UniPoly squarefree_part() const {
        if (is_zero())
            return UniPoly();
        UniPoly g = gcd(*this, derivative());
        if (g.degree() <= 0)
            return *this;
        return exact_div(g);
    }

    /// Exact division; throws if d does not divide.
    UniPoly exact_div(const UniPoly& d) const {
        if (d.is_zero())
            throw error("UniPoly: division by zero");
        if (is_zero())
            return UniPoly();
        if (degree() < d.degree())
            throw error("UniPoly: non-exact division");
        std::vector<Rat> q(degree() - d.degree() + 1);
        UniPoly r = *this;
        while (!r.is_zero() && r.degree() >= d.degree()) {
            Rat c = r.leading() / d.leading();
            long shift = r.degree() - d.degree();
            q[shift] = c;
            for (long i = 0; i <= d.degree(); ++i)
                r.c_[i + shift] -= c * d.c_[i];
            r.trim();
        }
        if (!r.is_zero())
            throw error("UniPoly: non-exact division");
        return UniPoly(std::move(q));
    }

    MultiPoly to_multipoly(const std::string& var) const {
        MultiPoly p({var});
        for (size_t i = 0; i < c_.size(); ++i)
            p.add_term({static_cast<int>(i)}, c_[i]);
        return p;
    }

    static UniPoly from_multipoly(const MultiPoly& p) {
        if (p.vars().size() != 1)
            throw error("UniPoly: not univariate");
        std::vector<Rat> c(static_cast<size_t>(std::max(0L, static_cast<long>(p.degree(p.vars()[0])) + 1)));
        for (const auto& [e, v] : p.terms())
            c[static_cast<size_t>(e[0])] = v;
        return UniPoly(std::move(c));
    }

    std::string str(const std::string& var = "n") const {
        return to_multipoly(var).str();
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

    std::vector<Rat> c_;
};

} // namespace charpoly
