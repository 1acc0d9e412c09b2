#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace charpoly {

using Int = mpz_class;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(static_cast<signed long>(n)) {}
    Rat(long long n) : v_(Int(std::to_string(n))) {}
    Rat(const Int& n) : v_(n) {}
    Rat(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0)
            throw error("Rat: zero denominator");
        v_.canonicalize();
    }

    static Rat from_string(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos)
            return Rat(Int(s));
        return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    }

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    long to_long() const {
        if (!is_integer() || !v_.get_num().fits_slong_p())
            throw error("Rat: value does not fit a long: " + str());
        return v_.get_num().get_si();
    }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero())
            throw error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    Rat operator-() const { Rat r; r.v_ = -v_; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat abs() const { Rat r; r.v_ = ::abs(v_); return r; }

    Rat pow(long e) const {
        if (e < 0) {
            if (is_zero())
                throw error("Rat: zero to a negative power");
            return Rat(1) / pow(-e);
        }
        Rat base = *this, acc = 1;
        for (; e > 0; e >>= 1) {
            if (e & 1)
                acc *= base;
            base *= base;
        }
        return acc;
    }

    /// Serialized as "p" when integral, "p/q" otherwise.
    std::string str() const {
        if (is_integer())
            return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
        return os << r.str();
    }

  private:
    mpq_class v_;
};

inline Rat pow2(long e) { return Rat(2).pow(e); }

} // namespace charpoly
