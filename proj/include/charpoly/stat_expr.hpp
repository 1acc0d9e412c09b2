#pragma once

#include <cctype>
#include <string>

#include "multipoly.hpp"
#include "statistic_basis.hpp"

namespace charpoly {

namespace detail {

/// Recursive-descent parser for statistic expressions: integers, variables
/// m1, m2, ..., the operators + - * ^ and parentheses.
class StatParser {
  public:
    StatParser(const std::string& src, std::vector<std::string> vars)
        : src_(src), vars_(std::move(vars)) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        skip_ws();
        if (pos_ != src_.size())
            throw error("statistic: trailing input at '" + src_.substr(pos_) + "'");
        return p;
    }

  private:
    MultiPoly expr() {
        MultiPoly p = term();
        for (;;) {
            skip_ws();
            if (accept('+'))
                p += term();
            else if (accept('-'))
                p -= term();
            else
                return p;
        }
    }

    MultiPoly term() {
        MultiPoly p = factor();
        for (;;) {
            skip_ws();
            if (accept('*'))
                p *= factor();
            else
                return p;
        }
    }

    MultiPoly factor() {
        MultiPoly b = base();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            long e = integer();
            if (e < 0)
                throw error("statistic: negative exponent");
            return b.pow(e);
        }
        return b;
    }

    MultiPoly base() {
        skip_ws();
        if (accept('(')) {
            MultiPoly p = expr();
            skip_ws();
            if (!accept(')'))
                throw error("statistic: missing ')'");
            return p;
        }
        if (accept('-'))
            return -factor();
        if (pos_ < src_.size() && src_[pos_] == 'm') {
            ++pos_;
            long j = integer();
            if (j < 1 || j > static_cast<long>(vars_.size()))
                throw error("statistic: variable m" + std::to_string(j) +
                            " out of range");
            return MultiPoly::variable(vars_, "m" + std::to_string(j));
        }
        return MultiPoly::constant(vars_, Rat(integer()));
    }

    long integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        if (pos_ == start)
            throw error("statistic: expected a number at position " +
                        std::to_string(start));
        return std::stol(src_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    const std::string& src_;
    std::vector<std::string> vars_;
    size_t pos_ = 0;
};

} // namespace detail

/// Parse a statistic like "m1^2 + 3*m2 - 1" over the variables m1..mJ.
inline MultiPoly parse_statistic(const std::string& src, long J = 10) {
    return detail::StatParser(src, stat_vars(J)).parse();
}

} // namespace charpoly
