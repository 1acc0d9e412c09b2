#pragma once

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "factorials.hpp"
#include "rational.hpp"

namespace charpoly {

/// Integer partition: weakly decreasing positive parts.  Doubles as a cycle
/// type.  The empty partition is written [].
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<long> parts) : parts_(parts) { validate(); }
    explicit Partition(std::vector<long> parts) : parts_(std::move(parts)) { validate(); }

    static Partition parse(const std::string& s) {
        // comma-separated descending parts; "" or "[]" is empty
        std::vector<long> parts;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty() && tok != "[]")
                parts.push_back(std::stol(tok));
        return Partition(std::move(parts));
    }

    const std::vector<long>& parts() const { return parts_; }
    long size() const {
        long s = 0;
        for (long p : parts_)
            s += p;
        return s;
    }
    long len() const { return static_cast<long>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    long part(long i) const {  // 0-based, 0 beyond the last row
        return i < len() ? parts_[static_cast<size_t>(i)] : 0;
    }
    long largest() const { return part(0); }

    /// number of parts of size j
    long m(long j) const {
        return std::count(parts_.begin(), parts_.end(), j);
    }

    /// every part shrunk by one (rows of size 1 disappear)
    Partition shaved() const {
        std::vector<long> q;
        for (long p : parts_)
            if (p > 1)
                q.push_back(p - 1);
        return Partition(std::move(q));
    }

    /// the partition (n - |lambda|, lambda_1, ..., lambda_p); requires
    /// n >= |lambda| + lambda_1
    Partition padded(long n) const {
        if (n < size() + largest())
            throw error("Partition: padded(n) needs n >= |lambda| + lambda_1");
        if (n == size())
            return Partition{};  // only reachable for the empty partition
        std::vector<long> q;
        q.push_back(n - size());
        q.insert(q.end(), parts_.begin(), parts_.end());
        return Partition(std::move(q));
    }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) {
        return !(a == b);
    }
    friend bool operator<(const Partition& a, const Partition& b) {
        return a.parts_ < b.parts_;
    }

    std::string str() const {
        if (parts_.empty())
            return "[]";
        std::string s;
        for (size_t i = 0; i < parts_.size(); ++i)
            s += (i ? "," : "") + std::to_string(parts_[i]);
        return s;
    }

  private:
    void validate() const {
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw error("Partition: nonpositive part");
            if (i && parts_[i] > parts_[i - 1])
                throw error("Partition: parts not weakly decreasing");
        }
    }

    std::vector<long> parts_;
};

/// Young-diagram containment: small_i <= big_i for every row.
inline bool young_contains(const Partition& big, const Partition& small) {
    for (long i = 0; i < small.len(); ++i)
        if (small.part(i) > big.part(i))
            return false;
    return true;
}

/// All partitions of n, in descending lexicographic order.
inline std::vector<Partition> all_partitions(long n) {
    std::vector<Partition> out;
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long rest, long maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (long p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    if (n < 0)
        throw error("all_partitions: negative n");
    rec(n, n == 0 ? 1 : n);
    return out;
}

/// Size of the conjugacy class of cycle type rho in S_n:
/// n! / prod_j j^{m_j} m_j!.
inline Int class_size(long n, const Partition& rho) {
    if (rho.size() != n)
        throw error("class_size: |rho| != n");
    Int denom = 1;
    for (long j = 1; j <= n; ++j) {
        long mj = rho.m(j);
        for (long t = 0; t < mj; ++t)
            denom *= j;
        denom *= factorial(mj);
    }
    return factorial(n) / denom;
}

} // namespace charpoly
