#pragma once

#include <compare>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <vector>

#include "wittmod/errors.hpp"
#include "wittmod/rational.hpp"

namespace wittmod {

/// Exponent vector in Z_+^n (entries may go negative only transiently via checked_sub).
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(int rank) : e_(static_cast<std::size_t>(rank), 0) {}
    MultiIndex(std::initializer_list<int> v) : e_(v) {}
    explicit MultiIndex(std::vector<int> v) : e_(std::move(v)) {}

    static MultiIndex unit(int rank, int dir) {
        MultiIndex m(rank);
        m.e_[static_cast<std::size_t>(dir)] = 1;
        return m;
    }

    int rank() const { return static_cast<int>(e_.size()); }
    int total() const { return std::accumulate(e_.begin(), e_.end(), 0); }
    bool is_zero() const { return total() == 0; }

    int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
    void set(int i, int v) { e_[static_cast<std::size_t>(i)] = v; }

    MultiIndex operator+(const MultiIndex& o) const {
        check_rank(o);
        MultiIndex r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    /// this - o entrywise; nullopt if any entry would go negative.
    std::optional<MultiIndex> checked_sub(const MultiIndex& o) const {
        check_rank(o);
        MultiIndex r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] -= o.e_[i];
            if (r.e_[i] < 0) return std::nullopt;
        }
        return r;
    }

    bool leq(const MultiIndex& o) const {
        check_rank(o);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    const std::vector<int>& entries() const { return e_; }

    auto operator<=>(const MultiIndex&) const = default;

private:
    void check_rank(const MultiIndex& o) const {
        if (e_.size() != o.e_.size()) throw RankMismatch("MultiIndex rank mismatch");
    }
    std::vector<int> e_;
};

inline BigInt binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

/// Product of entrywise binomials, with binom(0,0) = 1.
inline BigInt binom(const MultiIndex& a, const MultiIndex& b) {
    BigInt r = 1;
    for (int i = 0; i < a.rank(); ++i) r *= binom(a[i], b[i]);
    return r;
}

/// All beta with 0 <= beta <= alpha entrywise.
inline std::vector<MultiIndex> sub_indices(const MultiIndex& alpha) {
    std::vector<MultiIndex> out{MultiIndex(alpha.rank())};
    for (int i = 0; i < alpha.rank(); ++i) {
        std::vector<MultiIndex> next;
        next.reserve(out.size() * static_cast<std::size_t>(alpha[i] + 1));
        for (const auto& b : out)
            for (int v = 0; v <= alpha[i]; ++v) {
                MultiIndex c = b;
                c.set(i, v);
                next.push_back(c);
            }
        out = std::move(next);
    }
    return out;
}

/// All alpha in Z_+^rank with |alpha| <= max_total, in graded order.
inline std::vector<MultiIndex> boxed_indices(int rank, int max_total) {
    std::vector<MultiIndex> out;
    MultiIndex cur(rank);
    for (int total = 0; total <= max_total; ++total) {
        auto fix = [&](auto&& self, int pos, int remaining) -> void {
            if (pos == rank - 1) {
                cur.set(pos, remaining);
                out.push_back(cur);
                return;
            }
            for (int v = remaining; v >= 0; --v) {
                cur.set(pos, v);
                self(self, pos + 1, remaining - v);
            }
        };
        if (rank == 0) {
            if (total == 0) out.push_back(cur);
        } else {
            fix(fix, 0, total);
        }
    }
    return out;
}

}  // namespace wittmod
