#pragma once

#include <cstddef>
#include <vector>

#include "wittmod/errors.hpp"
#include "wittmod/witt.hpp"

namespace wittmod {

/// Fixed total order on PBW generators: graded-lex on the exponent, then direction.
inline bool pbw_less(const WGen& a, const WGen& b) {
    const int ta = a.alpha.total(), tb = b.alpha.total();
    if (ta != tb) return ta < tb;
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    return a.dir < b.dir;
}

/// Nondecreasing sequence of generators; the empty word is the unit.
using PBWWord = std::vector<WGen>;

inline bool pbw_sorted(const PBWWord& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (pbw_less(w[i + 1], w[i])) return false;
    return true;
}

inline constexpr std::size_t kDefaultTermBudget = 1'000'000;

/// Element of U(W_n^+) in PBW normal form.
class UElem {
public:
    explicit UElem(int rank) : n_(rank) {}
    static UElem unit(int rank) {
        UElem u(rank);
        u.t_.add({}, Rat(1));
        return u;
    }
    static UElem gen(const WGen& g) {
        UElem u(g.alpha.rank());
        u.t_.add({g}, Rat(1));
        return u;
    }
    static UElem from_witt(const WittElem& w);

    int rank() const { return n_; }
    const LinComb<PBWWord>& terms() const { return t_; }
    bool is_zero() const { return t_.is_zero(); }
    void add(const PBWWord& w, const Rat& c) { t_.add(w, c); }

    UElem operator+(const UElem& o) const;
    UElem operator-(const UElem& o) const;
    UElem scaled(const Rat& s) const;
    UElem mul(const UElem& o, std::size_t budget = kDefaultTermBudget) const;
    friend UElem operator*(const UElem& a, const UElem& b) { return a.mul(b); }
    friend bool operator==(const UElem& a, const UElem& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

private:
    int n_;
    LinComb<PBWWord> t_;
};

inline UElem u_bracket(const UElem& a, const UElem& b, std::size_t budget = kDefaultTermBudget) {
    return a.mul(b, budget) - b.mul(a, budget);
}

inline UElem u_anti(const UElem& a, const UElem& b, std::size_t budget = kDefaultTermBudget) {
    return a.mul(b, budget) + b.mul(a, budget);
}

/// Normal-order a raw product of generators.
UElem normal_order(const std::vector<WGen>& factors, int rank,
                   std::size_t budget = kDefaultTermBudget);

/// A-left normal form key t^apart . word of Ubar = A_n^+ . U(W_n^+).
struct UbarKey {
    MultiIndex apart;
    PBWWord word;
    auto operator<=>(const UbarKey&) const = default;
};

/// Element of Ubar = A_n^+ . U(W_n^+), quotient relations t^0 = 1 and
/// t^a . t^b = t^{a+b} applied eagerly; generators move across the A-part via
/// t^alpha d_i . t^gamma = t^gamma . t^alpha d_i + gamma_i t^{alpha+gamma-e_i}.
class UbarElem {
public:
    explicit UbarElem(int rank) : n_(rank) {}
    static UbarElem unit(int rank) {
        UbarElem u(rank);
        u.t_.add({MultiIndex(rank), {}}, Rat(1));
        return u;
    }
    static UbarElem a_monomial(const MultiIndex& gamma) {
        UbarElem u(gamma.rank());
        u.t_.add({gamma, {}}, Rat(1));
        return u;
    }
    static UbarElem gen(const WGen& g) {
        UbarElem u(g.alpha.rank());
        u.t_.add({MultiIndex(g.alpha.rank()), {g}}, Rat(1));
        return u;
    }
    static UbarElem from_awlie(const AWLieElem& x);

    int rank() const { return n_; }
    const LinComb<UbarKey>& terms() const { return t_; }
    bool is_zero() const { return t_.is_zero(); }
    void add(const UbarKey& k, const Rat& c) { t_.add(k, c); }

    UbarElem operator+(const UbarElem& o) const;
    UbarElem operator-(const UbarElem& o) const;
    UbarElem scaled(const Rat& s) const;
    UbarElem mul(const UbarElem& o, std::size_t budget = kDefaultTermBudget) const;
    friend UbarElem operator*(const UbarElem& a, const UbarElem& b) { return a.mul(b); }
    friend bool operator==(const UbarElem& a, const UbarElem& b) {
        return a.n_ == b.n_ && a.t_ == b.t_;
    }

private:
    int n_;
    LinComb<UbarKey> t_;
};

inline UbarElem ubar_bracket(const UbarElem& a, const UbarElem& b,
                             std::size_t budget = kDefaultTermBudget) {
    return a.mul(b, budget) - b.mul(a, budget);
}

/// omega_{k,s}^{(m)} = sum_i (-1)^i C(m,i) t^{m+k-i} d . t^{s+i} d  in U(W_1^+).
UElem omega1(int k, int s, int m);

/// omega_{alpha,beta}^{m,j,l,p} = sum_i (-1)^i C(m,i)
/// t^{alpha+(m-i)e_j} d_l . t^{beta+i e_j} d_p  in U(W_n^+). Directions 0-based.
UElem omegaN(const MultiIndex& alpha, const MultiIndex& beta, int m, int j, int l, int p);

/// The degree-shifted family Omega_{k,s}^{(m)} expressed inside U(W_1^+); only the
/// range k >= m-1 is representable (it then equals omega1(k-m+1, s+1, m)).
/// Throws std::domain_error outside that range.
UElem omega_shifted(int k, int s, int m);

/// Apply a normal-ordered element to a module vector, factor by factor from the right.
/// Module requirements: types Key/Vec and act_wgen(alpha, dir, key) -> Vec.
template <class M>
typename M::Vec act_word(const M& mod, const PBWWord& w, const typename M::Vec& v) {
    auto cur = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        typename M::Vec next;
        for (const auto& [key, c] : cur) next.add_scaled(mod.act_wgen(it->alpha, it->dir, key), c);
        cur = std::move(next);
    }
    return cur;
}

template <class M>
typename M::Vec act_u(const M& mod, const UElem& x, const typename M::Vec& v) {
    typename M::Vec out;
    for (const auto& [w, c] : x.terms()) out.add_scaled(act_word(mod, w, v), c);
    return out;
}

/// AW-module version: the A-part acts after the word via act_agen.
template <class M>
typename M::Vec act_ubar(const M& mod, const UbarElem& x, const typename M::Vec& v) {
    typename M::Vec out;
    for (const auto& [key, c] : x.terms()) {
        auto mid = act_word(mod, key.word, v);
        typename M::Vec shifted;
        for (const auto& [k2, c2] : mid) shifted.add_scaled(mod.act_agen(key.apart, k2), c2);
        out.add_scaled(shifted, c);
    }
    return out;
}

}  // namespace wittmod
