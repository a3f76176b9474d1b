#pragma once

#include <compare>
#include <optional>
#include <string>

#include "wittmod/lincomb.hpp"
#include "wittmod/linalg.hpp"
#include "wittmod/multiindex.hpp"

namespace wittmod {

/// Generator t^alpha d_dir of the vector-field algebra. Directions are 0-based
/// internally and rendered 1-based in text and JSON.
struct WGen {
    MultiIndex alpha;
    int dir = 0;
    auto operator<=>(const WGen&) const = default;
};

/// Basis element t^gamma . t^alpha d_dir of the Lie algebra A_n^+ . W_n^+.
/// The A-part exponent is kept separate from the vector-field exponent.
struct AWGen {
    MultiIndex apart;
    MultiIndex alpha;
    int dir = 0;
    auto operator<=>(const AWGen&) const = default;
};

/// Element of the polynomial algebra A_n^+.
class PolyA {
public:
    explicit PolyA(int rank) : n_(rank) {}
    static PolyA monomial(const MultiIndex& alpha, const Rat& c = Rat(1)) {
        PolyA p(alpha.rank());
        p.t_.add(alpha, c);
        return p;
    }
    static PolyA one(int rank) { return monomial(MultiIndex(rank)); }

    int rank() const { return n_; }
    const LinComb<MultiIndex>& terms() const { return t_; }
    bool is_zero() const { return t_.is_zero(); }
    void add(const MultiIndex& a, const Rat& c) { t_.add(a, c); }

    PolyA operator+(const PolyA& o) const;
    PolyA operator-(const PolyA& o) const;
    PolyA operator*(const PolyA& o) const;
    PolyA scaled(const Rat& s) const;
    friend bool operator==(const PolyA& a, const PolyA& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

private:
    int n_;
    LinComb<MultiIndex> t_;
};

/// Element of the Weyl algebra K_n^+ in normal form (all t's left of all d's).
class WeylElem {
public:
    explicit WeylElem(int rank) : n_(rank) {}
    static WeylElem monomial(const MultiIndex& t, const MultiIndex& d, const Rat& c = Rat(1));
    static WeylElem one(int rank) { return monomial(MultiIndex(rank), MultiIndex(rank)); }

    int rank() const { return n_; }
    const LinComb<std::pair<MultiIndex, MultiIndex>>& terms() const { return t_; }
    bool is_zero() const { return t_.is_zero(); }
    void add(const MultiIndex& t, const MultiIndex& d, const Rat& c) { t_.add({t, d}, c); }

    WeylElem operator+(const WeylElem& o) const;
    WeylElem operator-(const WeylElem& o) const;
    /// Exact normal-form product via d_i t_i = t_i d_i + 1.
    WeylElem operator*(const WeylElem& o) const;
    friend bool operator==(const WeylElem& a, const WeylElem& b) {
        return a.n_ == b.n_ && a.t_ == b.t_;
    }

private:
    int n_;
    LinComb<std::pair<MultiIndex, MultiIndex>> t_;
};

/// Element of the Witt algebra W_n^+ (polynomial vector fields).
class WittElem {
public:
    explicit WittElem(int rank) : n_(rank) {}
    static WittElem gen(const MultiIndex& alpha, int dir, const Rat& c = Rat(1)) {
        WittElem w(alpha.rank());
        w.t_.add({alpha, dir}, c);
        return w;
    }

    int rank() const { return n_; }
    const LinComb<WGen>& terms() const { return t_; }
    bool is_zero() const { return t_.is_zero(); }
    void add(const WGen& g, const Rat& c) { t_.add(g, c); }

    WittElem operator+(const WittElem& o) const;
    WittElem operator-(const WittElem& o) const;
    WittElem scaled(const Rat& s) const;
    friend bool operator==(const WittElem& a, const WittElem& b) {
        return a.n_ == b.n_ && a.t_ == b.t_;
    }

private:
    int n_;
    LinComb<WGen> t_;
};

/// [x, y] on single generators: [t^a d_i, t^b d_j] = b_i t^{a+b-e_i} d_j - a_j t^{a+b-e_j} d_i.
LinComb<WGen> wgen_bracket(const WGen& x, const WGen& y);

WittElem witt_bracket(const WittElem& x, const WittElem& y);

/// Element of the semidirect product W_n^+ ⋉ A_n^+.
class TildeElem {
public:
    explicit TildeElem(int rank) : vf_(rank), fn_(rank) {}
    TildeElem(WittElem vf, PolyA fn);
    static TildeElem from_witt(WittElem w) {
        const int r = w.rank();
        return TildeElem(std::move(w), PolyA(r));
    }
    static TildeElem from_poly(PolyA p) { return TildeElem(WittElem(p.rank()), std::move(p)); }

    int rank() const { return vf_.rank(); }
    const WittElem& vectorfield() const { return vf_; }
    const PolyA& function() const { return fn_; }
    bool is_zero() const { return vf_.is_zero() && fn_.is_zero(); }

    TildeElem operator+(const TildeElem& o) const;
    TildeElem operator-(const TildeElem& o) const;
    friend bool operator==(const TildeElem& a, const TildeElem& b) {
        return a.vf_ == b.vf_ && a.fn_ == b.fn_;
    }

private:
    WittElem vf_;
    PolyA fn_;
};

/// [x ⋉ f, y ⋉ g] = ([x,y], x(g) - y(f)); functions form an abelian ideal.
TildeElem tilde_bracket(const TildeElem& x, const TildeElem& y);

/// Apply the vector field t^alpha d_i to a polynomial.
PolyA apply_vf(const WittElem& x, const PolyA& p);

/// Element of the Lie algebra A_n^+ . W_n^+ with standard basis {t^gamma . t^alpha d_i}.
class AWLieElem {
public:
    explicit AWLieElem(int rank) : n_(rank) {}
    static AWLieElem gen(const MultiIndex& apart, const MultiIndex& alpha, int dir,
                         const Rat& c = Rat(1));

    int rank() const { return n_; }
    const LinComb<AWGen>& terms() const { return t_; }
    bool is_zero() const { return t_.is_zero(); }
    void add(const AWGen& g, const Rat& c) { t_.add(g, c); }

    AWLieElem operator+(const AWLieElem& o) const;
    AWLieElem operator-(const AWLieElem& o) const;
    AWLieElem scaled(const Rat& s) const {
        AWLieElem r(n_);
        r.t_.add_scaled(t_, s);
        return r;
    }
    friend bool operator==(const AWLieElem& a, const AWLieElem& b) {
        return a.n_ == b.n_ && a.t_ == b.t_;
    }

private:
    int n_;
    LinComb<AWGen> t_;
};

/// [a.x, b.y] = (a.x(b)).y - (b.y(a)).x + ab.[x,y].
AWLieElem awlie_bracket(const AWLieElem& x, const AWLieElem& y);

/// Embed a vector field with A-part 1.
AWLieElem awlie_from_witt(const WittElem& w);

/// Multiply the A-part by t^gamma (A-module structure of A_n^+ . W_n^+).
AWLieElem a_scale(const MultiIndex& gamma, const AWLieElem& x);

/// The generator X_{alpha,i} = sum_{0<=beta<=alpha} (-1)^{|beta|} C(alpha,beta)
/// t^beta . t^{alpha-beta} d_i of the centralizer of Delta and A_n^+.
AWLieElem centralizer_gen(const MultiIndex& alpha, int dir);

/// Collect the degree-zero part t_i d_j of a vector field supported in degrees >= 0
/// (every exponent |alpha| >= 1) as the n x n matrix sum c_ij E_ij; terms with
/// |alpha| >= 2 are dropped. Throws std::invalid_argument if some term has |alpha| == 0.
RatMatrix gl_projection(const WittElem& x);

/// Degree k-1 when every term satisfies |alpha| == k; nullopt for mixed elements.
std::optional<int> grading_degree(const WittElem& x);

/// Text grammar: terms `c t^(a1,...,an) d_i` joined by +/-, coefficient `p/q`
/// optional, `t^(...)` omitted when alpha = 0. Directions 1-based.
WittElem parse_witt(const std::string& text, int rank);
std::string format_witt(const WittElem& x);

}  // namespace wittmod
