#include "wittmod/witt.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace wittmod {

namespace {

void require_same_rank(int a, int b) {
    if (a != b) throw RankMismatch("rank mismatch");
}

}  // namespace

PolyA PolyA::operator+(const PolyA& o) const {
    require_same_rank(n_, o.n_);
    PolyA r(*this);
    r.t_ += o.t_;
    return r;
}

PolyA PolyA::operator-(const PolyA& o) const {
    require_same_rank(n_, o.n_);
    PolyA r(*this);
    r.t_.sub(o.t_);
    return r;
}

PolyA PolyA::operator*(const PolyA& o) const {
    require_same_rank(n_, o.n_);
    PolyA r(n_);
    for (const auto& [a, ca] : t_)
        for (const auto& [b, cb] : o.t_) r.t_.add(a + b, ca * cb);
    return r;
}

PolyA PolyA::scaled(const Rat& s) const {
    PolyA r(n_);
    r.t_.add_scaled(t_, s);
    return r;
}

WeylElem WeylElem::monomial(const MultiIndex& t, const MultiIndex& d, const Rat& c) {
    WeylElem w(t.rank());
    if (t.rank() != d.rank()) throw RankMismatch("WeylElem: exponent rank mismatch");
    w.t_.add({t, d}, c);
    return w;
}

WeylElem WeylElem::operator+(const WeylElem& o) const {
    require_same_rank(n_, o.n_);
    WeylElem r(*this);
    r.t_ += o.t_;
    return r;
}

WeylElem WeylElem::operator-(const WeylElem& o) const {
    require_same_rank(n_, o.n_);
    WeylElem r(*this);
    r.t_.sub(o.t_);
    return r;
}

namespace {

/// Normal-ordered product of the one-variable pieces d^a t^b (degree-lowering form):
/// d^a t^b = sum_k C(a,k) C(b,k) k! t^{b-k} d^{a-k}.
void weyl_cross_1d(int a, int b, std::vector<std::tuple<int, int, BigInt>>& out) {
    out.clear();
    BigInt kfact = 1;
    for (int k = 0; k <= std::min(a, b); ++k) {
        if (k > 0) kfact *= k;
        out.emplace_back(b - k, a - k, binom(a, k) * binom(b, k) * kfact);
    }
}

}  // namespace

WeylElem WeylElem::operator*(const WeylElem& o) const {
    require_same_rank(n_, o.n_);
    WeylElem r(n_);
    std::vector<std::tuple<int, int, BigInt>> cross;
    for (const auto& [lhs, cl] : t_) {
        const auto& [t1, d1] = lhs;
        for (const auto& [rhs, cr] : o.t_) {
            const auto& [t2, d2] = rhs;
            // (t^t1 d^d1)(t^t2 d^d2): commute d^d1 past t^t2 one variable at a time
            std::vector<std::pair<std::pair<MultiIndex, MultiIndex>, Rat>> acc{
                {{MultiIndex(n_), MultiIndex(n_)}, cl * cr}};
            for (int i = 0; i < n_; ++i) {
                weyl_cross_1d(d1[i], t2[i], cross);
                std::vector<std::pair<std::pair<MultiIndex, MultiIndex>, Rat>> next;
                next.reserve(acc.size() * cross.size());
                for (const auto& [tm, c] : acc)
                    for (const auto& [tb, da, coef] : cross) {
                        auto key = tm;
                        key.first.set(i, tb);
                        key.second.set(i, da);
                        next.push_back({key, c * Rat(coef)});
                    }
                acc = std::move(next);
            }
            for (const auto& [key, c] : acc) {
                MultiIndex tt = t1 + key.first;
                MultiIndex dd = key.second + d2;
                r.t_.add({tt, dd}, c);
            }
        }
    }
    return r;
}

WittElem WittElem::operator+(const WittElem& o) const {
    require_same_rank(n_, o.n_);
    WittElem r(*this);
    r.t_ += o.t_;
    return r;
}

WittElem WittElem::operator-(const WittElem& o) const {
    require_same_rank(n_, o.n_);
    WittElem r(*this);
    r.t_.sub(o.t_);
    return r;
}

WittElem WittElem::scaled(const Rat& s) const {
    WittElem r(n_);
    r.t_.add_scaled(t_, s);
    return r;
}

LinComb<WGen> wgen_bracket(const WGen& x, const WGen& y) {
    LinComb<WGen> out;
    const int n = x.alpha.rank();
    if (y.alpha[x.dir] != 0) {
        MultiIndex e = x.alpha + y.alpha;
        e.set(x.dir, e[x.dir] - 1);
        out.add({e, y.dir}, Rat(y.alpha[x.dir]));
    }
    if (x.alpha[y.dir] != 0) {
        MultiIndex e = x.alpha + y.alpha;
        e.set(y.dir, e[y.dir] - 1);
        out.add({e, x.dir}, Rat(-x.alpha[y.dir]));
    }
    (void)n;
    return out;
}

WittElem witt_bracket(const WittElem& x, const WittElem& y) {
    require_same_rank(x.rank(), y.rank());
    WittElem r(x.rank());
    for (const auto& [gx, cx] : x.terms())
        for (const auto& [gy, cy] : y.terms())
            for (const auto& [g, c] : wgen_bracket(gx, gy)) r.add(g, cx * cy * c);
    return r;
}

TildeElem::TildeElem(WittElem vf, PolyA fn) : vf_(std::move(vf)), fn_(std::move(fn)) {
    require_same_rank(vf_.rank(), fn_.rank());
}

TildeElem TildeElem::operator+(const TildeElem& o) const {
    return TildeElem(vf_ + o.vf_, fn_ + o.fn_);
}

TildeElem TildeElem::operator-(const TildeElem& o) const {
    return TildeElem(vf_ - o.vf_, fn_ - o.fn_);
}

PolyA apply_vf(const WittElem& x, const PolyA& p) {
    require_same_rank(x.rank(), p.rank());
    PolyA r(p.rank());
    for (const auto& [g, cx] : x.terms())
        for (const auto& [beta, cp] : p.terms()) {
            if (beta[g.dir] == 0) continue;
            MultiIndex e = g.alpha + beta;
            e.set(g.dir, e[g.dir] - 1);
            r.add(e, cx * cp * Rat(beta[g.dir]));
        }
    return r;
}

TildeElem tilde_bracket(const TildeElem& x, const TildeElem& y) {
    require_same_rank(x.rank(), y.rank());
    WittElem vf = witt_bracket(x.vectorfield(), y.vectorfield());
    PolyA fn = apply_vf(x.vectorfield(), y.function()) - apply_vf(y.vectorfield(), x.function());
    return TildeElem(std::move(vf), std::move(fn));
}

AWLieElem AWLieElem::gen(const MultiIndex& apart, const MultiIndex& alpha, int dir, const Rat& c) {
    if (apart.rank() != alpha.rank()) throw RankMismatch("AWLieElem: exponent rank mismatch");
    AWLieElem x(apart.rank());
    x.t_.add({apart, alpha, dir}, c);
    return x;
}

AWLieElem AWLieElem::operator+(const AWLieElem& o) const {
    require_same_rank(n_, o.n_);
    AWLieElem r(*this);
    r.t_ += o.t_;
    return r;
}

AWLieElem AWLieElem::operator-(const AWLieElem& o) const {
    require_same_rank(n_, o.n_);
    AWLieElem r(*this);
    r.t_.sub(o.t_);
    return r;
}

AWLieElem awlie_bracket(const AWLieElem& x, const AWLieElem& y) {
    require_same_rank(x.rank(), y.rank());
    const int n = x.rank();
    AWLieElem r(n);
    for (const auto& [gx, cx] : x.terms())
        for (const auto& [gy, cy] : y.terms()) {
            const Rat c = cx * cy;
            // (a.x(b)).y: x(b) = t^{gx.alpha} d_i (t^{gy.apart})
            if (gy.apart[gx.dir] != 0) {
                MultiIndex ap = gx.apart + gx.alpha + gy.apart;
                ap.set(gx.dir, ap[gx.dir] - 1);
                r.add({ap, gy.alpha, gy.dir}, c * Rat(gy.apart[gx.dir]));
            }
            // -(b.y(a)).x
            if (gx.apart[gy.dir] != 0) {
                MultiIndex ap = gy.apart + gy.alpha + gx.apart;
                ap.set(gy.dir, ap[gy.dir] - 1);
                r.add({ap, gx.alpha, gx.dir}, -c * Rat(gx.apart[gy.dir]));
            }
            // ab.[x,y]
            MultiIndex ab = gx.apart + gy.apart;
            for (const auto& [g, cb] : wgen_bracket({gx.alpha, gx.dir}, {gy.alpha, gy.dir}))
                r.add({ab, g.alpha, g.dir}, c * cb);
        }
    return r;
}

AWLieElem awlie_from_witt(const WittElem& w) {
    AWLieElem r(w.rank());
    for (const auto& [g, c] : w.terms()) r.add({MultiIndex(w.rank()), g.alpha, g.dir}, c);
    return r;
}

AWLieElem a_scale(const MultiIndex& gamma, const AWLieElem& x) {
    AWLieElem r(x.rank());
    for (const auto& [g, c] : x.terms()) r.add({gamma + g.apart, g.alpha, g.dir}, c);
    return r;
}

AWLieElem centralizer_gen(const MultiIndex& alpha, int dir) {
    AWLieElem r(alpha.rank());
    for (const auto& beta : sub_indices(alpha)) {
        Rat c = Rat(binom(alpha, beta));
        if (beta.total() % 2 == 1) c = -c;
        r.add({beta, *alpha.checked_sub(beta), dir}, c);
    }
    return r;
}

RatMatrix gl_projection(const WittElem& x) {
    const std::size_t n = static_cast<std::size_t>(x.rank());
    RatMatrix m(n, n);
    for (const auto& [g, c] : x.terms()) {
        const int deg = g.alpha.total();
        if (deg == 0)
            throw std::invalid_argument("gl_projection: term of degree -1 (|alpha| = 0)");
        if (deg != 1) continue;  // lies in m^2 Delta, projects to 0
        int i = 0;
        while (g.alpha[i] == 0) ++i;
        m.add_to(static_cast<std::size_t>(i), static_cast<std::size_t>(g.dir), c);
    }
    return m;
}

std::optional<int> grading_degree(const WittElem& x) {
    std::optional<int> deg;
    for (const auto& [g, c] : x.terms()) {
        int d = g.alpha.total() - 1;
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }
    bool consume(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    std::string integer() {
        skip_ws();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw std::invalid_argument("parse_witt: expected integer at offset " +
                                                    std::to_string(start));
        return s.substr(start, i - start);
    }
};

}  // namespace

WittElem parse_witt(const std::string& text, int rank) {
    WittElem out(rank);
    Cursor cur{text};
    bool first = true;
    while (!cur.eof()) {
        Rat sign(1);
        if (cur.consume('+')) {
        } else if (cur.consume('-')) {
            sign = Rat(-1);
        } else if (!first) {
            throw std::invalid_argument("parse_witt: expected + or - between terms");
        }
        first = false;
        cur.skip_ws();
        Rat coeff(1);
        if (cur.i < text.size() && (std::isdigit(static_cast<unsigned char>(text[cur.i])))) {
            std::string num = cur.integer();
            if (cur.consume('/')) {
                std::string den = cur.integer();
                coeff = Rat(BigInt(num), BigInt(den));
            } else {
                coeff = Rat(BigInt(num));
            }
        }
        MultiIndex alpha(rank);
        cur.skip_ws();
        if (cur.i < text.size() && text[cur.i] == 't') {
            ++cur.i;
            if (!cur.consume('^') || !cur.consume('('))
                throw std::invalid_argument("parse_witt: expected t^(...)");
            std::vector<int> es;
            while (true) {
                es.push_back(std::stoi(cur.integer()));
                if (!cur.consume(',')) break;
            }
            if (!cur.consume(')')) throw std::invalid_argument("parse_witt: expected )");
            if (static_cast<int>(es.size()) != rank)
                throw std::invalid_argument("parse_witt: exponent arity != rank");
            for (int k = 0; k < rank; ++k) {
                if (es[static_cast<std::size_t>(k)] < 0)
                    throw std::invalid_argument("parse_witt: negative exponent");
                alpha.set(k, es[static_cast<std::size_t>(k)]);
            }
        }
        cur.skip_ws();
        if (cur.i >= text.size() || text[cur.i] != 'd')
            throw std::invalid_argument("parse_witt: expected d_i");
        ++cur.i;
        if (!cur.consume('_')) throw std::invalid_argument("parse_witt: expected d_i");
        int dir = std::stoi(cur.integer());
        if (dir < 1 || dir > rank) throw std::invalid_argument("parse_witt: direction out of range");
        out.add({alpha, dir - 1}, sign * coeff);
    }
    return out;
}

std::string format_witt(const WittElem& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : x.terms()) {
        Rat coeff = c;
        if (first) {
            if (coeff.sign() < 0) {
                os << "-";
                coeff = -coeff;
            }
        } else {
            os << (coeff.sign() < 0 ? " - " : " + ");
            if (coeff.sign() < 0) coeff = -coeff;
        }
        first = false;
        if (coeff != Rat(1)) os << coeff.str() << " ";
        if (!g.alpha.is_zero()) {
            os << "t^(";
            for (int i = 0; i < g.alpha.rank(); ++i) {
                if (i) os << ",";
                os << g.alpha[i];
            }
            os << ") ";
        }
        os << "d_" << (g.dir + 1);
    }
    return os.str();
}

}  // namespace wittmod
