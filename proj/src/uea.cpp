#include "wittmod/uea.hpp"

#include <algorithm>
#include <stdexcept>

namespace wittmod {

namespace {

void require_same_rank(int a, int b) {
    if (a != b) throw RankMismatch("rank mismatch");
}

/// Worklist PBW straightening of coeff * word into out. Every processed item
/// counts against the shared budget.
void straighten_into(PBWWord word, Rat coeff, LinComb<PBWWord>& out, std::size_t& budget) {
    std::vector<std::pair<PBWWord, Rat>> stack;
    stack.emplace_back(std::move(word), std::move(coeff));
    while (!stack.empty()) {
        auto [w, c] = std::move(stack.back());
        stack.pop_back();
        if (budget == 0)
            throw BudgetExceeded("normal ordering exceeded the configured term budget");
        --budget;
        std::size_t i = 0;
        bool sorted = true;
        for (; i + 1 < w.size(); ++i)
            if (pbw_less(w[i + 1], w[i])) {
                sorted = false;
                break;
            }
        if (sorted) {
            out.add(w, c);
            continue;
        }
        for (const auto& [g, cb] : wgen_bracket(w[i], w[i + 1])) {
            PBWWord merged;
            merged.reserve(w.size() - 1);
            merged.insert(merged.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
            merged.push_back(g);
            merged.insert(merged.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
            stack.emplace_back(std::move(merged), c * cb);
        }
        std::swap(w[i], w[i + 1]);
        stack.emplace_back(std::move(w), std::move(c));
    }
}

}  // namespace

UElem UElem::from_witt(const WittElem& w) {
    UElem u(w.rank());
    for (const auto& [g, c] : w.terms()) u.t_.add({g}, c);
    return u;
}

UElem UElem::operator+(const UElem& o) const {
    require_same_rank(n_, o.n_);
    UElem r(*this);
    r.t_ += o.t_;
    return r;
}

UElem UElem::operator-(const UElem& o) const {
    require_same_rank(n_, o.n_);
    UElem r(*this);
    r.t_.sub(o.t_);
    return r;
}

UElem UElem::scaled(const Rat& s) const {
    UElem r(n_);
    r.t_.add_scaled(t_, s);
    return r;
}

UElem UElem::mul(const UElem& o, std::size_t budget) const {
    require_same_rank(n_, o.n_);
    UElem r(n_);
    for (const auto& [wa, ca] : t_)
        for (const auto& [wb, cb] : o.t_) {
            PBWWord concat;
            concat.reserve(wa.size() + wb.size());
            concat.insert(concat.end(), wa.begin(), wa.end());
            concat.insert(concat.end(), wb.begin(), wb.end());
            straighten_into(std::move(concat), ca * cb, r.t_, budget);
        }
    return r;
}

UElem normal_order(const std::vector<WGen>& factors, int rank, std::size_t budget) {
    UElem r(rank);
    LinComb<PBWWord> acc;
    straighten_into(factors, Rat(1), acc, budget);
    for (const auto& [w, c] : acc) r.add(w, c);
    return r;
}

UbarElem UbarElem::from_awlie(const AWLieElem& x) {
    UbarElem u(x.rank());
    for (const auto& [g, c] : x.terms()) u.t_.add({g.apart, {WGen{g.alpha, g.dir}}}, c);
    return u;
}

UbarElem UbarElem::operator+(const UbarElem& o) const {
    require_same_rank(n_, o.n_);
    UbarElem r(*this);
    r.t_ += o.t_;
    return r;
}

UbarElem UbarElem::operator-(const UbarElem& o) const {
    require_same_rank(n_, o.n_);
    UbarElem r(*this);
    r.t_.sub(o.t_);
    return r;
}

UbarElem UbarElem::scaled(const Rat& s) const {
    UbarElem r(n_);
    r.t_.add_scaled(t_, s);
    return r;
}

namespace {

/// word . t^gamma = sum t^delta . subword; the A-part ends fully left.
void move_across(const PBWWord& w, std::size_t len, const MultiIndex& gamma, const Rat& coeff,
                 std::vector<std::pair<UbarKey, Rat>>& out) {
    if (len == 0) {
        out.push_back({{gamma, {}}, coeff});
        return;
    }
    const WGen& g = w[len - 1];
    // commute branch: ... t^gamma g
    std::size_t start = out.size();
    move_across(w, len - 1, gamma, coeff, out);
    for (std::size_t i = start; i < out.size(); ++i) out[i].first.word.push_back(g);
    // contraction branch: [g, t^gamma] = gamma_dir t^{alpha+gamma-e_dir}
    if (gamma[g.dir] != 0) {
        MultiIndex delta = g.alpha + gamma;
        delta.set(g.dir, delta[g.dir] - 1);
        move_across(w, len - 1, delta, coeff * Rat(gamma[g.dir]), out);
    }
}

}  // namespace

UbarElem UbarElem::mul(const UbarElem& o, std::size_t budget) const {
    require_same_rank(n_, o.n_);
    UbarElem r(n_);
    std::vector<std::pair<UbarKey, Rat>> moved;
    for (const auto& [ka, ca] : t_)
        for (const auto& [kb, cb] : o.t_) {
            moved.clear();
            move_across(ka.word, ka.word.size(), kb.apart, Rat(1), moved);
            for (const auto& [mid, cm] : moved) {
                PBWWord concat;
                concat.reserve(mid.word.size() + kb.word.size());
                concat.insert(concat.end(), mid.word.begin(), mid.word.end());
                concat.insert(concat.end(), kb.word.begin(), kb.word.end());
                LinComb<PBWWord> words;
                straighten_into(std::move(concat), ca * cb * cm, words, budget);
                MultiIndex apart = ka.apart + mid.apart;
                for (const auto& [word, c] : words) r.t_.add({apart, word}, c);
            }
        }
    return r;
}

UElem omega1(int k, int s, int m) {
    if (k < 0 || s < 0 || m < 0) throw std::domain_error("omega1: negative index");
    UElem r(1);
    for (int i = 0; i <= m; ++i) {
        Rat c = Rat(binom(m, i));
        if (i % 2 == 1) c = -c;
        UElem term = UElem::gen({MultiIndex{m + k - i}, 0}).mul(UElem::gen({MultiIndex{s + i}, 0}));
        r = r + term.scaled(c);
    }
    return r;
}

UElem omegaN(const MultiIndex& alpha, const MultiIndex& beta, int m, int j, int l, int p) {
    if (m < 0) throw std::domain_error("omegaN: negative order");
    const int n = alpha.rank();
    UElem r(n);
    for (int i = 0; i <= m; ++i) {
        Rat c = Rat(binom(m, i));
        if (i % 2 == 1) c = -c;
        MultiIndex a = alpha;
        a.set(j, a[j] + (m - i));
        MultiIndex b = beta;
        b.set(j, b[j] + i);
        UElem term = UElem::gen({a, l}).mul(UElem::gen({b, p}));
        r = r + term.scaled(c);
    }
    return r;
}

UElem omega_shifted(int k, int s, int m) {
    if (k < m - 1)
        throw std::domain_error(
            "omega_shifted: negative t-exponent required; representable range is k >= m-1");
    return omega1(k - m + 1, s + 1, m);
}

}  // namespace wittmod
