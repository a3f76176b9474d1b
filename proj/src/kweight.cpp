#include "wittmod/kweight.hpp"

#include <sstream>
#include <stdexcept>

namespace wittmod {

namespace {

bool is_integer(const Rat& r) { return r.den() == 1; }

}  // namespace

KWeightModule::KWeightModule(std::vector<Rank1Factor> factors) : factors_(std::move(factors)) {
    for (const auto& f : factors_)
        if (f.kind == Rank1Kind::LaurentShift && is_integer(f.lambda))
            throw std::invalid_argument("LaurentShift requires a non-integer lambda");
}

bool KWeightModule::in_support(const std::vector<int>& x) const {
    if (x.size() != factors_.size()) throw RankMismatch("KWeightModule: exponent rank mismatch");
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        switch (factors_[i].kind) {
            case Rank1Kind::Poly:
                if (x[i] < 0) return false;
                break;
            case Rank1Kind::Torsion:
                if (x[i] > -1) return false;
                break;
            case Rank1Kind::LaurentShift:
                break;
        }
    }
    return true;
}

void KWeightModule::require_support(const std::vector<int>& x) const {
    if (!in_support(x)) throw std::domain_error("KWeightModule: exponent outside the support");
}

std::vector<Rat> KWeightModule::weight(const std::vector<int>& x) const {
    std::vector<Rat> w(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        w[i] = Rat(x[i]);
        if (factors_[i].kind == Rank1Kind::LaurentShift) w[i] += factors_[i].lambda;
    }
    return w;
}

std::optional<std::pair<Rat, std::vector<int>>> KWeightModule::act_generator(
    const KGen& g, const std::vector<int>& x) const {
    require_support(x);
    const auto& f = factors_[static_cast<std::size_t>(g.dir)];
    auto r = rank1_apply<Rat>(f.kind, f.lambda, g.is_t, x[static_cast<std::size_t>(g.dir)]);
    if (!r || r->first.is_zero()) return std::nullopt;
    std::vector<int> nx = x;
    nx[static_cast<std::size_t>(g.dir)] = r->second;
    return std::pair<Rat, std::vector<int>>{r->first, std::move(nx)};
}

std::optional<std::pair<Rat, std::vector<int>>> KWeightModule::apply_t_power(
    const MultiIndex& alpha, const std::vector<int>& x) const {
    Rat c(1);
    std::vector<int> cur = x;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        for (int rep = 0; rep < alpha[static_cast<int>(i)]; ++rep) {
            auto r = rank1_apply<Rat>(factors_[i].kind, factors_[i].lambda, true, cur[i]);
            if (!r) return std::nullopt;
            c *= r->first;
            cur[i] = r->second;
        }
    return std::pair<Rat, std::vector<int>>{c, std::move(cur)};
}

std::optional<std::pair<Rat, std::vector<int>>> KWeightModule::apply_t_power_d(
    const MultiIndex& alpha, int j, const std::vector<int>& x) const {
    const auto& f = factors_[static_cast<std::size_t>(j)];
    auto r = rank1_apply<Rat>(f.kind, f.lambda, false, x[static_cast<std::size_t>(j)]);
    if (!r || r->first.is_zero()) return std::nullopt;
    std::vector<int> cur = x;
    cur[static_cast<std::size_t>(j)] = r->second;
    auto rt = apply_t_power(alpha, cur);
    if (!rt) return std::nullopt;
    return std::pair<Rat, std::vector<int>>{r->first * rt->first, std::move(rt->second)};
}

std::vector<std::vector<int>> KWeightModule::support_offsets(const std::vector<Rat>& center,
                                                             int radius) const {
    if (center.size() != factors_.size())
        throw RankMismatch("support window: center rank mismatch");
    if (radius < 0) throw std::invalid_argument("support window: negative radius");
    // per coordinate, integers x with |x + shift - c| <= radius and x in the factor support
    std::vector<std::vector<int>> per;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        Rat shift = factors_[i].kind == Rank1Kind::LaurentShift ? factors_[i].lambda : Rat(0);
        std::vector<int> xs;
        // x in [c - r - shift, c + r - shift]
        Rat lo = center[i] - Rat(radius) - shift;
        Rat hi = center[i] + Rat(radius) - shift;
        // ceil(lo) .. floor(hi) over exact rationals
        BigInt lo_i = lo.num() >= 0 ? (lo.num() + lo.den() - 1) / lo.den() : lo.num() / lo.den();
        if (Rat(lo_i) < lo) lo_i += 1;
        BigInt hi_i = hi.num() >= 0 ? hi.num() / hi.den() : -((-hi.num() + hi.den() - 1) / hi.den());
        if (Rat(hi_i) > hi) hi_i -= 1;
        for (BigInt v = lo_i; v <= hi_i; ++v) {
            int x = static_cast<int>(v);
            bool ok = true;
            if (factors_[i].kind == Rank1Kind::Poly && x < 0) ok = false;
            if (factors_[i].kind == Rank1Kind::Torsion && x > -1) ok = false;
            if (ok) xs.push_back(x);
        }
        per.push_back(std::move(xs));
    }
    std::vector<std::vector<int>> out{{}};
    for (const auto& xs : per) {
        std::vector<std::vector<int>> next;
        next.reserve(out.size() * xs.size());
        for (const auto& partial : out)
            for (int v : xs) {
                auto p = partial;
                p.push_back(v);
                next.push_back(std::move(p));
            }
        out = std::move(next);
    }
    return out;
}

std::vector<std::vector<Rat>> KWeightModule::support_window(const std::vector<Rat>& center,
                                                            int radius) const {
    std::vector<std::vector<Rat>> out;
    for (const auto& x : support_offsets(center, radius)) out.push_back(weight(x));
    return out;
}

std::vector<int> KWeightModule::corner() const {
    std::vector<int> x(factors_.size(), 0);
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (factors_[i].kind == Rank1Kind::Torsion) x[i] = -1;
    return x;
}

KWeightModule KWeightModule::parse(const std::string& spec) {
    std::vector<Rank1Factor> factors;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "poly") {
            factors.push_back({Rank1Kind::Poly, Rat(0)});
        } else if (item == "torsion") {
            factors.push_back({Rank1Kind::Torsion, Rat(0)});
        } else if (item.rfind("laurent:", 0) == 0) {
            factors.push_back({Rank1Kind::LaurentShift, Rat::parse(item.substr(8))});
        } else {
            throw std::invalid_argument("bad K-module factor: '" + item + "'");
        }
    }
    if (factors.empty()) throw std::invalid_argument("empty K-module spec");
    return KWeightModule(std::move(factors));
}

std::string KWeightModule::str() const {
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += ",";
        switch (factors_[i].kind) {
            case Rank1Kind::Poly: out += "poly"; break;
            case Rank1Kind::Torsion: out += "torsion"; break;
            case Rank1Kind::LaurentShift: out += "laurent:" + factors_[i].lambda.str(); break;
        }
    }
    return out;
}

}  // namespace wittmod
