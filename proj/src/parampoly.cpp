#include "wittmod/parampoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wittmod {

namespace {

std::vector<std::string> merge_params(const std::vector<std::string>& a,
                                      const std::vector<std::string>& b) {
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

std::map<std::vector<int>, Rat> ParamPoly::align(const ParamPoly& p,
                                                 const std::vector<std::string>& target) {
    std::vector<std::size_t> pos(p.params_.size());
    for (std::size_t i = 0; i < p.params_.size(); ++i) {
        auto it = std::lower_bound(target.begin(), target.end(), p.params_[i]);
        pos[i] = static_cast<std::size_t>(it - target.begin());
    }
    std::map<std::vector<int>, Rat> out;
    for (const auto& [e, c] : p.terms_) {
        std::vector<int> ne(target.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        out[std::move(ne)] = c;
    }
    return out;
}

void ParamPoly::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
    // drop parameters that no term uses
    std::vector<bool> used(params_.size(), false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
    std::vector<std::string> np;
    for (std::size_t i = 0; i < params_.size(); ++i)
        if (used[i]) np.push_back(params_[i]);
    std::map<std::vector<int>, Rat> nt;
    for (const auto& [e, c] : terms_) {
        std::vector<int> ne;
        ne.reserve(np.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            if (used[i]) ne.push_back(e[i]);
        nt[std::move(ne)] = c;
    }
    params_ = std::move(np);
    terms_ = std::move(nt);
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    auto target = merge_params(params_, o.params_);
    auto mine = align(*this, target);
    for (auto& [e, c] : align(o, target)) {
        auto [it, fresh] = mine.try_emplace(e, c);
        if (!fresh) it->second += c;
    }
    params_ = std::move(target);
    terms_ = std::move(mine);
    normalize();
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    *this += -o;
    return *this;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    auto target = merge_params(a.params_, b.params_);
    auto ta = ParamPoly::align(a, target);
    auto tb = ParamPoly::align(b, target);
    ParamPoly out;
    out.params_ = target;
    for (const auto& [ea, ca] : ta)
        for (const auto& [eb, cb] : tb) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto [it, fresh] = out.terms_.try_emplace(std::move(e), ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    out.normalize();
    return out;
}

ParamPoly operator*(const ParamPoly& a, const Rat& s) {
    if (s.is_zero()) return ParamPoly{};
    ParamPoly r(a);
    for (auto& [e, c] : r.terms_) c *= s;
    return r;
}

Rat ParamPoly::eval(const std::map<std::string, Rat>& values) const {
    std::vector<Rat> vals;
    vals.reserve(params_.size());
    for (const auto& p : params_) {
        auto it = values.find(p);
        if (it == values.end()) throw std::invalid_argument("ParamPoly::eval: missing value for " + p);
        vals.push_back(it->second);
    }
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= vals[i];
        acc += t;
    }
    return acc;
}

std::string ParamPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
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
        std::ostringstream vars;
        bool has_var = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (has_var) vars << "*";
            vars << params_[i];
            if (e[i] > 1) vars << "^" << e[i];
            has_var = true;
        }
        if (!has_var)
            os << coeff.str();
        else if (coeff == Rat(1))
            os << vars.str();
        else
            os << coeff.str() << "*" << vars.str();
    }
    return os.str();
}

}  // namespace wittmod
