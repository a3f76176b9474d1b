#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wittmod/rational.hpp"

namespace wittmod {

/// Multivariate polynomial over Q in named formal parameters.
/// Canonical form: parameter list sorted, parameters appearing in no term are dropped,
/// zero coefficients are never stored. A parameter-free polynomial round-trips to Rat.
class ParamPoly {
public:
    ParamPoly() = default;
    ParamPoly(int c) : ParamPoly(Rat(c)) {}
    explicit ParamPoly(const Rat& c) {
        if (!c.is_zero()) terms_[{}] = c;
    }

    static ParamPoly var(const std::string& name) {
        ParamPoly p;
        p.params_ = {name};
        p.terms_[{1}] = Rat(1);
        return p;
    }

    const std::vector<std::string>& params() const { return params_; }
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::optional<Rat> as_rational() const {
        if (terms_.empty()) return Rat(0);
        if (params_.empty()) return terms_.begin()->second;
        return std::nullopt;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int t = 0;
            for (int x : e) t += x;
            if (t > d) d = t;
        }
        return d;
    }

    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { a += b; return a; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { a -= b; return a; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    ParamPoly& operator*=(const ParamPoly& o) { *this = *this * o; return *this; }
    ParamPoly operator-() const;
    friend ParamPoly operator*(const ParamPoly& a, const Rat& s);

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
        return a.params_ == b.params_ && a.terms_ == b.terms_;
    }

    /// Substitute every parameter; throws std::invalid_argument if one is missing.
    Rat eval(const std::map<std::string, Rat>& values) const;

    std::string str() const;

private:
    void normalize();
    /// Reindex exponents onto a parameter superset.
    static std::map<std::vector<int>, Rat> align(const ParamPoly& p,
                                                 const std::vector<std::string>& target);

    std::vector<std::string> params_;
    std::map<std::vector<int>, Rat> terms_;
};

inline bool scalar_is_zero(const ParamPoly& p) { return p.is_zero(); }

}  // namespace wittmod
