#pragma once

#include <map>
#include <utility>

#include "wittmod/rational.hpp"

namespace wittmod {

inline bool scalar_is_zero(const Rat& r) { return r.is_zero(); }

/// Sparse linear combination keyed by Key; zero coefficients are never stored.
template <class Key, class K = Rat>
class LinComb {
public:
    using map_type = std::map<Key, K>;

    LinComb() = default;

    void add(const Key& k, const K& c) {
        if (scalar_is_zero(c)) return;
        auto [it, fresh] = terms_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (scalar_is_zero(it->second)) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }

    LinComb& sub(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }

    template <class S>
    LinComb& add_scaled(const LinComb& o, const S& s) {
        if (scalar_is_zero(K(s))) return *this;
        for (const auto& [k, c] : o.terms_) add(k, c * s);
        return *this;
    }

    template <class S>
    LinComb scaled(const S& s) const {
        LinComb out;
        out.add_scaled(*this, s);
        return out;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const map_type& terms() const { return terms_; }

    K coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? K{} : it->second;
    }

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

private:
    map_type terms_;
};

}  // namespace wittmod
