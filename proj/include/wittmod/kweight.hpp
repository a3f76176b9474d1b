#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wittmod/multiindex.hpp"
#include "wittmod/rational.hpp"

namespace wittmod {

/// The three simple weight module types of C[t_i, d_i] on one coordinate:
/// LaurentShift = t^lambda C[t, 1/t] (lambda not an integer), Poly = C[t],
/// Torsion = C[t, 1/t] / C[t] with support {-1, -2, ...}.
enum class Rank1Kind { LaurentShift, Poly, Torsion };

struct Rank1Factor {
    Rank1Kind kind = Rank1Kind::Poly;
    Rat lambda;  // LaurentShift only; must not be an integer
};

/// One t_i / d_i application on a single coordinate with exponent offset x.
/// For LaurentShift the basis exponent is lambda + x; for the others it is x.
/// Returns nullopt when the vector is killed. The scalar type is generic so that
/// lambda can be a formal ParamPoly when a polynomial-identity check is wanted.
template <class K>
std::optional<std::pair<K, int>> rank1_apply(Rank1Kind kind, const K& lambda, bool is_t, int x) {
    if (is_t) {
        if (kind == Rank1Kind::Torsion && x + 1 > -1) return std::nullopt;
        return std::pair<K, int>{K(1), x + 1};
    }
    switch (kind) {
        case Rank1Kind::LaurentShift: {
            K c = lambda + K(x);
            return std::pair<K, int>{std::move(c), x - 1};
        }
        case Rank1Kind::Poly:
            if (x == 0) return std::nullopt;
            return std::pair<K, int>{K(x), x - 1};
        case Rank1Kind::Torsion:
            return std::pair<K, int>{K(x), x - 1};
    }
    return std::nullopt;
}

/// Generator of the Weyl algebra acting on a weight module: t_i or d_i.
struct KGen {
    bool is_t = true;
    int dir = 0;
};

/// Simple weight module of the Weyl algebra K_n^+ as a tensor product of
/// rank-1 factors; basis indexed by integer exponent offsets.
class KWeightModule {
public:
    explicit KWeightModule(std::vector<Rank1Factor> factors);

    int rank() const { return static_cast<int>(factors_.size()); }
    const std::vector<Rank1Factor>& factors() const { return factors_; }

    bool in_support(const std::vector<int>& x) const;
    void require_support(const std::vector<int>& x) const;

    /// Weight (= exponent) of a basis point, entry i equal to x_i plus the
    /// LaurentShift lambda_i when present.
    std::vector<Rat> weight(const std::vector<int>& x) const;

    /// c * basis(x') = g . basis(x); nullopt when the image is zero.
    /// Throws std::domain_error when x is outside the support.
    std::optional<std::pair<Rat, std::vector<int>>> act_generator(const KGen& g,
                                                                  const std::vector<int>& x) const;

    /// d_j then multiplication by t^alpha (the module action of t^alpha d_j).
    std::optional<std::pair<Rat, std::vector<int>>> apply_t_power_d(const MultiIndex& alpha, int j,
                                                                    const std::vector<int>& x) const;

    /// Multiplication by t^alpha.
    std::optional<std::pair<Rat, std::vector<int>>> apply_t_power(const MultiIndex& alpha,
                                                                  const std::vector<int>& x) const;

    /// All support points (as exact weight vectors) in the box |w_i - center_i| <= radius.
    std::vector<std::vector<Rat>> support_window(const std::vector<Rat>& center, int radius) const;

    /// Integer exponent offsets whose weights lie in the box.
    std::vector<std::vector<int>> support_offsets(const std::vector<Rat>& center, int radius) const;

    /// A canonical support point (corner of the support), used to center windows.
    std::vector<int> corner() const;

    /// Factor syntax: `laurent:1/2`, `poly`, `torsion`, comma-joined.
    static KWeightModule parse(const std::string& spec);
    std::string str() const;

private:
    std::vector<Rank1Factor> factors_;
};

}  // namespace wittmod
