#pragma once

#include <string>
#include <variant>
#include <vector>

#include "wittmod/linalg.hpp"
#include "wittmod/rational.hpp"

namespace wittmod {

/// Finite-dimensional weight gl_n module with explicit E_ij matrices.
/// Basis vectors are simultaneous eigenvectors of all E_ii; weights[v] lists
/// the eigenvalue vector of basis vector v.
class GlnModule {
public:
    GlnModule() = default;
    GlnModule(int n, int dim);

    int n() const { return n_; }
    int dim() const { return dim_; }
    const RatMatrix& e(int i, int j) const { return E_[idx(i, j)]; }
    RatMatrix& e(int i, int j) { return E_[idx(i, j)]; }
    const std::vector<Rat>& weight(int basis) const {
        return weights_[static_cast<std::size_t>(basis)];
    }
    const std::vector<std::vector<Rat>>& weights() const { return weights_; }
    void set_weight(int basis, std::vector<Rat> w) {
        weights_[static_cast<std::size_t>(basis)] = std::move(w);
    }

    /// Column of E_ij as (row, coeff) pairs; cache built by finalize().
    const std::vector<std::pair<int, Rat>>& e_column(int i, int j, int col) const {
        return cols_[idx(i, j)][static_cast<std::size_t>(col)];
    }

    /// Build the column cache; call after the E matrices are filled.
    void finalize();

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j);
    }
    int n_ = 0, dim_ = 0;
    std::vector<RatMatrix> E_;
    std::vector<std::vector<Rat>> weights_;
    std::vector<std::vector<std::vector<std::pair<int, Rat>>>> cols_;
};

/// k-th exterior power of the natural module; basis = sorted k-subsets in lex
/// order; k = 0 gives the one-dimensional module with zero action.
GlnModule exterior_power(int n, int k);

/// Dominant integral sl_n highest weight (values psi(h_i), i = 1..n-1) plus the
/// scalar b by which the identity matrix acts.
struct HighestWeightSpec {
    std::vector<int> psi;  // n-1 nonnegative integers; empty means n = 1
    Rat b;
};

/// The simple module V(psi, b), realized as the cyclic span of the top vector
/// inside a tensor product of exterior powers, then shifted so I acts by b.
/// Throws std::invalid_argument on negative labels and std::logic_error if the
/// construction fails internal dimension validation.
GlnModule highest_weight_module(const HighestWeightSpec& spec);

/// Weyl dimension formula for sl_n labels (independent of the construction).
BigInt weyl_dimension(const std::vector<int>& psi);

struct TrivialOrExterior {
    int l = 0;
};
struct Generic {};
using GlnClass = std::variant<TrivialOrExterior, Generic>;

/// Detect whether M is one of the exterior powers (including the trivial l=0)
/// by exact dimension and weight-multiset comparison.
GlnClass classify_case(const GlnModule& m);

bool is_exterior_class(const GlnClass& c);

/// Exact check of [E_ij, E_kl] = d_jk E_il - d_li E_kj on all index tuples.
bool gl_relations_hold(const GlnModule& m);

/// {n, dim, weights, E as sparse triples}; indices serialized 1-based.
std::string gln_to_json(const GlnModule& m);

}  // namespace wittmod
