#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wittmod/glnmod.hpp"
#include "wittmod/kweight.hpp"
#include "wittmod/lincomb.hpp"
#include "wittmod/report.hpp"
#include "wittmod/witt.hpp"

namespace wittmod {

using Weight = std::vector<Rat>;

/// Basis pair of F(P, M): exponent offset of P plus a basis index of M.
struct FKey {
    std::vector<int> x;
    int m = 0;
    auto operator<=>(const FKey&) const = default;
};

using FVec = LinComb<FKey>;

/// Tensor module F(P, M) = P (x) M with the mixed vector-field action
///   t^a d_j . (g (x) v) = (t^a d_j g) (x) v + sum_i (d_i(t^a) g) (x) E_ij v
/// and the associative A-action t^a . (g (x) v) = (t^a g) (x) v.
class TensorModule {
public:
    using Key = FKey;
    using Vec = FVec;

    TensorModule(KWeightModule p, GlnModule m);

    int rank() const { return n_; }
    const KWeightModule& P() const { return P_; }
    const GlnModule& M() const { return M_; }

    Weight weight(const FKey& k) const;
    Weight weight_of(const FVec& v) const;  // requires homogeneous, throws otherwise

    FVec act_wgen(const MultiIndex& alpha, int j, const FKey& k) const;
    FVec act_agen(const MultiIndex& alpha, const FKey& k) const;
    FVec act_wgen(const MultiIndex& alpha, int j, const FVec& v) const;
    FVec act_agen(const MultiIndex& alpha, const FVec& v) const;
    FVec act_tilde(const TildeElem& x, const FVec& v) const;

    /// Weight of the canonical corner basis pair; default window center.
    Weight default_center() const;

private:
    KWeightModule P_;
    GlnModule M_;
    int n_;
};

/// Materialized box of weight spaces: all basis pairs whose weight lies in
/// |w_i - center_i| <= radius for every i. Keeps a reference to the module,
/// which must outlive the window.
class WeightWindow {
public:
    WeightWindow(const TensorModule& f, Weight center, int radius);

    const TensorModule& module() const { return *mod_; }
    const Weight& center() const { return center_; }
    int radius() const { return radius_; }
    bool in_box(const Weight& w, int r) const;
    bool in_box(const Weight& w) const { return in_box(w, radius_); }

    const std::map<Weight, std::vector<FKey>>& spaces() const { return spaces_; }
    int dim(const Weight& w) const;

    /// Dense coordinates of a homogeneous vector within its weight space.
    /// Throws WindowExceeded if some key is not materialized.
    std::vector<Rat> coords_at(const Weight& w, const FVec& v) const;
    FVec from_coords(const Weight& w, const std::vector<Rat>& coords) const;

private:
    const TensorModule* mod_;
    Weight center_;
    int radius_;
    std::map<Weight, std::vector<FKey>> spaces_;
    std::map<FKey, std::size_t> pos_;
};

/// Exact weight-space dimension of F at nu via the convolution formula
/// dim F_nu = #\{ M basis vectors u : nu - weight(u) in supp(P) \}; independent
/// of window materialization.
int weight_space_dim_formula(const TensorModule& f, const Weight& nu);

/// Per-weight reduced spans of a weight submodule candidate.
class SubspaceByWeight {
public:
    explicit SubspaceByWeight(const WeightWindow& win) : win_(&win) {}

    bool insert(const FVec& v);
    bool contains(const FVec& v) const;
    int dim(const Weight& w) const;
    const std::map<Weight, RowSpan>& spans() const { return spans_; }
    const WeightWindow& window() const { return *win_; }

private:
    const WeightWindow* win_;
    std::map<Weight, RowSpan> spans_;
};

/// The submodule of F(P, ext^l) spanned by d(v (x) u) = sum_i (d_i v) (x) (e_i ^ u),
/// u running over the (l-1)-st exterior power. Requires M to carry the
/// exterior-power basis produced by exterior_power(n, l), l >= 1.
SubspaceByWeight exterior_derivative_image(const TensorModule& f, int l, const WeightWindow& win);

/// Invariance of S under every generator t^alpha d_j with |alpha| <= deg_bound,
/// tested on weights within inner_radius of the center. The window must leave a
/// margin of max(deg_bound, 1); otherwise WindowExceeded is thrown.
CheckReport submodule_closure_check(const TensorModule& f, const SubspaceByWeight& s,
                                    int deg_bound, int inner_radius);

/// [x,y]v = x(yv) - y(xv) plus the associative A-relations, over all generator
/// pairs with |alpha| <= deg_bound, on basis pairs within inner_radius.
CheckReport module_axiom_check(const TensorModule& f, const WeightWindow& win, int deg_bound,
                               int inner_radius);

/// Enumerated weight-space dimensions against the convolution formula, plus the
/// boundedness inequality dim F_nu <= dim M, over the whole window.
CheckReport weight_dim_check(const TensorModule& f, const WeightWindow& win);

/// Reachability probe: from every basis pair in the inner box, the span closure
/// under generators |alpha| <= deg_bound covers every inner weight space at an
/// integer-translate weight. For exterior M the probe instead verifies that a
/// vector inside the derived submodule stays inside it (expected-reducible).
CheckReport simplicity_probe(const TensorModule& f, const WeightWindow& win, int inner_radius,
                             int deg_bound);

/// For M = ext^n: the image of every generator applied to a window weight space
/// lies in the derived submodule plus the zero-weight line.
CheckReport top_exterior_quotient_check(const TensorModule& f, const WeightWindow& win,
                                        int deg_bound, int inner_radius);

enum class QSet { Z, Zplus, Zminus };
enum class HCVerdict { HarishChandra, UnboundedMultiplicity };

QSet parse_qset(const std::string& s);
std::string qset_str(QSet q);

/// Number of i in Q3 with |i| <= R, k'-i in Q1, l'+i in Q2 (all within [-R, R]).
long hc_count_solutions(QSet q1, QSet q2, QSet q3, int kp, int lp, int radius);

/// Finiteness of the weight-multiplicity fibers for the rank-2 support data
/// (Q1, Q2, Q3), decided by interval analysis and cross-checked by brute-force
/// counting with escalating radius. Throws std::logic_error if the two disagree.
HCVerdict hc_classify_n2(QSet q1, QSet q2, QSet q3);

/// CSV table: one row per materialized weight, columns w1..wn (exact p/q), dim.
std::string support_csv(const TensorModule& f, const WeightWindow& win);

/// 2-D lattice diagram for n = 2: filled cells are support points, grayscale by
/// multiplicity, 24 px cells, origin at the lower left.
std::string support_svg(const TensorModule& f, const WeightWindow& win);

/// JSON dump {schema, P, M, window, weight_dims}.
std::string module_json(const TensorModule& f, const WeightWindow& win, const std::string& pspec,
                        const std::string& mspec);

}  // namespace wittmod
