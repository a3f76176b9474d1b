#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wittmod/glnmod.hpp"

using namespace wittmod;

namespace {

// test-side dimension oracle, written independently of the library formula
long dim_oracle(const std::vector<int>& labels) {
    const int n = static_cast<int>(labels.size()) + 1;
    // partial sums trick: lam_i = labels_i + ... (strictly decreasing sequence), dim =
    // prod (lam_i - lam_j + j - i)/(j - i) over i<j with lam from the label suffix sums
    std::vector<long> lam(static_cast<std::size_t>(n), 0);
    for (int i = n - 2; i >= 0; --i)
        lam[static_cast<std::size_t>(i)] =
            lam[static_cast<std::size_t>(i) + 1] + labels[static_cast<std::size_t>(i)];
    double prod = 1.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            prod *= static_cast<double>(lam[static_cast<std::size_t>(i)] -
                                        lam[static_cast<std::size_t>(j)] + j - i) /
                    static_cast<double>(j - i);
    return std::lround(prod);
}

}  // namespace

TEST_CASE("exterior powers") {
    SUBCASE("natural module at n=2") {
        GlnModule m = exterior_power(2, 1);
        CHECK(m.dim() == 2);
        CHECK(m.e(0, 0).get(0, 0) == Rat(1));  // E11 e1 = e1
        CHECK(m.e(1, 0).get(1, 0) == Rat(1));  // E21 e1 = e2
        CHECK(m.e(1, 0).get(0, 0) == Rat(0));
    }
    SUBCASE("dimension is n choose k") {
        CHECK(exterior_power(3, 2).dim() == 3);
        CHECK(exterior_power(4, 2).dim() == 6);
        CHECK(exterior_power(3, 0).dim() == 1);
    }
    SUBCASE("top power at n=2") {
        GlnModule m = exterior_power(2, 2);
        CHECK(m.dim() == 1);
        // E12 (e1^e2) = e1^e1 = 0, E11 (e1^e2) = e1^e2
        CHECK(m.e(0, 1).is_zero());
        CHECK(m.e(0, 0).get(0, 0) == Rat(1));
    }
    SUBCASE("k out of range") {
        CHECK_THROWS_AS(exterior_power(2, 3), std::invalid_argument);
        CHECK_THROWS_AS(exterior_power(2, -1), std::invalid_argument);
    }
    SUBCASE("weights are 0/1 vectors of weight k with multiplicity one") {
        GlnModule m = exterior_power(4, 2);
        std::set<std::vector<Rat>> seen;
        for (int v = 0; v < m.dim(); ++v) {
            Rat sum(0);
            for (const auto& x : m.weight(v)) {
                CHECK((x == Rat(0) || x == Rat(1)));
                sum += x;
            }
            CHECK(sum == Rat(2));
            CHECK(seen.insert(m.weight(v)).second);
        }
    }
}

TEST_CASE("gl commutation relations hold on constructed modules") {
    CHECK(gl_relations_hold(exterior_power(2, 1)));
    CHECK(gl_relations_hold(exterior_power(3, 2)));
    CHECK(gl_relations_hold(exterior_power(4, 3)));
    CHECK(gl_relations_hold(highest_weight_module({{2}, Rat(5, 2)})));
    CHECK(gl_relations_hold(highest_weight_module({{1, 1}, Rat(0)})));
}

TEST_CASE("highest weight modules") {
    SUBCASE("psi = delta_1, b = 1 is the natural module") {
        GlnModule m = highest_weight_module({{1}, Rat(1)});
        CHECK(m.dim() == 2);
        auto cls = classify_case(m);
        REQUIRE(is_exterior_class(cls));
        CHECK(std::get<TrivialOrExterior>(cls).l == 1);
    }
    SUBCASE("psi = 2 delta_1 at n=2 is the 3-dimensional symmetric square") {
        GlnModule m = highest_weight_module({{2}, Rat(7)});
        CHECK(m.dim() == 3);
        CHECK(dim_oracle({2}) == 3);
        CHECK(is_exterior_class(classify_case(m)) == false);
    }
    SUBCASE("psi(h1) = psi(h2) = 1 at n=3 has dimension 8") {
        GlnModule m = highest_weight_module({{1, 1}, Rat(3)});
        CHECK(m.dim() == 8);
        CHECK(dim_oracle({1, 1}) == 8);
    }
    SUBCASE("identity acts by b") {
        GlnModule m = highest_weight_module({{2, 0, 1}, Rat(1, 3)});
        RatMatrix id(static_cast<std::size_t>(m.dim()), static_cast<std::size_t>(m.dim()));
        for (int i = 0; i < m.n(); ++i) id = id + m.e(i, i);
        CHECK(id == RatMatrix::identity(static_cast<std::size_t>(m.dim())).scaled(Rat(1, 3)));
    }
    SUBCASE("n = 1 convention: every module is one-dimensional with scalar b") {
        GlnModule m = highest_weight_module({{}, Rat(5, 3)});
        CHECK(m.n() == 1);
        CHECK(m.dim() == 1);
        CHECK(m.e(0, 0).get(0, 0) == Rat(5, 3));
        CHECK(m.weight(0)[0] == Rat(5, 3));
    }
}

TEST_CASE("dimension matches the Weyl formula for all small labels") {
    for (int n = 2; n <= 4; ++n) {
        std::vector<std::vector<int>> labelsets;
        // all labels with sum <= 4
        std::vector<int> cur(static_cast<std::size_t>(n - 1), 0);
        auto rec = [&](auto&& self, int pos, int remaining) -> void {
            if (pos == n - 1) {
                labelsets.push_back(cur);
                return;
            }
            for (int v = 0; v <= remaining; ++v) {
                cur[static_cast<std::size_t>(pos)] = v;
                self(self, pos + 1, remaining - v);
            }
        };
        rec(rec, 0, n == 4 ? 3 : 4);
        for (const auto& labels : labelsets) {
            GlnModule m = highest_weight_module({labels, Rat(1)});
            CHECK(BigInt(m.dim()) == weyl_dimension(labels));
            CHECK(m.dim() == dim_oracle(labels));
        }
    }
}

TEST_CASE("basis vectors are simultaneous eigenvectors of the diagonal") {
    GlnModule m = highest_weight_module({{1, 1}, Rat(2)});
    for (int i = 0; i < m.n(); ++i) {
        // E_ii column v must be weight(v)[i] * e_v
        for (int v = 0; v < m.dim(); ++v) {
            for (const auto& [row, c] : m.e_column(i, i, v)) {
                CHECK(row == v);
                CHECK(c == m.weight(v)[static_cast<std::size_t>(i)]);
            }
        }
    }
}

TEST_CASE("classification against exterior powers") {
    CHECK(is_exterior_class(classify_case(exterior_power(3, 0))));
    CHECK(is_exterior_class(classify_case(exterior_power(3, 3))));
    CHECK(std::get<TrivialOrExterior>(classify_case(exterior_power(3, 3))).l == 3);
    // natural module constructed the highest-weight way is still recognized
    auto cls = classify_case(highest_weight_module({{1, 0}, Rat(1)}));
    REQUIRE(is_exterior_class(cls));
    CHECK(std::get<TrivialOrExterior>(cls).l == 1);
    // wrong scalar b breaks the isomorphism
    CHECK_FALSE(is_exterior_class(classify_case(highest_weight_module({{1, 0}, Rat(2)}))));
    CHECK_FALSE(is_exterior_class(classify_case(highest_weight_module({{2}, Rat(2)}))));
}

TEST_CASE("json dump is well-formed") {
    std::string j = gln_to_json(exterior_power(2, 1));
    CHECK(j.find("\"n\":2") != std::string::npos);
    CHECK(j.find("\"dim\":2") != std::string::npos);
}
