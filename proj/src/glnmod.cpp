#include "wittmod/glnmod.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wittmod {

GlnModule::GlnModule(int n, int dim)
    : n_(n),
      dim_(dim),
      E_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
         RatMatrix(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim))),
      weights_(static_cast<std::size_t>(dim), std::vector<Rat>(static_cast<std::size_t>(n), Rat(0))) {}

void GlnModule::finalize() {
    cols_.assign(E_.size(), {});
    for (std::size_t k = 0; k < E_.size(); ++k) {
        cols_[k].assign(static_cast<std::size_t>(dim_), {});
        for (const auto& [rc, v] : E_[k].entries())
            cols_[k][rc.second].push_back({static_cast<int>(rc.first), v});
    }
}

GlnModule exterior_power(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("exterior_power: k out of range");
    // sorted k-subsets of {0..n-1} in lex order
    std::vector<std::vector<int>> basis;
    std::vector<int> cur(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == k) {
            basis.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur[static_cast<std::size_t>(depth)] = v;
            self(self, v + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);

    GlnModule m(n, static_cast<int>(basis.size()));
    for (std::size_t bi = 0; bi < basis.size(); ++bi) {
        const auto& s = basis[bi];
        std::vector<Rat> w(static_cast<std::size_t>(n), Rat(0));
        for (int v : s) w[static_cast<std::size_t>(v)] = Rat(1);
        m.set_weight(static_cast<int>(bi), std::move(w));
        for (int j : s) {
            for (int i = 0; i < n; ++i) {
                if (i != j && std::find(s.begin(), s.end(), i) != s.end()) continue;
                // replace j by i, resort, track the sign
                std::vector<int> t;
                t.reserve(s.size());
                for (int x : s)
                    if (x != j) t.push_back(x);
                auto it = std::lower_bound(t.begin(), t.end(), i);
                int pos_new = static_cast<int>(it - t.begin());
                int pos_old = static_cast<int>(std::find(s.begin(), s.end(), j) - s.begin());
                t.insert(it, i);
                int sign = ((pos_old + pos_new) % 2 == 0) ? 1 : -1;
                m.e(i, j).add_to(static_cast<std::size_t>(index.at(t)), bi, Rat(sign));
            }
        }
    }
    m.finalize();
    return m;
}

namespace {

GlnModule tensor_product(const GlnModule& a, const GlnModule& b) {
    const int n = a.n();
    if (n != b.n()) throw std::invalid_argument("tensor_product: rank mismatch");
    GlnModule m(n, a.dim() * b.dim());
    const std::size_t db = static_cast<std::size_t>(b.dim());
    for (int p = 0; p < a.dim(); ++p)
        for (int q = 0; q < b.dim(); ++q) {
            std::vector<Rat> w = a.weight(p);
            for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] += b.weight(q)[static_cast<std::size_t>(i)];
            m.set_weight(static_cast<int>(static_cast<std::size_t>(p) * db + static_cast<std::size_t>(q)), std::move(w));
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto& target = m.e(i, j);
            for (const auto& [rc, v] : a.e(i, j).entries())
                for (std::size_t q = 0; q < db; ++q)
                    target.add_to(rc.first * db + q, rc.second * db + q, v);
            for (const auto& [rc, v] : b.e(i, j).entries())
                for (int p = 0; p < a.dim(); ++p)
                    target.add_to(static_cast<std::size_t>(p) * db + rc.first,
                                  static_cast<std::size_t>(p) * db + rc.second, v);
        }
    m.finalize();
    return m;
}

using SparseVec = std::map<std::size_t, Rat>;

SparseVec apply_e_sparse(const GlnModule& m, int i, int j, const SparseVec& v) {
    SparseVec out;
    for (const auto& [idx, c] : v)
        for (const auto& [row, e] : m.e_column(i, j, static_cast<int>(idx))) {
            auto [it, fresh] = out.try_emplace(static_cast<std::size_t>(row), c * e);
            if (!fresh) {
                it->second += c * e;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

struct Bucket {
    std::vector<std::size_t> members;
    std::map<std::size_t, std::size_t> pos;
    RowSpan span;
};

/// Cyclic span of big[start] under the simple lowering operators E_{i+1,i},
/// restricted to a weight-module basis organized by weight.
GlnModule extract_cyclic_lowering_submodule(const GlnModule& big, std::size_t start) {
    const int n = big.n();
    std::map<std::vector<Rat>, Bucket> buckets;
    for (int v = 0; v < big.dim(); ++v) {
        auto& b = buckets[big.weight(v)];
        b.pos[static_cast<std::size_t>(v)] = b.members.size();
        b.members.push_back(static_cast<std::size_t>(v));
    }
    for (auto& [w, b] : buckets) b.span = RowSpan(b.members.size());

    auto to_local = [&](const Bucket& b, const SparseVec& v) {
        std::vector<Rat> dense(b.members.size(), Rat(0));
        for (const auto& [idx, c] : v) dense[b.pos.at(idx)] = c;
        return dense;
    };

    auto weight_of = [&](const SparseVec& v) { return big.weight(static_cast<int>(v.begin()->first)); };

    std::vector<SparseVec> worklist;
    SparseVec seed{{start, Rat(1)}};
    buckets.at(weight_of(seed)).span.insert(to_local(buckets.at(weight_of(seed)), seed));
    worklist.push_back(seed);
    while (!worklist.empty()) {
        SparseVec v = std::move(worklist.back());
        worklist.pop_back();
        for (int i = 0; i + 1 < n; ++i) {
            SparseVec img = apply_e_sparse(big, i + 1, i, v);
            if (img.empty()) continue;
            auto& b = buckets.at(weight_of(img));
            if (b.span.insert(to_local(b, img))) worklist.push_back(std::move(img));
        }
    }

    // assemble the submodule basis, bucket by bucket
    int dim = 0;
    std::map<const Bucket*, int> base_index;
    std::vector<const Bucket*> order;
    for (auto& [w, b] : buckets) {
        if (b.span.dim() == 0) continue;
        base_index[&b] = dim;
        order.push_back(&b);
        dim += static_cast<int>(b.span.dim());
    }

    GlnModule sub(n, dim);
    for (auto& [w, b] : buckets) {
        if (b.span.dim() == 0) continue;
        int base = base_index.at(&b);
        for (std::size_t r = 0; r < b.span.dim(); ++r)
            sub.set_weight(base + static_cast<int>(r), w);
    }
    for (const Bucket* bp : order) {
        const Bucket& b = *bp;
        int base = base_index.at(bp);
        for (std::size_t r = 0; r < b.span.dim(); ++r) {
            SparseVec vec;
            for (std::size_t c = 0; c < b.members.size(); ++c)
                if (!b.span.rows()[r][c].is_zero()) vec[b.members[c]] = b.span.rows()[r][c];
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    SparseVec img = apply_e_sparse(big, i, j, vec);
                    if (img.empty()) continue;
                    auto tb = buckets.find(weight_of(img));
                    if (tb == buckets.end() || tb->second.span.dim() == 0)
                        throw std::logic_error("cyclic span is not E-invariant");
                    auto coords = tb->second.span.coordinates(to_local(tb->second, img));
                    if (!coords)
                        throw std::logic_error("cyclic span is not E-invariant");
                    int tbase = base_index.at(&tb->second);
                    for (std::size_t tr = 0; tr < coords->size(); ++tr)
                        sub.e(i, j).add_to(static_cast<std::size_t>(tbase) + tr,
                                           static_cast<std::size_t>(base) + r, (*coords)[tr]);
                }
        }
    }
    sub.finalize();
    return sub;
}

}  // namespace

BigInt weyl_dimension(const std::vector<int>& psi) {
    const int n = static_cast<int>(psi.size()) + 1;
    BigInt num = 1, den = 1;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            int s = 0;
            for (int k = i; k < j; ++k) s += psi[static_cast<std::size_t>(k - 1)];
            num *= (s + j - i);
            den *= (j - i);
        }
    return num / den;
}

GlnModule highest_weight_module(const HighestWeightSpec& spec) {
    const int n = static_cast<int>(spec.psi.size()) + 1;
    for (int a : spec.psi)
        if (a < 0) throw std::invalid_argument("highest_weight_module: negative label");
    GlnModule acc = exterior_power(n, 0);
    int ktot = 0;
    for (int i = 0; i < n - 1; ++i)
        for (int rep = 0; rep < spec.psi[static_cast<std::size_t>(i)]; ++rep) {
            acc = tensor_product(acc, exterior_power(n, i + 1));
            ktot += i + 1;
        }
    GlnModule sub = extract_cyclic_lowering_submodule(acc, 0);
    if (BigInt(sub.dim()) != weyl_dimension(spec.psi))
        throw std::logic_error("highest_weight_module: dimension differs from the Weyl formula");
    // shift so the identity matrix acts by b
    Rat c = (spec.b - Rat(ktot)) / Rat(n);
    if (!c.is_zero()) {
        for (int i = 0; i < n; ++i)
            for (int v = 0; v < sub.dim(); ++v)
                sub.e(i, i).add_to(static_cast<std::size_t>(v), static_cast<std::size_t>(v), c);
        for (int v = 0; v < sub.dim(); ++v) {
            auto w = sub.weight(v);
            for (auto& x : w) x += c;
            sub.set_weight(v, std::move(w));
        }
        sub.finalize();
    }
    return sub;
}

GlnClass classify_case(const GlnModule& m) {
    for (int l = 0; l <= m.n(); ++l) {
        GlnModule ext = exterior_power(m.n(), l);
        if (ext.dim() != m.dim()) continue;
        auto a = m.weights();
        auto b = ext.weights();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a == b) return TrivialOrExterior{l};
    }
    return Generic{};
}

bool is_exterior_class(const GlnClass& c) {
    return std::holds_alternative<TrivialOrExterior>(c);
}

bool gl_relations_hold(const GlnModule& m) {
    const int n = m.n();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    RatMatrix lhs = commutator(m.e(i, j), m.e(k, l));
                    RatMatrix rhs(static_cast<std::size_t>(m.dim()), static_cast<std::size_t>(m.dim()));
                    if (j == k) rhs = rhs + m.e(i, l);
                    if (l == i) rhs = rhs - m.e(k, j);
                    if (!(lhs == rhs)) return false;
                }
    return true;
}

std::string gln_to_json(const GlnModule& m) {
    nlohmann::json j;
    j["n"] = m.n();
    j["dim"] = m.dim();
    auto ws = nlohmann::json::array();
    for (int v = 0; v < m.dim(); ++v) {
        auto w = nlohmann::json::array();
        for (const auto& x : m.weight(v)) w.push_back(x.str());
        ws.push_back(w);
    }
    j["weights"] = ws;
    auto es = nlohmann::json::array();
    for (int i = 0; i < m.n(); ++i)
        for (int k = 0; k < m.n(); ++k) {
            if (m.e(i, k).is_zero()) continue;
            nlohmann::json entry;
            entry["i"] = i + 1;
            entry["j"] = k + 1;
            auto triples = nlohmann::json::array();
            for (const auto& [rc, v] : m.e(i, k).entries())
                triples.push_back({rc.first, rc.second, v.str()});
            entry["entries"] = triples;
            es.push_back(entry);
        }
    j["E"] = es;
    return j.dump();
}

}  // namespace wittmod
