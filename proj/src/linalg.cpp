#include "wittmod/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace wittmod {

void RatMatrix::check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("RatMatrix index out of bounds");
}

void RatMatrix::set(std::size_t r, std::size_t c, const Rat& v) {
    check(r, c);
    if (v.is_zero())
        e_.erase({r, c});
    else
        e_[{r, c}] = v;
}

void RatMatrix::add_to(std::size_t r, std::size_t c, const Rat& v) {
    check(r, c);
    if (v.is_zero()) return;
    auto [it, fresh] = e_.try_emplace({r, c}, v);
    if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) e_.erase(it);
    }
}

Rat RatMatrix::get(std::size_t r, std::size_t c) const {
    check(r, c);
    auto it = e_.find({r, c});
    return it == e_.end() ? Rat(0) : it->second;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    RatMatrix m(*this);
    for (const auto& [rc, v] : o.e_) m.add_to(rc.first, rc.second, v);
    return m;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    RatMatrix m(*this);
    for (const auto& [rc, v] : o.e_) m.add_to(rc.first, rc.second, -v);
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    RatMatrix m(rows_, o.cols_);
    for (const auto& [rc, v] : e_)
        for (const auto& [rc2, w] : o.e_)
            if (rc.second == rc2.first) m.add_to(rc.first, rc2.second, v * w);
    return m;
}

RatMatrix RatMatrix::scaled(const Rat& s) const {
    RatMatrix m(rows_, cols_);
    if (s.is_zero()) return m;
    for (const auto& [rc, v] : e_) m.set(rc.first, rc.second, v * s);
    return m;
}

namespace {

/// Dense RREF; returns pivot column per reduced row.
std::vector<std::size_t> rref(std::vector<std::vector<Rat>>& a) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    const std::size_t cols = a[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t sel = row;
        while (sel < a.size() && a[sel][col].is_zero()) ++sel;
        if (sel == a.size()) continue;
        std::swap(a[row], a[sel]);
        Rat inv = Rat(1) / a[row][col];
        for (std::size_t c = col; c < cols; ++c) a[row][c] *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            Rat f = a[r][col];
            for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<Rat>> densify(const RatMatrix& m) {
    std::vector<std::vector<Rat>> a(m.rows(), std::vector<Rat>(m.cols(), Rat(0)));
    for (const auto& [rc, v] : m.entries()) a[rc.first][rc.second] = v;
    return a;
}

}  // namespace

std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m) {
    auto a = densify(m);
    auto pivots = rref(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(m.cols(), Rat(0));
        v[free] = Rat(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const RatMatrix& m) {
    auto a = densify(m);
    return rref(a).size();
}

std::optional<std::vector<Rat>> solve_in_span(const std::vector<std::vector<Rat>>& vectors,
                                              const std::vector<Rat>& target) {
    const std::size_t len = target.size();
    for (const auto& v : vectors)
        if (v.size() != len) throw std::invalid_argument("solve_in_span: dimension mismatch");
    // augmented system [vectors as columns | target]
    std::vector<std::vector<Rat>> a(len, std::vector<Rat>(vectors.size() + 1, Rat(0)));
    for (std::size_t j = 0; j < vectors.size(); ++j)
        for (std::size_t i = 0; i < len; ++i) a[i][j] = vectors[j][i];
    for (std::size_t i = 0; i < len; ++i) a[i][vectors.size()] = target[i];
    auto pivots = rref(a);
    if (!pivots.empty() && pivots.back() == vectors.size()) return std::nullopt;  // inconsistent
    std::vector<Rat> coeffs(vectors.size(), Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) coeffs[pivots[r]] = a[r][vectors.size()];
    return coeffs;
}

void RowSpan::reduce(std::vector<Rat>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rat& f = v[pivots_[r]];
        if (f.is_zero()) continue;
        Rat fac = f;
        for (std::size_t c = 0; c < ambient_; ++c)
            if (!rows_[r][c].is_zero()) v[c] -= fac * rows_[r][c];
    }
}

bool RowSpan::insert(std::vector<Rat> v) {
    if (v.size() != ambient_) throw std::invalid_argument("RowSpan: dimension mismatch");
    reduce(v);
    std::size_t piv = ambient_;
    for (std::size_t c = 0; c < ambient_; ++c)
        if (!v[c].is_zero()) {
            piv = c;
            break;
        }
    if (piv == ambient_) return false;
    Rat inv = Rat(1) / v[piv];
    for (auto& x : v) x *= inv;
    // eliminate the new pivot from existing rows
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Rat f = rows_[r][piv];
        if (f.is_zero()) continue;
        for (std::size_t c = 0; c < ambient_; ++c)
            if (!v[c].is_zero()) rows_[r][c] -= f * v[c];
    }
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    std::size_t pos = static_cast<std::size_t>(it - pivots_.begin());
    pivots_.insert(it, piv);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    return true;
}

bool RowSpan::contains(const std::vector<Rat>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("RowSpan: dimension mismatch");
    std::vector<Rat> w = v;
    reduce(w);
    return std::all_of(w.begin(), w.end(), [](const Rat& x) { return x.is_zero(); });
}

std::optional<std::vector<Rat>> RowSpan::coordinates(const std::vector<Rat>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("RowSpan: dimension mismatch");
    std::vector<Rat> w = v;
    std::vector<Rat> coords(rows_.size(), Rat(0));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Rat f = w[pivots_[r]];
        if (f.is_zero()) continue;
        coords[r] = f;
        for (std::size_t c = 0; c < ambient_; ++c)
            if (!rows_[r][c].is_zero()) w[c] -= f * rows_[r][c];
    }
    if (!std::all_of(w.begin(), w.end(), [](const Rat& x) { return x.is_zero(); }))
        return std::nullopt;
    return coords;
}

}  // namespace wittmod
