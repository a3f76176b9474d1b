#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wittmod/rational.hpp"

namespace wittmod {

/// Sparse exact matrix over Q. Stored entries are nonzero.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, Rat(1));
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void set(std::size_t r, std::size_t c, const Rat& v);
    void add_to(std::size_t r, std::size_t c, const Rat& v);
    Rat get(std::size_t r, std::size_t c) const;

    const std::map<std::pair<std::size_t, std::size_t>, Rat>& entries() const { return e_; }

    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix scaled(const Rat& s) const;
    bool is_zero() const { return e_.empty(); }
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    void check(std::size_t r, std::size_t c) const;
    std::size_t rows_ = 0, cols_ = 0;
    std::map<std::pair<std::size_t, std::size_t>, Rat> e_;
};

inline RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

/// Basis of the right null space; rank(m) + result.size() == cols(m).
std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Exact coefficients c with sum c_i vectors_i == target, or nullopt if not in span.
/// Throws std::invalid_argument on dimension mismatch.
std::optional<std::vector<Rat>> solve_in_span(const std::vector<std::vector<Rat>>& vectors,
                                              const std::vector<Rat>& target);

/// Row space maintained in reduced echelon form; supports incremental insertion,
/// membership tests, and coordinates with respect to the echelon rows.
class RowSpan {
public:
    RowSpan() = default;
    explicit RowSpan(std::size_t ambient) : ambient_(ambient) {}

    /// Returns true if the vector enlarged the span.
    bool insert(std::vector<Rat> v);
    bool contains(const std::vector<Rat>& v) const;
    /// Coordinates of v in terms of rows(); nullopt if v is outside the span.
    std::optional<std::vector<Rat>> coordinates(const std::vector<Rat>& v) const;

    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient() const { return ambient_; }
    const std::vector<std::vector<Rat>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    void reduce(std::vector<Rat>& v) const;
    std::size_t ambient_ = 0;
    std::vector<std::vector<Rat>> rows_;    // RREF, sorted by pivot column
    std::vector<std::size_t> pivots_;
};

}  // namespace wittmod
