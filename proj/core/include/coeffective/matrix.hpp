#pragma once

#include <map>
#include <optional>
#include <vector>

#include "coeffective/rational.hpp"

namespace coeffective {

using Vec = std::vector<Rational>;

/// Exact matrix over Q, stored sparsely by column. Absent entries are zero.
/// Values are immutable in spirit: algorithms build a matrix once and then
/// only read it, so sharing across threads is safe.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols);

    static Matrix identity(int n);
    static Matrix from_columns(int rows, const std::vector<Vec>& columns);
    static Matrix from_rows(int cols, const std::vector<Vec>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, const Rational& v);
    void add(int r, int c, const Rational& v);
    Rational get(int r, int c) const;

    const std::map<int, Rational>& column(int c) const { return cols_data_[c]; }

    Vec apply(const Vec& v) const;        // M v
    Matrix multiply(const Matrix& rhs) const;
    Matrix transpose() const;
    Vec column_vec(int c) const;

    bool is_zero() const;
    long nonzero_count() const;

    bool operator==(const Matrix& other) const;

  private:
    int rows_, cols_;
    std::vector<std::map<int, Rational>> cols_data_;
};

/// Rank over Q. Decomposes the support graph into connected components and
/// eliminates each block exactly; the result is independent of that split.
int rank(const Matrix& m);

/// Canonical basis of ker(m): the reduced row echelon basis of the kernel
/// subspace with respect to coordinate order. Count is always cols - rank.
std::vector<Vec> kernel_basis(const Matrix& m);

/// Some x with m x = b, or nullopt when b is not in the column span. The
/// particular solution sets all free coordinates to zero, so it is unique
/// and deterministic; when m is injective it is the only solution.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Reduced row echelon form of the span of the given vectors: a canonical
/// basis (unique for the subspace). Zero vectors drop out.
std::vector<Vec> rref_span(const std::vector<Vec>& vectors, int ambient_dim);

/// Pivot coordinate of each RREF vector (first nonzero position).
std::vector<int> rref_pivots(const std::vector<Vec>& rref_rows);

/// Canonical basis of the column span of m.
std::vector<Vec> column_space_basis(const Matrix& m);

/// A subquotient of Q^ambient: the quotient by span(sub_basis), presented on
/// the coordinate directions missed by the echelon pivots of the subspace.
struct Subquotient {
    int ambient_dim = 0;
    std::vector<Vec> sub_basis;    // RREF of the quotiented subspace
    std::vector<int> sub_pivots;   // pivot coordinates of sub_basis
    std::vector<int> rep_coords;   // non-pivot coordinates, increasing
    Matrix project;                // ambient -> quotient coordinates

    int dim() const { return static_cast<int>(rep_coords.size()); }
    std::vector<Vec> rep_basis() const;  // coordinate vectors e_j, j in rep_coords
    Vec project_vec(const Vec& ambient) const;
    Vec include(const Vec& quotient_coords) const;
};

/// Quotient of Q^ambient_dim by the span of sub. Representatives are the
/// non-pivot coordinate directions of the echelon form of sub.
Subquotient quotient(int ambient_dim, const std::vector<Vec>& sub);

}  // namespace coeffective
