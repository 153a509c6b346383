#include "coeffective/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace coeffective {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols), cols_data_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_columns(int rows, const std::vector<Vec>& columns) {
    Matrix m(rows, static_cast<int>(columns.size()));
    for (int c = 0; c < m.cols_; ++c) {
        if (static_cast<int>(columns[c].size()) != rows)
            throw std::invalid_argument("column length mismatch");
        for (int r = 0; r < rows; ++r)
            if (columns[c][r] != 0) m.cols_data_[c].emplace(r, columns[c][r]);
    }
    return m;
}

Matrix Matrix::from_rows(int cols, const std::vector<Vec>& rows) {
    Matrix m(static_cast<int>(rows.size()), cols);
    for (int r = 0; r < m.rows_; ++r) {
        if (static_cast<int>(rows[r].size()) != cols)
            throw std::invalid_argument("row length mismatch");
        for (int c = 0; c < cols; ++c)
            if (rows[r][c] != 0) m.cols_data_[c].emplace(r, rows[r][c]);
    }
    return m;
}

void Matrix::set(int r, int c, const Rational& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    if (v == 0)
        cols_data_[c].erase(r);
    else
        cols_data_[c][r] = v;
}

void Matrix::add(int r, int c, const Rational& v) {
    if (v == 0) return;
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    auto& col = cols_data_[c];
    auto it = col.find(r);
    if (it == col.end()) {
        col.emplace(r, v);
    } else {
        it->second += v;
        if (it->second == 0) col.erase(it);
    }
}

Rational Matrix::get(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    auto it = cols_data_[c].find(r);
    return it == cols_data_[c].end() ? Rational(0) : it->second;
}

Vec Matrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matvec length mismatch");
    Vec out(rows_, Rational(0));
    for (int c = 0; c < cols_; ++c) {
        if (v[c] == 0) continue;
        for (const auto& [r, val] : cols_data_[c]) out[r] += val * v[c];
    }
    return out;
}

Matrix Matrix::multiply(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matmul shape mismatch");
    Matrix out(rows_, rhs.cols_);
    for (int c = 0; c < rhs.cols_; ++c)
        for (const auto& [k, v] : rhs.cols_data_[c])
            for (const auto& [r, w] : cols_data_[k]) out.add(r, c, w * v);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (int c = 0; c < cols_; ++c)
        for (const auto& [r, v] : cols_data_[c]) out.set(c, r, v);
    return out;
}

Vec Matrix::column_vec(int c) const {
    Vec out(rows_, Rational(0));
    for (const auto& [r, v] : cols_data_[c]) out[r] = v;
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& col : cols_data_)
        if (!col.empty()) return false;
    return true;
}

long Matrix::nonzero_count() const {
    long n = 0;
    for (const auto& col : cols_data_) n += static_cast<long>(col.size());
    return n;
}

bool Matrix::operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && cols_data_ == other.cols_data_;
}

namespace {

// Sparse elimination state for one connected block. Rows are kept as sorted
// (col, value) maps; per-column row lists track candidates for pivoting.
struct SparseElim {
    std::vector<std::map<int, Rational>> rows;
    explicit SparseElim(std::vector<std::map<int, Rational>> r) : rows(std::move(r)) {}

    // Eliminates until no nonzero rows remain; returns the rank. Pivot rule:
    // pick the column with fewest active nonzeros (ties: smallest column),
    // then the shortest row in that column (ties: smallest row index). The
    // rule is a fixed function of the input, so results are reproducible.
    int run() {
        std::map<int, std::vector<int>> col_rows;  // col -> active rows with nonzero
        std::vector<bool> done(rows.size(), false);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            for (const auto& [c, v] : rows[i]) col_rows[c].push_back(i);

        auto active_count = [&](int c) {
            auto it = col_rows.find(c);
            if (it == col_rows.end()) return 0;
            int n = 0;
            for (int r : it->second)
                if (!done[r] && rows[r].count(c)) ++n;
            return n;
        };

        int rank = 0;
        while (true) {
            int best_col = -1, best_nnz = 0;
            for (auto it = col_rows.begin(); it != col_rows.end();) {
                int n = active_count(it->first);
                if (n == 0) {
                    it = col_rows.erase(it);
                    continue;
                }
                if (best_col < 0 || n < best_nnz) {
                    best_col = it->first;
                    best_nnz = n;
                    if (n == 1) break;
                }
                ++it;
            }
            if (best_col < 0) break;

            int pivot_row = -1;
            size_t pivot_len = 0;
            for (int r : col_rows[best_col]) {
                if (done[r] || !rows[r].count(best_col)) continue;
                if (pivot_row < 0 || rows[r].size() < pivot_len) {
                    pivot_row = r;
                    pivot_len = rows[r].size();
                }
            }
            const Rational pv = rows[pivot_row][best_col];
            for (int r : std::vector<int>(col_rows[best_col])) {
                if (r == pivot_row || done[r]) continue;
                auto it = rows[r].find(best_col);
                if (it == rows[r].end()) continue;
                Rational f = it->second / pv;
                for (const auto& [c, v] : rows[pivot_row]) {
                    auto jt = rows[r].find(c);
                    if (jt == rows[r].end()) {
                        Rational nv = -f * v;
                        if (nv != 0) {
                            rows[r].emplace(c, nv);
                            col_rows[c].push_back(r);
                        }
                    } else {
                        jt->second -= f * v;
                        if (jt->second == 0) rows[r].erase(jt);
                    }
                }
            }
            done[pivot_row] = true;
            ++rank;
        }
        return rank;
    }
};

// Connected components of the bipartite row/column support graph. Many of the
// matrices here carry a hidden torus grading, which this split recovers
// without knowing it; zero columns become singleton components.
struct Components {
    std::vector<std::vector<int>> col_groups;  // columns per component
    std::vector<int> lonely_cols;              // all-zero columns
};

Components split_components(const Matrix& m) {
    int nc = m.cols();
    std::vector<int> col_comp(nc, -1);
    std::vector<std::vector<int>> row_cols(m.rows());
    for (int c = 0; c < nc; ++c)
        for (const auto& [r, v] : m.column(c)) row_cols[r].push_back(c);

    Components out;
    std::vector<int> stack;
    std::vector<int> row_comp(m.rows(), -1);
    int comp = 0;
    for (int c0 = 0; c0 < nc; ++c0) {
        if (col_comp[c0] >= 0) continue;
        if (m.column(c0).empty()) {
            out.lonely_cols.push_back(c0);
            col_comp[c0] = -2;
            continue;
        }
        std::vector<int> cols_here;
        col_comp[c0] = comp;
        stack.push_back(c0);
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            cols_here.push_back(c);
            for (const auto& [r, v] : m.column(c)) {
                if (row_comp[r] == comp) continue;
                row_comp[r] = comp;
                for (int c2 : row_cols[r]) {
                    if (col_comp[c2] < 0) {
                        col_comp[c2] = comp;
                        stack.push_back(c2);
                    }
                }
            }
        }
        std::sort(cols_here.begin(), cols_here.end());
        out.col_groups.push_back(std::move(cols_here));
        ++comp;
    }
    return out;
}

// Dense RREF in place. Returns pivot columns. Pivoting: first nonzero column,
// smallest row index.
std::vector<int> dense_rref(std::vector<Vec>& rows, int ncols) {
    std::vector<int> pivots;
    int r = 0;
    int nrows = static_cast<int>(rows.size());
    for (int c = 0; c < ncols && r < nrows; ++c) {
        int sel = -1;
        for (int i = r; i < nrows; ++i)
            if (rows[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[r], rows[sel]);
        Rational pv = rows[r][c];
        if (pv != 1)
            for (int j = c; j < static_cast<int>(rows[r].size()); ++j) rows[r][j] /= pv;
        for (int i = 0; i < nrows; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (int j = c; j < static_cast<int>(rows[i].size()); ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(pivots.size());
    return pivots;
}

std::vector<std::map<int, Rational>> block_rows(const Matrix& m, const std::vector<int>& cols,
                                                const std::vector<int>& col_local) {
    std::map<int, std::map<int, Rational>> by_row;
    for (int c : cols)
        for (const auto& [r, v] : m.column(c)) by_row[r][col_local[c]] = v;
    std::vector<std::map<int, Rational>> rows;
    rows.reserve(by_row.size());
    for (auto& [r, row] : by_row) rows.push_back(std::move(row));
    return rows;
}

}  // namespace

int rank(const Matrix& m) {
    Components comps = split_components(m);
    std::vector<int> col_local(m.cols(), -1);
    int total = 0;
    for (const auto& group : comps.col_groups) {
        for (int i = 0; i < static_cast<int>(group.size()); ++i) col_local[group[i]] = i;
        SparseElim elim(block_rows(m, group, col_local));
        total += elim.run();
    }
    return total;
}

std::vector<Vec> kernel_basis(const Matrix& m) {
    Components comps = split_components(m);
    std::vector<int> col_local(m.cols(), -1);
    std::vector<Vec> vectors;

    for (int c : comps.lonely_cols) {
        Vec v(m.cols(), Rational(0));
        v[c] = 1;
        vectors.push_back(std::move(v));
    }
    for (const auto& group : comps.col_groups) {
        for (int i = 0; i < static_cast<int>(group.size()); ++i) col_local[group[i]] = i;
        // dense RREF of the block, rows restricted to the component's columns
        auto sparse_rows = block_rows(m, group, col_local);
        std::vector<Vec> rows;
        rows.reserve(sparse_rows.size());
        for (const auto& sr : sparse_rows) {
            Vec row(group.size(), Rational(0));
            for (const auto& [c, v] : sr) row[c] = v;
            rows.push_back(std::move(row));
        }
        std::vector<int> pivots = dense_rref(rows, static_cast<int>(group.size()));
        std::vector<bool> is_pivot(group.size(), false);
        for (int p : pivots) is_pivot[p] = true;
        for (int f = 0; f < static_cast<int>(group.size()); ++f) {
            if (is_pivot[f]) continue;
            Vec v(m.cols(), Rational(0));
            v[group[f]] = 1;
            for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
                if (rows[i][f] != 0) v[group[pivots[i]]] = -rows[i][f];
            vectors.push_back(std::move(v));
        }
    }
    return rref_span(vectors, m.cols());
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve: rhs length");
    // dense elimination on the augmented matrix; free variables pinned to zero
    std::vector<Vec> rows(m.rows(), Vec(m.cols() + 1, Rational(0)));
    for (int c = 0; c < m.cols(); ++c)
        for (const auto& [r, v] : m.column(c)) rows[r][c] = v;
    for (int r = 0; r < m.rows(); ++r) rows[r][m.cols()] = b[r];

    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int sel = -1;
        for (int i = r; i < m.rows(); ++i)
            if (rows[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[r], rows[sel]);
        Rational pv = rows[r][c];
        if (pv != 1)
            for (int j = c; j <= m.cols(); ++j) rows[r][j] /= pv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (int j = c; j <= m.cols(); ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    for (int i = r; i < m.rows(); ++i)
        if (rows[i][m.cols()] != 0) return std::nullopt;

    Vec x(m.cols(), Rational(0));
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i) x[pivots[i]] = rows[i][m.cols()];
    return x;
}

std::vector<Vec> rref_span(const std::vector<Vec>& vectors, int ambient_dim) {
    std::vector<Vec> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (static_cast<int>(v.size()) != ambient_dim)
            throw std::invalid_argument("rref_span: vector length");
        rows.push_back(v);
    }
    dense_rref(rows, ambient_dim);
    return rows;
}

std::vector<int> rref_pivots(const std::vector<Vec>& rref_rows) {
    std::vector<int> pivots;
    pivots.reserve(rref_rows.size());
    for (const auto& row : rref_rows) {
        int p = -1;
        for (int c = 0; c < static_cast<int>(row.size()); ++c)
            if (row[c] != 0) {
                p = c;
                break;
            }
        if (p < 0) throw std::logic_error("rref_pivots: zero row");
        pivots.push_back(p);
    }
    return pivots;
}

std::vector<Vec> column_space_basis(const Matrix& m) {
    std::vector<Vec> cols;
    cols.reserve(m.cols());
    for (int c = 0; c < m.cols(); ++c)
        if (!m.column(c).empty()) cols.push_back(m.column_vec(c));
    return rref_span(cols, m.rows());
}

std::vector<Vec> Subquotient::rep_basis() const {
    std::vector<Vec> out;
    out.reserve(rep_coords.size());
    for (int c : rep_coords) {
        Vec v(ambient_dim, Rational(0));
        v[c] = 1;
        out.push_back(std::move(v));
    }
    return out;
}

Vec Subquotient::project_vec(const Vec& ambient) const {
    if (static_cast<int>(ambient.size()) != ambient_dim)
        throw std::invalid_argument("project: vector length");
    Vec v = ambient;
    for (size_t i = 0; i < sub_basis.size(); ++i) {
        const Rational& f = v[sub_pivots[i]];
        if (f == 0) continue;
        Rational fv = f;
        for (int c = 0; c < ambient_dim; ++c)
            if (sub_basis[i][c] != 0) v[c] -= fv * sub_basis[i][c];
    }
    Vec out(rep_coords.size());
    for (size_t i = 0; i < rep_coords.size(); ++i) out[i] = v[rep_coords[i]];
    return out;
}

Vec Subquotient::include(const Vec& quotient_coords) const {
    if (quotient_coords.size() != rep_coords.size())
        throw std::invalid_argument("include: coordinate length");
    Vec v(ambient_dim, Rational(0));
    for (size_t i = 0; i < rep_coords.size(); ++i) v[rep_coords[i]] = quotient_coords[i];
    return v;
}

Subquotient quotient(int ambient_dim, const std::vector<Vec>& sub) {
    Subquotient q;
    q.ambient_dim = ambient_dim;
    q.sub_basis = rref_span(sub, ambient_dim);
    q.sub_pivots = rref_pivots(q.sub_basis);
    std::vector<bool> is_pivot(ambient_dim, false);
    for (int p : q.sub_pivots) is_pivot[p] = true;
    for (int c = 0; c < ambient_dim; ++c)
        if (!is_pivot[c]) q.rep_coords.push_back(c);

    q.project = Matrix(q.dim(), ambient_dim);
    for (int c = 0; c < ambient_dim; ++c) {
        Vec e(ambient_dim, Rational(0));
        e[c] = 1;
        Vec coords = q.project_vec(e);
        for (int i = 0; i < q.dim(); ++i)
            if (coords[i] != 0) q.project.set(i, c, coords[i]);
    }
    return q;
}

}  // namespace coeffective
