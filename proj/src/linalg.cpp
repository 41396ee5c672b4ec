#include "starrees/linalg.hpp"

#include <unordered_map>

namespace starrees {

ScalarMatrix::ScalarMatrix(int rows, int cols, const Field& field)
    : rows_(rows), cols_(cols), field_(field), data_(std::size_t(rows) * cols, Scalar::zero(field)) {
    if (rows < 0 || cols < 0) fail(ErrorKind::Shape, "negative matrix dimension");
}

ScalarMatrix ScalarMatrix::identity(int n, const Field& field) {
    ScalarMatrix m(n, n, field);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
    return m;
}

ScalarMatrix ScalarMatrix::from_ints(const Field& field, const std::vector<std::vector<long>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows[0].size()) : 0;
    ScalarMatrix m(r, c, field);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) fail(ErrorKind::Shape, "ragged matrix rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = Scalar::from_int(field, rows[i][j]);
    }
    return m;
}

ScalarMatrix ScalarMatrix::transpose() const {
    ScalarMatrix t(cols_, rows_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
    if (cols_ != o.rows_) fail(ErrorKind::Shape, "matrix product dimension mismatch");
    ScalarMatrix p(rows_, o.cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) p.at(i, j) += at(i, k) * o.at(k, j);
        }
    return p;
}

std::vector<Scalar> ScalarMatrix::apply(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != cols_) fail(ErrorKind::Shape, "vector length mismatch");
    std::vector<Scalar> out(rows_, Scalar::zero(field_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

ScalarMatrix ScalarMatrix::select(const std::vector<int>& rs, const std::vector<int>& cs) const {
    ScalarMatrix m(static_cast<int>(rs.size()), static_cast<int>(cs.size()), field_);
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (rs[i] < 0 || rs[i] >= rows_) fail(ErrorKind::Selection, "row index out of range");
        for (std::size_t j = 0; j < cs.size(); ++j) {
            if (cs[j] < 0 || cs[j] >= cols_) fail(ErrorKind::Selection, "column index out of range");
            m.at(int(i), int(j)) = at(rs[i], cs[j]);
        }
    }
    return m;
}

ScalarMatrix ScalarMatrix::select_rows(const std::vector<int>& rs) const {
    std::vector<int> cs(cols_);
    for (int j = 0; j < cols_; ++j) cs[j] = j;
    return select(rs, cs);
}

ScalarMatrix ScalarMatrix::select_cols(const std::vector<int>& cs) const {
    std::vector<int> rs(rows_);
    for (int i = 0; i < rows_; ++i) rs[i] = i;
    return select(rs, cs);
}

bool ScalarMatrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

std::vector<int> rref(ScalarMatrix& a) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int p = -1;
        for (int i = row; i < a.rows(); ++i)
            if (!a.at(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(row, j));
        Scalar inv = a.at(row, col).inverse();
        for (int j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == row || a.at(i, col).is_zero()) continue;
            Scalar f = a.at(i, col);
            for (int j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(const ScalarMatrix& a) {
    ScalarMatrix m = a;
    return static_cast<int>(rref(m).size());
}

Scalar determinant(const ScalarMatrix& a) {
    if (a.rows() != a.cols()) fail(ErrorKind::Shape, "determinant of a non-square matrix");
    ScalarMatrix m = a;
    const int n = m.rows();
    Scalar det = Scalar::one(a.field());
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int i = col; i < n; ++i)
            if (!m.at(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) return Scalar::zero(a.field());
        if (p != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        Scalar inv = m.at(col, col).inverse();
        for (int i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col) * inv;
            for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return det;
}

Scalar minor(const ScalarMatrix& a, const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() != cols.size()) fail(ErrorKind::Selection, "minor needs as many rows as columns");
    if (rows.empty()) return Scalar::one(a.field());
    return determinant(a.select(rows, cols));
}

std::vector<std::vector<Scalar>> kernel_basis(const ScalarMatrix& a) {
    ScalarMatrix m = a;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> vecs;
    for (int f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(a.cols(), Scalar::zero(a.field()));
        v[f] = Scalar::one(a.field());
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m.at(int(k), f);
        vecs.push_back(std::move(v));
    }
    if (vecs.empty()) return vecs;
    ScalarMatrix k(static_cast<int>(vecs.size()), a.cols(), a.field());
    for (int i = 0; i < k.rows(); ++i)
        for (int j = 0; j < k.cols(); ++j) k.at(i, j) = vecs[i][j];
    rref(k);
    for (int i = 0; i < k.rows(); ++i)
        for (int j = 0; j < k.cols(); ++j) vecs[i][j] = k.at(i, j);
    return vecs;
}

ScalarMatrix inverse(const ScalarMatrix& a) {
    if (a.rows() != a.cols()) fail(ErrorKind::Shape, "inverse of a non-square matrix");
    const int n = a.rows();
    ScalarMatrix aug(n, 2 * n, a.field());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = Scalar::one(a.field());
    }
    auto pivots = rref(aug);
    if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1)
        fail(ErrorKind::NotInvertible, "singular matrix");
    ScalarMatrix inv(n, n, a.field());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

PolyMatrix::PolyMatrix(int rows, int cols, RingPtr ring)
    : rows_(rows), cols_(cols), ring_(std::move(ring)), data_(std::size_t(rows) * cols, Poly(ring_)) {
    if (rows < 0 || cols < 0) fail(ErrorKind::Shape, "negative matrix dimension");
}

PolyMatrix PolyMatrix::select_cols(const std::vector<int>& cs) const {
    PolyMatrix m(rows_, static_cast<int>(cs.size()), ring_);
    for (std::size_t j = 0; j < cs.size(); ++j) {
        if (cs[j] < 0 || cs[j] >= cols_) fail(ErrorKind::Selection, "column index out of range");
        for (int i = 0; i < rows_; ++i) m.at(i, int(j)) = at(i, cs[j]);
    }
    return m;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(cols_, rows_, ring_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Poly det_cofactor(const PolyMatrix& a) {
    if (a.rows() != a.cols()) fail(ErrorKind::Shape, "determinant of a non-square matrix");
    const int n = a.rows();
    if (n == 0) return Poly::constant(a.ring(), 1);
    if (n > 20) fail(ErrorKind::Resource, "cofactor expansion limited to 20 columns");
    // memo[mask] = det of rows 0..|mask|-1 on the columns in mask
    std::unordered_map<unsigned, Poly> memo;
    auto rec = [&](auto&& self, unsigned mask, int k) -> Poly {
        if (k == 0) return Poly::constant(a.ring(), 1);
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        Poly acc(a.ring());
        int pos = 0;
        for (int j = 0; j < n; ++j) {
            if (!(mask & (1u << j))) continue;
            const Poly& entry = a.at(k - 1, j);
            if (!entry.is_zero()) {
                Poly sub = self(self, mask & ~(1u << j), k - 1);
                if (!sub.is_zero()) {
                    Poly term = entry * sub;
                    if ((k - 1 + pos) % 2) acc -= term;
                    else acc += term;
                }
            }
            ++pos;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return rec(rec, (1u << n) - 1, n);
}

Poly det_bareiss(const PolyMatrix& a) {
    if (a.rows() != a.cols()) fail(ErrorKind::Shape, "determinant of a non-square matrix");
    const int n = a.rows();
    if (n == 0) return Poly::constant(a.ring(), 1);
    PolyMatrix m = a;
    Poly prev = Poly::constant(a.ring(), 1);
    bool negate = false;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k).is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m.at(i, k).is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) return Poly(a.ring());
            for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(k, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Poly num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = divide_exact(num, prev);
            }
        prev = m.at(k, k);
    }
    Poly det = m.at(n - 1, n - 1);
    return negate ? -det : det;
}

Poly det_poly(const PolyMatrix& a) {
    if (a.rows() != a.cols()) fail(ErrorKind::Shape, "determinant of a non-square matrix");
    return a.rows() <= 6 ? det_cofactor(a) : det_bareiss(a);
}

Poly det_laplace_row(const PolyMatrix& a, int row) {
    if (a.rows() != a.cols()) fail(ErrorKind::Shape, "determinant of a non-square matrix");
    const int n = a.rows();
    if (row < 0 || row >= n) fail(ErrorKind::Selection, "row index out of range");
    Poly acc(a.ring());
    for (int j = 0; j < n; ++j) {
        if (a.at(row, j).is_zero()) continue;
        PolyMatrix sub(n - 1, n - 1, a.ring());
        for (int i = 0, si = 0; i < n; ++i) {
            if (i == row) continue;
            for (int c = 0, sc = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(si, sc++) = a.at(i, c);
            }
            ++si;
        }
        Poly term = a.at(row, j) * det_poly(sub);
        if ((row + j) % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<Poly> all_max_minors(const PolyMatrix& a) {
    std::vector<Poly> out;
    if (a.cols() < a.rows()) return out;
    for (const auto& cols : subsets(a.cols(), a.rows())) out.push_back(det_poly(a.select_cols(cols)));
    return out;
}

} // namespace starrees
