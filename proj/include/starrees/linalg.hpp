#pragma once

#include <vector>

#include "starrees/polyring.hpp"
#include "starrees/scalar.hpp"

namespace starrees {

class ScalarMatrix {
  public:
    ScalarMatrix() = default;
    ScalarMatrix(int rows, int cols, const Field& field);
    static ScalarMatrix identity(int n, const Field& field);
    // rows of integers, mapped into the field
    static ScalarMatrix from_ints(const Field& field, const std::vector<std::vector<long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

    ScalarMatrix transpose() const;
    ScalarMatrix operator*(const ScalarMatrix& o) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
    ScalarMatrix select(const std::vector<int>& rows, const std::vector<int>& cols) const;
    ScalarMatrix select_rows(const std::vector<int>& rows) const;
    ScalarMatrix select_cols(const std::vector<int>& cols) const;

    bool is_zero() const;
    bool operator==(const ScalarMatrix&) const = default;

  private:
    int rows_ = 0;
    int cols_ = 0;
    Field field_ = Field::rationals();
    std::vector<Scalar> data_;
};

// Row-reduced echelon form in place; returns the pivot columns.
std::vector<int> rref(ScalarMatrix& a);

int rank(const ScalarMatrix& a);
Scalar determinant(const ScalarMatrix& a);
// Minor on 0-based row and column index sets; the empty selection gives 1.
Scalar minor(const ScalarMatrix& a, const std::vector<int>& rows, const std::vector<int>& cols);
// Right null space. The basis vectors, stacked as rows, are in reduced
// echelon form.
std::vector<std::vector<Scalar>> kernel_basis(const ScalarMatrix& a);
ScalarMatrix inverse(const ScalarMatrix& a);

class PolyMatrix {
  public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols, RingPtr ring);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const RingPtr& ring() const { return ring_; }

    Poly& at(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
    const Poly& at(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

    PolyMatrix select_cols(const std::vector<int>& cols) const;
    PolyMatrix transpose() const;
    bool operator==(const PolyMatrix& o) const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    RingPtr ring_;
    std::vector<Poly> data_;
};

// Cofactor expansion for n <= 6, fraction-free elimination above.
Poly det_poly(const PolyMatrix& a);
Poly det_cofactor(const PolyMatrix& a);
Poly det_bareiss(const PolyMatrix& a);
// Laplace expansion along one row, used to cross-check the other routes.
Poly det_laplace_row(const PolyMatrix& a, int row);

// All rows x rows minors, columns chosen in lexicographic order.
std::vector<Poly> all_max_minors(const PolyMatrix& a);

// Lexicographic k-subsets of {0..n-1}.
std::vector<std::vector<int>> subsets(int n, int k);

} // namespace starrees
