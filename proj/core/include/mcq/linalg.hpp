#pragma once

#include <map>
#include <vector>

#include "mcq/cyclotomic.hpp"

namespace mcq {

// Dense matrix over Q(zeta_M). Sized for representation matrices and
// desk-scale rank computations; not a general linear algebra package.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0), order_(1) {}
    QMatrix(unsigned M, size_t rows, size_t cols)
        : rows_(rows), cols_(cols), order_(M), data_(rows * cols, CycNum::zero(M)) {}

    static QMatrix identity(unsigned M, size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    unsigned order() const { return order_; }

    CycNum& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const CycNum& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    QMatrix operator*(const QMatrix& rhs) const;
    QMatrix operator+(const QMatrix& rhs) const;
    QMatrix operator-(const QMatrix& rhs) const;
    QMatrix scaled(const CycNum& s) const;
    bool operator==(const QMatrix& rhs) const { return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_; }
    bool operator!=(const QMatrix& rhs) const { return !(*this == rhs); }

    QMatrix kron(const QMatrix& rhs) const;
    QMatrix pow(long e) const;
    bool is_zero() const;

    size_t rank() const;

private:
    size_t rows_, cols_;
    unsigned order_;
    std::vector<CycNum> data_;
};

// Sparse row vector: column index -> nonzero value.
using SparseVec = std::map<long, CycNum>;

// Indices (into `rows`) of a maximal linearly independent subset, chosen
// greedily in the given order. Deterministic.
std::vector<size_t> independent_rows(const std::vector<SparseVec>& rows, unsigned M);

size_t sparse_rank(const std::vector<SparseVec>& rows, unsigned M);

}  // namespace mcq
