#include "mcq/linalg.hpp"

#include <stdexcept>

namespace mcq {

QMatrix QMatrix::identity(unsigned M, size_t n) {
    QMatrix out(M, n, n);
    for (size_t i = 0; i < n; ++i) out.at(i, i) = CycNum::one(M);
    return out;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::domain_error("QMatrix: dimension mismatch");
    QMatrix out(order_, rows_, rhs.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const CycNum& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < rhs.cols_; ++j) {
                const CycNum& b = rhs.at(k, j);
                if (b.is_zero()) continue;
                out.at(i, j) += a * b;
            }
        }
    return out;
}

QMatrix QMatrix::operator+(const QMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::domain_error("QMatrix: shape mismatch");
    QMatrix out = *this;
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
    return out;
}

QMatrix QMatrix::operator-(const QMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::domain_error("QMatrix: shape mismatch");
    QMatrix out = *this;
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
    return out;
}

QMatrix QMatrix::scaled(const CycNum& s) const {
    QMatrix out = *this;
    for (auto& v : out.data_) v *= s;
    return out;
}

QMatrix QMatrix::kron(const QMatrix& rhs) const {
    QMatrix out(order_, rows_ * rhs.rows_, cols_ * rhs.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            const CycNum& a = at(i, j);
            if (a.is_zero()) continue;
            for (size_t k = 0; k < rhs.rows_; ++k)
                for (size_t l = 0; l < rhs.cols_; ++l) {
                    const CycNum& b = rhs.at(k, l);
                    if (b.is_zero()) continue;
                    out.at(i * rhs.rows_ + k, j * rhs.cols_ + l) = a * b;
                }
        }
    return out;
}

QMatrix QMatrix::pow(long e) const {
    if (rows_ != cols_) throw std::domain_error("QMatrix::pow: square matrix required");
    if (e < 0) throw std::domain_error("QMatrix::pow: negative exponent");
    QMatrix acc = identity(order_, rows_);
    QMatrix base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool QMatrix::is_zero() const {
    for (const auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

size_t QMatrix::rank() const {
    std::vector<SparseVec> rows;
    rows.reserve(rows_);
    for (size_t i = 0; i < rows_; ++i) {
        SparseVec v;
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) v.emplace(static_cast<long>(j), at(i, j));
        rows.push_back(std::move(v));
    }
    return sparse_rank(rows, order_);
}

namespace {

// Reduce v in place against normalized echelon rows (pivot value 1).
void reduce_against(SparseVec& v, const std::map<long, SparseVec>& echelon) {
    while (!v.empty()) {
        long piv = v.begin()->first;
        auto it = echelon.find(piv);
        if (it == echelon.end()) return;
        CycNum coef = v.begin()->second;
        for (const auto& [col, val] : it->second) {
            auto jt = v.find(col);
            CycNum delta = coef * val;
            if (jt == v.end()) {
                delta = -delta;
                if (!delta.is_zero()) v.emplace(col, std::move(delta));
            } else {
                jt->second -= delta;
                if (jt->second.is_zero()) v.erase(jt);
            }
        }
    }
}

}  // namespace

std::vector<size_t> independent_rows(const std::vector<SparseVec>& rows, unsigned M) {
    std::map<long, SparseVec> echelon;
    std::vector<size_t> picked;
    for (size_t idx = 0; idx < rows.size(); ++idx) {
        SparseVec v = rows[idx];
        reduce_against(v, echelon);
        if (v.empty()) continue;
        CycNum inv = v.begin()->second.inverse();
        for (auto& [col, val] : v) val *= inv;
        long piv = v.begin()->first;
        echelon.emplace(piv, std::move(v));
        picked.push_back(idx);
    }
    (void)M;
    return picked;
}

size_t sparse_rank(const std::vector<SparseVec>& rows, unsigned M) {
    return independent_rows(rows, M).size();
}

}  // namespace mcq
