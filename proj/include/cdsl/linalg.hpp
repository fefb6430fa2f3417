#pragma once

// Dense exact linear algebra over Q or Q(mu_N).

#include <cstddef>
#include <map>
#include <vector>

#include "cdsl/cyclo.hpp"

namespace cdsl {

struct RationalField {
    using value_type = mpq_class;
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool is_zero(const value_type& x) const { return x == 0; }
    bool is_unit_sign(const value_type& x) const { return x == 1 || x == -1; }
    value_type inv(const value_type& x) const { return 1 / x; }
};

struct CyclotomicField {
    const CycContext* ctx;
    using value_type = CycNum;
    value_type zero() const { return CycNum(*ctx); }
    value_type one() const { return CycNum(*ctx, mpq_class(1)); }
    bool is_zero(const value_type& x) const { return x.is_zero(); }
    bool is_unit_sign(const value_type& x) const
    {
        return x.is_rational() && (x.rational_part() == 1 || x.rational_part() == -1);
    }
    value_type inv(const value_type& x) const { return x.inverse(); }
};

template <class Field>
class Matrix {
public:
    using value_type = typename Field::value_type;

    Matrix(Field f, std::size_t rows, std::size_t cols)
        : f_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

    const Field& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void append_row(const std::vector<value_type>& row)
    {
        if (row.size() != cols_) throw DomainError("append_row: width mismatch");
        data_.insert(data_.end(), row.begin(), row.end());
        ++rows_;
    }

    static Matrix identity(Field f, std::size_t n)
    {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) throw DomainError("matrix product: shape mismatch");
        Matrix r(a.f_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const value_type& x = a(i, k);
                if (a.f_.is_zero(x)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!a.f_.is_zero(b(k, j))) r(i, j) += x * b(k, j);
            }
        return r;
    }
    friend Matrix operator-(Matrix a, const Matrix& b)
    {
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }
    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::vector<value_type> apply(const std::vector<value_type>& v) const
    {
        std::vector<value_type> r(rows_, f_.zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!f_.is_zero((*this)(i, j)) && !f_.is_zero(v[j])) r[i] += (*this)(i, j) * v[j];
        return r;
    }

private:
    Field f_;
    std::size_t rows_, cols_;
    std::vector<value_type> data_;
};

// In-place reduced row echelon form; returns the pivot column of each pivot row.
// Within a column, a +-1 pivot is preferred to limit coefficient growth.
template <class Field>
std::vector<std::size_t> rref(Matrix<Field>& m)
{
    const Field& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t best = m.rows();
        for (std::size_t r = row; r < m.rows(); ++r) {
            if (f.is_zero(m(r, col))) continue;
            if (best == m.rows()) best = r;
            if (f.is_unit_sign(m(r, col))) {
                best = r;
                break;
            }
        }
        if (best == m.rows()) continue;
        if (best != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(best, j), m(row, j));
        const auto inv = f.inv(m(row, col));
        for (std::size_t j = col; j < m.cols(); ++j)
            if (!f.is_zero(m(row, j))) m(row, j) = m(row, j) * inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || f.is_zero(m(r, col))) continue;
            const auto factor = m(r, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!f.is_zero(m(row, j))) m(r, j) -= factor * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class Field>
std::size_t rank(Matrix<Field> m)
{
    return rref(m).size();
}

// Kernel vectors in echelon-complement form: vector j has 1 at the j-th free
// column and 0 at every other free column.
template <class Field>
struct Kernel {
    std::vector<std::vector<typename Field::value_type>> basis;
    std::vector<std::size_t> free_columns;
};

template <class Field>
Kernel<Field> kernel(Matrix<Field> m)
{
    const Field f = m.field();
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    Kernel<Field> k;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        k.free_columns.push_back(c);
        std::vector<typename Field::value_type> v(m.cols(), f.zero());
        v[c] = f.one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (!f.is_zero(m(r, c))) v[pivots[r]] = -m(r, c);
        k.basis.push_back(std::move(v));
    }
    return k;
}

template <class Field>
std::vector<std::vector<typename Field::value_type>> kernel_basis(const Matrix<Field>& m)
{
    return kernel(m).basis;
}

// Basis of the common fixed space of the given operators.
inline std::vector<std::vector<mpq_class>> invariant_subspace(const std::vector<Matrix<RationalField>>& ops,
                                                              std::size_t dim)
{
    Matrix<RationalField> stacked(RationalField{}, 0, dim);
    for (const auto& a : ops) {
        if (a.rows() != dim || a.cols() != dim) throw DomainError("invariant_subspace: dimension mismatch");
        for (std::size_t i = 0; i < dim; ++i) {
            std::vector<mpq_class> row(dim);
            for (std::size_t j = 0; j < dim; ++j) row[j] = a(i, j) - (i == j ? 1 : 0);
            stacked.append_row(row);
        }
    }
    return kernel_basis(stacked);
}

// Q-matrix of v -> M * sigma(v) on the basis {zeta^i e_j : i < phi}, ordered
// with index j * phi + i.
inline Matrix<RationalField> restrict_scalars(const Matrix<CyclotomicField>& M, GaloisElement s)
{
    const CycContext& ctx = *M.field().ctx;
    const std::size_t phi = static_cast<std::size_t>(ctx.phi);
    const std::size_t n = M.cols();
    Matrix<RationalField> out(RationalField{}, M.rows() * phi, n * phi);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < phi; ++i) {
            const CycNum z = zeta_power(ctx, static_cast<long long>(i) * s.k);
            for (std::size_t r = 0; r < M.rows(); ++r) {
                if (M(r, j).is_zero()) continue;
                const CycNum v = M(r, j) * z;
                for (std::size_t t = 0; t < phi; ++t) out(r * phi + t, j * phi + i) = v.coeffs()[t];
            }
        }
    return out;
}

// Rational matrix viewed over Q(mu_N).
inline Matrix<CyclotomicField> extend_scalars(const Matrix<RationalField>& m, const CycContext& ctx)
{
    Matrix<CyclotomicField> out(CyclotomicField{&ctx}, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = CycNum(ctx, m(i, j));
    return out;
}

} // namespace cdsl
