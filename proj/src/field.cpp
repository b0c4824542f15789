#include "zigzag/field.hpp"

#include <stdexcept>

namespace zigzag {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
    if (!is_prime(p)) throw std::invalid_argument("Matrix: p must be prime");
}

Matrix Matrix::identity(std::size_t n, std::uint32_t p) {
    Matrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const {
    for (auto v : data_)
        if (v != 0) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

std::vector<std::uint32_t> Matrix::col(std::size_t c) const {
    std::vector<std::uint32_t> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
}

void Matrix::set_col(std::size_t c, const std::vector<std::uint32_t>& v) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, c) = v[i];
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) at(r0 + i, c0 + j) = m.at(i, j);
}

std::uint32_t fp_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint64_t s = std::uint64_t(a) + b;
    return std::uint32_t(s >= p ? s - p : s);
}

std::uint32_t fp_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : std::uint32_t(std::uint64_t(a) + p - b);
}

std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return std::uint32_t(std::uint64_t(a) * b % p);
}

std::uint32_t fp_neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
    if (a == 0) throw std::domain_error("fp_inv: zero");
    // Fermat: a^(p-2) mod p.
    std::uint64_t base = a, r = 1;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return std::uint32_t(r);
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows() || a.p() != b.p())
        throw std::invalid_argument("mat_mul: shape or field mismatch");
    Matrix c(a.rows(), b.cols(), a.p());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            std::uint32_t aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) = fp_add(c.at(i, j), fp_mul(aik, b.at(k, j), a.p()), a.p());
        }
    return c;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.p() != b.p())
        throw std::invalid_argument("mat_add: shape or field mismatch");
    Matrix c(a.rows(), a.cols(), a.p());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = fp_add(a.at(i, j), b.at(i, j), a.p());
    return c;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.p() != b.p())
        throw std::invalid_argument("mat_sub: shape or field mismatch");
    Matrix c(a.rows(), a.cols(), a.p());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = fp_sub(a.at(i, j), b.at(i, j), a.p());
    return c;
}

Matrix mat_scale(const Matrix& a, std::uint32_t c) {
    Matrix r(a.rows(), a.cols(), a.p());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = fp_mul(a.at(i, j), c % a.p(), a.p());
    return r;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.p() != b.p()) throw std::invalid_argument("hstack: shape mismatch");
    Matrix c(a.rows(), a.cols() + b.cols(), a.p());
    c.set_block(0, 0, a);
    c.set_block(0, a.cols(), b);
    return c;
}

Matrix from_cols(std::size_t rows, std::uint32_t p,
                 const std::vector<std::vector<std::uint32_t>>& cols) {
    Matrix m(rows, cols.size(), p);
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
}

Matrix row_echelon(Matrix m, std::vector<std::size_t>* pivot_cols) {
    const std::uint32_t p = m.p();
    std::size_t row = 0;
    if (pivot_cols) pivot_cols->clear();
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
        std::uint32_t inv = fp_inv(m.at(row, col), p);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = fp_mul(m.at(row, j), inv, p);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            std::uint32_t f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = fp_sub(m.at(i, j), fp_mul(f, m.at(row, j), p), p);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++row;
    }
    return m;
}

std::size_t rank(const Matrix& m) {
    std::vector<std::size_t> piv;
    row_echelon(m, &piv);
    return piv.size();
}

std::vector<std::vector<std::uint32_t>> nullspace_basis(const Matrix& m) {
    std::vector<std::size_t> piv;
    Matrix r = row_echelon(m, &piv);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<std::uint32_t> v(m.cols(), 0);
        v[free_col] = 1;
        for (std::size_t k = 0; k < piv.size(); ++k)
            v[piv[k]] = fp_neg(r.at(k, free_col), m.p());
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix column_space_basis(const Matrix& m) {
    std::vector<std::size_t> piv;
    row_echelon(m, &piv);
    Matrix b(m.rows(), piv.size(), m.p());
    for (std::size_t j = 0; j < piv.size(); ++j) b.set_col(j, m.col(piv[j]));
    return b;
}

LinearSolution solve_linear_system(const Matrix& a, const std::vector<std::uint32_t>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_linear_system: rhs size mismatch");
    Matrix aug(a.rows(), a.cols() + 1, a.p());
    aug.set_block(0, 0, a);
    for (std::size_t i = 0; i < a.rows(); ++i) aug.at(i, a.cols()) = b[i] % a.p();
    std::vector<std::size_t> piv;
    Matrix r = row_echelon(aug, &piv);
    LinearSolution sol;
    for (auto c : piv)
        if (c == a.cols()) return sol;  // pivot in the rhs column: inconsistent
    sol.consistent = true;
    sol.particular.assign(a.cols(), 0);
    for (std::size_t k = 0; k < piv.size(); ++k) sol.particular[piv[k]] = r.at(k, a.cols());
    sol.nullspace = nullspace_basis(a);
    return sol;
}

std::optional<std::vector<std::uint32_t>> coordinates_in(const Matrix& basis,
                                                         const std::vector<std::uint32_t>& v) {
    LinearSolution s = solve_linear_system(basis, v);
    if (!s.consistent) return std::nullopt;
    return s.particular;
}

}  // namespace zigzag
