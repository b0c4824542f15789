#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace zigzag {

bool is_prime(std::uint32_t p);

// Dense row-major matrix over GF(p). 0xm and mx0 shapes are valid (rank 0).
// All arithmetic is exact; elimination uses deterministic partial pivoting
// (first nonzero entry in the column).
class Matrix {
public:
    Matrix() : rows_(0), cols_(0), p_(2) {}
    Matrix(std::size_t rows, std::size_t cols, std::uint32_t p);

    static Matrix identity(std::size_t n, std::uint32_t p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t p() const { return p_; }

    std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_identity() const;

    Matrix transpose() const;
    std::vector<std::uint32_t> col(std::size_t c) const;
    void set_col(std::size_t c, const std::vector<std::uint32_t>& v);

    // In-place block copy of `m` with top-left corner (r0, c0).
    void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.p_ == b.p_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_, cols_;
    std::uint32_t p_;
    std::vector<std::uint32_t> data_;
};

std::uint32_t fp_add(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t fp_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p);
std::uint32_t fp_neg(std::uint32_t a, std::uint32_t p);

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_scale(const Matrix& a, std::uint32_t c);
Matrix hstack(const Matrix& a, const Matrix& b);

// Matrix whose columns are the given vectors.
Matrix from_cols(std::size_t rows, std::uint32_t p, const std::vector<std::vector<std::uint32_t>>& cols);

// Row echelon form; returns the pivot column indices in order.
Matrix row_echelon(Matrix m, std::vector<std::size_t>* pivot_cols = nullptr);

std::size_t rank(const Matrix& m);

// Basis of ker(m), one vector per free column; size = cols - rank.
std::vector<std::vector<std::uint32_t>> nullspace_basis(const Matrix& m);

// Basis of the column space: the columns of m at pivot positions.
Matrix column_space_basis(const Matrix& m);

struct LinearSolution {
    bool consistent = false;
    std::vector<std::uint32_t> particular;                // a solution of A x = b
    std::vector<std::vector<std::uint32_t>> nullspace;    // basis of ker A
};

// Solves A x = b; reports inconsistency rather than failing.
LinearSolution solve_linear_system(const Matrix& a, const std::vector<std::uint32_t>& b);

// Coordinates of v in the span of basis columns, if it lies there.
std::optional<std::vector<std::uint32_t>> coordinates_in(const Matrix& basis,
                                                         const std::vector<std::uint32_t>& v);

}  // namespace zigzag
