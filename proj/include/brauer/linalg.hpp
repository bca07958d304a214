#pragma once

// Dense matrices over a prime field F_p with exact Gaussian elimination.

#include <cstdint>
#include <string>
#include <vector>

namespace brauer {

using Elem = std::uint32_t;

/// Arithmetic in F_p. The modulus must be prime; see is_prime().
class PrimeField {
public:
    explicit PrimeField(Elem p);

    Elem characteristic() const { return p_; }
    Elem add(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} + b) % p_); }
    Elem sub(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} + p_ - b) % p_); }
    Elem mul(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} * b) % p_); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const;
    Elem reduce(std::int64_t a) const;

    bool operator==(const PrimeField&) const = default;

private:
    Elem p_;
};

bool is_prime(std::uint64_t n);

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    Matrix column(std::size_t c) const;

    bool operator==(const Matrix&) const = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

Matrix multiply(const PrimeField& F, const Matrix& a, const Matrix& b);
Matrix add(const PrimeField& F, const Matrix& a, const Matrix& b);
Matrix subtract(const PrimeField& F, const Matrix& a, const Matrix& b);
Matrix scale(const PrimeField& F, Elem s, const Matrix& a);
/// Columns of a followed by columns of b (same row count).
Matrix hconcat(const Matrix& a, const Matrix& b);

/// Reduced row echelon form, computed in place.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const { return pivot_cols.size(); }
};

Echelon rref(const PrimeField& F, Matrix m);
std::size_t rank(const PrimeField& F, const Matrix& m);

/// Basis of {x : m x = 0} as the columns of the result. Each basis vector
/// has a 1 at exactly one free column and 0 at all other free columns, so
/// the coordinates of a kernel vector are its entries at free_cols.
struct NullSpace {
    Matrix basis;
    std::vector<std::size_t> free_cols;
    std::size_t dim() const { return free_cols.size(); }
};

NullSpace null_space(const PrimeField& F, const Matrix& m);

/// Column-space basis of m as an echelon set: the pivot columns of rref(m^T)
/// give a canonical basis. Returned as columns.
Matrix column_space(const PrimeField& F, const Matrix& m);

Matrix transpose(const Matrix& m);

/// Standard basis vectors completing the column space of m to the full space,
/// chosen at the non-pivot positions of the echelon form of m^T.
std::vector<std::size_t> complement_positions(const PrimeField& F, const Matrix& m);

bool is_invertible(const PrimeField& F, const Matrix& m);

}  // namespace brauer
