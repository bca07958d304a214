#include "brauer/linalg.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace brauer {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(Elem p) : p_(p)
{
    if (!is_prime(p))
        throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
}

Elem PrimeField::inv(Elem a) const
{
    if (a % p_ == 0)
        throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a % p_, e = p_ - 2;
    while (e) {
        if (e & 1)
            result = result * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<Elem>(result);
}

Elem PrimeField::reduce(std::int64_t a) const
{
    std::int64_t r = a % static_cast<std::int64_t>(p_);
    if (r < 0)
        r += p_;
    return static_cast<Elem>(r);
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const
{
    for (auto x : data_)
        if (x != 0)
            return false;
    return true;
}

Matrix Matrix::column(std::size_t c) const
{
    Matrix v(rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r)
        v(r, 0) = (*this)(r, c);
    return v;
}

std::string Matrix::to_string() const
{
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << '[';
        for (std::size_t c = 0; c < cols_; ++c)
            os << (c ? " " : "") << (*this)(r, c);
        os << "]\n";
    }
    return os.str();
}

Matrix multiply(const PrimeField& F, const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix shape mismatch in multiply");
    const std::uint64_t p = F.characteristic();
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            std::uint64_t x = a(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) = static_cast<Elem>((out(i, j) + x * b(k, j)) % p);
        }
    return out;
}

Matrix add(const PrimeField& F, const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix shape mismatch in add");
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = F.add(a(i, j), b(i, j));
    return out;
}

Matrix subtract(const PrimeField& F, const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix shape mismatch in subtract");
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = F.sub(a(i, j), b(i, j));
    return out;
}

Matrix scale(const PrimeField& F, Elem s, const Matrix& a)
{
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = F.mul(s, a(i, j));
    return out;
}

Matrix hconcat(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows())
        throw std::invalid_argument("row count mismatch in hconcat");
    Matrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

Matrix transpose(const Matrix& m)
{
    Matrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            t(j, i) = m(i, j);
    return t;
}

Echelon rref(const PrimeField& F, Matrix m)
{
    Echelon e;
    const std::size_t R = m.rows(), C = m.cols();
    const std::uint64_t p = F.characteristic();
    std::size_t row = 0;
    for (std::size_t col = 0; col < C && row < R; ++col) {
        std::size_t piv = row;
        while (piv < R && m(piv, col) == 0)
            ++piv;
        if (piv == R)
            continue;
        if (piv != row)
            for (std::size_t j = 0; j < C; ++j)
                std::swap(m(piv, j), m(row, j));
        Elem s = F.inv(m(row, col));
        for (std::size_t j = col; j < C; ++j)
            m(row, j) = F.mul(m(row, j), s);
        for (std::size_t i = 0; i < R; ++i) {
            if (i == row || m(i, col) == 0)
                continue;
            std::uint64_t f = p - m(i, col);
            for (std::size_t j = col; j < C; ++j)
                m(i, j) = static_cast<Elem>((m(i, j) + f * m(row, j)) % p);
        }
        e.pivot_cols.push_back(col);
        ++row;
    }
    e.reduced = std::move(m);
    return e;
}

std::size_t rank(const PrimeField& F, const Matrix& m)
{
    if (m.empty())
        return 0;
    return rref(F, m).rank();
}

NullSpace null_space(const PrimeField& F, const Matrix& m)
{
    NullSpace ns;
    const std::size_t C = m.cols();
    if (m.rows() == 0) {
        ns.basis = Matrix::identity(C);
        for (std::size_t c = 0; c < C; ++c)
            ns.free_cols.push_back(c);
        return ns;
    }
    Echelon e = rref(F, m);
    std::vector<bool> is_pivot(C, false);
    for (auto c : e.pivot_cols)
        is_pivot[c] = true;
    for (std::size_t c = 0; c < C; ++c)
        if (!is_pivot[c])
            ns.free_cols.push_back(c);
    ns.basis = Matrix(C, ns.free_cols.size());
    for (std::size_t k = 0; k < ns.free_cols.size(); ++k) {
        std::size_t fc = ns.free_cols[k];
        ns.basis(fc, k) = 1;
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
            ns.basis(e.pivot_cols[r], k) = F.neg(e.reduced(r, fc));
    }
    return ns;
}

Matrix column_space(const PrimeField& F, const Matrix& m)
{
    if (m.empty())
        return Matrix(m.rows(), 0);
    Echelon e = rref(F, transpose(m));
    Matrix basis(m.rows(), e.rank());
    for (std::size_t k = 0; k < e.rank(); ++k)
        for (std::size_t r = 0; r < m.rows(); ++r)
            basis(r, k) = e.reduced(k, r);
    return basis;
}

std::vector<std::size_t> complement_positions(const PrimeField& F, const Matrix& m)
{
    std::vector<bool> is_pivot(m.rows(), false);
    if (!m.empty()) {
        Echelon e = rref(F, transpose(m));
        for (auto c : e.pivot_cols)
            is_pivot[c] = true;
    }
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (!is_pivot[r])
            out.push_back(r);
    return out;
}

bool is_invertible(const PrimeField& F, const Matrix& m)
{
    if (m.rows() != m.cols())
        return false;
    if (m.rows() == 0)
        return true;
    return rank(F, m) == m.rows();
}

}  // namespace brauer
