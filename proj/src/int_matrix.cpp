#include "twistkit/int_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace twistkit {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0)) {}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntVec IntMatrix::column(std::size_t c) const
{
    IntVec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void IntMatrix::set_column(std::size_t c, const IntVec& v)
{
    if (v.size() != rows_) throw std::invalid_argument("set_column: length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntVec IntMatrix::apply(const IntVec& v) const
{
    if (v.size() != cols_) throw std::invalid_argument("apply: length mismatch");
    IntVec out(rows_, BigInt(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (v[c] != 0) out[r] += (*this)(r, c) * v[c];
    return out;
}

bool IntMatrix::is_identity() const
{
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

BigInt IntMatrix::determinant() const
{
    if (rows_ != cols_) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

IntMatrix IntMatrix::unimodular_inverse() const
{
    if (rows_ != cols_) throw std::invalid_argument("unimodular_inverse: matrix not square");
    const std::size_t n = rows_;
    std::vector<mpq_class> a(n * 2 * n);
    auto at = [&](std::size_t r, std::size_t c) -> mpq_class& { return a[r * 2 * n + c]; };
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) at(r, c) = mpq_class((*this)(r, c));
        at(r, n + r) = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && at(p, k) == 0) ++p;
        if (p == n) throw std::domain_error("unimodular_inverse: singular matrix");
        if (p != k)
            for (std::size_t c = 0; c < 2 * n; ++c) std::swap(at(k, c), at(p, c));
        const mpq_class pivot = at(k, k);
        for (std::size_t c = 0; c < 2 * n; ++c) at(k, c) /= pivot;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == k || at(r, k) == 0) continue;
            const mpq_class f = at(r, k);
            for (std::size_t c = 0; c < 2 * n; ++c) at(r, c) -= f * at(k, c);
        }
    }
    IntMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            mpq_class q = at(r, n + c);
            q.canonicalize();
            if (q.get_den() != 1) throw std::domain_error("unimodular_inverse: determinant is not +-1");
            inv(r, c) = q.get_num();
        }
    }
    return inv;
}

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << '[';
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c).get_str();
        os << "]\n";
    }
    return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const BigInt& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: dimension mismatch");
    IntMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

}  // namespace twistkit
