#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace twistkit {

using BigInt = mpz_class;
using IntVec = std::vector<BigInt>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVec column(std::size_t c) const;
    void set_column(std::size_t c, const IntVec& v);

    IntMatrix transposed() const;
    IntVec apply(const IntVec& v) const;

    bool is_identity() const;

    // Exact determinant (Bareiss fraction-free elimination). Square only.
    BigInt determinant() const;

    // Inverse of a matrix with determinant +-1; throws std::domain_error otherwise.
    IntMatrix unimodular_inverse() const;

    std::string to_string() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

}  // namespace twistkit
