#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "graphalg/bigint.hpp"

namespace graphalg {

// Dense matrix over arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntMatrix(size_t rows, size_t cols, std::vector<BigInt> entries);
    static IntMatrix identity(size_t n);
    static IntMatrix from_ints(const std::vector<std::vector<long long>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    BigInt& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const BigInt& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    IntMatrix transpose() const;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    std::vector<BigInt> apply(const std::vector<BigInt>& x) const;  // matrix * column vector

    std::string to_string() const;

private:
    size_t rows_, cols_;
    std::vector<BigInt> a_;
};

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_rank >= 1.
struct SmithForm {
    IntMatrix U, V, D;
    size_t rank = 0;
    std::vector<BigInt> invariant_factors;  // the d_i, including any equal to 1
};

SmithForm smith_normal_form(const IntMatrix& A);

// Exact determinant by Bareiss fraction-free elimination; throws
// std::invalid_argument on a non-square input.
BigInt determinant(const IntMatrix& A);

// Basis of { x : A x = 0 } over the integers, read off the columns of V
// beyond the rank. The vectors extend to a unimodular matrix, hence are
// independent and span the full integer null space.
std::vector<std::vector<BigInt>> kernel_basis(const IntMatrix& A);

// Presentation of Z^rows / column-span(A) as (+) Z/d_i (+) Z^free_rank
// together with the reduction map onto canonical coordinates.
class Cokernel {
public:
    explicit Cokernel(const IntMatrix& A);

    // invariant factors > 1 only
    const std::vector<BigInt>& factors() const { return factors_; }
    size_t free_rank() const { return free_rank_; }
    bool is_trivial() const { return factors_.empty() && free_rank_ == 0; }

    struct Coordinates {
        std::vector<BigInt> torsion;  // aligned with factors(), each in [0, d_i)
        std::vector<BigInt> free_part;
        friend bool operator==(const Coordinates&, const Coordinates&) = default;
    };
    // Image of an integer vector (length = rows of A) in the quotient.
    Coordinates reduce(const std::vector<BigInt>& x) const;

private:
    SmithForm snf_;
    std::vector<BigInt> factors_;
    size_t free_rank_ = 0;
    size_t torsion_start_ = 0;  // index of first invariant factor > 1
};

}  // namespace graphalg
