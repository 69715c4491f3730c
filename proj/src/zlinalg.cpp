#include "graphalg/zlinalg.hpp"

#include <sstream>
#include <stdexcept>

namespace graphalg {

IntMatrix::IntMatrix(size_t rows, size_t cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_)
        throw std::invalid_argument("IntMatrix: entry count does not match shape");
}

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = BigInt(1);
    return m;
}

IntMatrix IntMatrix::from_ints(const std::vector<std::vector<long long>>& rows) {
    size_t r = rows.size(), c = r ? rows[0].size() : 0;
    IntMatrix m(r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("IntMatrix: ragged rows");
        for (size_t j = 0; j < c; ++j) m.at(i, j) = BigInt(rows[i][j]);
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
    IntMatrix r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (size_t j = 0; j < b.cols_; ++j)
                r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("IntMatrix: shape mismatch in difference");
    IntMatrix r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
    return r;
}

std::vector<BigInt> IntMatrix::apply(const std::vector<BigInt>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("IntMatrix: vector length mismatch");
    std::vector<BigInt> y(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) y[i] += at(i, j) * x[j];
    return y;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        os << (i ? "\n[" : "[");
        for (size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
        os << "]";
    }
    return os.str();
}

namespace {

struct SnfState {
    IntMatrix D, U, V;

    void row_swap(size_t i, size_t j) {
        if (i == j) return;
        for (size_t c = 0; c < D.cols(); ++c) std::swap(D.at(i, c), D.at(j, c));
        for (size_t c = 0; c < U.cols(); ++c) std::swap(U.at(i, c), U.at(j, c));
    }
    void col_swap(size_t i, size_t j) {
        if (i == j) return;
        for (size_t r = 0; r < D.rows(); ++r) std::swap(D.at(r, i), D.at(r, j));
        for (size_t r = 0; r < V.rows(); ++r) std::swap(V.at(r, i), V.at(r, j));
    }
    // row i -= q * row k
    void row_sub(size_t i, size_t k, const BigInt& q) {
        if (q.is_zero()) return;
        for (size_t c = 0; c < D.cols(); ++c) D.at(i, c) -= q * D.at(k, c);
        for (size_t c = 0; c < U.cols(); ++c) U.at(i, c) -= q * U.at(k, c);
    }
    // col j -= q * col k
    void col_sub(size_t j, size_t k, const BigInt& q) {
        if (q.is_zero()) return;
        for (size_t r = 0; r < D.rows(); ++r) D.at(r, j) -= q * D.at(r, k);
        for (size_t r = 0; r < V.rows(); ++r) V.at(r, j) -= q * V.at(r, k);
    }
    void row_negate(size_t i) {
        for (size_t c = 0; c < D.cols(); ++c) D.at(i, c) = -D.at(i, c);
        for (size_t c = 0; c < U.cols(); ++c) U.at(i, c) = -U.at(i, c);
    }
    // add col k to col j (used while fixing the divisibility chain)
    void col_add(size_t j, size_t k) {
        for (size_t r = 0; r < D.rows(); ++r) D.at(r, j) += D.at(r, k);
        for (size_t r = 0; r < V.rows(); ++r) V.at(r, j) += V.at(r, k);
    }
};

// Smallest nonzero |entry| in D[t.., t..], ties broken row-major.
bool find_pivot(const IntMatrix& D, size_t t, size_t& pi, size_t& pj) {
    bool found = false;
    BigInt best;
    for (size_t i = t; i < D.rows(); ++i)
        for (size_t j = t; j < D.cols(); ++j) {
            const BigInt& e = D.at(i, j);
            if (e.is_zero()) continue;
            BigInt a = e.abs();
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A) {
    SnfState s{A, IntMatrix::identity(A.rows()), IntMatrix::identity(A.cols())};
    size_t n = std::min(A.rows(), A.cols());
    size_t rank = 0;

    for (size_t t = 0; t < n; ++t) {
        size_t pi, pj;
        if (!find_pivot(s.D, t, pi, pj)) break;
        s.row_swap(t, pi);
        s.col_swap(t, pj);

        // clear row t and column t; remainders become new, smaller pivots
        for (;;) {
            bool clean = true;
            for (size_t i = t + 1; i < s.D.rows(); ++i) {
                if (s.D.at(i, t).is_zero()) continue;
                BigInt q = BigInt::divmod(s.D.at(i, t), s.D.at(t, t)).first;
                s.row_sub(i, t, q);
                if (!s.D.at(i, t).is_zero()) {
                    s.row_swap(t, i);  // remainder is strictly smaller
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < s.D.cols(); ++j) {
                if (s.D.at(t, j).is_zero()) continue;
                BigInt q = BigInt::divmod(s.D.at(t, j), s.D.at(t, t)).first;
                s.col_sub(j, t, q);
                if (!s.D.at(t, j).is_zero()) {
                    s.col_swap(t, j);
                    clean = false;
                }
            }
            if (clean) break;
        }
        if (s.D.at(t, t).sign() < 0) s.row_negate(t);
        ++rank;
    }

    // enforce d_1 | d_2 | ... | d_rank
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t i = 0; i + 1 < rank; ++i) {
            const BigInt& a = s.D.at(i, i);
            const BigInt& b = s.D.at(i + 1, i + 1);
            if (BigInt::divmod(b, a).second.is_zero()) continue;
            changed = true;
            // stack the pair into a 2x2 block and rediagonalize it
            s.col_add(i, i + 1);
            for (;;) {
                bool clean = true;
                if (!s.D.at(i + 1, i).is_zero()) {
                    BigInt q = BigInt::divmod(s.D.at(i + 1, i), s.D.at(i, i)).first;
                    s.row_sub(i + 1, i, q);
                    if (!s.D.at(i + 1, i).is_zero()) {
                        s.row_swap(i, i + 1);
                        clean = false;
                    }
                }
                if (!s.D.at(i, i + 1).is_zero()) {
                    BigInt q = BigInt::divmod(s.D.at(i, i + 1), s.D.at(i, i)).first;
                    s.col_sub(i + 1, i, q);
                    if (!s.D.at(i, i + 1).is_zero()) {
                        s.col_swap(i, i + 1);
                        clean = false;
                    }
                }
                if (clean) break;
            }
            if (s.D.at(i, i).sign() < 0) s.row_negate(i);
            if (s.D.at(i + 1, i + 1).sign() < 0) s.row_negate(i + 1);
        }
    }

    SmithForm out;
    out.rank = rank;
    out.invariant_factors.reserve(rank);
    for (size_t i = 0; i < rank; ++i) out.invariant_factors.push_back(s.D.at(i, i));
    out.U = std::move(s.U);
    out.V = std::move(s.V);
    out.D = std::move(s.D);
    return out;
}

BigInt determinant(const IntMatrix& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("determinant: non-square matrix");
    size_t n = A.rows();
    if (n == 0) return BigInt(1);
    IntMatrix m = A;
    BigInt prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            size_t piv = k + 1;
            while (piv < n && m.at(piv, k).is_zero()) ++piv;
            if (piv == n) return BigInt(0);
            for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m.at(i, j) = BigInt::exact_div(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
        prev = m.at(k, k);
    }
    BigInt d = m.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

std::vector<std::vector<BigInt>> kernel_basis(const IntMatrix& A) {
    SmithForm f = smith_normal_form(A);
    std::vector<std::vector<BigInt>> basis;
    for (size_t j = f.rank; j < A.cols(); ++j) {
        std::vector<BigInt> v(A.cols());
        for (size_t i = 0; i < A.cols(); ++i) v[i] = f.V.at(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

Cokernel::Cokernel(const IntMatrix& A) : snf_(smith_normal_form(A)) {
    free_rank_ = A.rows() - snf_.rank;
    torsion_start_ = snf_.rank;
    for (size_t i = 0; i < snf_.rank; ++i) {
        if (!snf_.invariant_factors[i].is_one()) {
            torsion_start_ = i;
            for (size_t k = i; k < snf_.rank; ++k)
                factors_.push_back(snf_.invariant_factors[k]);
            break;
        }
    }
}

Cokernel::Coordinates Cokernel::reduce(const std::vector<BigInt>& x) const {
    std::vector<BigInt> y = snf_.U.apply(x);
    Coordinates c;
    c.torsion.reserve(factors_.size());
    for (size_t i = torsion_start_; i < snf_.rank; ++i)
        c.torsion.push_back(BigInt::mod_floor(y[i], snf_.invariant_factors[i]));
    c.free_part.assign(y.begin() + static_cast<std::ptrdiff_t>(snf_.rank), y.end());
    return c;
}

}  // namespace graphalg
