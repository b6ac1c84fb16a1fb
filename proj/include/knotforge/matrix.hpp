#ifndef KNOTFORGE_MATRIX_HPP
#define KNOTFORGE_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "knotforge/laurent.hpp"

namespace knotforge::ring {

// Dense matrix over Z[F]. All entries share the ambient rank.
class RingMatrix {
public:
    RingMatrix(int rows, int cols, int rank = 1)
        : rows_(rows), cols_(cols), rank_(rank),
          e_(static_cast<size_t>(rows) * static_cast<size_t>(cols), LaurentPoly(rank)) {
        if (rows < 0 || cols < 0) throw InvalidArgument("negative matrix shape");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int rank() const { return rank_; }

    LaurentPoly& at(int i, int j) { return e_[idx(i, j)]; }
    const LaurentPoly& at(int i, int j) const { return e_[idx(i, j)]; }

    RingMatrix operator*(const RingMatrix& o) const;
    RingMatrix operator+(const RingMatrix& o) const;
    RingMatrix operator-(const RingMatrix& o) const;
    static RingMatrix identity(int n, int rank = 1);
    bool operator==(const RingMatrix& o) const = default;

    // determinant by fraction-free (Bareiss) elimination; square only
    LaurentPoly det_bareiss() const;
    // determinant by cofactor expansion (oracle for tests; small matrices)
    LaurentPoly det_cofactor() const;

    RingMatrix without_columns(int first_col, int count) const;

private:
    size_t idx(int i, int j) const {
        return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
    }
    int rows_, cols_, rank_;
    std::vector<LaurentPoly> e_;
};

// gcd of all n x n minors, canonically normalized; 1 for n == 0, 0 when all
// minors vanish. Enumerates minors (fraction-free determinant each); when
// n == cols <= rows, unit-pivot reduction shrinks the matrix first, which is
// what makes Wirtinger-sized twisted matrices tractable.
LaurentPoly ringmat_minor_gcd(const RingMatrix& A, int n);

// gcd of all cols x cols minors (rows >= cols); 0 if rank deficient
LaurentPoly maximal_minor_gcd(const RingMatrix& A);

// -- integer matrices ---------------------------------------------------------

class IntMatrix {
public:
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          e_(static_cast<size_t>(rows) * static_cast<size_t>(cols), BigInt(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    BigInt& at(int i, int j) { return e_[idx(i, j)]; }
    const BigInt& at(int i, int j) const { return e_[idx(i, j)]; }

    static IntMatrix identity(int n);
    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const = default;

private:
    size_t idx(int i, int j) const {
        return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
    }
    int rows_, cols_;
    std::vector<BigInt> e_;
};

// invariant factors d_1 | d_2 | ... | d_r (positive, nonzero ones only)
std::vector<BigInt> smith_normal_form(IntMatrix M);

// basis of the integer kernel {v : M v = 0}, primitive vectors
std::vector<std::vector<BigInt>> int_kernel(const IntMatrix& M);

// rank over Q
int int_rank(IntMatrix M);

} // namespace knotforge::ring

#endif
