#include "knotforge/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace knotforge::ring {

RingMatrix RingMatrix::identity(int n, int rank) {
    RingMatrix m(n, n, rank);
    for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::constant(1, rank);
    return m;
}

RingMatrix RingMatrix::operator*(const RingMatrix& o) const {
    if (cols_ != o.rows_ || rank_ != o.rank_) throw InvalidArgument("shape mismatch in *");
    RingMatrix r(rows_, o.cols_, rank_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
            }
        }
    return r;
}

RingMatrix RingMatrix::operator+(const RingMatrix& o) const {
    if (cols_ != o.cols_ || rows_ != o.rows_) throw InvalidArgument("shape mismatch in +");
    RingMatrix r(rows_, cols_, rank_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
    return r;
}

RingMatrix RingMatrix::operator-(const RingMatrix& o) const {
    if (cols_ != o.cols_ || rows_ != o.rows_) throw InvalidArgument("shape mismatch in -");
    RingMatrix r(rows_, cols_, rank_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
    return r;
}

RingMatrix RingMatrix::without_columns(int first_col, int count) const {
    RingMatrix r(rows_, cols_ - count, rank_);
    for (int i = 0; i < rows_; ++i) {
        int jj = 0;
        for (int j = 0; j < cols_; ++j) {
            if (j >= first_col && j < first_col + count) continue;
            r.at(i, jj++) = at(i, j);
        }
    }
    return r;
}

LaurentPoly RingMatrix::det_bareiss() const {
    if (rows_ != cols_) throw InvalidArgument("determinant of non-square matrix");
    const int n = rows_;
    if (n == 0) return LaurentPoly::constant(1, rank_);
    std::vector<LaurentPoly> m(e_);
    auto cell = [&](int i, int j) -> LaurentPoly& {
        return m[static_cast<size_t>(i) * n + j];
    };
    int sign = 1;
    LaurentPoly prev = LaurentPoly::constant(1, rank_);
    for (int k = 0; k + 1 < n; ++k) {
        if (cell(k, k).is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!cell(i, k).is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) return LaurentPoly::zero(rank_);
            for (int j = 0; j < n; ++j) std::swap(cell(k, j), cell(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                cell(i, j) = (cell(i, j) * cell(k, k) - cell(i, k) * cell(k, j))
                                 .div_exact(prev);
        prev = cell(k, k);
    }
    LaurentPoly d = cell(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

LaurentPoly RingMatrix::det_cofactor() const {
    if (rows_ != cols_) throw InvalidArgument("determinant of non-square matrix");
    const int n = rows_;
    if (n == 0) return LaurentPoly::constant(1, rank_);
    if (n == 1) return at(0, 0);
    LaurentPoly d(rank_);
    for (int j = 0; j < n; ++j) {
        if (at(0, j).is_zero()) continue;
        RingMatrix sub(n - 1, n - 1, rank_);
        for (int i = 1; i < n; ++i) {
            int jj = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(i - 1, jj++) = at(i, c);
            }
        }
        LaurentPoly term = at(0, j) * sub.det_cofactor();
        d = (j % 2 == 0) ? d + term : d - term;
    }
    return d;
}

namespace {

// sparse row view used by the minor-gcd reduction
struct Rows {
    int cols;
    int rank;
    std::vector<std::vector<LaurentPoly>> r;
};

bool is_unit_entry(const LaurentPoly& p) { return p.is_unit(); }

void drop_zero_rows(Rows& R) {
    auto zero = [](const std::vector<LaurentPoly>& row) {
        return std::all_of(row.begin(), row.end(),
                           [](const LaurentPoly& p) { return p.is_zero(); });
    };
    std::erase_if(R.r, zero);
}

// Eliminate with unit pivots. A unit entry u at (i,j): clear column j with
// exact row operations, then delete row i and column j. The gcd of maximal
// minors is unchanged (minors through row i pick up the unit factor, minors
// avoiding it vanish on the zeroed column).
void unit_pivot_reduce(Rows& R) {
    for (;;) {
        drop_zero_rows(R);
        if (R.cols == 0 || R.r.empty()) return;
        int pi = -1, pj = -1;
        // prefer the unit in the sparsest column to limit fill-in
        std::vector<int> colcount(static_cast<size_t>(R.cols), 0);
        for (const auto& row : R.r)
            for (int j = 0; j < R.cols; ++j)
                if (!row[static_cast<size_t>(j)].is_zero()) ++colcount[static_cast<size_t>(j)];
        int best = -1;
        for (size_t i = 0; i < R.r.size(); ++i)
            for (int j = 0; j < R.cols; ++j) {
                const auto& p = R.r[i][static_cast<size_t>(j)];
                if (!p.is_zero() && is_unit_entry(p)) {
                    int score = colcount[static_cast<size_t>(j)];
                    if (best < 0 || score < best) {
                        best = score;
                        pi = static_cast<int>(i);
                        pj = j;
                    }
                }
            }
        if (pi < 0) return;
        const LaurentPoly pivot = R.r[static_cast<size_t>(pi)][static_cast<size_t>(pj)];
        for (size_t i = 0; i < R.r.size(); ++i) {
            if (static_cast<int>(i) == pi) continue;
            const LaurentPoly& a = R.r[i][static_cast<size_t>(pj)];
            if (a.is_zero()) continue;
            const LaurentPoly q = a.div_exact(pivot);
            for (int j = 0; j < R.cols; ++j) {
                if (j == pj) {
                    R.r[i][static_cast<size_t>(j)] = LaurentPoly::zero(R.rank);
                    continue;
                }
                const auto& pr = R.r[static_cast<size_t>(pi)][static_cast<size_t>(j)];
                if (!pr.is_zero())
                    R.r[i][static_cast<size_t>(j)] =
                        R.r[i][static_cast<size_t>(j)] - q * pr;
            }
        }
        R.r.erase(R.r.begin() + pi);
        for (auto& row : R.r) row.erase(row.begin() + pj);
        --R.cols;
    }
}

constexpr uint64_t kMinorBudget = 2'000'000;

uint64_t binom_capped(uint64_t n, uint64_t k, uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    uint64_t r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        if (r > cap) return cap + 1;
        r = r * (n - k + i) / i;
    }
    return r;
}

LaurentPoly gcd_over_row_subsets(const Rows& R) {
    const int n = R.cols;
    const int rows = static_cast<int>(R.r.size());
    if (rows < n) return LaurentPoly::zero(R.rank);
    if (R.rank != 1 && rows != n)
        throw UnsupportedRank("minor gcd over several minors needs rank 1");
    if (binom_capped(static_cast<uint64_t>(rows), static_cast<uint64_t>(n),
                     kMinorBudget) > kMinorBudget)
        throw ComputationTooLarge("too many maximal minors to enumerate");
    std::vector<int> sel(static_cast<size_t>(n));
    std::iota(sel.begin(), sel.end(), 0);
    LaurentPoly g(R.rank);
    for (;;) {
        RingMatrix sq(n, n, R.rank);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                sq.at(i, j) = R.r[static_cast<size_t>(sel[static_cast<size_t>(i)])]
                                 [static_cast<size_t>(j)];
        LaurentPoly d = sq.det_bareiss();
        if (!d.is_zero()) {
            if (R.rank == 1)
                g = g.is_zero() ? lp_normalize(d) : lp_gcd(g, d);
            else
                g = lp_normalize(d); // single minor case
            if (g.is_unit()) return lp_normalize(g);
        }
        // next combination
        int i = n - 1;
        while (i >= 0 && sel[static_cast<size_t>(i)] == rows - n + i) --i;
        if (i < 0) break;
        ++sel[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            sel[static_cast<size_t>(j)] = sel[static_cast<size_t>(j - 1)] + 1;
    }
    return lp_normalize(g);
}

} // namespace

LaurentPoly maximal_minor_gcd(const RingMatrix& A) {
    Rows R{A.cols(), A.rank(), {}};
    R.r.reserve(static_cast<size_t>(A.rows()));
    for (int i = 0; i < A.rows(); ++i) {
        std::vector<LaurentPoly> row;
        row.reserve(static_cast<size_t>(A.cols()));
        for (int j = 0; j < A.cols(); ++j) row.push_back(A.at(i, j));
        R.r.push_back(std::move(row));
    }
    unit_pivot_reduce(R);
    if (R.cols == 0) return LaurentPoly::constant(1, A.rank());
    if (static_cast<int>(R.r.size()) < R.cols) return LaurentPoly::zero(A.rank());
    return gcd_over_row_subsets(R);
}

LaurentPoly ringmat_minor_gcd(const RingMatrix& A, int n) {
    if (n < 0 || n > std::min(A.rows(), A.cols()))
        throw InvalidArgument("minor size out of range");
    if (n == 0) return LaurentPoly::constant(1, A.rank());
    if (n == A.cols()) return maximal_minor_gcd(A);
    if (A.rank() != 1) throw UnsupportedRank("minor gcd needs rank 1");
    const uint64_t count =
        binom_capped(static_cast<uint64_t>(A.rows()), static_cast<uint64_t>(n),
                     kMinorBudget) *
        binom_capped(static_cast<uint64_t>(A.cols()), static_cast<uint64_t>(n),
                     kMinorBudget);
    if (count > kMinorBudget) throw ComputationTooLarge("too many minors");
    std::vector<int> rsel(static_cast<size_t>(n)), csel(static_cast<size_t>(n));
    LaurentPoly g(A.rank());
    std::iota(rsel.begin(), rsel.end(), 0);
    for (;;) {
        std::iota(csel.begin(), csel.end(), 0);
        for (;;) {
            RingMatrix sq(n, n, A.rank());
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    sq.at(i, j) = A.at(rsel[static_cast<size_t>(i)],
                                       csel[static_cast<size_t>(j)]);
            LaurentPoly d = sq.det_bareiss();
            if (!d.is_zero()) {
                g = g.is_zero() ? lp_normalize(d) : lp_gcd(g, d);
                if (g.is_unit()) return lp_normalize(g);
            }
            int i = n - 1;
            while (i >= 0 && csel[static_cast<size_t>(i)] == A.cols() - n + i) --i;
            if (i < 0) break;
            ++csel[static_cast<size_t>(i)];
            for (int j = i + 1; j < n; ++j)
                csel[static_cast<size_t>(j)] = csel[static_cast<size_t>(j - 1)] + 1;
        }
        int i = n - 1;
        while (i >= 0 && rsel[static_cast<size_t>(i)] == A.rows() - n + i) --i;
        if (i < 0) break;
        ++rsel[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            rsel[static_cast<size_t>(j)] = rsel[static_cast<size_t>(j - 1)] + 1;
    }
    return lp_normalize(g);
}

// ---------------------------------------------------------------------------
// integer matrices
// ---------------------------------------------------------------------------

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw InvalidArgument("shape mismatch in *");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

std::vector<BigInt> smith_normal_form(IntMatrix M) {
    const int R = M.rows(), C = M.cols();
    const int n = std::min(R, C);
    int t = 0;
    for (; t < n; ++t) {
        // pivot: smallest nonzero absolute value in the remaining block
        int pi = -1, pj = -1;
        BigInt best = 0;
        for (int i = t; i < R; ++i)
            for (int j = t; j < C; ++j) {
                if (M.at(i, j) == 0) continue;
                BigInt a = big_abs(M.at(i, j));
                if (pi < 0 || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        for (int j = 0; j < C; ++j) std::swap(M.at(t, j), M.at(pi, j));
        for (int i = 0; i < R; ++i) std::swap(M.at(i, t), M.at(i, pj));
        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < R; ++i) {
                if (M.at(i, t) == 0) continue;
                BigInt q = M.at(i, t) / M.at(t, t);
                if (q != 0)
                    for (int j = t; j < C; ++j) M.at(i, j) -= q * M.at(t, j);
                if (M.at(i, t) != 0) {
                    for (int j = t; j < C; ++j) std::swap(M.at(t, j), M.at(i, j));
                    clean = false;
                }
            }
            for (int j = t + 1; j < C; ++j) {
                if (M.at(t, j) == 0) continue;
                BigInt q = M.at(t, j) / M.at(t, t);
                if (q != 0)
                    for (int i = t; i < R; ++i) M.at(i, j) -= q * M.at(i, t);
                if (M.at(t, j) != 0) {
                    for (int i = t; i < R; ++i) std::swap(M.at(i, t), M.at(i, j));
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility: pivot must divide the rest of the block
            bool fixed = false;
            for (int i = t + 1; i < R && !fixed; ++i)
                for (int j = t + 1; j < C && !fixed; ++j)
                    if (M.at(i, j) % M.at(t, t) != 0) {
                        for (int jj = t; jj < C; ++jj) M.at(t, jj) += M.at(i, jj);
                        fixed = true;
                    }
            if (!fixed) break;
        }
    }
    std::vector<BigInt> d;
    for (int i = 0; i < t; ++i) d.push_back(big_abs(M.at(i, i)));
    return d;
}

int int_rank(IntMatrix M) {
    const int R = M.rows(), C = M.cols();
    int rank = 0;
    for (int col = 0; col < C && rank < R; ++col) {
        int piv = -1;
        for (int i = rank; i < R; ++i)
            if (M.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < C; ++j) std::swap(M.at(rank, j), M.at(piv, j));
        for (int i = rank + 1; i < R; ++i) {
            if (M.at(i, col) == 0) continue;
            BigInt a = M.at(rank, col), b = M.at(i, col);
            BigInt g = big_gcd(big_abs(a), big_abs(b));
            BigInt fa = a / g, fb = b / g;
            for (int j = 0; j < C; ++j)
                M.at(i, j) = M.at(i, j) * fa - M.at(rank, j) * fb;
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<BigInt>> int_kernel(const IntMatrix& M) {
    const int R = M.rows(), C = M.cols();
    // rational row reduction of M, tracking pivot columns
    std::vector<std::vector<BigRat>> A(static_cast<size_t>(R),
                                       std::vector<BigRat>(static_cast<size_t>(C)));
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < C; ++j) A[static_cast<size_t>(i)][static_cast<size_t>(j)] = BigRat(M.at(i, j));
    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < C && r < R; ++col) {
        int piv = -1;
        for (int i = r; i < R; ++i)
            if (A[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(A[static_cast<size_t>(r)], A[static_cast<size_t>(piv)]);
        BigRat p = A[static_cast<size_t>(r)][static_cast<size_t>(col)];
        for (int j = 0; j < C; ++j) A[static_cast<size_t>(r)][static_cast<size_t>(j)] /= p;
        for (int i = 0; i < R; ++i) {
            if (i == r) continue;
            BigRat f = A[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int j = 0; j < C; ++j)
                A[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    f * A[static_cast<size_t>(r)][static_cast<size_t>(j)];
        }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<std::vector<BigInt>> basis;
    std::vector<bool> is_pivot(static_cast<size_t>(C), false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    for (int freecol = 0; freecol < C; ++freecol) {
        if (is_pivot[static_cast<size_t>(freecol)]) continue;
        std::vector<BigRat> v(static_cast<size_t>(C), BigRat(0));
        v[static_cast<size_t>(freecol)] = 1;
        for (int i = 0; i < r; ++i)
            v[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] =
                -A[static_cast<size_t>(i)][static_cast<size_t>(freecol)];
        // clear denominators, make primitive
        BigInt lcm = 1;
        for (const auto& x : v)
            lcm = lcm / big_gcd(lcm, boost::multiprecision::denominator(x)) *
                  boost::multiprecision::denominator(x);
        std::vector<BigInt> w(static_cast<size_t>(C));
        BigInt g = 0;
        for (int j = 0; j < C; ++j) {
            w[static_cast<size_t>(j)] =
                boost::multiprecision::numerator(v[static_cast<size_t>(j)]) *
                (lcm / boost::multiprecision::denominator(v[static_cast<size_t>(j)]));
            g = big_gcd(g, big_abs(w[static_cast<size_t>(j)]));
        }
        if (g > 1)
            for (auto& x : w) x /= g;
        basis.push_back(std::move(w));
    }
    return basis;
}

} // namespace knotforge::ring
