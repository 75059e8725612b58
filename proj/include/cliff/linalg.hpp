#ifndef CLIFF_LINALG_HPP
#define CLIFF_LINALG_HPP

#include <optional>
#include <vector>

#include "cliff/rational.hpp"

namespace cliff {

using RatMatrix = std::vector<std::vector<Rational>>;
using RatVector = std::vector<Rational>;

// Rank by fraction-free (Bareiss) elimination on a row-scaled integer copy.
inline int rank_exact(const RatMatrix& a_in) {
    const int rows = static_cast<int>(a_in.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(a_in[0].size());

    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (int i = 0; i < rows; ++i) {
        mpz_class scale = 1;
        for (int j = 0; j < cols; ++j) {
            Rational q = a_in[i][j];
            q.canonicalize();
            mpz_class den = q.get_den();
            scale = scale / gcd(scale, den) * den;
        }
        for (int j = 0; j < cols; ++j) {
            Rational q = a_in[i][j] * Rational(scale);
            q.canonicalize();
            a[i][j] = q.get_num();
        }
    }

    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[r], a[pr]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = t;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

// Solves A x = b over the rationals with deterministic pivoting (first
// nonzero entry scanning rows in order); free variables are set to zero.
// Returns nullopt when the system is inconsistent.
inline std::optional<RatVector> solve_consistent(const RatMatrix& a_in, const RatVector& b_in) {
    const int rows = static_cast<int>(a_in.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a_in[0].size());
    RatMatrix a = a_in;
    RatVector b = b_in;

    std::vector<int> pivot_col_of_row;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (!(a[i][c] == 0)) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[r], a[pr]);
        std::swap(b[r], b[pr]);
        Rational inv = Rational(1) / a[r][c];
        for (int j = c; j < cols; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col_of_row.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (!(b[i] == 0)) return std::nullopt;

    RatVector x(cols, Rational(0));
    for (int i = 0; i < r; ++i) x[pivot_col_of_row[i]] = b[i];
    return x;
}

} // namespace cliff

#endif
