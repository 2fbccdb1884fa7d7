#include "hklat/matrix.hpp"

#include <gmpxx.h>

namespace hklat {

int rank_bareiss(const Mat<Rat>& m) {
    int rows = m.rows(), cols = m.cols();
    // Clear denominators per row.
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (int i = 0; i < rows; ++i) {
        mpz_class l(1);
        for (int j = 0; j < cols; ++j) {
            mpz_class d = m.at(i, j).denominator();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (int j = 0; j < cols; ++j) {
            const Rat& x = m.at(i, j);
            a[i][j] = x.numerator() * (l / x.denominator());
        }
    }
    mpz_class prev(1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i) {
            if (a[i][c] != 0) { p = i; break; }
        }
        if (p < 0) continue;
        if (p != r) std::swap(a[p], a[r]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                mpz_class t = a[i][j] * a[r][c] - a[i][c] * a[r][j];
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

int rank(const Mat<Rat>& m) { return rank_bareiss(m); }

int rank(const Mat<GaussRat>& m) { return rank_gauss(m); }

Signature signature(const Mat<Rat>& gram) {
    if (gram.rows() != gram.cols()) throw DimensionMismatch("signature: matrix not square");
    int n = gram.rows();
    Mat<Rat> a = gram;
    Signature sig;
    auto swap_sym = [&](int p, int q) {
        if (p == q) return;
        for (int t = 0; t < n; ++t) std::swap(a.at(p, t), a.at(q, t));
        for (int t = 0; t < n; ++t) std::swap(a.at(t, p), a.at(t, q));
    };
    // Congruence diagonalization: symmetric row+column operations.
    for (int k = 0; k < n; ++k) {
        if (a.at(k, k).is_zero()) {
            int d = -1;
            for (int t = k + 1; t < n; ++t)
                if (!a.at(t, t).is_zero()) { d = t; break; }
            if (d >= 0) {
                swap_sym(k, d);
            } else {
                // Remaining diagonal is all zero; a nonzero pair (s,t) yields a
                // nonzero diagonal entry 2 a[s][t] after mixing t into s.
                int s = -1, t = -1;
                for (int p = k; p < n && s < 0; ++p)
                    for (int q = p + 1; q < n; ++q)
                        if (!a.at(p, q).is_zero()) { s = p; t = q; break; }
                if (s < 0) {
                    sig.zero += n - k;
                    break;
                }
                for (int c = 0; c < n; ++c) a.at(s, c) += a.at(t, c);
                for (int c = 0; c < n; ++c) a.at(c, s) += a.at(c, t);
                swap_sym(k, s);
            }
        }
        Rat d = a.at(k, k);
        if (d.sign() > 0) sig.positive += 1;
        else sig.negative += 1;
        for (int i = k + 1; i < n; ++i) {
            if (a.at(i, k).is_zero()) continue;
            Rat f = a.at(i, k) / d;
            for (int t = 0; t < n; ++t) a.at(i, t) -= f * a.at(k, t);
            for (int t = 0; t < n; ++t) a.at(t, i) -= f * a.at(t, k);
        }
    }
    return sig;
}

}  // namespace hklat
