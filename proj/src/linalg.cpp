#include "qrr/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace qrr {

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    for (std::size_t c = 0; c < cols_; ++c) {
        std::swap((*this)(a, c), (*this)(b, c));
    }
}

NullspaceResult integer_nullspace(IntMatrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivot_cols;
    std::vector<bool> is_pivot(cols, false);
    Integer prev = 1;
    Integer t;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c) == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        m.swap_rows(p, r);
        const Integer pivot = m(r, c);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) {
                continue;
            }
            const Integer factor = m(i, c);
            // Rows below the pivot row with a zero in column c still need the
            // Bareiss rescale; rows above keep the invariant pivot == prev.
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == c) {
                    continue;
                }
                t = pivot * m(i, j);
                if (factor != 0) {
                    mpz_submul(t.get_mpz_t(), factor.get_mpz_t(), m(r, j).get_mpz_t());
                }
                if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t())) {
                    throw std::logic_error("fraction-free elimination: inexact division");
                }
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, c) = 0;
        }
        prev = pivot;
        pivot_cols.push_back(c);
        is_pivot[c] = true;
        ++r;
    }

    // Now rows 0..r-1 equal prev * RREF on the pivot columns.
    NullspaceResult out;
    out.rank = r;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        std::vector<Integer> v(cols);
        v[f] = prev;
        for (std::size_t i = 0; i < r; ++i) {
            v[pivot_cols[i]] = -m(i, f);
        }
        Integer g = 0;
        for (const auto& x : v) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        }
        for (auto& x : v) {
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        }
        out.basis.push_back(std::move(v));
    }
    return out;
}

}  // namespace qrr
