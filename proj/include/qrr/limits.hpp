#pragma once

// Coefficientwise check of the n -> infinity limits of the Bressoud families
// against the Rogers-Ramanujan product sides, in truncated arithmetic.

#include "qrr/families.hpp"
#include "qrr/qpoly.hpp"
#include "qrr/report.hpp"

namespace qrr {

/// A power series known modulo q^modulus.
class TruncatedSeries {
public:
    /// Reduces poly mod q^modulus; modulus must be positive.
    TruncatedSeries(Exponent modulus, QPoly poly);

    Exponent modulus() const noexcept { return modulus_; }
    const QPoly& poly() const noexcept { return poly_; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    Exponent modulus_;
    QPoly poly_;
};

/// prod_{i>=0} 1/((1-q^{5i+1})(1-q^{5i+4})) for side 1, and the same with
/// parts 5i+2, 5i+3 for side 2, modulo q^M. Throws std::invalid_argument
/// unless side is 1 or 2 and M >= 1.
TruncatedSeries rr_product(int side, Exponent M);

/// Product side matching a Bressoud family: 1 for A/B, 2 for C/D.
int rr_side(Family id);

/// Compares family_poly(id, n) mod q^{n+1} with rr_product(side, n+1).
///
/// The margin n+1 is safe: the k-th summand q^{k^2}[n k] agrees with its
/// limit q^{k^2}/(q;q)_k up to order k^2 + n - k + 1 >= n + 1.
/// Throws std::invalid_argument for families other than A, B, C, D.
VerificationReport limit_check(Family id, long n);

}  // namespace qrr
