#pragma once

// Exact sparse univariate polynomials in q with arbitrary-precision integer
// coefficients. Every polynomial value in the library is a QPoly.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qrr {

using Integer = mpz_class;
using Exponent = std::int64_t;

struct QTerm {
    Exponent exponent;
    Integer coeff;

    friend bool operator==(const QTerm&, const QTerm&) = default;
};

/// Sparse polynomial in q. Terms are kept sorted by strictly increasing
/// exponent and never carry a zero coefficient, so structural equality is
/// mathematical equality.
class QPoly {
public:
    QPoly() = default;

    /// Constant polynomial.
    explicit QPoly(Integer c);

    /// c * q^e. Throws std::invalid_argument when e < 0.
    static QPoly monomial(Integer c, Exponent e);

    /// Builds a canonical polynomial from arbitrary (exponent, coefficient)
    /// pairs: duplicates are combined and zeros dropped. Throws
    /// std::invalid_argument on a negative exponent.
    static QPoly from_terms(std::vector<std::pair<Exponent, Integer>> terms);

    static QPoly one() { return QPoly(Integer(1)); }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const std::vector<QTerm>& terms() const noexcept { return terms_; }

    /// Highest exponent; empty for the zero polynomial.
    std::optional<Exponent> degree() const;
    /// Lowest exponent; empty for the zero polynomial.
    std::optional<Exponent> low_degree() const;

    Integer coeff(Exponent e) const;

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& other);
    QPoly& operator-=(const QPoly& other);
    QPoly& operator*=(const QPoly& other);

    friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
    friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }
    friend QPoly operator*(const QPoly& lhs, const QPoly& rhs);
    friend bool operator==(const QPoly&, const QPoly&) = default;

private:
    friend class DenseAccumulator;
    explicit QPoly(std::vector<QTerm> canonical) : terms_(std::move(canonical)) {}

    std::vector<QTerm> terms_;
};

QPoly add(const QPoly& p, const QPoly& r);
QPoly mul(const QPoly& p, const QPoly& r);

/// c * q^e * p. Throws std::invalid_argument when e < 0.
QPoly monomial_mul(const QPoly& p, const Integer& c, Exponent e);

/// p mod q^M.
QPoly truncate(const QPoly& p, Exponent M);

/// Product p*r reduced mod q^M, without forming the discarded terms.
QPoly truncated_mul(const QPoly& p, const QPoly& r, Exponent M);

/// Value at q = 1.
Integer eval_one(const QPoly& p);

/// p(q^factor); factor must be positive.
QPoly substitute_power(const QPoly& p, Exponent factor);

/// Dense scratch buffer for summing many shifted polynomials. Coefficients
/// live in a vector indexed by exponent; release() converts back to the
/// sparse canonical form.
class DenseAccumulator {
public:
    DenseAccumulator() = default;

    /// this += c * q^shift * p
    void add(const QPoly& p, const Integer& c = 1, Exponent shift = 0);
    void add_term(Exponent e, const Integer& c);

    QPoly release();

private:
    void reserve_to(Exponent e);

    std::vector<Integer> coeffs_;
};

}  // namespace qrr
