#pragma once

// Bivariate polynomials in (q, t); t stands for q^n in recurrence coefficients.

#include <optional>
#include <utility>
#include <vector>

#include "qrr/qpoly.hpp"

namespace qrr {

struct BiExponent {
    Exponent q = 0;
    Exponent t = 0;

    // Ordered by t-degree first, then q-degree.
    friend auto operator<=>(const BiExponent& a, const BiExponent& b) {
        if (auto c = a.t <=> b.t; c != 0) {
            return c;
        }
        return a.q <=> b.q;
    }
    friend bool operator==(const BiExponent&, const BiExponent&) = default;
};

struct BiTerm {
    BiExponent exponent;
    Integer coeff;

    friend bool operator==(const BiTerm&, const BiTerm&) = default;
};

class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(Integer c);

    /// c * q^qe * t^te. Throws std::invalid_argument on negative exponents.
    static BiPoly monomial(Integer c, Exponent qe, Exponent te);
    static BiPoly from_terms(std::vector<std::pair<BiExponent, Integer>> terms);

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    /// Sorted ascending by (t, q).
    const std::vector<BiTerm>& terms() const noexcept { return terms_; }

    std::optional<Exponent> q_degree() const;
    std::optional<Exponent> t_degree() const;
    /// Greatest term in (t, q) order.
    const BiTerm* leading_term() const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& other);
    BiPoly& operator-=(const BiPoly& other);
    BiPoly& operator*=(const Integer& c);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    /// Exact division of every coefficient by d; d must divide them all.
    BiPoly divexact(const Integer& d) const;

private:
    std::vector<BiTerm> terms_;
};

/// Substitutes t <- q^n.
QPoly bipoly_eval(const BiPoly& c, Exponent n);

/// gcd of all coefficients (nonnegative; 0 for the zero polynomial).
Integer content(const BiPoly& c);

}  // namespace qrr
