#include "qrr/bipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qrr {

BiPoly::BiPoly(Integer c) {
    if (c != 0) {
        terms_.push_back({{0, 0}, std::move(c)});
    }
}

BiPoly BiPoly::monomial(Integer c, Exponent qe, Exponent te) {
    return from_terms({{BiExponent{qe, te}, std::move(c)}});
}

BiPoly BiPoly::from_terms(std::vector<std::pair<BiExponent, Integer>> terms) {
    for (const auto& [e, c] : terms) {
        if (e.q < 0 || e.t < 0) {
            throw std::invalid_argument("negative exponent in BiPoly");
        }
    }
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    BiPoly out;
    for (auto& [e, c] : terms) {
        if (!out.terms_.empty() && out.terms_.back().exponent == e) {
            out.terms_.back().coeff += c;
        } else {
            if (!out.terms_.empty() && out.terms_.back().coeff == 0) {
                out.terms_.pop_back();
            }
            out.terms_.push_back({e, std::move(c)});
        }
    }
    if (!out.terms_.empty() && out.terms_.back().coeff == 0) {
        out.terms_.pop_back();
    }
    return out;
}

std::optional<Exponent> BiPoly::q_degree() const {
    if (terms_.empty()) {
        return std::nullopt;
    }
    Exponent d = 0;
    for (const auto& t : terms_) {
        d = std::max(d, t.exponent.q);
    }
    return d;
}

std::optional<Exponent> BiPoly::t_degree() const {
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.back().exponent.t;
}

const BiTerm* BiPoly::leading_term() const { return terms_.empty() ? nullptr : &terms_.back(); }

BiPoly BiPoly::operator-() const {
    BiPoly out = *this;
    for (auto& t : out.terms_) {
        t.coeff = -t.coeff;
    }
    return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
    std::vector<std::pair<BiExponent, Integer>> all;
    all.reserve(size() + other.size());
    for (const auto& t : terms_) {
        all.emplace_back(t.exponent, t.coeff);
    }
    for (const auto& t : other.terms_) {
        all.emplace_back(t.exponent, t.coeff);
    }
    *this = from_terms(std::move(all));
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) { return *this += -other; }

BiPoly& BiPoly::operator*=(const Integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) {
        t.coeff *= c;
    }
    return *this;
}

BiPoly BiPoly::divexact(const Integer& d) const {
    BiPoly out = *this;
    for (auto& t : out.terms_) {
        if (!mpz_divisible_p(t.coeff.get_mpz_t(), d.get_mpz_t())) {
            throw std::logic_error("BiPoly::divexact: divisor does not divide coefficient");
        }
        mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), d.get_mpz_t());
    }
    return out;
}

QPoly bipoly_eval(const BiPoly& c, Exponent n) {
    if (n < 0) {
        throw std::invalid_argument("bipoly_eval needs n >= 0");
    }
    std::vector<std::pair<Exponent, Integer>> terms;
    terms.reserve(c.size());
    for (const auto& t : c.terms()) {
        terms.emplace_back(t.exponent.q + t.exponent.t * n, t.coeff);
    }
    return QPoly::from_terms(std::move(terms));
}

Integer content(const BiPoly& c) {
    Integer g = 0;
    for (const auto& t : c.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    }
    return g;
}

}  // namespace qrr
