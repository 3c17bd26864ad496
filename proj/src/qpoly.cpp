#include "qrr/qpoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace qrr {

namespace {

void require_nonnegative(Exponent e) {
    if (e < 0) {
        throw std::invalid_argument("negative exponent " + std::to_string(e) + " in QPoly");
    }
}

// Dense buffers are used while the exponent span stays within this factor of
// the number of products; past that a sparse map is cheaper.
constexpr Exponent kDenseSpanFactor = 8;

}  // namespace

QPoly::QPoly(Integer c) {
    if (c != 0) {
        terms_.push_back({0, std::move(c)});
    }
}

QPoly QPoly::monomial(Integer c, Exponent e) {
    require_nonnegative(e);
    if (c == 0) {
        return {};
    }
    return QPoly(std::vector<QTerm>{{e, std::move(c)}});
}

QPoly QPoly::from_terms(std::vector<std::pair<Exponent, Integer>> terms) {
    for (const auto& [e, c] : terms) {
        require_nonnegative(e);
    }
    std::stable_sort(terms.begin(), terms.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<QTerm> out;
    out.reserve(terms.size());
    for (auto& [e, c] : terms) {
        if (!out.empty() && out.back().exponent == e) {
            out.back().coeff += c;
        } else {
            if (!out.empty() && out.back().coeff == 0) {
                out.pop_back();
            }
            out.push_back({e, std::move(c)});
        }
    }
    if (!out.empty() && out.back().coeff == 0) {
        out.pop_back();
    }
    return QPoly(std::move(out));
}

std::optional<Exponent> QPoly::degree() const {
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.back().exponent;
}

std::optional<Exponent> QPoly::low_degree() const {
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.front().exponent;
}

Integer QPoly::coeff(Exponent e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const QTerm& t, Exponent x) { return t.exponent < x; });
    if (it != terms_.end() && it->exponent == e) {
        return it->coeff;
    }
    return 0;
}

QPoly QPoly::operator-() const {
    QPoly out = *this;
    for (auto& t : out.terms_) {
        t.coeff = -t.coeff;
    }
    return out;
}

namespace {

// Merge of two sorted term lists with an optional sign on the right operand.
std::vector<QTerm> merge_terms(const std::vector<QTerm>& a, const std::vector<QTerm>& b, bool subtract) {
    std::vector<QTerm> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].exponent < b[j].exponent)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].exponent < a[i].exponent) {
            out.push_back({b[j].exponent, subtract ? Integer(-b[j].coeff) : b[j].coeff});
            ++j;
        } else {
            Integer c = subtract ? Integer(a[i].coeff - b[j].coeff) : Integer(a[i].coeff + b[j].coeff);
            if (c != 0) {
                out.push_back({a[i].exponent, std::move(c)});
            }
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

QPoly& QPoly::operator+=(const QPoly& other) {
    if (other.is_zero()) {
        return *this;
    }
    terms_ = merge_terms(terms_, other.terms_, false);
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
    if (other.is_zero()) {
        return *this;
    }
    terms_ = merge_terms(terms_, other.terms_, true);
    return *this;
}

QPoly& QPoly::operator*=(const QPoly& other) {
    *this = *this * other;
    return *this;
}

QPoly operator*(const QPoly& lhs, const QPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) {
        return {};
    }
    const Exponent lo = lhs.terms_.front().exponent + rhs.terms_.front().exponent;
    const Exponent hi = lhs.terms_.back().exponent + rhs.terms_.back().exponent;
    const auto products = static_cast<Exponent>(lhs.size() * rhs.size());
    if (hi - lo + 1 <= kDenseSpanFactor * products + 64) {
        std::vector<Integer> dense(static_cast<std::size_t>(hi - lo + 1));
        for (const auto& a : lhs.terms_) {
            for (const auto& b : rhs.terms_) {
                mpz_addmul(dense[static_cast<std::size_t>(a.exponent + b.exponent - lo)].get_mpz_t(),
                           a.coeff.get_mpz_t(), b.coeff.get_mpz_t());
            }
        }
        std::vector<QTerm> out;
        for (std::size_t i = 0; i < dense.size(); ++i) {
            if (dense[i] != 0) {
                out.push_back({lo + static_cast<Exponent>(i), std::move(dense[i])});
            }
        }
        return QPoly(std::move(out));
    }
    std::map<Exponent, Integer> acc;
    for (const auto& a : lhs.terms_) {
        for (const auto& b : rhs.terms_) {
            mpz_addmul(acc[a.exponent + b.exponent].get_mpz_t(), a.coeff.get_mpz_t(), b.coeff.get_mpz_t());
        }
    }
    std::vector<QTerm> out;
    for (auto& [e, c] : acc) {
        if (c != 0) {
            out.push_back({e, std::move(c)});
        }
    }
    return QPoly(std::move(out));
}

QPoly add(const QPoly& p, const QPoly& r) { return p + r; }

QPoly mul(const QPoly& p, const QPoly& r) { return p * r; }

QPoly monomial_mul(const QPoly& p, const Integer& c, Exponent e) {
    require_nonnegative(e);
    if (c == 0 || p.is_zero()) {
        return {};
    }
    std::vector<std::pair<Exponent, Integer>> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
        terms.emplace_back(t.exponent + e, t.coeff * c);
    }
    return QPoly::from_terms(std::move(terms));
}

QPoly truncate(const QPoly& p, Exponent M) {
    std::vector<std::pair<Exponent, Integer>> terms;
    for (const auto& t : p.terms()) {
        if (t.exponent >= M) {
            break;
        }
        terms.emplace_back(t.exponent, t.coeff);
    }
    return QPoly::from_terms(std::move(terms));
}

QPoly truncated_mul(const QPoly& p, const QPoly& r, Exponent M) {
    if (M <= 0) {
        return {};
    }
    DenseAccumulator acc;
    for (const auto& a : p.terms()) {
        if (a.exponent >= M) {
            break;
        }
        for (const auto& b : r.terms()) {
            if (a.exponent + b.exponent >= M) {
                break;
            }
            acc.add_term(a.exponent + b.exponent, a.coeff * b.coeff);
        }
    }
    return acc.release();
}

Integer eval_one(const QPoly& p) {
    Integer sum = 0;
    for (const auto& t : p.terms()) {
        sum += t.coeff;
    }
    return sum;
}

QPoly substitute_power(const QPoly& p, Exponent factor) {
    if (factor <= 0) {
        throw std::invalid_argument("substitute_power needs a positive factor");
    }
    std::vector<std::pair<Exponent, Integer>> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
        terms.emplace_back(t.exponent * factor, t.coeff);
    }
    return QPoly::from_terms(std::move(terms));
}

void DenseAccumulator::reserve_to(Exponent e) {
    if (static_cast<std::size_t>(e) >= coeffs_.size()) {
        coeffs_.resize(static_cast<std::size_t>(e) + 1);
    }
}

void DenseAccumulator::add(const QPoly& p, const Integer& c, Exponent shift) {
    require_nonnegative(shift);
    if (p.is_zero() || c == 0) {
        return;
    }
    reserve_to(*p.degree() + shift);
    for (const auto& t : p.terms()) {
        mpz_addmul(coeffs_[static_cast<std::size_t>(t.exponent + shift)].get_mpz_t(), t.coeff.get_mpz_t(),
                   c.get_mpz_t());
    }
}

void DenseAccumulator::add_term(Exponent e, const Integer& c) {
    require_nonnegative(e);
    reserve_to(e);
    coeffs_[static_cast<std::size_t>(e)] += c;
}

QPoly DenseAccumulator::release() {
    std::vector<QTerm> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) {
            out.push_back({static_cast<Exponent>(i), std::move(coeffs_[i])});
        }
    }
    coeffs_.clear();
    return QPoly(std::move(out));
}

}  // namespace qrr
