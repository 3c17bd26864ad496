#include "qrr/recurrence.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "qrr/linalg.hpp"

namespace qrr {

namespace {

// Dense univariate polynomials over Z, index = exponent of q. Used to strip
// a common factor in q from guessed coefficients.
using Dense = std::vector<Integer>;

void trim(Dense& p) {
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

Dense primitive(Dense p) {
    trim(p);
    Integer g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (p.empty()) {
        return p;
    }
    if (p.back() < 0) {
        g = -g;
    }
    for (auto& c : p) {
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
    return p;
}

Dense pseudo_remainder(Dense a, const Dense& b) {
    while (a.size() >= b.size()) {
        const Integer la = a.back();
        const std::size_t shift = a.size() - b.size();
        for (auto& c : a) {
            c *= b.back();
        }
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] -= la * b[i];
        }
        trim(a);
    }
    return a;
}

Dense poly_gcd(Dense a, Dense b) {
    a = primitive(std::move(a));
    b = primitive(std::move(b));
    while (!b.empty()) {
        Dense r = primitive(pseudo_remainder(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// num / den for a primitive den known to divide num over Q[q]; by Gauss's
// lemma the quotient has integer coefficients.
Dense divide(Dense num, const Dense& den) {
    trim(num);
    if (num.empty()) {
        return num;
    }
    Dense quot(num.size() - den.size() + 1);
    for (std::size_t i = quot.size(); i-- > 0;) {
        const Integer& top = num[i + den.size() - 1];
        if (!mpz_divisible_p(top.get_mpz_t(), den.back().get_mpz_t())) {
            throw std::logic_error("inexact polynomial division");
        }
        mpz_divexact(quot[i].get_mpz_t(), top.get_mpz_t(), den.back().get_mpz_t());
        for (std::size_t j = 0; j < den.size(); ++j) {
            num[i + j] -= quot[i] * den[j];
        }
    }
    trim(num);
    if (!num.empty()) {
        throw std::logic_error("inexact polynomial division");
    }
    return quot;
}

std::map<Exponent, Dense> t_slices(const BiPoly& c) {
    std::map<Exponent, Dense> out;
    for (const auto& term : c.terms()) {
        Dense& d = out[term.exponent.t];
        if (d.size() <= static_cast<std::size_t>(term.exponent.q)) {
            d.resize(static_cast<std::size_t>(term.exponent.q) + 1);
        }
        d[static_cast<std::size_t>(term.exponent.q)] = term.coeff;
    }
    return out;
}

// Divides every coefficient by the gcd in Z[q] of all their t-slices. A
// common factor p(q) can be cancelled from any recurrence.
std::vector<BiPoly> strip_q_factor(std::vector<BiPoly> coeffs) {
    Dense g;
    for (const auto& c : coeffs) {
        for (auto& [t, slice] : t_slices(c)) {
            g = poly_gcd(std::move(g), std::move(slice));
        }
    }
    if (g.size() <= 1) {
        return coeffs;
    }
    for (auto& c : coeffs) {
        std::vector<std::pair<BiExponent, Integer>> terms;
        for (const auto& [t, slice] : t_slices(c)) {
            const Dense quot = divide(slice, g);
            for (std::size_t a = 0; a < quot.size(); ++a) {
                if (quot[a] != 0) {
                    terms.emplace_back(BiExponent{static_cast<Exponent>(a), t}, quot[a]);
                }
            }
        }
        c = BiPoly::from_terms(std::move(terms));
    }
    return coeffs;
}

}  // namespace

Recurrence::Recurrence(std::vector<BiPoly> coeffs, std::string name)
    : coeffs_(std::move(coeffs)), name_(std::move(name)) {
    if (coeffs_.size() < 2) {
        throw std::invalid_argument("a recurrence needs order >= 1");
    }
    if (coeffs_.back().is_zero()) {
        throw std::invalid_argument("leading recurrence coefficient must be nonzero");
    }
}

Exponent Recurrence::t_degree() const {
    Exponent d = 0;
    for (const auto& c : coeffs_) {
        d = std::max(d, c.t_degree().value_or(0));
    }
    return d;
}

Exponent Recurrence::q_degree() const {
    Exponent d = 0;
    for (const auto& c : coeffs_) {
        d = std::max(d, c.q_degree().value_or(0));
    }
    return d;
}

Recurrence Recurrence::normalized() const {
    Integer g = 0;
    for (const auto& c : coeffs_) {
        const Integer cc = content(c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cc.get_mpz_t());
    }
    if (coeffs_.back().leading_term()->coeff < 0) {
        g = -g;
    }
    std::vector<BiPoly> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        out.push_back(c.divexact(g));
    }
    return Recurrence(std::move(out), name_);
}

bool Recurrence::is_normalized() const { return normalized() == *this; }

std::string_view to_string(RecurrenceKey key) {
    switch (key) {
        case RecurrenceKey::bressoud1: return "bressoud1";
        case RecurrenceKey::bressoud2: return "bressoud2";
        case RecurrenceKey::santos: return "santos";
        case RecurrenceKey::u: return "u";
    }
    return "?";
}

RecurrenceKey parse_recurrence_key(std::string_view name) {
    for (auto key : {RecurrenceKey::bressoud1, RecurrenceKey::bressoud2, RecurrenceKey::santos, RecurrenceKey::u}) {
        if (to_string(key) == name) {
            return key;
        }
    }
    throw std::invalid_argument("unknown recurrence key \"" + std::string(name) + "\"");
}

Recurrence known_recurrence(RecurrenceKey key) {
    auto make = [key](std::string_view c0, std::string_view c1) {
        return Recurrence({parse_bipoly(c0), parse_bipoly(c1), BiPoly(1)}, std::string(to_string(key)));
    };
    switch (key) {
        // B_{n+2} - (1 + q - q^{n+2} + q^{2n+3}) B_{n+1} + q(1 - q^{n+1}) B_n = 0
        case RecurrenceKey::bressoud1: return make("q - q^2*t", "-1 - q + q^2*t - q^3*t^2");
        // D_{n+2} - (1 + q - q^{n+2} + q^{2n+4}) D_{n+1} + q(1 - q^{n+1}) D_n = 0
        case RecurrenceKey::bressoud2: return make("q - q^2*t", "-1 - q + q^2*t - q^4*t^2");
        // S_{n+2} - (1 + q) S_{n+1} + (q - q^{2n+2}) S_n = 0
        case RecurrenceKey::santos: return make("q - q^2*t^2", "-1 - q");
        // U_{n+2} - (1 + q + q^{2n+3}) U_{n+1} + q U_n = 0
        case RecurrenceKey::u: return make("q", "-1 - q - q^3*t^2");
    }
    throw std::invalid_argument("unknown recurrence key");
}

std::vector<Family> recurrence_families(RecurrenceKey key) {
    switch (key) {
        case RecurrenceKey::bressoud1: return {Family::A, Family::B};
        case RecurrenceKey::bressoud2: return {Family::C, Family::D};
        case RecurrenceKey::santos: return {Family::S, Family::S_ALT, Family::T, Family::T_ALT};
        case RecurrenceKey::u: return {Family::U, Family::U_ALT};
    }
    return {};
}

QPoly residual(const Recurrence& rec, std::span<const QPoly> values, long n) {
    if (n < 0 || static_cast<std::size_t>(n) + static_cast<std::size_t>(rec.order()) >= values.size()) {
        throw std::out_of_range("recurrence residual needs values up to index n + order");
    }
    DenseAccumulator acc;
    for (int i = 0; i <= rec.order(); ++i) {
        const QPoly& v = values[static_cast<std::size_t>(n + i)];
        for (const auto& term : rec.coeffs()[static_cast<std::size_t>(i)].terms()) {
            acc.add(v, term.coeff, term.exponent.q + term.exponent.t * n);
        }
    }
    return acc.release();
}

namespace {

std::vector<QPoly> family_values(Family id, long n_max) {
    std::vector<QPoly> values;
    values.reserve(static_cast<std::size_t>(std::max(n_max + 1, 0L)));
    for (long n = 0; n <= n_max; ++n) {
        values.push_back(family_poly(id, n));
    }
    return values;
}

std::string subject_for(const Recurrence& rec, Family id) {
    return "recurrence " + (rec.name().empty() ? std::string("unnamed") : rec.name()) + " on family " +
           std::string(to_string(id));
}

}  // namespace

VerificationReport verify(const Recurrence& rec, Family id, long n_max) {
    const std::string subject = subject_for(rec, id);
    const long hi = n_max - rec.order();
    const Family other = partner(id);
    for (long n = 0; n < rec.order() && n <= n_max; ++n) {
        QPoly diff = family_poly(id, n) - family_poly(other, n);
        if (!diff.is_zero()) {
            return VerificationReport::fail(subject, 0, hi, Witness{n, std::move(diff)});
        }
    }
    const auto values = family_values(id, n_max);
    for (long n = 0; n <= hi; ++n) {
        QPoly r = residual(rec, values, n);
        if (!r.is_zero()) {
            return VerificationReport::fail(subject, 0, hi, Witness{n, std::move(r)});
        }
    }
    return VerificationReport::pass(subject, 0, hi);
}

std::optional<long> smallest_valid_start(const Recurrence& rec, Family id, long n_max) {
    const auto values = family_values(id, n_max);
    std::optional<long> start;
    for (long n = n_max - rec.order(); n >= 0; --n) {
        if (!residual(rec, values, n).is_zero()) {
            break;
        }
        start = n;
    }
    return start;
}

std::size_t guess_unknowns(const GuessOptions& o) {
    return static_cast<std::size_t>(o.order + 1) * static_cast<std::size_t>(o.deg_t + 1) *
           static_cast<std::size_t>(o.deg_q + 1);
}

std::vector<Recurrence> guess(std::span<const QPoly> values, const GuessOptions& o) {
    if (o.order < 1 || o.deg_t < 0 || o.deg_q < 0) {
        throw std::invalid_argument("guess needs order >= 1 and nonnegative degree bounds");
    }
    if (o.fit.empty() || o.confirm.empty() || o.fit.first < 0 || o.confirm.first < 0) {
        throw std::invalid_argument("guess needs nonempty, nonnegative fit and confirm ranges");
    }
    if (!(o.fit.last < o.confirm.first || o.confirm.last < o.fit.first)) {
        throw std::invalid_argument("fit and confirm ranges must be disjoint");
    }
    const long needed = std::max(o.fit.last, o.confirm.last) + o.order;
    if (static_cast<long>(values.size()) <= needed) {
        throw std::invalid_argument("guess needs values up to index " + std::to_string(needed));
    }
    if (std::all_of(values.begin(), values.begin() + needed + 1, [](const QPoly& p) { return p.is_zero(); })) {
        throw std::invalid_argument("guess: all input values are zero");
    }

    const std::size_t dq = static_cast<std::size_t>(o.deg_q) + 1;
    const std::size_t dt = static_cast<std::size_t>(o.deg_t) + 1;
    const std::size_t unknowns = guess_unknowns(o);
    auto column = [&](std::size_t i, std::size_t b, std::size_t a) { return (i * dt + b) * dq + a; };

    // One equation per (n, power of q) in the residual of the generic ansatz.
    std::vector<std::vector<Integer>> rows;
    for (long n = o.fit.first; n <= o.fit.last; ++n) {
        std::map<Exponent, std::vector<Integer>> by_power;
        for (std::size_t i = 0; i <= static_cast<std::size_t>(o.order); ++i) {
            const QPoly& v = values[static_cast<std::size_t>(n) + i];
            for (std::size_t b = 0; b < dt; ++b) {
                for (std::size_t a = 0; a < dq; ++a) {
                    const Exponent shift = static_cast<Exponent>(a) + static_cast<Exponent>(b) * n;
                    for (const auto& term : v.terms()) {
                        auto [it, inserted] = by_power.try_emplace(term.exponent + shift);
                        if (inserted) {
                            it->second.resize(unknowns);
                        }
                        it->second[column(i, b, a)] += term.coeff;
                    }
                }
            }
        }
        for (auto& [e, row] : by_power) {
            if (std::any_of(row.begin(), row.end(), [](const Integer& x) { return x != 0; })) {
                rows.push_back(std::move(row));
            }
        }
    }
    if (rows.size() < unknowns + 2) {
        throw std::invalid_argument("fit range yields " + std::to_string(rows.size()) + " equations for " +
                                    std::to_string(unknowns) + " unknowns; need at least unknowns + 2");
    }

    IntMatrix m(rows.size(), unknowns);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < unknowns; ++c) {
            m(r, c) = std::move(rows[r][c]);
        }
    }
    const NullspaceResult ns = integer_nullspace(std::move(m));

    auto vanishes_on = [&](const Recurrence& rec, IndexRange range) {
        for (long n = range.first; n <= range.last; ++n) {
            if (!residual(rec, values, n).is_zero()) {
                return false;
            }
        }
        return true;
    };

    std::vector<Recurrence> found;
    for (const auto& v : ns.basis) {
        std::vector<BiPoly> coeffs;
        for (std::size_t i = 0; i <= static_cast<std::size_t>(o.order); ++i) {
            std::vector<std::pair<BiExponent, Integer>> terms;
            for (std::size_t b = 0; b < dt; ++b) {
                for (std::size_t a = 0; a < dq; ++a) {
                    const Integer& x = v[column(i, b, a)];
                    if (x != 0) {
                        terms.emplace_back(BiExponent{static_cast<Exponent>(a), static_cast<Exponent>(b)}, x);
                    }
                }
            }
            coeffs.push_back(BiPoly::from_terms(std::move(terms)));
        }
        while (!coeffs.empty() && coeffs.back().is_zero()) {
            coeffs.pop_back();
        }
        if (coeffs.size() < 2) {
            continue;
        }
        Recurrence rec = Recurrence(strip_q_factor(std::move(coeffs)), "guessed").normalized();
        if (!vanishes_on(rec, o.confirm) || !vanishes_on(rec, o.fit)) {
            continue;
        }
        if (std::find(found.begin(), found.end(), rec) == found.end()) {
            found.push_back(std::move(rec));
        }
    }
    std::stable_sort(found.begin(), found.end(), [](const Recurrence& a, const Recurrence& b) {
        return std::tuple(a.order(), a.t_degree(), a.q_degree()) < std::tuple(b.order(), b.t_degree(), b.q_degree());
    });
    return found;
}

std::pair<QPoly, QPoly> chapman_residuals(long n) {
    if (n < 1) {
        throw std::invalid_argument("chapman_residuals needs n >= 1");
    }
    const QPoly& b = family_poly(Family::B, n);
    const QPoly& b1 = family_poly(Family::B, n - 1);
    const QPoly& d = family_poly(Family::D, n);
    const QPoly& d1 = family_poly(Family::D, n - 1);

    DenseAccumulator first;
    first.add(b);
    first.add(b1, -1);
    first.add(d1, -1, n);

    DenseAccumulator second;
    second.add(d);
    second.add(b, -1, n);
    second.add(d1, -1, 0);
    second.add(d1, 1, n);
    return {first.release(), second.release()};
}

std::string to_string(const Recurrence& rec) {
    std::string out;
    for (int i = 0; i <= rec.order(); ++i) {
        const BiPoly& c = rec.coeffs()[static_cast<std::size_t>(i)];
        if (c.is_zero()) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        out += "(" + to_string(c) + ")*P[n" + (i == 0 ? std::string() : "+" + std::to_string(i)) + "]";
    }
    return out + " = 0";
}

Json to_json(const Recurrence& rec) {
    Json j;
    j["name"] = rec.name();
    j["order"] = rec.order();
    auto coeffs = Json::array();
    for (const auto& c : rec.coeffs()) {
        coeffs.push_back(to_json(c));
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

Recurrence recurrence_from_json(const Json& j) {
    try {
        std::vector<BiPoly> coeffs;
        for (const auto& c : j.at("coeffs")) {
            coeffs.push_back(bipoly_from_json(c));
        }
        Recurrence rec(std::move(coeffs), j.value("name", std::string()));
        if (j.contains("order") && j.at("order").get<int>() != rec.order()) {
            throw std::invalid_argument("recurrence order does not match coefficient count");
        }
        return rec;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed recurrence: ") + e.what());
    }
}

}  // namespace qrr
