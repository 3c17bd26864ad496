#include "qrr/text.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qrr {

namespace {

std::string power(char var, Exponent e) {
    if (e == 1) {
        return std::string(1, var);
    }
    return std::string(1, var) + "^" + std::to_string(e);
}

// Renders one monomial with its sign handled by the caller.
std::string monomial_body(const Integer& abs_coeff, Exponent qe, Exponent te) {
    std::string vars;
    if (qe != 0) {
        vars = power('q', qe);
    }
    if (te != 0) {
        vars += (vars.empty() ? "" : "*") + power('t', te);
    }
    if (vars.empty()) {
        return abs_coeff.get_str();
    }
    if (abs_coeff == 1) {
        return vars;
    }
    return abs_coeff.get_str() + "*" + vars;
}

template <typename Range, typename Body>
std::string join_terms(const Range& terms, Body body) {
    if (terms.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        const bool negative = t.coeff < 0;
        const Integer magnitude = abs(t.coeff);
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        out += body(magnitude, t);
        first = false;
    }
    return out;
}

struct ParsedMonomial {
    Integer coeff;
    Exponent q = 0;
    Exponent t = 0;
};

class MonomialParser {
public:
    MonomialParser(std::string_view text, bool allow_t) : text_(text), allow_t_(allow_t) {}

    std::vector<ParsedMonomial> parse() {
        std::vector<ParsedMonomial> out;
        skip_ws();
        if (at_end()) {
            fail("empty polynomial");
        }
        int sign = 1;
        if (peek() == '-' || peek() == '+') {
            sign = get() == '-' ? -1 : 1;
            skip_ws();
        }
        out.push_back(term(sign));
        skip_ws();
        while (!at_end()) {
            const char op = get();
            if (op != '+' && op != '-') {
                fail("expected '+' or '-'");
            }
            skip_ws();
            out.push_back(term(op == '-' ? -1 : 1));
            skip_ws();
        }
        return out;
    }

private:
    ParsedMonomial term(int sign) {
        ParsedMonomial m;
        m.coeff = sign;
        bool need_factor = true;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            m.coeff *= integer();
            skip_ws();
            if (at_end() || peek() != '*') {
                return m;
            }
            get();
            skip_ws();
        }
        while (need_factor) {
            factor(m);
            skip_ws();
            if (!at_end() && peek() == '*') {
                get();
                skip_ws();
            } else {
                need_factor = false;
            }
        }
        return m;
    }

    void factor(ParsedMonomial& m) {
        if (at_end()) {
            fail("expected variable");
        }
        const char var = get();
        if (var != 'q' && !(allow_t_ && var == 't')) {
            fail(std::string("unexpected character '") + var + "'");
        }
        Exponent e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            get();
            skip_ws();
            const Integer v = integer();
            if (!v.fits_slong_p()) {
                fail("exponent out of range");
            }
            e = v.get_si();
        }
        (var == 'q' ? m.q : m.t) += e;
    }

    Integer integer() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected integer");
        }
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char get() { return text_[pos_++]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    bool allow_t_;
    std::size_t pos_ = 0;
};

Integer coeff_from_json(const Json& j) {
    if (!j.is_string()) {
        throw std::invalid_argument("coefficient must be a decimal string");
    }
    const auto& s = j.get_ref<const std::string&>();
    Integer c;
    if (s.empty() || c.set_str(s, 10) != 0) {
        throw std::invalid_argument("malformed coefficient \"" + s + "\"");
    }
    return c;
}

Exponent exponent_from_json(const Json& j) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw std::invalid_argument("exponent must be a nonnegative integer");
    }
    return j.get<Exponent>();
}

const Json& terms_array(const Json& j) {
    if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array()) {
        throw std::invalid_argument("expected an object with a \"terms\" array");
    }
    return j.at("terms");
}

}  // namespace

std::string to_string(const QPoly& p) {
    return join_terms(p.terms(),
                      [](const Integer& mag, const QTerm& t) { return monomial_body(mag, t.exponent, 0); });
}

std::string to_string(const BiPoly& p) {
    return join_terms(p.terms(), [](const Integer& mag, const BiTerm& t) {
        return monomial_body(mag, t.exponent.q, t.exponent.t);
    });
}

QPoly parse_qpoly(std::string_view text) {
    std::vector<std::pair<Exponent, Integer>> terms;
    for (auto& m : MonomialParser(text, false).parse()) {
        terms.emplace_back(m.q, std::move(m.coeff));
    }
    return QPoly::from_terms(std::move(terms));
}

BiPoly parse_bipoly(std::string_view text) {
    std::vector<std::pair<BiExponent, Integer>> terms;
    for (auto& m : MonomialParser(text, true).parse()) {
        terms.emplace_back(BiExponent{m.q, m.t}, std::move(m.coeff));
    }
    return BiPoly::from_terms(std::move(terms));
}

Json to_json(const QPoly& p) {
    auto terms = Json::array();
    for (const auto& t : p.terms()) {
        terms.push_back(Json::array({t.exponent, t.coeff.get_str()}));
    }
    return {{"terms", std::move(terms)}};
}

Json to_json(const BiPoly& p) {
    auto terms = Json::array();
    for (const auto& t : p.terms()) {
        terms.push_back(
            Json::array({Json::array({t.exponent.q, t.exponent.t}), t.coeff.get_str()}));
    }
    return {{"terms", std::move(terms)}};
}

QPoly qpoly_from_json(const Json& j) {
    std::vector<std::pair<Exponent, Integer>> terms;
    for (const auto& entry : terms_array(j)) {
        if (!entry.is_array() || entry.size() != 2) {
            throw std::invalid_argument("QPoly term must be [exponent, \"coefficient\"]");
        }
        terms.emplace_back(exponent_from_json(entry[0]), coeff_from_json(entry[1]));
    }
    return QPoly::from_terms(std::move(terms));
}

BiPoly bipoly_from_json(const Json& j) {
    std::vector<std::pair<BiExponent, Integer>> terms;
    for (const auto& entry : terms_array(j)) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_array() || entry[0].size() != 2) {
            throw std::invalid_argument("BiPoly term must be [[q_exp, t_exp], \"coefficient\"]");
        }
        terms.emplace_back(BiExponent{exponent_from_json(entry[0][0]), exponent_from_json(entry[0][1])},
                           coeff_from_json(entry[1]));
    }
    return BiPoly::from_terms(std::move(terms));
}

}  // namespace qrr
