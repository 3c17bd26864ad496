#pragma once

// One-variable q-holonomic recurrences
//
//   sum_{i=0..r} c_i(q, t) * P[n+i] = 0,   t = q^n,
//
// where n is the lowest index appearing in the relation. Recurrences can be
// checked against families and guessed from data by exact linear algebra.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qrr/bipoly.hpp"
#include "qrr/families.hpp"
#include "qrr/qpoly.hpp"
#include "qrr/report.hpp"
#include "qrr/text.hpp"

namespace qrr {

class Recurrence {
public:
    /// coeffs[i] multiplies P[n+i]. Needs at least two coefficients and a
    /// nonzero last one (std::invalid_argument otherwise).
    explicit Recurrence(std::vector<BiPoly> coeffs, std::string name = {});

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BiPoly>& coeffs() const noexcept { return coeffs_; }
    const std::string& name() const noexcept { return name_; }

    /// Largest t- and q-degree over all coefficients.
    Exponent t_degree() const;
    Exponent q_degree() const;

    /// Divides out the integer content and fixes the sign so the leading
    /// term of the last coefficient (by t-degree, then q-degree) is positive.
    Recurrence normalized() const;
    bool is_normalized() const;

    /// Coefficient equality; names are ignored.
    friend bool operator==(const Recurrence& a, const Recurrence& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<BiPoly> coeffs_;
    std::string name_;
};

enum class RecurrenceKey { bressoud1, bressoud2, santos, u };

std::string_view to_string(RecurrenceKey key);
/// Throws std::invalid_argument on an unknown key.
RecurrenceKey parse_recurrence_key(std::string_view name);

/// The one-variable recursions for the Bressoud pair, the second Bressoud
/// pair, the Santos families and the U family, in shifted form.
Recurrence known_recurrence(RecurrenceKey key);

/// The families each known recurrence annihilates.
std::vector<Family> recurrence_families(RecurrenceKey key);

/// sum_i c_i(q, q^n) * values[n+i]. Throws std::out_of_range when
/// values does not reach n + order.
QPoly residual(const Recurrence& rec, std::span<const QPoly> values, long n);

/// Checks, in this order: for paired families, agreement with the partner
/// family at n = 0..order-1; then the residual at every lowest index
/// 0..n_max-order. The first failure becomes the witness.
VerificationReport verify(const Recurrence& rec, Family id, long n_max);

/// Smallest lowest index from which the residual stays zero through
/// n_max - order; empty if the residual is nonzero at n_max - order.
std::optional<long> smallest_valid_start(const Recurrence& rec, Family id, long n_max);

struct IndexRange {
    long first = 0;
    long last = -1;

    bool empty() const noexcept { return last < first; }
    long size() const noexcept { return empty() ? 0 : last - first + 1; }
};

struct GuessOptions {
    int order = 1;
    int deg_t = 0;
    int deg_q = 0;
    IndexRange fit;
    IndexRange confirm;
};

/// Ansatz dimension: (order+1) * (deg_t+1) * (deg_q+1).
std::size_t guess_unknowns(const GuessOptions& options);

/// Guess-and-confirm search for recurrences of the given order and degree
/// bounds. Sets up one linear equation per (n in fit, power of q) and takes
/// an exact nullspace basis. Each candidate has any common factor in
/// Z[q] of its coefficients cancelled; candidates failing on confirm are
/// dropped; the survivors are normalized, deduplicated and sorted by (order, t-degree,
/// q-degree). An empty result means no recurrence within the ansatz.
///
/// Throws std::invalid_argument when the ranges overlap or are empty, when
/// values does not cover them, when every value is zero, or when the fit
/// window yields fewer than unknowns + 2 equations.
std::vector<Recurrence> guess(std::span<const QPoly> values, const GuessOptions& options);

/// B_n - B_{n-1} - q^n D_{n-1} and D_n - q^n B_n - (1-q^n) D_{n-1}.
/// Throws std::invalid_argument when n < 1.
std::pair<QPoly, QPoly> chapman_residuals(long n);

/// "(c0)*P[n] + (c1)*P[n+1] + ... = 0" with t = q^n.
std::string to_string(const Recurrence& rec);
Json to_json(const Recurrence& rec);
Recurrence recurrence_from_json(const Json& j);

}  // namespace qrr
