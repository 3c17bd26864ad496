#pragma once

#include <optional>
#include <string>

#include "qrr/qpoly.hpp"
#include "qrr/text.hpp"

namespace qrr {

struct Witness {
    long n = 0;
    QPoly residual;

    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of a check over an inclusive range of indices. The status is
/// derived from the witness: a report fails exactly when it carries one.
class VerificationReport {
public:
    static VerificationReport pass(std::string subject, long lo, long hi);
    static VerificationReport fail(std::string subject, long lo, long hi, Witness witness);

    const std::string& subject() const noexcept { return subject_; }
    long lo() const noexcept { return lo_; }
    long hi() const noexcept { return hi_; }
    bool passed() const noexcept { return !witness_.has_value(); }
    const std::optional<Witness>& witness() const noexcept { return witness_; }

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;

private:
    VerificationReport(std::string subject, long lo, long hi, std::optional<Witness> witness)
        : subject_(std::move(subject)), lo_(lo), hi_(hi), witness_(std::move(witness)) {}

    std::string subject_;
    long lo_;
    long hi_;
    std::optional<Witness> witness_;
};

/// {"subject": str, "range": [lo, hi], "status": "pass"|"fail",
///  "witness": null | {"n": int, "residual": QPoly-JSON}}
Json to_json(const VerificationReport& report);
/// Throws std::invalid_argument on schema violations.
VerificationReport report_from_json(const Json& j);

/// One status line, followed by a witness block when the check failed.
std::string to_text(const VerificationReport& report);

}  // namespace qrr
