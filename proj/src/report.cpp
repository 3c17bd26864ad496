#include "qrr/report.hpp"

#include <stdexcept>

namespace qrr {

VerificationReport VerificationReport::pass(std::string subject, long lo, long hi) {
    return VerificationReport(std::move(subject), lo, hi, std::nullopt);
}

VerificationReport VerificationReport::fail(std::string subject, long lo, long hi, Witness witness) {
    return VerificationReport(std::move(subject), lo, hi, std::move(witness));
}

Json to_json(const VerificationReport& report) {
    Json j;
    j["subject"] = report.subject();
    j["range"] = Json::array({report.lo(), report.hi()});
    j["status"] = report.passed() ? "pass" : "fail";
    if (const auto& w = report.witness()) {
        Json wj;
        wj["n"] = w->n;
        wj["residual"] = to_json(w->residual);
        j["witness"] = std::move(wj);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

VerificationReport report_from_json(const Json& j) {
    try {
        const auto subject = j.at("subject").get<std::string>();
        const auto& range = j.at("range");
        if (!range.is_array() || range.size() != 2) {
            throw std::invalid_argument("report range must be [lo, hi]");
        }
        const long lo = range[0].get<long>();
        const long hi = range[1].get<long>();
        const auto status = j.at("status").get<std::string>();
        const auto& witness = j.at("witness");
        if (status == "pass" && witness.is_null()) {
            return VerificationReport::pass(subject, lo, hi);
        }
        if (status == "fail" && witness.is_object()) {
            return VerificationReport::fail(subject, lo, hi,
                                            Witness{witness.at("n").get<long>(), qpoly_from_json(witness.at("residual"))});
        }
        throw std::invalid_argument("report status and witness disagree");
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
}

std::string to_text(const VerificationReport& report) {
    std::string out = report.passed() ? "PASS " : "FAIL ";
    out += report.subject() + " [" + std::to_string(report.lo()) + ", " + std::to_string(report.hi()) + "]\n";
    if (const auto& w = report.witness()) {
        out += "  witness:\n";
        out += "    subject: " + report.subject() + "\n";
        out += "    n: " + std::to_string(w->n) + "\n";
        out += "    residual: " + to_string(w->residual) + "\n";
    }
    return out;
}

}  // namespace qrr
