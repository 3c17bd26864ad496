#include "qrr/cli.hpp"

#include <chrono>
#include <charconv>
#include <functional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "qrr/families.hpp"
#include "qrr/limits.hpp"
#include "qrr/recurrence.hpp"
#include "qrr/text.hpp"

namespace qrr {

namespace {

const std::vector<std::string> kFamilyNames = {"A", "B", "C", "D", "S", "S_ALT", "T", "T_ALT", "U", "U_ALT"};

struct IdentitySpec {
    Family sum_side;
    Family alt_side;
    RecurrenceKey key;
};

const std::map<std::string, IdentitySpec> kIdentities = {
    {"bressoud1", {Family::A, Family::B, RecurrenceKey::bressoud1}},
    {"bressoud2", {Family::C, Family::D, RecurrenceKey::bressoud2}},
    {"santos-s", {Family::S, Family::S_ALT, RecurrenceKey::santos}},
    {"santos-t", {Family::T, Family::T_ALT, RecurrenceKey::santos}},
    {"u", {Family::U, Family::U_ALT, RecurrenceKey::u}},
};

long parse_long(std::string_view s) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("not an integer: \"" + std::string(s) + "\"");
    }
    return v;
}

IndexRange parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        throw std::invalid_argument("range must look like a..b, got \"" + text + "\"");
    }
    return {parse_long(std::string_view(text).substr(0, dots)), parse_long(std::string_view(text).substr(dots + 2))};
}

std::string range_validator(const std::string& text) {
    try {
        const IndexRange r = parse_range(text);
        if (r.first < 0 || r.empty()) {
            return "range must be nonempty and nonnegative";
        }
    } catch (const std::invalid_argument& e) {
        return e.what();
    }
    return {};
}

VerificationReport pair_equality(Family lhs, Family rhs, long n_max) {
    const std::string subject = "identity " + std::string(to_string(lhs)) + " = " + std::string(to_string(rhs));
    for (long n = 0; n <= n_max; ++n) {
        QPoly diff = family_poly(lhs, n) - family_poly(rhs, n);
        if (!diff.is_zero()) {
            return VerificationReport::fail(subject, 0, n_max, Witness{n, std::move(diff)});
        }
    }
    return VerificationReport::pass(subject, 0, n_max);
}

VerificationReport limit_range(Family id, long n_max) {
    const std::string subject =
        "limit " + std::string(to_string(id)) + " vs product side " + std::to_string(rr_side(id));
    for (long n = 0; n <= n_max; ++n) {
        const VerificationReport r = limit_check(id, n);
        if (!r.passed()) {
            return VerificationReport::fail(subject, 0, n_max, *r.witness());
        }
    }
    return VerificationReport::pass(subject, 0, n_max);
}

int emit_reports(const std::vector<VerificationReport>& reports, const std::string& format, std::ostream& out) {
    bool all_pass = true;
    if (format == "json") {
        auto arr = Json::array();
        for (const auto& r : reports) {
            arr.push_back(to_json(r));
        }
        out << arr.dump(2) << '\n';
    }
    for (const auto& r : reports) {
        if (format != "json") {
            out << to_text(r);
        }
        all_pass = all_pass && r.passed();
    }
    return all_pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact q-series toolkit for Rogers-Ramanujan type polynomial identities", "qrr"};
    app.require_subcommand(1, 1);
    bool timing = false;
    app.add_flag("--timing", timing, "Report wall-clock time on the error stream");

    std::string family;
    std::string format = "text";
    long n = 0;
    long n_max = 0;
    std::string identity;
    std::string key;
    int order = 0;
    int deg_t = 0;
    int deg_q = 0;
    std::string fit;
    std::string confirm;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_family = [&](CLI::App* cmd, const std::vector<std::string>& allowed) {
        cmd->add_option("--family", family, "Family tag")->required()->check(CLI::IsMember(allowed));
    };
    auto add_n_max = [&](CLI::App* cmd) {
        cmd->add_option("--n-max", n_max, "Largest index checked")->required()->check(CLI::NonNegativeNumber);
    };

    auto* expand = app.add_subcommand("expand", "Expand one family polynomial");
    add_family(expand, kFamilyNames);
    expand->add_option("--n", n, "Index")->required()->check(CLI::NonNegativeNumber);
    add_format(expand);

    auto* verify_cmd = app.add_subcommand("verify", "Check an identity and its recurrence on both sides");
    verify_cmd->add_option("--identity", identity, "Identity name")
        ->required()
        ->check(CLI::IsMember({"bressoud1", "bressoud2", "santos-s", "santos-t", "u"}));
    add_n_max(verify_cmd);
    add_format(verify_cmd);

    auto* verify_rec = app.add_subcommand("verify-recurrence", "Check one known recurrence on one family");
    verify_rec->add_option("--key", key, "Recurrence key")
        ->required()
        ->check(CLI::IsMember({"bressoud1", "bressoud2", "santos", "u"}));
    add_family(verify_rec, kFamilyNames);
    add_n_max(verify_rec);
    add_format(verify_rec);

    auto* guess_cmd = app.add_subcommand("guess", "Guess recurrences from family values");
    add_family(guess_cmd, kFamilyNames);
    guess_cmd->add_option("--order", order, "Recurrence order")->required()->check(CLI::PositiveNumber);
    guess_cmd->add_option("--deg-t", deg_t, "Degree bound in t = q^n")->required()->check(CLI::NonNegativeNumber);
    guess_cmd->add_option("--deg-q", deg_q, "Degree bound in q")->required()->check(CLI::NonNegativeNumber);
    guess_cmd->add_option("--fit", fit, "Fit window a..b")->required()->check(CLI::Validator(range_validator, "a..b"));
    guess_cmd->add_option("--confirm", confirm, "Confirm window c..d")
        ->required()
        ->check(CLI::Validator(range_validator, "c..d"));
    add_format(guess_cmd);

    auto* limit_cmd = app.add_subcommand("limit", "Compare A/B/C/D with the product sides mod q^{n+1}");
    add_family(limit_cmd, {"A", "B", "C", "D"});
    add_n_max(limit_cmd);
    add_format(limit_cmd);

    auto* selftest = app.add_subcommand("selftest", "Run the invariant suite at desk-scale sizes");
    add_format(selftest);

    std::vector<const char*> argv{"qrr"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    int code = kExitOk;
    try {
        if (expand->parsed()) {
            const QPoly& p = family_poly(*parse_family(family), n);
            if (format == "json") {
                out << to_json(p).dump() << '\n';
            } else {
                out << to_string(p) << '\n';
            }
        } else if (verify_cmd->parsed()) {
            const IdentitySpec& spec = kIdentities.at(identity);
            const Recurrence rec = known_recurrence(spec.key);
            code = emit_reports({pair_equality(spec.sum_side, spec.alt_side, n_max),
                                 verify(rec, spec.sum_side, n_max), verify(rec, spec.alt_side, n_max)},
                                format, out);
        } else if (verify_rec->parsed()) {
            code = emit_reports({verify(known_recurrence(parse_recurrence_key(key)), *parse_family(family), n_max)},
                                format, out);
        } else if (guess_cmd->parsed()) {
            GuessOptions options{order, deg_t, deg_q, parse_range(fit), parse_range(confirm)};
            const long top = std::max(options.fit.last, options.confirm.last) + order;
            std::vector<QPoly> values;
            for (long i = 0; i <= top; ++i) {
                values.push_back(family_poly(*parse_family(family), i));
            }
            const auto found = guess(values, options);
            if (format == "json") {
                auto arr = Json::array();
                for (const auto& r : found) {
                    arr.push_back(to_json(r));
                }
                out << arr.dump(2) << '\n';
            } else if (found.empty()) {
                out << "no recurrence within the ansatz\n";
            } else {
                for (const auto& r : found) {
                    out << to_string(r) << '\n';
                }
            }
        } else if (limit_cmd->parsed()) {
            code = emit_reports({limit_range(*parse_family(family), n_max)}, format, out);
        } else if (selftest->parsed()) {
            code = emit_reports(run_selftest(), format, out);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    if (timing) {
        const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        err << "elapsed: " << elapsed << " s\n";
    }
    return code;
}

}  // namespace qrr
