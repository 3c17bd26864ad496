#include <functional>
#include <random>
#include <string>

#include "qrr/cli.hpp"
#include "qrr/families.hpp"
#include "qrr/limits.hpp"
#include "qrr/qbinom.hpp"
#include "qrr/recurrence.hpp"

namespace qrr {

namespace {

// Pinned sizes for the selftest verb.
constexpr long kFamilyMax = 30;
constexpr long kUMax = 20;
constexpr long kBinomMax = 40;
constexpr long kKernelMax = 24;
constexpr int kRandomCases = 300;

// Runs check(n) for n in [lo, hi]; the first nonzero residual is the witness.
VerificationReport sweep(const std::string& subject, long lo, long hi, const std::function<QPoly(long)>& check) {
    for (long n = lo; n <= hi; ++n) {
        QPoly r = check(n);
        if (!r.is_zero()) {
            return VerificationReport::fail(subject, lo, hi, Witness{n, std::move(r)});
        }
    }
    return VerificationReport::pass(subject, lo, hi);
}

// Sums residual(n, k) over k as a single zero test per n; any nonzero
// residual is returned unchanged so the witness shows it.
std::function<QPoly(long)> over_k(long k_lo, std::function<long(long)> k_hi, std::function<QPoly(long, long)> f) {
    return [=](long n) {
        for (long k = k_lo; k <= k_hi(n); ++k) {
            QPoly r = f(n, k);
            if (!r.is_zero()) {
                return r;
            }
        }
        return QPoly{};
    };
}

QPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(0, 8);
    std::uniform_int_distribution<Exponent> exponent(0, 64);
    std::uniform_int_distribution<long> coeff(-1000000, 1000000);
    std::vector<std::pair<Exponent, Integer>> terms;
    for (int i = count(rng); i > 0; --i) {
        terms.emplace_back(exponent(rng), coeff(rng));
    }
    return QPoly::from_terms(std::move(terms));
}

VerificationReport ring_axioms() {
    std::mt19937_64 rng(20240611);
    return sweep("qpoly ring axioms", 0, kRandomCases - 1, [&](long) {
        const QPoly a = random_poly(rng);
        const QPoly b = random_poly(rng);
        const QPoly c = random_poly(rng);
        DenseAccumulator acc;
        acc.add(a * (b + c));
        acc.add(a * b, -1);
        acc.add(a * c, -1);
        acc.add((a * b) * c - a * (b * c));
        acc.add(a * b - b * a);
        acc.add((a + b) - (b + a));
        return acc.release();
    });
}

}  // namespace

std::vector<VerificationReport> run_selftest() {
    std::vector<VerificationReport> out;
    out.push_back(ring_axioms());
    out.push_back(sweep("q-binomial contiguous relation", 2, kBinomMax,
                        over_k(0, [](long n) { return n; }, contiguous_residual)));
    out.push_back(sweep("q-binomial symmetry", 0, kBinomMax, over_k(0, [](long n) { return n; }, [](long n, long k) {
                            return qbinom(n, k) - qbinom(n, n - k);
                        })));
    for (auto [lhs, rhs, top] : {std::tuple{Family::A, Family::B, kFamilyMax}, {Family::C, Family::D, kFamilyMax},
                                 {Family::S, Family::S_ALT, kFamilyMax}, {Family::T, Family::T_ALT, kFamilyMax},
                                 {Family::U, Family::U_ALT, kUMax}}) {
        out.push_back(sweep("identity " + std::string(to_string(lhs)) + " = " + std::string(to_string(rhs)), 0, top,
                            [lhs = lhs, rhs = rhs](long n) { return family_poly(lhs, n) - family_poly(rhs, n); }));
    }
    out.push_back(sweep("kernel f = [n k]", 0, kKernelMax, over_k(0, [](long n) { return n; }, [](long n, long k) {
                            return kernel(Kernel::F, n, k) - qbinom(n, k);
                        })));
    out.push_back(sweep("kernel g = [n 2k]", 0, kKernelMax,
                        over_k(0, [](long n) { return n / 2; },
                               [](long n, long k) { return kernel(Kernel::G, n, k) - qbinom(n, 2 * k); })));
    out.push_back(sweep("kernel h = [n 2k+1]", 0, kKernelMax,
                        over_k(0, [](long n) { return (n - 1) / 2; },
                               [](long n, long k) { return kernel(Kernel::H, n, k) - qbinom(n, 2 * k + 1); })));
    out.push_back(sweep("kernel f contiguous relation", 2, kKernelMax,
                        over_k(0, [](long n) { return n; }, f_contiguous_residual)));
    for (auto cv : {CvInstance::CV_B, CvInstance::CV_D, CvInstance::CV_S, CvInstance::CV_T}) {
        out.push_back(sweep("q-Chu-Vandermonde " + std::string(to_string(cv)), 0, kKernelMax,
                            [cv](long n) {
                                for (long j = -n - 1; j <= n + 1; ++j) {
                                    QPoly r = cv_residual(cv, n, j);
                                    if (!r.is_zero()) {
                                        return r;
                                    }
                                }
                                return QPoly{};
                            }));
    }
    for (auto id : {Family::B, Family::D, Family::S_ALT, Family::T_ALT}) {
        out.push_back(sweep("kernel sum " + std::string(to_string(id)), 0, kKernelMax,
                            [id](long n) { return kernel_sum_identity(id, n); }));
    }
    for (auto key : {RecurrenceKey::bressoud1, RecurrenceKey::bressoud2, RecurrenceKey::santos, RecurrenceKey::u}) {
        for (Family f : recurrence_families(key)) {
            out.push_back(verify(known_recurrence(key), f, f == Family::U || f == Family::U_ALT ? kUMax : kFamilyMax));
        }
    }
    out.push_back(sweep("chapman coupled recursions", 1, kFamilyMax, [](long n) {
        auto [first, second] = chapman_residuals(n);
        return first.is_zero() ? second : first;
    }));
    {
        std::vector<QPoly> values;
        for (long n = 0; n <= 20; ++n) {
            values.push_back(family_poly(Family::B, n));
        }
        const auto found = guess(values, {2, 2, 3, {0, 14}, {15, 18}});
        const Recurrence expected = known_recurrence(RecurrenceKey::bressoud1);
        const bool ok = found.size() == 1 && found.front() == expected;
        out.push_back(ok ? VerificationReport::pass("guess recovers bressoud1 from B", 0, 18)
                         : VerificationReport::fail("guess recovers bressoud1 from B", 0, 18,
                                                    Witness{0, QPoly(Integer(static_cast<long>(found.size())))}));
    }
    for (auto id : {Family::A, Family::C}) {
        out.push_back(sweep("limit " + std::string(to_string(id)), 0, kFamilyMax, [id](long n) {
            const auto r = limit_check(id, n);
            return r.passed() ? QPoly{} : r.witness()->residual;
        }));
    }
    return out;
}

}  // namespace qrr
