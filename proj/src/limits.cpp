#include "qrr/limits.hpp"

#include <stdexcept>
#include <string>

namespace qrr {

TruncatedSeries::TruncatedSeries(Exponent modulus, QPoly poly) : modulus_(modulus), poly_(truncate(poly, modulus)) {
    if (modulus <= 0) {
        throw std::invalid_argument("truncated series needs a positive modulus");
    }
}

TruncatedSeries rr_product(int side, Exponent M) {
    if (side != 1 && side != 2) {
        throw std::invalid_argument("Rogers-Ramanujan side must be 1 or 2");
    }
    if (M < 1) {
        throw std::invalid_argument("rr_product needs M >= 1");
    }
    const Exponent residues[2] = {side == 1 ? 1 : 2, side == 1 ? 4 : 3};
    QPoly acc = QPoly::one();
    // Parts in increasing order; each 1/(1-q^p) becomes sum_{i: ip < M} q^{ip}.
    for (Exponent base = 0; base < M; base += 5) {
        for (Exponent r : residues) {
            const Exponent part = base + r;
            if (part >= M) {
                continue;
            }
            std::vector<std::pair<Exponent, Integer>> geometric;
            for (Exponent e = 0; e < M; e += part) {
                geometric.emplace_back(e, 1);
            }
            acc = truncated_mul(acc, QPoly::from_terms(std::move(geometric)), M);
        }
    }
    return TruncatedSeries(M, std::move(acc));
}

int rr_side(Family id) {
    switch (id) {
        case Family::A:
        case Family::B: return 1;
        case Family::C:
        case Family::D: return 2;
        default: throw std::invalid_argument("limit checks are defined for A, B, C, D only");
    }
}

VerificationReport limit_check(Family id, long n) {
    const int side = rr_side(id);
    if (n < 0) {
        throw std::invalid_argument("limit_check needs n >= 0");
    }
    const Exponent modulus = n + 1;
    const TruncatedSeries finite(modulus, family_poly(id, n));
    const TruncatedSeries product = rr_product(side, modulus);
    const std::string subject = "limit " + std::string(to_string(id)) + " vs product side " + std::to_string(side);
    QPoly diff = finite.poly() - product.poly();
    if (diff.is_zero()) {
        return VerificationReport::pass(subject, n, n);
    }
    return VerificationReport::fail(subject, n, n, Witness{n, std::move(diff)});
}

}  // namespace qrr
