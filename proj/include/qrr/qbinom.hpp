#pragma once

// Gaussian binomial coefficients in base q and q^2, and the q-Pochhammer
// symbol (q;q)_m.

#include <deque>
#include <shared_mutex>
#include <vector>

#include "qrr/qpoly.hpp"

namespace qrr {

enum class QBase : int { q = 1, q_squared = 2 };

/// (q;q)_m = (1-q)(1-q^2)...(1-q^m); (q;q)_0 = 1. Throws on m < 0.
QPoly qpochhammer(long m);

/// Memoized Gaussian binomials, filled row by row through the Pascal rule
///   [n k] = [n-1 k] + q^{b(n-k)} [n-1 k-1]   (b = base).
///
/// Lookups take a shared lock; growing the table takes an exclusive one.
/// Rows are stored in deques, so references handed out stay valid for the
/// lifetime of the table.
class QBinomTable {
public:
    /// Zero polynomial when n < 0, k < 0 or k > n.
    const QPoly& get(long n, long k, QBase base);

private:
    using Rows = std::deque<std::vector<QPoly>>;
    Rows& rows_for(QBase base) { return base == QBase::q ? rows_q_ : rows_q2_; }
    static void extend(Rows& rows, long n, Exponent step);

    std::shared_mutex mutex_;
    Rows rows_q_;
    Rows rows_q2_;
};

/// Process-wide table used by the free functions below.
QBinomTable& qbinom_table();

/// Gaussian binomial [n k] in q^base; zero outside 0 <= k <= n.
const QPoly& qbinom(long n, long k, QBase base = QBase::q);

/// [n k] - (1+q-q^n)[n-1 k] - q^{2n-2k}[n-1 k-1] + q(1-q^{n-1})[n-2 k].
/// The middle term is dropped for k > n, where every binomial vanishes.
/// Throws std::invalid_argument when n < 2.
QPoly contiguous_residual(long n, long k);

}  // namespace qrr
