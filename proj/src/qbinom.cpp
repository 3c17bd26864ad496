#include "qrr/qbinom.hpp"

#include <mutex>
#include <stdexcept>

namespace qrr {

QPoly qpochhammer(long m) {
    if (m < 0) {
        throw std::invalid_argument("qpochhammer needs m >= 0");
    }
    QPoly out = QPoly::one();
    for (long i = 1; i <= m; ++i) {
        out *= QPoly::from_terms({{0, 1}, {i, -1}});
    }
    return out;
}

void QBinomTable::extend(Rows& rows, long n, Exponent step) {
    if (rows.empty()) {
        rows.push_back({QPoly::one()});
    }
    while (static_cast<long>(rows.size()) <= n) {
        const auto m = static_cast<long>(rows.size());
        const auto& prev = rows.back();
        std::vector<QPoly> row;
        row.reserve(static_cast<std::size_t>(m) + 1);
        row.push_back(QPoly::one());
        for (long k = 1; k < m; ++k) {
            row.push_back(prev[static_cast<std::size_t>(k)] +
                          monomial_mul(prev[static_cast<std::size_t>(k - 1)], 1, step * (m - k)));
        }
        row.push_back(QPoly::one());
        rows.push_back(std::move(row));
    }
}

const QPoly& QBinomTable::get(long n, long k, QBase base) {
    static const QPoly zero;
    if (n < 0 || k < 0 || k > n) {
        return zero;
    }
    Rows& rows = rows_for(base);
    {
        std::shared_lock lock(mutex_);
        if (n < static_cast<long>(rows.size())) {
            return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
        }
    }
    std::unique_lock lock(mutex_);
    extend(rows, n, static_cast<Exponent>(base));
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

QBinomTable& qbinom_table() {
    static QBinomTable table;
    return table;
}

const QPoly& qbinom(long n, long k, QBase base) { return qbinom_table().get(n, k, base); }

QPoly contiguous_residual(long n, long k) {
    if (n < 2) {
        throw std::invalid_argument("contiguous_residual needs n >= 2");
    }
    DenseAccumulator acc;
    acc.add(qbinom(n, k));
    // -(1 + q - q^n) [n-1 k]
    const QPoly& b1 = qbinom(n - 1, k);
    acc.add(b1, -1, 0);
    acc.add(b1, -1, 1);
    acc.add(b1, 1, n);
    if (k <= n) {
        acc.add(qbinom(n - 1, k - 1), -1, 2 * n - 2 * k);
    }
    // + q (1 - q^{n-1}) [n-2 k]
    const QPoly& b2 = qbinom(n - 2, k);
    acc.add(b2, 1, 1);
    acc.add(b2, -1, n);
    return acc.release();
}

}  // namespace qrr
