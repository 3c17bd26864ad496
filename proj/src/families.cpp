#include "qrr/families.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <tuple>

#include "qrr/qbinom.hpp"

namespace qrr {

namespace {

long floor_div(long a, long b) {
    long d = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --d;
    }
    return d;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

// Inclusive integer interval; empty when lo > hi.
struct Window {
    long lo;
    long hi;

    Window intersect(Window o) const { return {std::max(lo, o.lo), std::min(hi, o.hi)}; }
};

// Values of j with 0 <= a + c*j <= top, i.e. the support of [top, a + c*j].
Window support(long top, long a, long c) {
    if (top < 0) {
        return {1, 0};
    }
    if (c > 0) {
        return {ceil_div(-a, c), floor_div(top - a, c)};
    }
    return {ceil_div(a - top, -c), floor_div(a, -c)};
}

Exponent checked_exponent(long long e, const char* where) {
    if (e < 0) {
        throw std::logic_error(std::string("negative exponent in ") + where);
    }
    return e;
}

// j(a*j - b)/2 for the pentagonal-type weights; the numerator is always even.
Exponent half_quadratic(long j, long a, long b, const char* where) {
    const long long num = static_cast<long long>(j) * (a * static_cast<long long>(j) - b);
    if (num % 2 != 0) {
        throw std::logic_error(std::string("odd numerator in ") + where);
    }
    return checked_exponent(num / 2, where);
}

Integer sign_of(long j) { return (j % 2 == 0) ? 1 : -1; }

// acc += c * q^e * p, asserting e >= 0 whenever p contributes.
void add_shifted(DenseAccumulator& acc, const QPoly& p, const Integer& c, long long e, const char* where) {
    if (p.is_zero()) {
        return;
    }
    acc.add(p, c, checked_exponent(e, where));
}

const QPoly& qb(long n, long k) { return qbinom(n, k, QBase::q); }
const QPoly& qb2(long n, long k) { return qbinom(n, k, QBase::q_squared); }

long ceil_half(long n) { return n - n / 2; }
long floor_half(long n) { return n / 2; }

template <typename Key>
class Memo {
public:
    template <typename Compute>
    const QPoly& get(const Key& key, Compute compute) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = values_.find(key); it != values_.end()) {
                return it->second;
            }
        }
        QPoly value = compute();
        std::unique_lock lock(mutex_);
        return values_.try_emplace(key, std::move(value)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<Key, QPoly> values_;
};

Memo<std::pair<Family, long>>& family_memo() {
    static Memo<std::pair<Family, long>> memo;
    return memo;
}

Memo<std::tuple<Kernel, long, long>>& kernel_memo() {
    static Memo<std::tuple<Kernel, long, long>> memo;
    return memo;
}

QPoly compute_kernel(Kernel id, long n, long k) {
    if (n < 0) {
        return {};
    }
    DenseAccumulator acc;
    switch (id) {
        case Kernel::F: {
            // sum_j (-1)^j q^{j(3j-1)/2} [n, k-j][n, k+j]
            const Window w = support(n, k, -1).intersect(support(n, k, 1));
            for (long j = w.lo; j <= w.hi; ++j) {
                acc.add(qb(n, k - j) * qb(n, k + j), sign_of(j), half_quadratic(j, 3, 1, "f"));
            }
            break;
        }
        case Kernel::G: {
            // sum_j q^{2j^2-j} [ceil(n/2), k+j]_{q^2} [floor(n/2), k-j]_{q^2}
            const long a = ceil_half(n);
            const long b = floor_half(n);
            const Window w = support(a, k, 1).intersect(support(b, k, -1));
            for (long j = w.lo; j <= w.hi; ++j) {
                acc.add(qb2(a, k + j) * qb2(b, k - j), 1, checked_exponent(2LL * j * j - j, "g"));
            }
            break;
        }
        case Kernel::H: {
            // sum_j q^{2j^2-j} [floor(n/2), k+j]_{q^2} [ceil(n/2), k+1-j]_{q^2}
            const long a = ceil_half(n);
            const long b = floor_half(n);
            const Window w = support(b, k, 1).intersect(support(a, k + 1, -1));
            for (long j = w.lo; j <= w.hi; ++j) {
                acc.add(qb2(b, k + j) * qb2(a, k + 1 - j), 1, checked_exponent(2LL * j * j - j, "h"));
            }
            break;
        }
    }
    return acc.release();
}

const QPoly& kernel_ref(Kernel id, long n, long k) {
    static const QPoly zero;
    if (n < 0 || k < 0 || k > n) {
        // Every kernel vanishes here: both factors cannot be in range at once.
        return zero;
    }
    return kernel_memo().get({id, n, k}, [&] { return compute_kernel(id, n, k); });
}

}  // namespace

std::string_view to_string(Family id) {
    switch (id) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::S: return "S";
        case Family::S_ALT: return "S_ALT";
        case Family::T: return "T";
        case Family::T_ALT: return "T_ALT";
        case Family::U: return "U";
        case Family::U_ALT: return "U_ALT";
    }
    return "?";
}

std::string_view to_string(Kernel id) {
    switch (id) {
        case Kernel::F: return "F";
        case Kernel::G: return "G";
        case Kernel::H: return "H";
    }
    return "?";
}

std::string_view to_string(CvInstance id) {
    switch (id) {
        case CvInstance::CV_B: return "CV_B";
        case CvInstance::CV_D: return "CV_D";
        case CvInstance::CV_S: return "CV_S";
        case CvInstance::CV_T: return "CV_T";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view name) {
    for (Family f : kAllFamilies) {
        if (to_string(f) == name) {
            return f;
        }
    }
    return std::nullopt;
}

Family partner(Family id) {
    switch (id) {
        case Family::A: return Family::B;
        case Family::B: return Family::A;
        case Family::C: return Family::D;
        case Family::D: return Family::C;
        case Family::S: return Family::S_ALT;
        case Family::S_ALT: return Family::S;
        case Family::T: return Family::T_ALT;
        case Family::T_ALT: return Family::T;
        case Family::U: return Family::U_ALT;
        case Family::U_ALT: return Family::U;
    }
    throw std::logic_error("unknown family");
}

QPoly compute_family_poly(Family id, long n) {
    if (n < 0) {
        throw std::invalid_argument("family index must be nonnegative");
    }
    DenseAccumulator acc;
    switch (id) {
        case Family::A:
            for (long k = 0; k <= n; ++k) {
                acc.add(qb(n, k), 1, static_cast<Exponent>(k) * k);
            }
            break;
        case Family::B: {
            const Window w = support(2 * n, n, -2);
            for (long j = w.lo; j <= w.hi; ++j) {
                acc.add(qb(2 * n, n - 2 * j), sign_of(j), half_quadratic(j, 5, 1, "B"));
            }
            break;
        }
        case Family::C:
            for (long k = 0; k <= n; ++k) {
                acc.add(qb(n, k), 1, static_cast<Exponent>(k) * k + k);
            }
            break;
        case Family::D: {
            const Window w = support(2 * n + 1, n + 1, -2);
            for (long j = w.lo; j <= w.hi; ++j) {
                acc.add(qb(2 * n + 1, n + 1 - 2 * j), sign_of(j), half_quadratic(j, 5, 3, "D"));
            }
            break;
        }
        case Family::S:
            for (long k = 0; 2 * k <= n; ++k) {
                acc.add(qb(n, 2 * k), 1, 2 * static_cast<Exponent>(k) * k);
            }
            break;
        case Family::S_ALT: {
            const long top = floor_div(n + 1, 2);
            const Window w = support(n, top, -2);
            for (long j = w.lo; j <= w.hi; ++j) {
                acc.add(qb2(n, top - 2 * j), 1, checked_exponent(4LL * j * j - j, "S_ALT"));
            }
            break;
        }
        case Family::T:
            for (long k = 0; 2 * k + 1 <= n; ++k) {
                acc.add(qb(n, 2 * k + 1), 1, 2 * static_cast<Exponent>(k) * k + 2 * k);
            }
            break;
        case Family::T_ALT: {
            const long top = floor_div(n + 2, 2);
            const Window w = support(n, top, -2);
            for (long j = w.lo; j <= w.hi; ++j) {
                acc.add(qb2(n, top - 2 * j), 1, checked_exponent(4LL * j * j - 3 * j, "T_ALT"));
            }
            break;
        }
        case Family::U:
            for (long k = 0; k <= n; ++k) {
                acc.add(qb(n + k, 2 * k), 1, static_cast<Exponent>(k) * k);
            }
            break;
        case Family::U_ALT: {
            const Window w1 = support(2 * n, n, -5);
            for (long j = w1.lo; j <= w1.hi; ++j) {
                acc.add(qb(2 * n, n - 5 * j), 1, checked_exponent(15LL * j * j - j, "U_ALT"));
            }
            const Window w2 = support(2 * n, n + 2, -5);
            for (long j = w2.lo; j <= w2.hi; ++j) {
                acc.add(qb(2 * n, n + 2 - 5 * j), -1, checked_exponent(15LL * j * j - 11 * j + 2, "U_ALT"));
            }
            break;
        }
    }
    return acc.release();
}

const QPoly& family_poly(Family id, long n) {
    if (n < 0) {
        throw std::invalid_argument("family index must be nonnegative");
    }
    return family_memo().get({id, n}, [&] { return compute_family_poly(id, n); });
}

QPoly kernel(Kernel id, long n, long k) { return kernel_ref(id, n, k); }

QPoly cv_residual(CvInstance id, long n, long j) {
    if (n < 0) {
        return {};
    }
    DenseAccumulator acc;
    const char* where = "cv_residual";
    switch (id) {
        case CvInstance::CV_B: {
            // [2n, n-2j] = sum_k q^{(k-j)(k+j)} [n, k-j][n, k+j]
            acc.add(qb(2 * n, n - 2 * j));
            const Window w = support(n, -j, 1).intersect(support(n, j, 1));
            for (long k = w.lo; k <= w.hi; ++k) {
                add_shifted(acc, qb(n, k - j) * qb(n, k + j), -1, static_cast<long long>(k - j) * (k + j), where);
            }
            break;
        }
        case CvInstance::CV_D: {
            // [2n+1, n+1-2j] = sum_k q^{k^2+k-j^2+j} [n+1, k+1-j][n, k+j]
            acc.add(qb(2 * n + 1, n + 1 - 2 * j));
            const Window w = support(n + 1, 1 - j, 1).intersect(support(n, j, 1));
            for (long k = w.lo; k <= w.hi; ++k) {
                add_shifted(acc, qb(n + 1, k + 1 - j) * qb(n, k + j), -1,
                            static_cast<long long>(k + j) * (k + 1 - j), where);
            }
            break;
        }
        case CvInstance::CV_S: {
            // [n, floor((n+1)/2)-2j]_{q^2} = sum_k q^{2k^2-2j^2} [ceil(n/2), k+j]_{q^2}[floor(n/2), k-j]_{q^2}
            const long a = ceil_half(n);
            const long b = floor_half(n);
            acc.add(qb2(n, floor_div(n + 1, 2) - 2 * j));
            const Window w = support(a, j, 1).intersect(support(b, -j, 1));
            for (long k = w.lo; k <= w.hi; ++k) {
                add_shifted(acc, qb2(a, k + j) * qb2(b, k - j), -1, 2LL * k * k - 2LL * j * j, where);
            }
            break;
        }
        case CvInstance::CV_T: {
            // [n, floor((n+2)/2)-2j]_{q^2} = sum_k q^{2k^2+2k-2j^2+2j} [floor(n/2), k+j]_{q^2}[ceil(n/2), k+1-j]_{q^2}
            const long a = ceil_half(n);
            const long b = floor_half(n);
            acc.add(qb2(n, floor_div(n + 2, 2) - 2 * j));
            const Window w = support(b, j, 1).intersect(support(a, 1 - j, 1));
            for (long k = w.lo; k <= w.hi; ++k) {
                add_shifted(acc, qb2(b, k + j) * qb2(a, k + 1 - j), -1,
                            2LL * k * k + 2LL * k - 2LL * j * j + 2LL * j, where);
            }
            break;
        }
    }
    return acc.release();
}

QPoly kernel_sum_identity(Family id, long n) {
    if (n < 0) {
        throw std::invalid_argument("family index must be nonnegative");
    }
    Kernel k_id{};
    Exponent linear = 0;
    Exponent quadratic = 1;
    switch (id) {
        case Family::B: k_id = Kernel::F; break;
        case Family::D: k_id = Kernel::F; linear = 1; break;
        case Family::S_ALT: k_id = Kernel::G; quadratic = 2; break;
        case Family::T_ALT: k_id = Kernel::H; quadratic = 2; linear = 2; break;
        default:
            throw std::invalid_argument("kernel_sum_identity is defined for B, D, S_ALT, T_ALT only");
    }
    DenseAccumulator acc;
    acc.add(family_poly(id, n));
    for (long k = 0; k <= n; ++k) {
        acc.add(kernel_ref(k_id, n, k), -1, quadratic * k * k + linear * k);
    }
    return acc.release();
}

QPoly f_pascal_residual(long n, long k) {
    DenseAccumulator acc;
    acc.add(kernel_ref(Kernel::F, n, k));
    acc.add(kernel_ref(Kernel::F, n - 1, k), -1);
    add_shifted(acc, kernel_ref(Kernel::F, n - 1, k - 1), -1, static_cast<long long>(n) - k, "f_pascal_residual");
    return acc.release();
}

QPoly f_pascal_residual_mirrored(long n, long k) {
    DenseAccumulator acc;
    acc.add(kernel_ref(Kernel::F, n, k));
    add_shifted(acc, kernel_ref(Kernel::F, n - 1, k), -1, k, "f_pascal_residual_mirrored");
    acc.add(kernel_ref(Kernel::F, n - 1, k - 1), -1);
    return acc.release();
}

QPoly f_contiguous_residual(long n, long k) {
    const char* where = "f_contiguous_residual";
    DenseAccumulator acc;
    acc.add(kernel_ref(Kernel::F, n, k));
    const QPoly& f1 = kernel_ref(Kernel::F, n - 1, k);
    add_shifted(acc, f1, -1, 0, where);
    add_shifted(acc, f1, -1, 1, where);
    add_shifted(acc, f1, 1, n, where);
    add_shifted(acc, kernel_ref(Kernel::F, n - 1, k - 1), -1, 2LL * n - 2LL * k, where);
    const QPoly& f2 = kernel_ref(Kernel::F, n - 2, k);
    add_shifted(acc, f2, 1, 1, where);
    add_shifted(acc, f2, -1, n, where);
    return acc.release();
}

namespace {

// x(n+2) - (1+q) x(n+1) + q x(n) - q^shift y
QPoly second_order_residual(const QPoly& x2, const QPoly& x1, const QPoly& x0, const QPoly& y, long long shift,
                            const char* where) {
    DenseAccumulator acc;
    acc.add(x2);
    acc.add(x1, -1, 0);
    acc.add(x1, -1, 1);
    acc.add(x0, 1, 1);
    add_shifted(acc, y, -1, shift, where);
    return acc.release();
}

}  // namespace

QPoly g_recursion_residual(long n, long k) {
    return second_order_residual(kernel_ref(Kernel::G, n + 2, k), kernel_ref(Kernel::G, n + 1, k),
                                 kernel_ref(Kernel::G, n, k), kernel_ref(Kernel::G, n, k - 1),
                                 2LL * n + 4 - 4LL * k, "g_recursion_residual");
}

QPoly h_recursion_residual(long n, long k) {
    return second_order_residual(kernel_ref(Kernel::H, n + 2, k), kernel_ref(Kernel::H, n + 1, k),
                                 kernel_ref(Kernel::H, n, k), kernel_ref(Kernel::H, n, k - 1),
                                 2LL * n + 2 - 4LL * k, "h_recursion_residual");
}

QPoly santos_s_binomial_residual(long n, long k) {
    return second_order_residual(qb(n + 2, 2 * k), qb(n + 1, 2 * k), qb(n, 2 * k), qb(n, 2 * k - 2),
                                 2LL * n + 4 - 4LL * k, "santos_s_binomial_residual");
}

QPoly santos_t_binomial_residual(long n, long k) {
    return second_order_residual(qb(n + 2, 2 * k + 1), qb(n + 1, 2 * k + 1), qb(n, 2 * k + 1), qb(n, 2 * k - 1),
                                 2LL * n + 2 - 4LL * k, "santos_t_binomial_residual");
}

QPoly u_binomial_residual(long n, long k) {
    return second_order_residual(qb(n + 2 + k, 2 * k), qb(n + 1 + k, 2 * k), qb(n + k, 2 * k),
                                 qb(n + k, 2 * k - 2), 2LL * n + 4 - 2LL * k, "u_binomial_residual");
}

}  // namespace qrr
