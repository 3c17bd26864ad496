#pragma once

// Rogers-Ramanujan type polynomial families (Bressoud, Santos and the U
// family), their inner kernels, and the q-Chu-Vandermonde expansions that
// connect the alternating forms to the kernels.

#include <optional>
#include <span>
#include <string_view>

#include "qrr/qpoly.hpp"

namespace qrr {

enum class Family { A, B, C, D, S, S_ALT, T, T_ALT, U, U_ALT };
enum class Kernel { F, G, H };
enum class CvInstance { CV_B, CV_D, CV_S, CV_T };

inline constexpr Family kAllFamilies[] = {Family::A, Family::B,     Family::C, Family::D,     Family::S,
                                          Family::S_ALT, Family::T, Family::T_ALT, Family::U, Family::U_ALT};

std::string_view to_string(Family id);
std::string_view to_string(Kernel id);
std::string_view to_string(CvInstance id);

/// Accepts the tag names ("A", ..., "S_ALT", ...); empty on anything else.
std::optional<Family> parse_family(std::string_view name);

/// The family on the other side of the identity (A <-> B, S <-> S_ALT, ...).
Family partner(Family id);

/// The polynomial with index n from its defining sum. Values are cached
/// per (id, n); the returned reference stays valid for the process lifetime.
/// Throws std::invalid_argument for n < 0.
const QPoly& family_poly(Family id, long n);

/// Same sum, bypassing the cache.
QPoly compute_family_poly(Family id, long n);

/// f(n,k), g(n,k), h(n,k) from their defining alternating/weighted sums.
QPoly kernel(Kernel id, long n, long k);

/// LHS - RHS of the selected q-Chu-Vandermonde expansion. CV_D expands
/// [2n+1, n+1-2j], the binomial that actually occurs in D_n.
QPoly cv_residual(CvInstance id, long n, long j);

/// family_poly(id, n) minus its weighted kernel sum; id must be one of
/// B, D, S_ALT, T_ALT (std::invalid_argument otherwise).
QPoly kernel_sum_identity(Family id, long n);

// Residuals of the binomial- and kernel-level recursions. All are zero on
// their stated ranges; they are exposed for verification.

/// f(n,k) - f(n-1,k) - q^{n-k} f(n-1,k-1), and the mirrored rule
/// f(n,k) - q^k f(n-1,k) - f(n-1,k-1). n >= 1.
QPoly f_pascal_residual(long n, long k);
QPoly f_pascal_residual_mirrored(long n, long k);

/// f(n,k) - (1+q-q^n) f(n-1,k) - q^{2n-2k} f(n-1,k-1) + q(1-q^{n-1}) f(n-2,k). n >= 2.
QPoly f_contiguous_residual(long n, long k);

/// g(n+2,k) - (1+q) g(n+1,k) + q g(n,k) - q^{2n+4-4k} g(n,k-1).
QPoly g_recursion_residual(long n, long k);
/// h(n+2,k) - (1+q) h(n+1,k) + q h(n,k) - q^{2n+2-4k} h(n,k-1).
QPoly h_recursion_residual(long n, long k);

/// Santos binomial recursions:
/// [n+2 2k] - (1+q)[n+1 2k] + q[n 2k] - q^{2n+4-4k}[n 2k-2], and
/// [n+2 2k+1] - (1+q)[n+1 2k+1] + q[n 2k+1] - q^{2n+2-4k}[n 2k-1].
QPoly santos_s_binomial_residual(long n, long k);
QPoly santos_t_binomial_residual(long n, long k);

/// [n+2+k 2k] - (1+q)[n+1+k 2k] - q^{2n+4-2k}[n+k 2k-2] + q[n+k 2k].
QPoly u_binomial_residual(long n, long k);

}  // namespace qrr
