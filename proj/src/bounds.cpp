#include "rlsyn/bounds.hpp"

#include <cmath>
#include <limits>

namespace rlsyn::bounds {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// log2 with an exact fast path for powers of two, so the documented
/// examples evaluate bit-exactly.
double log2_exact(double v) {
    if (v > 0.0) {
        int exp = 0;
        const double mant = std::frexp(v, &exp);
        if (mant == 0.5)
            return static_cast<double>(exp - 1);
    }
    return std::log2(v);
}

double pow2(double e) { return std::exp2(e); }

int ceil_log2_int(int m) {
    int k = 0;
    while ((1 << k) < m)
        ++k;
    return k;
}

} // namespace

double l_conj0(int n, std::uint64_t t) { return 2.0 * (n - 1) * static_cast<double>(t); }

double q_conj0(int n) { return static_cast<double>(n - 1); }

double d_conj0(int n, std::uint64_t t) {
    return 2.0 * static_cast<double>(t) * ceil_log2_int(n);
}

BoundReport l_conj(int n, double q, double t) {
    const double denom = log2_exact(q) - log2_exact(static_cast<double>(n)) - 1.0;
    const double value = denom > 0.0 ? q + 8.0 * n * t / denom : kInf;
    return {value, q > 2.0 * n, "L_conj(n,q,t)"};
}

double q_conj(int n, double q) { return q + n - 1; }

BoundReport d_conj(int n, double q, double t) {
    const double inner = log2_exact(q) - log2_exact(static_cast<double>(n)) - 1.0;
    const double value = inner > 0.0
                             ? q + 2.0 * t * (2.0 + log2_exact(static_cast<double>(n)) -
                                              log2_exact(inner))
                             : kInf;
    return {value, q > 2.0 * n, "D_conj(n,q,t)"};
}

BoundReport l_xor(int n, double q, double t) {
    const double denom = log2_exact(q) - log2_exact(static_cast<double>(n)) - 1.0;
    const double value = denom > 0.0 ? 2.0 * q + 16.0 * n * t / denom : kInf;
    return {value, q > 2.0 * n, "L_xor(n,q,t)"};
}

BoundReport d_xor(int n, double q, double t) {
    BoundReport conj = d_conj(n, q, t);
    return {2.0 * conj.value, conj.valid, "D_xor(n,q,t)"};
}

double q_xor(int n, double q) { return q + n - 1; }

double delta_threshold(int n, int s) {
    const double exponent = pow2(static_cast<double>(s + 1));
    if (exponent > 1000.0)
        return kInf;
    return 3.0 * n / pow2(static_cast<double>(s)) * pow2(exponent);
}

int storage_levels_bound(int n, double q) {
    int best = -1;
    for (int s = 0; s < 64; ++s) {
        const double threshold = delta_threshold(n, s);
        if (threshold <= q)
            best = s;
        else
            break;
    }
    return best;
}

BoundReport ondemand_factor(int n, double q) {
    const double denom = log2_exact(q) - log2_exact(static_cast<double>(n)) - 1.0;
    const double value = denom > 0.0 ? 8.0 * n / denom : kInf;
    return {value, q > 2.0 * n, "2^(r+1) cap"};
}

BoundReport l_shannon_upper(int n, double q) {
    const double denom = log2_exact(q - 4.0 * n) - log2_exact(static_cast<double>(n)) - 2.0;
    const double value =
        denom > 0.0 ? pow2(static_cast<double>(n)) + 8.0 * n * pow2(static_cast<double>(n)) / denom
                    : kInf;
    return {value, q > 8.0 * n, "L(n,q) upper"};
}

BoundReport d_shannon_upper(int n, double q) {
    const double inner = log2_exact(q - 4.0 * n) - log2_exact(static_cast<double>(n)) - 2.0;
    const double value =
        inner > 0.0 ? pow2(static_cast<double>(n + 1)) *
                          (2.5 + log2_exact(static_cast<double>(n)) - log2_exact(inner))
                    : kInf;
    return {value, q > 8.0 * n, "D(n,q) upper"};
}

} // namespace rlsyn::bounds
