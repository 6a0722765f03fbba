#pragma once

#include <cstdint>
#include <string>

namespace rlsyn::bounds {

/// One evaluated closed-form bound. `valid` reflects the formula's domain
/// condition (q > 2n or q > 8n); when it is false the value carries no
/// meaning (it may be +infinity).
struct BoundReport {
    double value = 0.0;
    bool valid = false;
    std::string formula;
};

// Fully on-demand conjunction provider: gate, ancilla and depth costs.
double l_conj0(int n, std::uint64_t t); // 2(n-1)t
double q_conj0(int n);                  // n - 1
double d_conj0(int n, std::uint64_t t); // 2t * ceil(log2 n)

// Budgeted conjunction provider, valid for q > 2n.
BoundReport l_conj(int n, double q, double t);
double q_conj(int n, double q); // q + n - 1
BoundReport d_conj(int n, double q, double t);

// Linear-form provider: factor-2 analogues of the conjunction formulas.
BoundReport l_xor(int n, double q, double t);
BoundReport d_xor(int n, double q, double t);
double q_xor(int n, double q); // q + n - 1

/// (3n / 2^s) * 2^(2^(s+1)): the budget that certifies storing the last
/// (s+1) tree levels.
double delta_threshold(int n, int s);
/// Largest s with delta_threshold(n, s) <= q, or -1 when even s = 0 fails.
int storage_levels_bound(int n, double q);

/// 8n / (log2 q - log2 n - 1): the cap on 2^(r+1); valid for q > 2n.
BoundReport ondemand_factor(int n, double q);

// Whole-transformation upper bounds, valid for q > 8n.
BoundReport l_shannon_upper(int n, double q);
BoundReport d_shannon_upper(int n, double q);

} // namespace rlsyn::bounds
