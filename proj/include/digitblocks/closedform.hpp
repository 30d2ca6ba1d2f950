#pragma once

// Closed forms for sums of N_{w,B}(n) against the series kernels, as exact
// symbolic constants.
//
// All of them reduce, via the block-counting telescoping lemma, to the sum of
// A_m = 1/m - log((m+1)/m) over the progression m = a n + b with a = B^|w|,
// b = v_B(w) (n >= 1 for zero blocks, n >= 0 otherwise); see
// a_progression_sum.

#include <cstdint>
#include <utility>

#include "digitblocks/digits.hpp"
#include "digitblocks/symbolic.hpp"

namespace digitblocks::closedform {

/// sum_{n>=1} N_{w,2}(n) / (2n(2n+1))
SymbolicConstant block_series_deg2(const Word& w);

/// sum_{n>=1} N_{w,2}(n) / (2n(2n+1)(2n+2))
SymbolicConstant block_series_deg3(const Word& w);

/// sum_{n>=1} N_{w,2}(n) / (n(n+1))
SymbolicConstant block_series_nn1(const Word& w);

/// sum_{n>=1} N_{w,B}(n) Q(n,B); equals block_series_deg2 for B = 2.
SymbolicConstant block_series_base(const Word& w);

/// sum_{n>=1} N_{w,2}(n) Q^(k)(n), Q^(k)(n) = A^(k)_n - A^(k)_{2n} - A^(k)_{2n+1}.
///
/// Since A^(k)_m = A_m + 1/(m+k) - 1/m, the sum splits into
/// a_progression_sum(a, b) plus
///   b > 0: sum_{n>=0} (1/(an+b+k) - 1/(an+b)) = (Psi(b/a) - Psi((b+k)/a)) / a,
///   b = 0: sum_{n>=1} (1/(an+k) - 1/(an))    = (Psi(1) - Psi(1+k/a)) / a.
SymbolicConstant block_series_qk(const Word& w, std::uint64_t k);

/// (gamma+, gamma-) = deg2("1") +/- deg2("0").
std::pair<SymbolicConstant, SymbolicConstant> gamma_pm();

/// (delta+, delta-) = deg3("1") +/- deg3("0").
std::pair<SymbolicConstant, SymbolicConstant> delta_pm();

}  // namespace digitblocks::closedform
