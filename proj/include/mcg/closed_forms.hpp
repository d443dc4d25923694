#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mcg/errors.hpp"

namespace mcg {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// All arithmetic in this module is exact; no floating point.

int32_t regularity_closed(int64_t m, int32_t h); // 2h-1 for m=2, 2h for m>2

// diam(MC(2^h)) = h - floor(h/2); diam(MC(3^h)) = h.
int64_t diam_closed(int64_t m, int32_t h);

// Diameter of the generalized recursive circulant graph GR(m_h,...,m_1):
// sum floor(m_i/2) minus floor(lambda/2), lambda = #even bases.
int64_t diam_grc(const std::vector<int64_t>& bases);

// Distance spectral radius (= transmission):
//   base 2: (2^h (3h+1) - (-1)^h) / 9, division exact
//   base 3: 2h 3^{h-1}
BigInt rho_closed(int64_t m, int32_t h);

// One step of the spectral-radius recursion from rho at exponent h-1.
BigInt rho_recursion_step(int64_t m, int32_t h, const BigInt& prev_rho);

// Average distance rho / (n - 1).
BigRat mu_closed(int64_t m, int32_t h);

// Average distance under the older n^2-denominator convention: rho / n.
BigRat mu_old_definition(int64_t m, int32_t h);

// Vertex-forwarding index rho - (n - 1).
BigInt xi_closed(int64_t m, int32_t h);

// Edge-forwarding bounds 2 rho / r <= pi <= n + rho - (2r - 1).
struct PiBounds {
    BigRat lower;
    BigInt upper;
};
PiBounds pi_bounds(int64_t m, int32_t h);

// The printed-in-source expressions that disagree with their own derivations.
// Kept evaluable so the discrepancy can be reported, never used as values.
BigInt xi_printed_base3(int32_t h);              // 3^{h-1}(2^h - 3) + 1
BigRat pi_upper_printed_base2(int32_t h);        // (2^h + (3h+1)2^h - (-1)^h - 36h + 27)/9

struct ErrataEntry {
    std::string quantity;
    int64_t m;
    int32_t h;
    std::string derived;  // value the lemmas give
    std::string printed;  // value the printed expression gives
    bool differs;
};
std::vector<ErrataEntry> errata_report(int32_t h_max);

// OEIS A045883: (2^k (3k+1) - (-1)^k)/9, k = 0..count-1 (k=0 is the trivial graph).
std::vector<BigInt> oeis_a045883(int32_t count);

// OEIS A212697: 2k 3^{k-1}, k = 1..count.
std::vector<BigInt> oeis_a212697(int32_t count);

struct ClosedFormReport {
    int64_t m = 0;
    int32_t h = 0;
    BigInt n;
    int32_t regularity = 0;
    int64_t diameter = 0;
    BigInt rho;
    BigRat mu;
    BigInt xi;
    BigRat pi_lower;
    BigInt pi_upper;
    int32_t lambda_even_dims = 0;
};
ClosedFormReport closed_form_report(int64_t m, int32_t h);

} // namespace mcg
