#pragma once

#include <complex>
#include <vector>

namespace homim {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;
using rvec = std::vector<double>;

/// Transform convention used throughout: unscaled forward sum, 1/LN on the
/// inverse.  The clipping-halving and conjugate-symmetry properties relied on
/// by the modem are stated under this convention, so it must not change.
///
///   forward:  X[k] = sum_n x(n) exp(-2*pi*j*k*n/LN)
///   inverse:  x(n) = (1/LN) sum_k X[k] exp(+2*pi*j*k*n/LN)
///
/// Lengths are restricted to powers of two; every supported configuration has
/// LN a power of two.
cvec forward_dft(const cvec& x);
cvec inverse_dft(const cvec& X);

/// Frequency-bin bookkeeping for an LN-point spectrum carrying N "physical"
/// subcarriers: sigma+ holds the positive-frequency data region {1..N/2-1},
/// sigma- its conjugate mirror {LN-N/2+1..LN-1}.  DC and everything in
/// between is reserved for zero padding.
struct BinIndexSet {
    std::vector<int> positive_bins;  // sigma+
    std::vector<int> negative_bins;  // sigma-, mirror of sigma+ in the same order
    int dc_bin = 0;
    int total_bins = 0;  // LN

    static BinIndexSet make(int n, int l);

    /// Mirror bin of a positive-frequency bin: LN - sigma.
    int mirror(int sigma) const { return total_bins - sigma; }
};

}  // namespace homim
