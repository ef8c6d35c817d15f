#include "homim/dsp.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace homim {
namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Twiddle factors exp(-2*pi*j*k/n), k in [0, n/2), cached per length.
const cvec& twiddles(std::size_t n) {
    thread_local std::unordered_map<std::size_t, cvec> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    cvec w(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        double ang = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        w[k] = cplx(std::cos(ang), std::sin(ang));
    }
    return cache.emplace(n, std::move(w)).first->second;
}

// Iterative radix-2 Cooley-Tukey, in place.  inverse=true conjugates the
// twiddles; scaling is applied by the caller.
void fft_pow2(cvec& a, bool inverse) {
    const std::size_t n = a.size();
    if (n <= 1) return;

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    const cvec& w = twiddles(n);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                cplx tw = w[k * stride];
                if (inverse) tw = std::conj(tw);
                cplx u = a[i + k];
                cplx v = a[i + k + len / 2] * tw;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
}

void require_pow2(std::size_t n) {
    if (!is_pow2(n))
        throw std::invalid_argument("dft length must be a power of two, got " +
                                    std::to_string(n));
}

}  // namespace

cvec forward_dft(const cvec& x) {
    require_pow2(x.size());
    cvec X = x;
    fft_pow2(X, false);
    return X;
}

cvec inverse_dft(const cvec& X) {
    require_pow2(X.size());
    cvec x = X;
    fft_pow2(x, true);
    const double scale = 1.0 / static_cast<double>(x.size());
    for (cplx& v : x) v *= scale;
    return x;
}

BinIndexSet BinIndexSet::make(int n, int l) {
    if (n < 4 || !is_pow2(static_cast<std::size_t>(n)))
        throw std::invalid_argument("N must be a power of two >= 4");
    if (l < 1 || !is_pow2(static_cast<std::size_t>(l)))
        throw std::invalid_argument("L must be a power of two >= 1");
    BinIndexSet s;
    s.total_bins = l * n;
    s.dc_bin = 0;
    for (int k = 1; k <= n / 2 - 1; ++k) {
        s.positive_bins.push_back(k);
        s.negative_bins.push_back(s.total_bins - k);
    }
    return s;
}

}  // namespace homim
