#pragma once

#include <utility>

#include "homim/dsp.hpp"

namespace homim {

int gray_encode(int index);
int gray_decode(int code);

/// Point carrying Gray label `symbol_index` on an m-ary PSK ring.  Labels are
/// assigned so that angularly adjacent points differ in one bit; for M=4 the
/// labels 0..3 land on {+r, +rj, -rj, -r}.
cplx psk_point(int symbol_index, int m, double radius);

/// All m points in label order.
cvec psk_alphabet(int m, double radius);

/// Nearest-point decision; ties break to the lowest label.
int detect_psk(const cplx& y, int m, double radius);

/// Two-ring geometry: an inner ring of radius r2 for the plain branch and an
/// outer ring r1 = r2 + d_min for the index-modulated branch, so that every
/// superposed sum keeps a guaranteed spacing.
struct ConstellationPair {
    int m1 = 4;
    int m2 = 4;
    double r2 = 1.0;
    double d_min = 2.0;
    double r1 = 3.0;

    static ConstellationPair make(int m1, int m2, double r2 = 1.0, double d_min = 2.0);
};

/// All M1*M2 sums P1[x1] + P2[x2] in row-major (x2, x1) table order.
struct SuperpositionLut {
    struct Entry {
        int x1_index;
        int x2_index;
        cplx point;
    };
    int m1 = 0;
    int m2 = 0;
    std::vector<Entry> entries;

    const Entry& at(int x1_index, int x2_index) const {
        return entries[static_cast<std::size_t>(x2_index) * m1 + x1_index];
    }
};

SuperpositionLut build_lut(const ConstellationPair& pair);

/// Minimum-distance detection over the whole table; ties break to the lowest
/// table order index.  Returns (x1_index, x2_index).
std::pair<int, int> detect_lut(const cplx& y, const SuperpositionLut& lut);

}  // namespace homim
