#include "homim/constellation.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace homim {

int gray_encode(int index) { return index ^ (index >> 1); }

int gray_decode(int code) {
    int index = 0;
    for (; code; code >>= 1) index ^= code;
    return index;
}

cplx psk_point(int symbol_index, int m, double radius) {
    if (m < 2 || (m & (m - 1)) != 0)
        throw std::invalid_argument("psk cardinality must be a power of two >= 2");
    if (symbol_index < 0 || symbol_index >= m)
        throw std::out_of_range("psk symbol index out of range");
    const int position = gray_decode(symbol_index);
    const double ang = 2.0 * std::numbers::pi * position / static_cast<double>(m);
    return radius * cplx(std::cos(ang), std::sin(ang));
}

cvec psk_alphabet(int m, double radius) {
    cvec points(m);
    for (int v = 0; v < m; ++v) points[v] = psk_point(v, m, radius);
    return points;
}

int detect_psk(const cplx& y, int m, double radius) {
    thread_local std::map<std::pair<int, double>, cvec> cache;
    auto it = cache.find({m, radius});
    if (it == cache.end())
        it = cache.emplace(std::make_pair(m, radius), psk_alphabet(m, radius)).first;
    const cvec& points = it->second;
    int best = 0;
    double best_d2 = std::norm(y - points[0]);
    for (int v = 1; v < m; ++v) {
        double d2 = std::norm(y - points[v]);
        if (d2 < best_d2) {
            best_d2 = d2;
            best = v;
        }
    }
    return best;
}

ConstellationPair ConstellationPair::make(int m1, int m2, double r2, double d_min) {
    if (r2 <= 0.0) throw std::invalid_argument("r2 must be positive");
    if (d_min <= 0.0) throw std::invalid_argument("d_min must be positive");
    ConstellationPair p;
    p.m1 = m1;
    p.m2 = m2;
    p.r2 = r2;
    p.d_min = d_min;
    p.r1 = r2 + d_min;
    psk_point(0, m1, p.r1);  // validates cardinalities
    psk_point(0, m2, p.r2);
    return p;
}

SuperpositionLut build_lut(const ConstellationPair& pair) {
    SuperpositionLut lut;
    lut.m1 = pair.m1;
    lut.m2 = pair.m2;
    lut.entries.reserve(static_cast<std::size_t>(pair.m1) * pair.m2);
    const cvec p1 = psk_alphabet(pair.m1, pair.r1);
    const cvec p2 = psk_alphabet(pair.m2, pair.r2);
    for (int x2 = 0; x2 < pair.m2; ++x2)
        for (int x1 = 0; x1 < pair.m1; ++x1)
            lut.entries.push_back({x1, x2, p1[x1] + p2[x2]});
    return lut;
}

std::pair<int, int> detect_lut(const cplx& y, const SuperpositionLut& lut) {
    std::size_t best = 0;
    double best_d2 = std::norm(y - lut.entries[0].point);
    for (std::size_t t = 1; t < lut.entries.size(); ++t) {
        double d2 = std::norm(y - lut.entries[t].point);
        if (d2 < best_d2) {
            best_d2 = d2;
            best = t;
        }
    }
    return {lut.entries[best].x1_index, lut.entries[best].x2_index};
}

}  // namespace homim
