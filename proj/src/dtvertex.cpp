#include "otv/dtvertex.hpp"

#include <numeric>

namespace otv {

std::vector<long long> colored_volume(const LegTriple& legs, const std::vector<Box>& extra) {
    std::vector<long long> vol = pi_min_colored_volume(legs);
    for (const Box& b : extra) vol[box_color(b, legs.n)]++;
    return vol;
}

Series dt_vertex(const LegTriple& legs, int D) {
    if (D < 0) fail(errc::bad_argument, "degree must be nonnegative");
    std::vector<long long> base = pi_min_colored_volume(legs);
    long long floor_total = std::accumulate(base.begin(), base.end(), 0LL);
    int k_max = (int)(D - floor_total);
    Series out(qvars(legs.n), D);
    out.set_floor((int)floor_total);
    if (k_max < 0) return out;
    Exps e(legs.n);
    enumerate_dt(legs, k_max, [&](const std::vector<Box>& extra) {
        std::vector<long long> vol = base;
        for (const Box& b : extra) vol[box_color(b, legs.n)]++;
        for (int l = 0; l < legs.n; ++l) e[l] = (int32_t)vol[l];
        out.add_term(e, 1);
    });
    return out;
}

LegTriple transpose_legs(const LegTriple& legs) {
    return LegTriple(legs.mu.conjugate(), legs.lambda.conjugate(), legs.nu.conjugate(), legs.n);
}

bool dt_symmetry_check(const LegTriple& legs, int D) {
    Series lhs = dt_vertex(legs, D);
    Series rhs = bar_involution(dt_vertex(transpose_legs(legs), D), legs.n);
    return equal_to_degree(lhs, rhs, D);
}

} // namespace otv
