#ifndef OTV_DTVERTEX_HPP
#define OTV_DTVERTEX_HPP

#include "otv/regions.hpp"
#include "otv/series.hpp"

namespace otv {

// Colored renormalized volume ||pi||_l of pi = pi_min + extra.
std::vector<long long> colored_volume(const LegTriple& legs, const std::vector<Box>& extra);

// V^n_{lambda mu nu}, exact to weighted total degree D.
Series dt_vertex(const LegTriple& legs, int D);

// V^n_{lambda mu nu} = bar V^n_{mu' lambda' nu'}.
bool dt_symmetry_check(const LegTriple& legs, int D);

LegTriple transpose_legs(const LegTriple& legs);

} // namespace otv

#endif
