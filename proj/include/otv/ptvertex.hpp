#ifndef OTV_PTVERTEX_HPP
#define OTV_PTVERTEX_HPP

#include "otv/regions.hpp"
#include "otv/series.hpp"

namespace otv {

// Worker threads for the enumeration loops (0 = hardware count). Results
// are reduced in a fixed chunk order and do not depend on the setting.
void set_jobs(int jobs);
int jobs();

// W^n by direct enumeration of member AB configurations, exact to total
// degree D. Throws errc::unstable only if the membership verdicts refuse to
// stabilize after retries.
Series pt_vertex_enum(const LegTriple& legs, int D);

// W^n from the closed formula (hook product times skew Schur sum). Valid
// when nu is multi-regular, or lambda = mu = 0, or nu = 0; otherwise
// throws errc::out_of_validity unless force is set.
Series pt_vertex_closed(const LegTriple& legs, int D, bool force = false);

// V^n_{legs} / V^n_{000}, exact to D. Equals W^n only for multi-regular nu;
// throws errc::out_of_validity unless force or the precondition holds.
Series pt_vertex_dt_ratio(const LegTriple& legs, int D, bool force = false);

bool pt_closed_valid(const LegTriple& legs);

// W^n = bar W^n_{mu' lambda' nu'}.
bool pt_symmetry_check(const LegTriple& legs, int D);

// O_nu correction of the one-leg identity: product of cyclically shifted
// vacuum series with exponents -2|nu|_k + |nu|_{k+1} + |nu|_{k-1}.
Series O_nu(const Partition& nu, int n, int D);

} // namespace otv

#endif
