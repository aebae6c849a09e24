#ifndef OTV_CHECKS_HPP
#define OTV_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "otv/regions.hpp"
#include "otv/series.hpp"

namespace otv {

struct CheckReport {
    std::string name;
    bool pass = false;
    std::string detail; // witness on failure, summary on success

    std::string json() const;
};

enum class RecSide { DT, PT };

// The vacuum product: M(1,q)^n prod_{0<a<=b<n} M(q_a..q_b, q) M((q_a..q_b)^{-1}, q)
// with q = q_0..q_{n-1}, exact to total degree D.
Series v_empty(int n, int D);

// dt_vertex(n,(0,0,0),D) against v_empty(n,D).
CheckReport vacuum_check(int n, int D);

// Cross-multiplied condensation recurrence on the chosen side:
//   Y(..)Y(rc,rc) = Y(rc,.)Y(.,rc) + q^{K_i} Y(r,c)Y(c,r)
// with Y the V-series (DT) or the W-series (PT).
CheckReport recurrence_check(int which, RecSide side, const LegTriple& legs, int D);

// V^n = V^n_000 W^n to degree D; reports the multi-regularity flag, and for
// a pure nu-leg also the O_nu-corrected identity.
CheckReport correspondence_check(const LegTriple& legs, int D);

CheckReport dt_symmetry_report(const LegTriple& legs, int D);
CheckReport pt_symmetry_report(const LegTriple& legs, int D);

// All partition identities (Maya vs closed derivations, size decrease,
// length/diagonal relations, transpose commutations, value sets) over
// every partition with |eta| <= max_size.
CheckReport partition_lemma_report(int max_size);

// The weight-lemma layer: quotient identities for |eta| <= max_eta over
// the given N values, the explicit-vs-factored weight formulas, the K
// quotients, and the bar-transpose K symmetry on seeded random triples.
std::vector<CheckReport> weights_report(int max_eta, int n_max,
                                        const std::vector<long long>& Ns, uint64_t seed,
                                        int random_triples);

// Random partition with parts <= max_part and length <= max_len (possibly
// empty), from a deterministic generator state.
Partition random_partition(uint64_t& state, int max_part, int max_len);

} // namespace otv

#endif
