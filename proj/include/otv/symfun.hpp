#ifndef OTV_SYMFUN_HPP
#define OTV_SYMFUN_HPP

#include "otv/partition.hpp"
#include "otv/series.hpp"

namespace otv {

// Exponent vector of the monomial ladder q_bullet(t): q_0 = 1,
// q_t = q_t * q_{t-1}; indices mod n. The weighted degree is t.
Exps q_bullet(long long t, int n);

Series q_bullet_series(long long t, int n);

// Skew Schur function s_{xi/eta} evaluated at the alphabet
// x_i = q_bullet(i - nu_i) (nu 0-indexed, parts beyond ell(nu) are 0),
// exact to total degree D. Returns the zero series when eta is not
// contained in xi. Tableau entries are cut off at a proven bound L and the
// result is re-verified at L+1.
Series skew_schur_spec(const Partition& xi, const Partition& eta, const Partition& nu, int n,
                       int D);

// H_nu = prod over cells of 1/(1 - prod_s q_s^{h^s_nu(i,j)}), exact to D.
Series hook_series_H(const Partition& nu, int n, int D);

// Loop Schur function via the colored-hook product:
// (prod_{(i,j) in nu} q_{i-j}^j) * H_nu.
Series loop_schur(const Partition& nu, int n, int D);

// Loop Schur function from its tableau definition (entries >= 0, weakly
// increasing up columns, strictly increasing along rows), used as the
// independent cross-check of loop_schur.
Series loop_schur_ssyt(const Partition& nu, int n, int D);

// -A_lambda monomial: prod_k q_k^{-A_lambda(k,n)}.
Series neg_A_monomial(const Partition& lambda, int n);

} // namespace otv

#endif
