#ifndef OTV_WEIGHTS_HPP
#define OTV_WEIGHTS_HPP

#include <string>
#include <vector>

#include "otv/partition.hpp"
#include "otv/regions.hpp"
#include "otv/series.hpp"

namespace otv {

// Laurent monomial in q_0..q_{n-1} with coefficient +1; exponents are
// accumulated per residue class (q_k means q_{k mod n}).
struct QMono {
    int n = 1;
    std::vector<long long> e;

    explicit QMono(int n_) : n(n_), e(n_, 0) {}
    void mul(long long idx, long long exp) { e[normalize_residue(idx, n)] += exp; }
    QMono& operator*=(const QMono& o);
    QMono inverse() const;
    bool operator==(const QMono&) const = default;
    long long total_degree() const;
    Series to_series() const;
    std::string str() const;
};

QMono qmono_bar(const QMono& m); // q_k -> q_{-k}

// The varpi factors of the dimer weight computations.
QMono varpi1(long long m, long long l, long long k, int n);
QMono varpi2(const Partition& eta, long long m, long long k, int n);
QMono varpi3(const Partition& eta, long long m, long long k, int n);
QMono varpi4(const Partition& eta, long long m, long long k, int n);
QMono varpi5(const Partition& eta, long long m, long long k, int n);
QMono varpi6(const Partition& eta, long long m, int n);
QMono varpi7(const Partition& eta, long long m, int n);

// The vartheta factors of the double-dimer weight computations.
QMono vartheta1(const Partition& eta, long long m, long long k, long long l, int n);
QMono vartheta2(const Partition& eta, long long m, long long k, int n);
QMono vartheta3(const Partition& eta, long long m, long long k, long long l, int n);
QMono vartheta4(const Partition& eta, long long m, long long k, int n);
QMono vartheta5(const Partition& eta, long long m, long long k, int n);
QMono vartheta6(const Partition& eta, long long m, int n);
QMono vartheta7(const Partition& eta, long long m, long long k, int n);
QMono vartheta8(const Partition& eta, long long m, long long k, long long l, int n);

// K-monomials multiplying the cross terms of the three recurrences.
// which = 1: wants lambda, mu nonempty; 2: lambda, nu; 3: mu, nu.
QMono K_monomial(int which, const LegTriple& legs);

// q^{K_2(l,m,n)} == bar q^{K_3(m',l',n')}
bool K_transpose_symmetry(const LegTriple& legs);

// Normalized minimal dimer weights (factored forms), as functions of the
// undecorated legs. The U/D/LU/RD/LD/RU variants are the minimal weights of
// the graphs with two boundary vertices removed; they require the legs the
// construction modifies to be nonempty.
QMono dt_omega_min(const LegTriple& legs, long long N);
QMono dt_omega_U(const LegTriple& legs, long long N);
QMono dt_omega_D(const LegTriple& legs, long long N);
QMono dt_omega_LU(const LegTriple& legs, long long N);
QMono dt_omega_RD(const LegTriple& legs, long long N);
QMono dt_omega_LD(const LegTriple& legs, long long N);
QMono dt_omega_RU(const LegTriple& legs, long long N);

// Base double-dimer edge-weights (factored forms).
QMono pt_omega_base(const LegTriple& legs, long long N);
QMono pt_omega_U(const LegTriple& legs, long long N);
QMono pt_omega_D(const LegTriple& legs, long long N);
QMono pt_omega_LU(const LegTriple& legs, long long N);
QMono pt_omega_RD(const LegTriple& legs, long long N);
QMono pt_omega_LD(const LegTriple& legs, long long N);
QMono pt_omega_RU(const LegTriple& legs, long long N);

// Explicit double-product forms of each weight above (independent
// transcriptions used to validate the factored expressions).
QMono dt_omega_min_explicit(const LegTriple& legs, long long N);
QMono dt_omega_U_explicit(const LegTriple& legs, long long N);
QMono dt_omega_D_explicit(const LegTriple& legs, long long N);
QMono dt_omega_LU_explicit(const LegTriple& legs, long long N);
QMono dt_omega_RD_explicit(const LegTriple& legs, long long N);
QMono dt_omega_LD_explicit(const LegTriple& legs, long long N);
QMono dt_omega_RU_explicit(const LegTriple& legs, long long N);
QMono pt_omega_base_explicit(const LegTriple& legs, long long N);
QMono pt_omega_U_explicit(const LegTriple& legs, long long N);
QMono pt_omega_D_explicit(const LegTriple& legs, long long N);
QMono pt_omega_LU_explicit(const LegTriple& legs, long long N);
QMono pt_omega_RD_explicit(const LegTriple& legs, long long N);
QMono pt_omega_LD_explicit(const LegTriple& legs, long long N);
QMono pt_omega_RU_explicit(const LegTriple& legs, long long N);

struct LemmaReport {
    std::string id;
    bool ok = false;
    std::string detail;
};

// Quotient identities among varpi/vartheta factors, checked for a single
// eta and N. Returns one report per identity.
std::vector<LemmaReport> quotient_identity_suite(const Partition& eta, long long N, int n);

// Explicit-vs-factored agreement for all 14 weight formulas at given legs/N.
std::vector<LemmaReport> weight_formula_suite(const LegTriple& legs, long long N);

// The two quotient facts behind each recurrence: the four-minimal-weights
// quotient is 1 and the crossing quotient equals q^{+-K_i}, independent of N.
std::vector<LemmaReport> k_quotient_suite(const LegTriple& legs, const std::vector<long long>& Ns);

} // namespace otv

#endif
