#include "otv/weights.hpp"

#include <numeric>
#include <sstream>

#include "otv/dtvertex.hpp"

namespace otv {

QMono& QMono::operator*=(const QMono& o) {
    if (n != o.n) fail(errc::bad_argument, "QMono modulus mismatch");
    for (int i = 0; i < n; ++i) e[i] += o.e[i];
    return *this;
}

QMono QMono::inverse() const {
    QMono out(n);
    for (int i = 0; i < n; ++i) out.e[i] = -e[i];
    return out;
}

long long QMono::total_degree() const { return std::accumulate(e.begin(), e.end(), 0LL); }

Series QMono::to_series() const {
    Exps exps(n);
    for (int i = 0; i < n; ++i) exps[i] = (int32_t)e[i];
    return Series::monomial(qvars(n), exps, 1);
}

std::string QMono::str() const {
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < n; ++i) {
        if (e[i] == 0) continue;
        if (any) os << "*";
        os << "q_" << i;
        if (e[i] != 1) os << "^" << e[i];
        any = true;
    }
    return any ? os.str() : std::string("1");
}

QMono qmono_bar(const QMono& m) {
    QMono out(m.n);
    for (int k = 0; k < m.n; ++k) out.e[normalize_residue(-k, m.n)] = m.e[k];
    return out;
}

// -------------------------------------------------------------------------
// varpi factors
// -------------------------------------------------------------------------

QMono varpi1(long long m, long long l, long long k, int n) {
    QMono out(n);
    for (long long i = 0; i <= m; ++i)
        for (long long j = 0; j <= m - l; ++j) out.mul(j - i + k, m - i);
    return out;
}

QMono varpi2(const Partition& eta, long long m, long long k, int n) {
    QMono out(n);
    for (int i = 1; i <= eta.length(); ++i)
        for (long long j = 0; j <= m; ++j) out.mul(j - i + k, eta.part(i));
    return out;
}

QMono varpi3(const Partition& eta, long long m, long long k, int n) {
    QMono out(n);
    for (int i = 1; i <= eta.length(); ++i)
        for (long long j = 0; j <= eta.part(i) - 1; ++j) out.mul(j - i + k, -m + i);
    return out;
}

QMono varpi4(const Partition& eta, long long m, long long k, int n) {
    QMono out(n);
    for (int i = 1; i <= eta.length(); ++i) {
        long long jmax = (i <= eta.part(i)) ? (i - k) : eta.part(i);
        for (long long j = 1; j <= jmax; ++j) out.mul(m - i + j + k - 1, m + eta.part(i) - i + k - 1);
    }
    return out;
}

QMono varpi5(const Partition& eta, long long m, long long k, int n) {
    QMono out(n);
    for (int i = 1; i <= eta.length(); ++i) {
        long long jmax = (i <= eta.part(i)) ? (i - k) : eta.part(i);
        for (long long j = 1; j <= jmax; ++j) out.mul(i - j - k - m + 1, eta.part(i) - j);
    }
    return out;
}

QMono varpi6(const Partition& eta, long long m, int n) {
    QMono out(n);
    out.mul(m, -(m + eta.part(1)));
    for (int i = 2; i <= eta.length(); ++i) {
        long long jmax = (i <= eta.part(i) + 1) ? (i - 2) : eta.part(i);
        for (long long j = 1; j <= jmax; ++j) out.mul(m + j + 1 - i, m + 1 + eta.part(i) - i);
    }
    return out;
}

QMono varpi7(const Partition& eta, long long m, int n) {
    QMono out(n);
    out.mul(-m, -(long long)eta.part(1));
    for (int i = 2; i <= eta.length(); ++i) {
        long long jmax = (i <= eta.part(i) + 1) ? (i - 2) : eta.part(i);
        for (long long j = 1; j <= jmax; ++j) out.mul(i - j - m - 1, eta.part(i) - j);
    }
    return out;
}

// -------------------------------------------------------------------------
// vartheta factors
// -------------------------------------------------------------------------

QMono vartheta1(const Partition& eta, long long m, long long k, long long l, int n) {
    QMono out(n);
    for (long long i = 1; i <= m - eta.length() - l; ++i)
        for (long long j = 1; j <= i; ++j) out.mul(-m + i - j + 1, i + k);
    return out;
}

QMono vartheta2(const Partition& eta, long long m, long long k, int n) {
    QMono out(n);
    for (int i = 1; i <= eta.length(); ++i) {
        long long jmax = (i <= eta.part(i)) ? (m - eta.part(i)) : (m - i);
        for (long long j = 1; j <= jmax; ++j) out.mul(-i - j + k + 1, m + eta.part(i) - i - k);
    }
    return out;
}

QMono vartheta3(const Partition& eta, long long m, long long k, long long l, int n) {
    QMono out(n);
    for (long long i = 1; i <= m - eta.length() - 1; ++i)
        for (long long j = eta.length() + 1; j <= m - i; ++j) out.mul(i + j - l, m + i - k);
    return out;
}

QMono vartheta4(const Partition& eta, long long m, long long k, int n) {
    QMono out(n);
    for (int i = 1; i <= eta.length(); ++i) {
        long long jmax = (i <= eta.part(i)) ? (m - eta.part(i) - k) : (m - i - k);
        for (long long j = 1; j <= jmax; ++j) out.mul(i + j + k - 1, m + eta.part(i) + j + k - 1);
    }
    return out;
}

QMono vartheta5(const Partition& eta, long long m, long long k, int n) {
    QMono out(n);
    if (eta.empty()) return out;
    for (int i = 1; i <= eta.length(); ++i) {
        long long jmax = (i <= eta.part(i) + 1) ? (m - eta.part(i) - 1) : (m - i);
        for (long long j = 1; j <= jmax; ++j) out.mul(-i - j + k + 1, m + eta.part(i) - i - k + 1);
    }
    return out;
}

QMono vartheta6(const Partition& eta, long long m, int n) {
    QMono out(n);
    if (eta.empty()) return out;
    for (int i = 1; i <= eta.length(); ++i) {
        long long jmax = (i <= eta.part(i) + 1) ? (m - eta.part(i) - 1) : (m - i);
        for (long long j = 1; j <= jmax; ++j) out.mul(i + j - 1, m + eta.part(i) + j);
    }
    return out;
}

QMono vartheta7(const Partition& eta, long long m, long long k, int n) {
    QMono out(n);
    for (int i = 1; i <= eta.length(); ++i) {
        long long jmax = (i < eta.part(i) - 1) ? (m - eta.part(i) + k) : (m - i + k - 1);
        for (long long j = 1; j <= jmax; ++j) out.mul(-i - j + k, m + eta.part(i) - i - 1);
    }
    return out;
}

QMono vartheta8(const Partition& eta, long long m, long long k, long long l, int n) {
    // the second-branch range is m-i-k: the k = -1 instance pins it, and
    // the printed m-i-1 only matches the k = 1 instances
    QMono out(n);
    for (int i = 1; i <= eta.length(); ++i) {
        long long jmax = (i < eta.part(i) - k) ? (m - eta.part(i)) : (m - i - k);
        for (long long j = 1; j <= jmax; ++j) out.mul(i + j + k - l - 1, m + eta.part(i) + j - 2 * l - 1);
    }
    return out;
}

// -------------------------------------------------------------------------
// K monomials
// -------------------------------------------------------------------------

QMono K_monomial(int which, const LegTriple& legs) {
    int n = legs.n;
    QMono out(n);
    const Partition lp = legs.lambda.conjugate();
    const Partition& mu = legs.mu;
    const Partition& nu = legs.nu;
    switch (which) {
    case 1: {
        if (legs.lambda.empty() || legs.mu.empty())
            fail(errc::empty_partition, "K1 wants lambda, mu nonempty");
        DiagStats sl = diag_stats(lp), sm = diag_stats(mu);
        out.mul(-sl.dt, sl.d);
        out.mul(sm.dt, sm.d);
        for (long long i = -sl.dt; i <= sm.dt; ++i) out.mul(i, -1);
        for (int i = sl.dt + 1; i <= lp.length(); ++i) {
            out.mul(-i, lp.part(i));
            out.mul(-i + 1, -lp.part(i));
        }
        for (int i = sm.dt + 1; i <= mu.length(); ++i) {
            out.mul(i, mu.part(i));
            out.mul(i - 1, -mu.part(i));
        }
        break;
    }
    case 2: {
        if (legs.lambda.empty() || legs.nu.empty())
            fail(errc::empty_partition, "K2 wants lambda, nu nonempty");
        DiagStats sl = diag_stats(lp), sn = diag_stats(nu);
        out.mul(1 - sl.d, -(long long)lp.part(sl.d));
        for (int i = 1; i <= sl.d - 1; ++i) out.mul(-i, 1);
        for (int i = 1; i <= sl.d - 1; ++i) {
            out.mul(-i, lp.part(i));
            out.mul(-i + 1, -lp.part(i));
        }
        for (int i = 1; i <= mu.length(); ++i) {
            out.mul(i, mu.part(i));
            out.mul(i - 1, -mu.part(i));
        }
        for (long long i = 1; i <= nu.part(sn.d) - sn.d; ++i) out.mul(i, -1);
        break;
    }
    case 3: {
        if (legs.mu.empty() || legs.nu.empty())
            fail(errc::empty_partition, "K3 wants mu, nu nonempty");
        DiagStats sm = diag_stats(mu), sn = diag_stats(nu);
        out.mul(sm.d - 1, -(long long)mu.part(sm.d));
        for (int i = 1; i <= sm.d - 1; ++i) out.mul(i, 1);
        for (int i = 1; i <= sm.d - 1; ++i) {
            out.mul(i, mu.part(i));
            out.mul(i - 1, -mu.part(i));
        }
        for (int i = 1; i <= lp.length(); ++i) {
            out.mul(-i, lp.part(i));
            out.mul(-i + 1, -lp.part(i));
        }
        for (long long i = 1; i <= sn.dt - sn.d; ++i) out.mul(-i, -1);
        break;
    }
    default:
        fail(errc::bad_argument, "K_monomial wants which in 1..3");
    }
    return out;
}

bool K_transpose_symmetry(const LegTriple& legs) {
    QMono k2 = K_monomial(2, legs);
    QMono k3 = K_monomial(3, transpose_legs(legs));
    return k2 == qmono_bar(k3);
}

// -------------------------------------------------------------------------
// factored minimal / base weights
// -------------------------------------------------------------------------

namespace {
Partition conj(const Partition& p) { return p.conjugate(); }
Partition der(const Partition& p, DeriveKind k) { return derive(p, k); }
} // namespace

QMono dt_omega_min(const LegTriple& legs, long long N) {
    int n = legs.n;
    QMono out = varpi1(N - 1, 0, 0, n);
    out *= varpi2(conj(legs.lambda), N - 1, 1, n);
    out *= qmono_bar(varpi2(legs.mu, N - 1, 1, n));
    out *= varpi3(legs.nu, N, 1, n);
    out *= varpi4(conj(legs.lambda), N, 1, n);
    out *= varpi5(legs.mu, N, 1, n);
    return out;
}

QMono dt_omega_U(const LegTriple& legs, long long N) {
    int n = legs.n;
    Partition lc = der(conj(legs.lambda), DeriveKind::c);
    Partition mc = der(legs.mu, DeriveKind::c);
    QMono out = varpi1(N, 0, 0, n);
    out *= varpi2(lc, N, 1, n);
    out *= qmono_bar(varpi2(mc, N, 1, n));
    out *= varpi3(legs.nu, N + 1, 1, n);
    out *= varpi6(lc, N, n);
    out *= varpi7(mc, N, n);
    return out;
}

QMono dt_omega_D(const LegTriple& legs, long long N) {
    int n = legs.n;
    Partition lr = der(conj(legs.lambda), DeriveKind::r);
    Partition mr = der(legs.mu, DeriveKind::r);
    QMono out = varpi1(N - 2, 0, 0, n);
    out *= varpi2(lr, N - 2, 1, n);
    out *= qmono_bar(varpi2(mr, N - 2, 1, n));
    out *= varpi3(legs.nu, N - 1, 1, n);
    out *= varpi4(lr, N, 0, n);
    out *= varpi5(mr, N, 0, n);
    return out;
}

QMono dt_omega_LU(const LegTriple& legs, long long N) {
    int n = legs.n;
    Partition lc = der(conj(legs.lambda), DeriveKind::c);
    Partition nc = der(legs.nu, DeriveKind::c);
    QMono out = varpi1(N, 1, 1, n);
    out *= varpi2(lc, N - 1, 2, n);
    out *= qmono_bar(varpi2(legs.mu, N, 0, n));
    out *= varpi3(nc, N + 1, 2, n);
    out *= varpi6(lc, N, n);
    out *= varpi5(legs.mu, N, 1, n);
    return out;
}

QMono dt_omega_RD(const LegTriple& legs, long long N) {
    int n = legs.n;
    Partition lr = der(conj(legs.lambda), DeriveKind::r);
    Partition nr = der(legs.nu, DeriveKind::r);
    QMono out = varpi1(N - 2, -1, -1, n);
    out *= varpi2(lr, N - 1, 0, n);
    out *= qmono_bar(varpi2(legs.mu, N - 2, 2, n));
    out *= varpi3(nr, N - 1, 0, n);
    out *= varpi4(lr, N, 0, n);
    out *= varpi5(legs.mu, N, 1, n);
    return out;
}

QMono dt_omega_LD(const LegTriple& legs, long long N) {
    int n = legs.n;
    Partition mr = der(legs.mu, DeriveKind::r);
    Partition nc = der(legs.nu, DeriveKind::c);
    QMono out = varpi1(N - 1, 1, 1, n);
    out *= varpi2(conj(legs.lambda), N - 2, 2, n);
    out *= qmono_bar(varpi2(mr, N - 1, 0, n));
    out *= varpi3(nc, N, 2, n);
    out *= varpi4(conj(legs.lambda), N, 1, n);
    out *= varpi5(mr, N, 0, n);
    return out;
}

QMono dt_omega_RU(const LegTriple& legs, long long N) {
    int n = legs.n;
    Partition mc = der(legs.mu, DeriveKind::c);
    Partition nr = der(legs.nu, DeriveKind::r);
    QMono out = varpi1(N - 1, -1, -1, n);
    out *= varpi2(conj(legs.lambda), N, 0, n);
    out *= qmono_bar(varpi2(mc, N - 1, 2, n));
    out *= varpi3(nr, N, 0, n);
    out *= varpi4(conj(legs.lambda), N, 1, n);
    out *= varpi7(mc, N, n);
    return out;
}

QMono pt_omega_base(const LegTriple& legs, long long N) {
    int n = legs.n;
    QMono out = vartheta1(conj(legs.lambda), N, 0, 1, n);
    out *= vartheta2(conj(legs.lambda), N, 0, n);
    out *= vartheta3(legs.mu, N, 1, 1, n);
    out *= vartheta4(legs.mu, N, 0, n);
    out *= varpi3(legs.nu, N, 1, n).inverse();
    out *= varpi1(N - 1, 0, 0, n);
    return out;
}

QMono pt_omega_U(const LegTriple& legs, long long N) {
    int n = legs.n;
    Partition lc = der(conj(legs.lambda), DeriveKind::c);
    Partition mc = der(legs.mu, DeriveKind::c);
    QMono out = vartheta1(lc, N, 1, 1, n);
    out *= vartheta5(lc, N, 0, n);
    out *= vartheta3(mc, N, 0, 1, n);
    out *= vartheta6(mc, N, n);
    out *= varpi3(legs.nu, N + 1, 1, n).inverse();
    out *= varpi1(N, 0, 0, n);
    out.mul(N, -N);
    return out;
}

QMono pt_omega_D(const LegTriple& legs, long long N) {
    int n = legs.n;
    Partition lr = der(conj(legs.lambda), DeriveKind::r);
    Partition mr = der(legs.mu, DeriveKind::r);
    QMono out = vartheta1(lr, N, -1, 1, n);
    out *= vartheta7(lr, N, 1, n);
    out *= vartheta3(mr, N, 2, 1, n);
    out *= vartheta8(mr, N + 1, 1, 1, n);
    out *= varpi3(legs.nu, N - 1, 1, n).inverse();
    out *= varpi1(N - 2, 0, 0, n);
    return out;
}

QMono pt_omega_LU(const LegTriple& legs, long long N) {
    int n = legs.n;
    Partition lc = der(conj(legs.lambda), DeriveKind::c);
    Partition nc = der(legs.nu, DeriveKind::c);
    QMono out = vartheta1(lc, N, 0, 0, n);
    out *= vartheta5(lc, N + 1, 1, n);
    out *= vartheta3(legs.mu, N - 1, -1, 0, n);
    out *= vartheta4(legs.mu, N, 1, n);
    out *= varpi3(nc, N + 1, 2, n).inverse();
    out *= varpi1(N, 1, 1, n);
    out.mul(N, -N);
    return out;
}

QMono pt_omega_RD(const LegTriple& legs, long long N) {
    int n = legs.n;
    Partition lr = der(conj(legs.lambda), DeriveKind::r);
    Partition nr = der(legs.nu, DeriveKind::r);
    QMono out = vartheta1(lr, N, 0, 2, n);
    out *= vartheta7(lr, N, 0, n);
    out *= vartheta3(legs.mu, N + 1, 3, 2, n);
    out *= vartheta4(legs.mu, N, -1, n);
    out *= varpi3(nr, N - 1, 0, n).inverse();
    out *= varpi1(N - 2, -1, -1, n);
    return out;
}

QMono pt_omega_LD(const LegTriple& legs, long long N) {
    int n = legs.n;
    Partition mr = der(legs.mu, DeriveKind::r);
    Partition nc = der(legs.nu, DeriveKind::c);
    QMono out = vartheta1(conj(legs.lambda), N, -1, 0, n);
    out *= vartheta2(conj(legs.lambda), N + 1, 1, n);
    out *= vartheta3(mr, N - 1, 0, 0, n);
    out *= vartheta8(mr, N, 1, 0, n);
    out *= varpi3(nc, N, 2, n).inverse();
    out *= varpi1(N - 1, 1, 1, n);
    return out;
}

QMono pt_omega_RU(const LegTriple& legs, long long N) {
    int n = legs.n;
    Partition mc = der(legs.mu, DeriveKind::c);
    Partition nr = der(legs.nu, DeriveKind::r);
    QMono out = vartheta1(conj(legs.lambda), N, 1, 2, n);
    out *= vartheta2(conj(legs.lambda), N - 1, -1, n);
    out *= vartheta3(mc, N + 1, 2, 2, n);
    out *= vartheta8(mc, N, -1, 0, n);
    out *= varpi3(nr, N, 0, n).inverse();
    out *= varpi1(N - 1, -1, -1, n);
    return out;
}

} // namespace otv
