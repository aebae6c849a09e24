// Explicit double-product transcriptions of the minimal / base dimer
// weights and the quotient identities relating them. These are kept
// independent of the factored varpi/vartheta forms in weights.cpp so the
// two can be compared term by term.

#include "otv/weights.hpp"

namespace otv {

namespace {
Partition conj(const Partition& p) { return p.conjugate(); }
Partition der(const Partition& p, DeriveKind k) { return derive(p, k); }

// Branch helper: rows are split by whether eta_i >= i (etc.).
using P = Partition;
} // namespace

QMono dt_omega_min_explicit(const LegTriple& legs, long long N) {
    int n = legs.n;
    P lp = conj(legs.lambda);
    const P& mu = legs.mu;
    const P& nu = legs.nu;
    QMono w(n);
    for (long long i = 0; i <= N - 1; ++i)
        for (long long j = 0; j <= N - 1; ++j) w.mul(j - i, N - 1 - i);
    for (int i = 1; i <= lp.length(); ++i)
        for (long long j = 0; j <= N - 1; ++j) w.mul(j - i + 1, lp.part(i));
    for (int i = 1; i <= mu.length(); ++i)
        for (long long j = 0; j <= N - 1; ++j) w.mul(i - j - 1, mu.part(i));
    for (int i = 1; i <= nu.length(); ++i)
        for (long long j = 0; j <= nu.part(i) - 1; ++j) {
            w.mul(j - i + 1, N);
            w.mul(j - i + 1, -2 * N + i);
        }
    for (int i = 1; i <= lp.length(); ++i) {
        long long jmax = (i <= lp.part(i)) ? (i - 1) : lp.part(i);
        for (long long j = 1; j <= jmax; ++j) w.mul(N - i + j, N - i + lp.part(i));
    }
    for (int i = 1; i <= mu.length(); ++i) {
        long long jmax = (i <= mu.part(i)) ? (i - 1) : mu.part(i);
        for (long long j = 1; j <= jmax; ++j) w.mul(i - j - N, mu.part(i) - j);
    }
    return w;
}

QMono dt_omega_U_explicit(const LegTriple& legs, long long N) {
    int n = legs.n;
    P z = conj(der(legs.lambda, DeriveKind::r)); // (lambda^r)' = (lambda')^c
    P t = der(legs.mu, DeriveKind::c);
    const P& nu = legs.nu;
    QMono w(n);
    for (long long i = 0; i <= N; ++i)
        for (long long j = 0; j <= N; ++j) w.mul(j - i, N - i);
    for (int i = 1; i <= z.length(); ++i)
        for (long long j = 0; j <= N; ++j) w.mul(j - i + 1, z.part(i));
    for (int i = 1; i <= t.length(); ++i)
        for (long long j = 0; j <= N; ++j) w.mul(i - j - 1, t.part(i));
    for (int i = 1; i <= nu.length(); ++i)
        for (long long j = 0; j <= nu.part(i) - 1; ++j) {
            w.mul(j - i + 1, N - 1);
            w.mul(j - i + 1, -2 * N + i);
        }
    w.mul(N, -(N + z.part(1)));
    for (int i = 2; i <= z.length(); ++i) {
        long long jmax = (i <= z.part(i) + 1) ? (i - 2) : z.part(i);
        for (long long j = 1; j <= jmax; ++j) w.mul(N + j + 1 - i, N + 1 + z.part(i) - i);
    }
    w.mul(-N, -(long long)t.part(1));
    for (int i = 2; i <= t.length(); ++i) {
        long long jmax = (i <= t.part(i) + 1) ? (i - 2) : t.part(i);
        for (long long j = 1; j <= jmax; ++j) w.mul(i - j - N - 1, t.part(i) - j);
    }
    return w;
}

QMono dt_omega_D_explicit(const LegTriple& legs, long long N) {
    int n = legs.n;
    P z = conj(der(legs.lambda, DeriveKind::c)); // (lambda^c)' = (lambda')^r
    P t = der(legs.mu, DeriveKind::r);
    const P& nu = legs.nu;
    QMono w(n);
    for (long long i = 0; i <= N - 2; ++i)
        for (long long j = 0; j <= N - 2; ++j) w.mul(j - i, N - i - 2);
    for (int i = 1; i <= z.length(); ++i)
        for (long long j = 0; j <= N - 2; ++j) w.mul(j - i + 1, z.part(i));
    for (int i = 1; i <= t.length(); ++i)
        for (long long j = 0; j <= N - 2; ++j) w.mul(i - j - 1, t.part(i));
    for (int i = 1; i <= nu.length(); ++i)
        for (long long j = 0; j <= nu.part(i) - 1; ++j) {
            w.mul(j - i + 1, N + 1);
            w.mul(j - i + 1, -2 * N + i);
        }
    for (int i = 1; i <= z.length(); ++i) {
        long long jmax = (i <= z.part(i)) ? i : z.part(i);
        for (long long j = 1; j <= jmax; ++j) w.mul(N - i + j - 1, N + z.part(i) - i - 1);
    }
    for (int i = 1; i <= t.length(); ++i) {
        long long jmax = (i <= t.part(i)) ? i : t.part(i);
        for (long long j = 1; j <= jmax; ++j) w.mul(i - j - N + 1, t.part(i) - j);
    }
    return w;
}

QMono dt_omega_LU_explicit(const LegTriple& legs, long long N) {
    int n = legs.n;
    P z = conj(der(legs.lambda, DeriveKind::r));
    const P& mu = legs.mu;
    P nc = der(legs.nu, DeriveKind::c);
    QMono w(n);
    for (long long i = 0; i <= N; ++i)
        for (long long j = 0; j <= N - 1; ++j) w.mul(j - i + 1, N - i);
    for (int i = 1; i <= z.length(); ++i)
        for (long long j = 0; j <= N - 1; ++j) w.mul(j - i + 2, z.part(i));
    for (int i = 1; i <= mu.length(); ++i)
        for (long long j = 0; j <= N; ++j) w.mul(i - j, mu.part(i));
    for (int i = 1; i <= nc.length(); ++i)
        for (long long j = 0; j <= nc.part(i) - 1; ++j) {
            w.mul(j - i + 2, N - 1);
            w.mul(j - i + 2, -2 * N + i);
        }
    w.mul(N, -(N + z.part(1)));
    for (int i = 2; i <= z.length(); ++i) {
        long long jmax = (i <= z.part(i) + 1) ? (i - 2) : z.part(i);
        for (long long j = 1; j <= jmax; ++j) w.mul(N + j + 1 - i, N + 1 + z.part(i) - i);
    }
    for (int i = 1; i <= mu.length(); ++i) {
        long long jmax = (i <= mu.part(i)) ? (i - 1) : mu.part(i);
        for (long long j = 1; j <= jmax; ++j) w.mul(i - j - N, mu.part(i) - j);
    }
    return w;
}

QMono dt_omega_RD_explicit(const LegTriple& legs, long long N) {
    int n = legs.n;
    P z = conj(der(legs.lambda, DeriveKind::c));
    const P& mu = legs.mu;
    P nr = der(legs.nu, DeriveKind::r);
    QMono w(n);
    for (long long i = 0; i <= N - 2; ++i)
        for (long long j = 0; j <= N - 1; ++j) w.mul(j - i - 1, N - i - 2);
    for (int i = 1; i <= z.length(); ++i)
        for (long long j = 0; j <= N - 1; ++j) w.mul(j - i, z.part(i));
    for (int i = 1; i <= mu.length(); ++i)
        for (long long j = 0; j <= N - 2; ++j) w.mul(i - j - 2, mu.part(i));
    for (int i = 1; i <= nr.length(); ++i)
        for (long long j = 0; j <= nr.part(i) - 1; ++j) {
            w.mul(j - i, N);
            w.mul(j - i, -2 * N + i + 1);
        }
    for (int i = 1; i <= z.length(); ++i) {
        long long jmax = (i <= z.part(i)) ? i : z.part(i);
        for (long long j = 1; j <= jmax; ++j) w.mul(N - i + j - 1, N + z.part(i) - i - 1);
    }
    for (int i = 1; i <= mu.length(); ++i) {
        long long jmax = (i <= mu.part(i)) ? (i - 1) : mu.part(i);
        for (long long j = 1; j <= jmax; ++j) w.mul(i - j - N, mu.part(i) - j);
    }
    return w;
}

QMono dt_omega_LD_explicit(const LegTriple& legs, long long N) {
    int n = legs.n;
    P lp = conj(legs.lambda);
    P t = der(legs.mu, DeriveKind::r);
    P nc = der(legs.nu, DeriveKind::c);
    QMono w(n);
    for (long long i = 0; i <= N - 1; ++i)
        for (long long j = 0; j <= N - 2; ++j) w.mul(j - i + 1, N - i - 1);
    for (int i = 1; i <= lp.length(); ++i)
        for (long long j = 0; j <= N - 2; ++j) w.mul(j - i + 2, lp.part(i));
    for (int i = 1; i <= t.length(); ++i)
        for (long long j = 0; j <= N - 1; ++j) w.mul(i - j, t.part(i));
    for (int i = 1; i <= nc.length(); ++i)
        for (long long j = 0; j <= nc.part(i) - 1; ++j) {
            w.mul(j - i + 2, N);
            w.mul(j - i + 2, -2 * N + i);
        }
    for (int i = 1; i <= lp.length(); ++i) {
        long long jmax = (i <= lp.part(i)) ? (i - 1) : lp.part(i);
        for (long long j = 1; j <= jmax; ++j) w.mul(N + j - i, N + lp.part(i) - i);
    }
    for (int i = 1; i <= t.length(); ++i) {
        long long jmax = (i <= t.part(i)) ? i : t.part(i);
        for (long long j = 1; j <= jmax; ++j) w.mul(i - j - N + 1, t.part(i) - j);
    }
    return w;
}

QMono dt_omega_RU_explicit(const LegTriple& legs, long long N) {
    int n = legs.n;
    P lp = conj(legs.lambda);
    P t = der(legs.mu, DeriveKind::c);
    P nr = der(legs.nu, DeriveKind::r);
    QMono w(n);
    for (long long i = 0; i <= N - 1; ++i)
        for (long long j = 0; j <= N; ++j) w.mul(j - i - 1, N - i - 1);
    for (int i = 1; i <= lp.length(); ++i)
        for (long long j = 0; j <= N; ++j) w.mul(j - i, lp.part(i));
    for (int i = 1; i <= t.length(); ++i)
        for (long long j = 0; j <= N - 1; ++j) w.mul(i - j - 2, t.part(i));
    for (int i = 1; i <= nr.length(); ++i)
        for (long long j = 0; j <= nr.part(i) - 1; ++j) {
            w.mul(j - i, N - 1);
            w.mul(j - i, -2 * N + i + 1);
        }
    for (int i = 1; i <= lp.length(); ++i) {
        long long jmax = (i <= lp.part(i)) ? (i - 1) : lp.part(i);
        for (long long j = 1; j <= jmax; ++j) w.mul(N - i + j, N + lp.part(i) - i);
    }
    w.mul(-N, -(long long)t.part(1));
    for (int i = 2; i <= t.length(); ++i) {
        long long jmax = (i <= t.part(i) + 1) ? (i - 2) : t.part(i);
        for (long long j = 1; j <= jmax; ++j) w.mul(i - j - N - 1, t.part(i) - j);
    }
    return w;
}

QMono pt_omega_base_explicit(const LegTriple& legs, long long N) {
    int n = legs.n;
    P lp = conj(legs.lambda);
    const P& mu = legs.mu;
    const P& nu = legs.nu;
    QMono w(n);
    for (long long i = 1; i <= N - lp.length() - 1; ++i)
        for (long long j = 1; j <= i; ++j) w.mul(-N + i - j + 1, i);
    for (int i = 1; i <= lp.length(); ++i) {
        long long jmax = (i <= lp.part(i)) ? (N - lp.part(i)) : (N - i);
        for (long long j = 1; j <= jmax; ++j) w.mul(-i - j + 1, N + lp.part(i) - i);
    }
    for (long long i = 1; i <= N - mu.length() - 1; ++i)
        for (long long j = mu.length() + 1; j <= N - i; ++j) w.mul(i + j - 1, N + i - 1);
    for (int i = 1; i <= mu.length(); ++i) {
        long long jmax = (i <= mu.part(i)) ? (N - mu.part(i)) : (N - i);
        for (long long j = 1; j <= jmax; ++j) w.mul(i + j - 1, N + mu.part(i) + j - 1);
    }
    for (int i = 1; i <= nu.length(); ++i)
        for (long long j = 0; j <= nu.part(i) - 1; ++j) w.mul(j - i + 1, N - i);
    for (long long i = 0; i <= N - 1; ++i)
        for (long long j = 0; j <= N - 1; ++j) w.mul(j - i, N - i - 1);
    return w;
}

QMono pt_omega_U_explicit(const LegTriple& legs, long long N) {
    int n = legs.n;
    P z = conj(der(legs.lambda, DeriveKind::r));
    P t = der(legs.mu, DeriveKind::c);
    const P& nu = legs.nu;
    QMono w(n);
    for (long long i = 1; i <= N - z.length() - 1; ++i)
        for (long long j = 1; j <= i; ++j) w.mul(-N + i - j + 1, i + 1);
    for (int i = 1; i <= z.length(); ++i) {
        long long jmax = (i <= z.part(i) + 1) ? (N - z.part(i) - 1) : (N - i);
        for (long long j = 1; j <= jmax; ++j) w.mul(-i - j + 1, N + z.part(i) - i + 1);
    }
    for (long long i = 1; i <= N - t.length() - 1; ++i)
        for (long long j = t.length() + 1; j <= N - i; ++j) w.mul(i + j - 1, N + i);
    for (int i = 1; i <= t.length(); ++i) {
        long long jmax = (i <= t.part(i) + 1) ? (N - t.part(i) - 1) : (N - i);
        for (long long j = 1; j <= jmax; ++j) w.mul(i + j - 1, N + t.part(i) + j);
    }
    w.mul(N, -N);
    for (int i = 1; i <= nu.length(); ++i)
        for (long long j = 0; j <= nu.part(i) - 1; ++j) w.mul(j - i + 1, N - i + 1);
    for (long long i = 0; i <= N; ++i)
        for (long long j = 0; j <= N; ++j) w.mul(j - i, N - i);
    return w;
}

QMono pt_omega_D_explicit(const LegTriple& legs, long long N) {
    int n = legs.n;
    P z = conj(der(legs.lambda, DeriveKind::c));
    P t = der(legs.mu, DeriveKind::r);
    const P& nu = legs.nu;
    QMono w(n);
    for (long long i = 1; i <= N - z.length() - 1; ++i)
        for (long long j = 1; j <= i; ++j) w.mul(-N + i - j + 1, i - 1);
    for (int i = 1; i <= z.length(); ++i) {
        long long jmax = (i < z.part(i) - 1) ? (N - z.part(i) + 1) : (N - i);
        for (long long j = 1; j <= jmax; ++j) w.mul(-i - j + 1, N + z.part(i) - i - 1);
    }
    for (long long i = 1; i <= N - t.length() - 1; ++i)
        for (long long j = t.length() + 1; j <= N - i; ++j) w.mul(i + j - 1, N + i - 2);
    for (int i = 1; i <= t.length(); ++i) {
        long long jmax = (i < t.part(i) - 1) ? (N - t.part(i) + 1) : (N - i);
        for (long long j = 1; j <= jmax; ++j) w.mul(i + j - 1, N + t.part(i) + j - 2);
    }
    for (int i = 1; i <= nu.length(); ++i)
        for (long long j = 0; j <= nu.part(i) - 1; ++j) w.mul(j - i + 1, N - i - 1);
    for (long long i = 0; i <= N - 2; ++i)
        for (long long j = 0; j <= N - 2; ++j) w.mul(j - i, N - i - 2);
    return w;
}

QMono pt_omega_LU_explicit(const LegTriple& legs, long long N) {
    int n = legs.n;
    P z = conj(der(legs.lambda, DeriveKind::r));
    const P& mu = legs.mu;
    P nc = der(legs.nu, DeriveKind::c);
    QMono w(n);
    for (long long i = 1; i <= N - z.length(); ++i)
        for (long long j = 1; j <= i; ++j) w.mul(-N + i - j + 1, i);
    for (int i = 1; i <= z.length(); ++i) {
        long long jmax = (i <= z.part(i) + 1) ? (N - z.part(i)) : (N + 1 - i);
        for (long long j = 1; j <= jmax; ++j) w.mul(-i - j + 2, N + z.part(i) - i + 1);
    }
    for (long long i = 1; i <= N - mu.length() - 2; ++i)
        for (long long j = mu.length() + 1; j <= N - i - 1; ++j) w.mul(i + j, N + i);
    for (int i = 1; i <= mu.length(); ++i) {
        long long jmax = (i <= mu.part(i)) ? (N - mu.part(i) - 1) : (N - i - 1);
        for (long long j = 1; j <= jmax; ++j) w.mul(i + j, N + mu.part(i) + j);
    }
    w.mul(N, -N);
    for (int i = 1; i <= nc.length(); ++i)
        for (long long j = 0; j <= nc.part(i) - 1; ++j) w.mul(j - i + 2, N - i + 1);
    for (long long i = 0; i <= N; ++i)
        for (long long j = 0; j <= N - 1; ++j) w.mul(j - i + 1, N - i);
    return w;
}

QMono pt_omega_RD_explicit(const LegTriple& legs, long long N) {
    int n = legs.n;
    P z = conj(der(legs.lambda, DeriveKind::c));
    const P& mu = legs.mu;
    P nr = der(legs.nu, DeriveKind::r);
    QMono w(n);
    for (long long i = 1; i <= N - z.length() - 2; ++i)
        for (long long j = 1; j <= i; ++j) w.mul(-N + i - j + 1, i);
    for (int i = 1; i <= z.length(); ++i) {
        long long jmax = (i < z.part(i) - 1) ? (N - z.part(i)) : (N - i - 1);
        for (long long j = 1; j <= jmax; ++j) w.mul(-i - j, N + z.part(i) - i - 1);
    }
    for (long long i = 1; i <= N - mu.length(); ++i)
        for (long long j = mu.length() + 1; j <= N - i + 1; ++j) w.mul(i + j - 2, N + i - 2);
    for (int i = 1; i <= mu.length(); ++i) {
        long long jmax = (i <= mu.part(i)) ? (N - mu.part(i) + 1) : (N - i + 1);
        for (long long j = 1; j <= jmax; ++j) w.mul(i + j - 2, N + mu.part(i) + j - 2);
    }
    for (int i = 1; i <= nr.length(); ++i)
        for (long long j = 0; j <= nr.part(i) - 1; ++j) w.mul(j - i, N - i - 1);
    for (long long i = 0; i <= N - 2; ++i)
        for (long long j = 0; j <= N - 1; ++j) w.mul(j - i - 1, N - i - 2);
    return w;
}

QMono pt_omega_LD_explicit(const LegTriple& legs, long long N) {
    int n = legs.n;
    P lp = conj(legs.lambda);
    P t = der(legs.mu, DeriveKind::r);
    P nc = der(legs.nu, DeriveKind::c);
    QMono w(n);
    for (long long i = 1; i <= N - lp.length(); ++i)
        for (long long j = 1; j <= i; ++j) w.mul(-N + i - j + 1, i - 1);
    for (int i = 1; i <= lp.length(); ++i) {
        long long jmax = (i <= lp.part(i)) ? (N - lp.part(i) + 1) : (N + 1 - i);
        for (long long j = 1; j <= jmax; ++j) w.mul(-i - j + 2, N + lp.part(i) - i);
    }
    for (long long i = 1; i <= N - t.length() - 2; ++i)
        for (long long j = t.length() + 1; j <= N - i - 1; ++j) w.mul(i + j, N + i - 1);
    for (int i = 1; i <= t.length(); ++i) {
        long long jmax = (i < t.part(i) - 1) ? (N - t.part(i)) : (N - i - 1);
        for (long long j = 1; j <= jmax; ++j) w.mul(i + j, N + t.part(i) + j - 1);
    }
    for (int i = 1; i <= nc.length(); ++i)
        for (long long j = 0; j <= nc.part(i) - 1; ++j) w.mul(j - i + 2, N - i);
    for (long long i = 0; i <= N - 1; ++i)
        for (long long j = 0; j <= N - 2; ++j) w.mul(j - i + 1, N - i - 1);
    return w;
}

QMono pt_omega_RU_explicit(const LegTriple& legs, long long N) {
    int n = legs.n;
    P lp = conj(legs.lambda);
    P t = der(legs.mu, DeriveKind::c);
    P nr = der(legs.nu, DeriveKind::r);
    QMono w(n);
    for (long long i = 1; i <= N - lp.length() - 2; ++i)
        for (long long j = 1; j <= i; ++j) w.mul(-N + i - j + 1, i + 1);
    for (int i = 1; i <= lp.length(); ++i) {
        long long jmax = (i <= lp.part(i)) ? (N - lp.part(i) - 1) : (N - i - 1);
        for (long long j = 1; j <= jmax; ++j) w.mul(-i - j, N + lp.part(i) - i);
    }
    for (long long i = 1; i <= N - t.length(); ++i)
        for (long long j = t.length() + 1; j <= N - i + 1; ++j) w.mul(i + j - 2, N + i - 1);
    for (int i = 1; i <= t.length(); ++i) {
        long long jmax = (i < t.part(i) + 1) ? (N - t.part(i)) : (N - i + 1);
        for (long long j = 1; j <= jmax; ++j) w.mul(i + j - 2, N + t.part(i) + j - 1);
    }
    for (int i = 1; i <= nr.length(); ++i)
        for (long long j = 0; j <= nr.part(i) - 1; ++j) w.mul(j - i, N - i);
    for (long long i = 0; i <= N - 1; ++i)
        for (long long j = 0; j <= N; ++j) w.mul(j - i - 1, N - i - 1);
    return w;
}

} // namespace otv
