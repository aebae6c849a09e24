#include "otv/symfun.hpp"

#include <algorithm>
#include <functional>

namespace otv {

Exps q_bullet(long long t, int n) {
    Exps e(n, 0);
    if (t > 0)
        for (long long s = 1; s <= t; ++s) e[normalize_residue(s, n)]++;
    else
        for (long long s = 0; s < -t; ++s) e[normalize_residue(-s, n)]--;
    return e;
}

Series q_bullet_series(long long t, int n) {
    return Series::monomial(qvars(n), q_bullet(t, n), 1);
}

namespace {

struct SkewShape {
    const Partition* xi;
    const Partition* eta;
    std::vector<std::pair<int, int>> cells; // row-major
};

SkewShape skew_cells(const Partition& xi, const Partition& eta) {
    SkewShape s{&xi, &eta, {}};
    for (int i = 0; i < xi.length(); ++i)
        for (int j = eta.part(i + 1); j < xi.part(i + 1); ++j) s.cells.emplace_back(i, j);
    return s;
}

// One run of the tableau sum with entries in {0..cutoff}.
Series skew_sum(const Partition& xi, const Partition& eta, const Partition& nu, int n, int D,
                int cutoff) {
    Series out = Series::zero(qvars(n), D);
    if (!xi.contains(eta)) return out;
    SkewShape shape = skew_cells(xi, eta);
    size_t ncells = shape.cells.size();
    if (ncells == 0) return Series::constant(qvars(n), 1, D);

    std::vector<Exps> letter(cutoff + 1);
    std::vector<int> letter_deg(cutoff + 1);
    int min_letter_deg = 0;
    for (int i = 0; i <= cutoff; ++i) {
        letter[i] = q_bullet((long long)i - nu.part(i + 1), n);
        letter_deg[i] = i - nu.part(i + 1);
        min_letter_deg = std::min(min_letter_deg, letter_deg[i]);
    }

    std::vector<int> entry(ncells, 0);
    Exps acc(n, 0);
    std::function<void(size_t, int)> rec = [&](size_t idx, int deg) {
        if (idx == ncells) {
            out.add_term(acc, 1);
            return;
        }
        auto [i, j] = shape.cells[idx];
        int lo = 0;
        if (j > eta.part(i + 1) && j - 1 >= eta.part(i + 1)) lo = std::max(lo, entry[idx - 1]);
        if (i > 0 && j >= eta.part(i) && j < xi.part(i)) {
            // cell above is (i-1, j); find its index (same column)
            size_t k = idx;
            while (k > 0) {
                --k;
                if (shape.cells[k].first == i - 1 && shape.cells[k].second == j) {
                    lo = std::max(lo, entry[k] + 1);
                    break;
                }
            }
        }
        long long remaining = (long long)(ncells - idx - 1);
        for (int v = lo; v <= cutoff; ++v) {
            int d = deg + letter_deg[v];
            if (d + remaining * (long long)min_letter_deg > D) {
                if (v >= nu.length()) break; // letter degrees only grow from here
                continue;
            }
            entry[idx] = v;
            for (int s = 0; s < n; ++s) acc[s] += letter[v][s];
            rec(idx + 1, d);
            for (int s = 0; s < n; ++s) acc[s] -= letter[v][s];
        }
    };
    rec(0, 0);
    if (!out.is_zero()) out.set_floor(out.min_degree());
    return out;
}

} // namespace

Series skew_schur_spec(const Partition& xi, const Partition& eta, const Partition& nu, int n,
                       int D) {
    if (n <= 0 || D < 0) fail(errc::bad_argument, "skew_schur_spec arguments");
    if (!xi.contains(eta)) return Series::zero(qvars(n), D);
    int cells = xi.size() - eta.size();
    int L = D + (cells + 1) * (nu.part(1) + 1);
    Series a = skew_sum(xi, eta, nu, n, D, L);
    Series b = skew_sum(xi, eta, nu, n, D, L + 1);
    if (!(a.terms() == b.terms()))
        fail(errc::lemma_violated, "skew Schur specialization unstable under cutoff increase");
    return a;
}

Series hook_series_H(const Partition& nu, int n, int D) {
    Series acc = Series::constant(qvars(n), 1, D);
    for (auto [i, j] : nu.cells()) {
        std::vector<int> profile = hook_color_profile(nu, n, i, j);
        Exps h(n);
        int deg = 0;
        for (int s = 0; s < n; ++s) {
            h[s] = profile[s];
            deg += profile[s];
        }
        Series factor = Series::zero(qvars(n), D);
        Exps e(n, 0);
        for (int k = 0; (long long)k * deg <= D; ++k) {
            factor.add_term(e, 1);
            for (int s = 0; s < n; ++s) e[s] += h[s];
        }
        acc = multiply(acc, factor).truncated(D);
    }
    acc.set_floor(0);
    return acc;
}

Series loop_schur(const Partition& nu, int n, int D) {
    Exps pre(n, 0);
    for (auto [i, j] : nu.cells()) pre[normalize_residue((long long)i - j, n)] += j;
    return multiply(Series::monomial(qvars(n), pre, 1), hook_series_H(nu, n, D)).truncated(D);
}

Series loop_schur_ssyt(const Partition& nu, int n, int D) {
    // entries are weakly increasing from bottom to top (increasing row
    // index, French reading) and strictly increasing from left to right;
    // every entry adds its own value to the degree, so D caps the entries.
    Series out = Series::zero(qvars(n), D);
    auto cells = nu.cells(); // row-major: (0,*) first
    size_t ncells = cells.size();
    if (ncells == 0) return Series::constant(qvars(n), 1, D);
    std::vector<int> entry(ncells, 0);
    Exps acc(n, 0);
    std::function<void(size_t, int)> rec = [&](size_t idx, int deg) {
        if (idx == ncells) {
            out.add_term(acc, 1);
            return;
        }
        auto [i, j] = cells[idx];
        int lo = 0;
        if (j > 0) lo = std::max(lo, entry[idx - 1] + 1); // strict along the row
        if (i > 0) {
            size_t k = idx;
            while (k > 0) {
                --k;
                if (cells[k].first == i - 1 && cells[k].second == j) {
                    lo = std::max(lo, entry[k]); // weak up the column
                    break;
                }
            }
        }
        int color = normalize_residue((long long)i - j, n);
        for (int v = lo; deg + v <= D; ++v) {
            entry[idx] = v;
            acc[color] += v;
            rec(idx + 1, deg + v);
            acc[color] -= v;
        }
    };
    rec(0, 0);
    return out;
}

Series neg_A_monomial(const Partition& lambda, int n) {
    Exps e(n);
    for (int k = 0; k < n; ++k) e[k] = (int32_t)-A_stat(lambda, k, n);
    return Series::monomial(qvars(n), e, 1);
}

} // namespace otv
