#include "otv/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace otv {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) fail(errc::bad_argument, "partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            fail(errc::bad_argument, "partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t b = tok.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        size_t e = tok.find_last_not_of(" \t");
        parts.push_back(std::stoi(tok.substr(b, e - b + 1)));
    }
    return Partition(parts);
}

std::string Partition::str() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    if (i < 1) fail(errc::bad_argument, "parts are 1-indexed");
    return i <= (int)parts_.size() ? parts_[i - 1] : 0;
}

bool Partition::contains_cell(int i, int j) const {
    return i >= 0 && j >= 0 && i < (int)parts_.size() && j < parts_[i];
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> out(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) out[j]++;
    return Partition(out);
}

std::vector<std::pair<int, int>> Partition::cells() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < (int)parts_.size(); ++i)
        for (int j = 0; j < parts_[i]; ++j) out.emplace_back(i, j);
    return out;
}

MayaDiagram maya_diagram(const Partition& eta, int charge) {
    // m-values of S(eta) are eta_i - i (i >= 1), strictly decreasing and
    // equal to -i beyond ell(eta). Shift everything by `charge`.
    MayaDiagram out;
    out.charge = charge;
    int ell = eta.length();
    std::vector<bool> present; // membership of m-values in [-window, ...]
    int window = ell + std::abs(charge) + eta.part(1) + 2;
    // positives of shifted set
    for (int i = 1; i <= ell + std::abs(charge) + 1; ++i) {
        int m = eta.part(i) - i + charge;
        if (m >= 0) out.positives.push_back(m);
    }
    std::sort(out.positives.begin(), out.positives.end());
    // negative gaps of shifted set: m in [-window, -1] not of the form
    // eta_i - i + charge
    std::vector<bool> hit(window + 1, false);
    for (int i = 1; i <= 2 * window + 2; ++i) {
        int m = eta.part(i) - i + charge;
        if (m < 0 && -m <= window) hit[-m] = true;
    }
    for (int k = window; k >= 1; --k)
        if (!hit[k]) out.negative_gaps.push_back(-k);
    // all gaps lie above the stabilized tail, so the window suffices
    return out;
}

std::pair<Partition, int> partition_from_maya(const MayaDiagram& maya) {
    int charge = (int)maya.positives.size() - (int)maya.negative_gaps.size();
    // Collect the m-values of the shifted-back set U = {m - charge}: the
    // positives, plus all negatives except the gaps. Read eta_i = u_i + i
    // off the decreasing enumeration u_1 > u_2 > ...
    int depth = 0;
    for (int g : maya.negative_gaps) depth = std::max(depth, -g);
    for (int p : maya.positives) depth = std::max(depth, p + 1);
    depth += std::abs(charge) + 2;

    std::vector<int> u; // decreasing
    for (auto it = maya.positives.rbegin(); it != maya.positives.rend(); ++it)
        u.push_back(*it - charge);
    for (int m = -1; m >= -depth; --m) {
        if (std::binary_search(maya.negative_gaps.begin(), maya.negative_gaps.end(), m)) continue;
        u.push_back(m - charge);
    }
    std::vector<int> parts;
    for (size_t i = 0; i < u.size(); ++i) {
        int p = u[i] + (int)i + 1;
        if (p < 0) fail(errc::bad_argument, "maya diagram does not encode a partition");
        if (p > 0) parts.push_back(p);
    }
    return {Partition(parts), charge};
}

DiagStats diag_stats(const Partition& eta) {
    if (eta.empty()) fail(errc::empty_partition, "diag_stats of empty partition");
    DiagStats s;
    for (int i = 1; i <= eta.length(); ++i)
        if (eta.part(i) >= i) s.d = i;
    for (int i = 1; i <= eta.length(); ++i)
        if (eta.part(i) >= s.d) s.dt = i;
    return s;
}

namespace {

// Def. 4.2 route: manipulate S(eta) directly.
Partition derive_maya(const Partition& eta, DeriveKind kind) {
    MayaDiagram s = maya_diagram(eta, 0);
    // m-value sets: positives (members >= 0), negative_gaps (missing < 0)
    std::vector<int> pos = s.positives;
    std::vector<int> gaps = s.negative_gaps;
    auto shift_all = [&](int d) {
        // shift the set by d: recompute positives/gaps of {m + d}
        // easiest through an explicit window bitmap
        int window = eta.length() + eta.part(1) + 4;
        std::vector<bool> in(2 * window + 1, false); // m in [-window, window]
        for (int m = -window; m <= window; ++m) {
            bool member;
            if (m >= 0)
                member = std::binary_search(pos.begin(), pos.end(), m);
            else
                member = !std::binary_search(gaps.begin(), gaps.end(), m);
            if (member) in[m + window] = true;
        }
        std::vector<int> npos, ngaps;
        for (int m = -window + std::abs(d) + 1; m <= window - std::abs(d) - 1; ++m) {
            bool member = in[m - d + window];
            if (m >= 0 && member) npos.push_back(m);
            if (m < 0 && !member) ngaps.push_back(m);
        }
        pos = npos;
        gaps = ngaps;
    };
    auto remove_min_pos = [&]() {
        // min S+ has the smallest m >= 0
        pos.erase(pos.begin());
    };
    auto add_max_gap = [&]() {
        // max S- is the gap with the largest m
        gaps.pop_back();
    };
    switch (kind) {
    case DeriveKind::r:
        remove_min_pos();
        shift_all(+1);
        break;
    case DeriveKind::c:
        add_max_gap();
        shift_all(-1);
        break;
    case DeriveKind::rc:
        remove_min_pos();
        add_max_gap();
        break;
    }
    MayaDiagram t;
    t.positives = pos;
    t.negative_gaps = gaps;
    auto [res, charge] = partition_from_maya(t);
    if (charge != 0) fail(errc::bad_argument, "derived Maya diagram has nonzero charge");
    return res;
}

// Lemma 4.5 route: part-wise closed form.
Partition derive_closed(const Partition& eta, DeriveKind kind) {
    DiagStats s = diag_stats(eta);
    std::vector<int> out;
    switch (kind) {
    case DeriveKind::r:
        for (int i = 1; i <= eta.length(); ++i)
            out.push_back(i < s.d ? eta.part(i) + 1 : eta.part(i + 1));
        break;
    case DeriveKind::c:
        for (int i = 1; i <= eta.length() + 1; ++i) {
            if (i <= s.dt)
                out.push_back(eta.part(i) - 1);
            else if (i == s.dt + 1)
                out.push_back(s.d - 1);
            else
                out.push_back(eta.part(i - 1));
        }
        break;
    case DeriveKind::rc:
        for (int i = 1; i <= eta.length(); ++i) {
            if (i >= s.d && i <= s.dt)
                out.push_back(s.d - 1);
            else
                out.push_back(eta.part(i));
        }
        break;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return Partition(out);
}

} // namespace

Partition derive(const Partition& eta, DeriveKind kind) {
    if (eta.empty()) fail(errc::empty_partition, "derive of empty partition");
    Partition a = derive_maya(eta, kind);
    Partition b = derive_closed(eta, kind);
    if (a != b) fail(errc::lemma_violated, "Maya and closed-form derivations disagree");
    return a;
}

int colored_count(const Partition& eta, int n, ColorRole role, int l) {
    if (n <= 0) fail(errc::bad_argument, "modulus must be positive");
    int want = normalize_residue(l, n);
    int count = 0;
    for (int i = 0; i < eta.length(); ++i)
        for (int j = 0; j < eta.part(i + 1); ++j) {
            long long color = 0;
            switch (role) {
            case ColorRole::edge_or_leg3: color = (long long)i - j; break;
            case ColorRole::leg1: color = -(long long)j; break;
            case ColorRole::leg2: color = i; break;
            }
            if (normalize_residue(color, n) == want) count++;
        }
    return count;
}

bool is_multi_regular(const Partition& eta, int n) {
    if (n <= 0) fail(errc::bad_argument, "modulus must be positive");
    if (eta.size() % n != 0) return false;
    int want = eta.size() / n;
    for (int l = 0; l < n; ++l)
        if (colored_count(eta, n, ColorRole::edge_or_leg3, l) != want) return false;
    return true;
}

std::vector<int> hook_color_profile(const Partition& nu, int n, int i, int j) {
    if (!nu.contains_cell(i, j)) fail(errc::cell_out_of_shape, "hook cell not in shape");
    std::vector<int> profile(n, 0);
    auto add = [&](int a, int b) { profile[normalize_residue((long long)a - b, n)]++; };
    for (int jp = j; jp < nu.part(i + 1); ++jp) add(i, jp);
    for (int ip = i + 1; ip < nu.length(); ++ip)
        if (nu.part(ip + 1) > j) add(ip, j);
    return profile;
}

long long A_stat(const Partition& lambda, int k, int n) {
    if (n <= 0 || k < 0 || k >= n) fail(errc::bad_argument, "A_stat needs 0 <= k < n");
    long long sum = 0;
    for (int i = 0; i < lambda.length(); ++i) sum += (long long)((i + k) / n) * lambda.part(i + 1);
    return sum;
}

long long C_stat(const Partition& lambda, long long m, long long mp) {
    long long sum = 0;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i + 1); ++j) sum += -m * i - mp * j + 1;
    return sum;
}

long long C_stat(const Partition& lambda, long long m, long long mp, int k, int n) {
    if (n <= 0) fail(errc::bad_argument, "modulus must be positive");
    int want = normalize_residue(k, n);
    long long sum = 0;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i + 1); ++j)
            if (normalize_residue((long long)i - j, n) == want) sum += -m * i - mp * j + 1;
    return sum;
}

namespace {
void gen_partitions(int rest, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (rest == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(rest - p, p, cur, out);
        cur.pop_back();
    }
}
} // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        auto part = partitions_of(k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

} // namespace otv
