#include "otv/regions.hpp"

#include <algorithm>
#include <unordered_set>

#include "json.hpp"

namespace otv {

LegTriple LegTriple::parse(const std::string& legs, int n) {
    std::vector<std::string> parts(3);
    size_t start = 0;
    int slot = 0;
    for (size_t i = 0; i <= legs.size(); ++i) {
        if (i == legs.size() || legs[i] == ';') {
            if (slot > 2) fail(errc::bad_argument, "legs want exactly three ';'-separated fields");
            parts[slot++] = legs.substr(start, i - start);
            start = i + 1;
        }
    }
    if (slot != 3) fail(errc::bad_argument, "legs want exactly three ';'-separated fields");
    if (n <= 0) fail(errc::bad_argument, "modulus must be positive");
    return LegTriple(Partition::parse(parts[0]), Partition::parse(parts[1]),
                     Partition::parse(parts[2]), n);
}

std::string LegTriple::str() const {
    return lambda.str() + ";" + mu.str() + ";" + nu.str();
}

CylMembership cyl_membership(const LegTriple& legs, const Box& b) {
    CylMembership m;
    m.in[0] = legs.lambda.contains_cell(b.y, b.z);
    m.in[1] = legs.mu.contains_cell(b.z, b.x);
    m.in[2] = legs.nu.contains_cell(b.x, b.y);
    m.positive = b.x >= 0 && b.y >= 0 && b.z >= 0;
    return m;
}

std::vector<Box> RegionSets::II_all() const {
    std::vector<Box> out;
    for (int i = 0; i < 3; ++i) out.insert(out.end(), II_hat[i].begin(), II_hat[i].end());
    std::sort(out.begin(), out.end());
    return out;
}

std::string RegionSets::json() const {
    nlohmann::json j;
    auto boxes = [](const std::vector<Box>& v) {
        nlohmann::json arr = nlohmann::json::array();
        for (const Box& b : v) arr.push_back({b.x, b.y, b.z});
        return arr;
    };
    j["II_hat1"] = boxes(II_hat[0]);
    j["II_hat2"] = boxes(II_hat[1]);
    j["II_hat3"] = boxes(II_hat[2]);
    j["III"] = boxes(III);
    j["II_colored"] = II_colored;
    j["III_colored"] = III_colored;
    return j.dump();
}

RegionSets region_sets(const LegTriple& legs) {
    RegionSets out;
    out.II_colored.assign(legs.n, 0);
    out.III_colored.assign(legs.n, 0);
    int bx = std::max(legs.mu.part(1), legs.nu.length());
    int by = std::max(legs.lambda.length(), legs.nu.part(1));
    int bz = std::max(legs.lambda.part(1), legs.mu.length());
    for (int x = 0; x < bx; ++x)
        for (int y = 0; y < by; ++y)
            for (int z = 0; z < bz; ++z) {
                Box b{x, y, z};
                CylMembership m = cyl_membership(legs, b);
                if (m.count() == 3) {
                    out.III.push_back(b);
                    out.III_colored[box_color(b, legs.n)]++;
                } else if (m.count() == 2) {
                    int missing = !m.in[0] ? 0 : (!m.in[1] ? 1 : 2);
                    out.II_hat[missing].push_back(b);
                    out.II_colored[box_color(b, legs.n)]++;
                }
            }
    for (auto& v : out.II_hat) std::sort(v.begin(), v.end());
    std::sort(out.III.begin(), out.III.end());
    for (long long c : out.II_colored) out.II_total += c;
    for (long long c : out.III_colored) out.III_total += c;
    return out;
}

std::vector<long long> pi_min_colored_volume(const LegTriple& legs) {
    RegionSets r = region_sets(legs);
    std::vector<long long> out(legs.n, 0);
    for (int l = 0; l < legs.n; ++l) out[l] = -r.II_colored[l] - 2 * r.III_colored[l];
    return out;
}

namespace {

struct DtEnumState {
    const LegTriple* legs;
    std::unordered_set<Box, BoxHash> extra;
    std::vector<Box> extra_sorted;
    const std::function<void(const std::vector<Box>&)>* emit;
    int k_max;

    bool in_pi(const Box& b) const {
        return (b.x >= 0 && b.y >= 0 && b.z >= 0 && extra.count(b)) || in_pi_min(*legs, b);
    }
    bool addable(const Box& b) const {
        if (b.x < 0 || b.y < 0 || b.z < 0 || in_pi(b)) return false;
        Box p1{b.x - 1, b.y, b.z}, p2{b.x, b.y - 1, b.z}, p3{b.x, b.y, b.z - 1};
        if (b.x > 0 && !in_pi(p1)) return false;
        if (b.y > 0 && !in_pi(p2)) return false;
        if (b.z > 0 && !in_pi(p3)) return false;
        return true;
    }
    // candidates: sorted vector of currently-addable boxes
    void recurse(const std::vector<Box>& candidates, const Box& last) {
        (*emit)(extra_sor_copy());
        if ((int)extra.size() >= k_max) return;
        for (size_t idx = 0; idx < candidates.size(); ++idx) {
            const Box w = candidates[idx];
            if (!(last < w)) continue;
            extra.insert(w);
            extra_sorted.push_back(w);
            std::vector<Box> next = candidates;
            next.erase(next.begin() + idx);
            for (const Box s : {Box{w.x + 1, w.y, w.z}, Box{w.x, w.y + 1, w.z}, Box{w.x, w.y, w.z + 1}}) {
                if (addable(s)) next.insert(std::lower_bound(next.begin(), next.end(), s), s);
            }
            recurse(next, w);
            extra_sorted.pop_back();
            extra.erase(w);
        }
    }
    std::vector<Box> extra_sor_copy() const {
        std::vector<Box> v = extra_sorted;
        std::sort(v.begin(), v.end());
        return v;
    }
};

} // namespace

void enumerate_dt(const LegTriple& legs, int k_max,
                  const std::function<void(const std::vector<Box>&)>& emit) {
    if (k_max < 0) fail(errc::bad_argument, "k_max must be nonnegative");
    DtEnumState st;
    st.legs = &legs;
    st.emit = &emit;
    st.k_max = k_max;
    int bx = std::max(legs.mu.part(1), legs.nu.length()) + k_max + 1;
    int by = std::max(legs.lambda.length(), legs.nu.part(1)) + k_max + 1;
    int bz = std::max(legs.lambda.part(1), legs.mu.length()) + k_max + 1;
    std::vector<Box> candidates;
    for (int x = 0; x < bx; ++x)
        for (int y = 0; y < by; ++y)
            for (int z = 0; z < bz; ++z)
                if (st.addable(Box{x, y, z})) candidates.push_back(Box{x, y, z});
    std::sort(candidates.begin(), candidates.end());
    st.recurse(candidates, Box{-1000000, -1000000, -1000000});
}

namespace {

// Sites a finite A or B component may occupy, in topological order
// (predecessors first; the coordinate sum increases along successors).
std::vector<Box> a_sites(const LegTriple& legs, int budget) {
    std::vector<Box> sites;
    for (const auto& [j, k] : legs.lambda.cells())
        for (int d = 1; d <= budget; ++d) sites.push_back(Box{-d, j, k});
    for (const auto& [k, i] : legs.mu.cells())
        for (int d = 1; d <= budget; ++d) sites.push_back(Box{i, -d, k});
    for (const auto& [i, j] : legs.nu.cells())
        for (int d = 1; d <= budget; ++d) sites.push_back(Box{i, j, -d});
    RegionSets r = region_sets(legs);
    sites.insert(sites.end(), r.III.begin(), r.III.end());
    std::sort(sites.begin(), sites.end(), [](const Box& a, const Box& b) {
        int sa = a.x + a.y + a.z, sb = b.x + b.y + b.z;
        if (sa != sb) return sa < sb;
        return a < b;
    });
    return sites;
}

std::vector<Box> b_sites(const LegTriple& legs) {
    RegionSets r = region_sets(legs);
    std::vector<Box> sites = r.II_all();
    sites.insert(sites.end(), r.III.begin(), r.III.end());
    std::sort(sites.begin(), sites.end(), [](const Box& a, const Box& b) {
        int sa = a.x + a.y + a.z, sb = b.x + b.y + b.z;
        if (sa != sb) return sa < sb;
        return a < b;
    });
    return sites;
}

// Enumerate subsets of `sites` (given in topological order) that are closed
// under successors: if a predecessor of w inside the domain is chosen, w
// must be chosen. Subsets are capped at max_size.
void enumerate_closed(const std::vector<Box>& sites, int max_size,
                      const std::function<void(const std::vector<Box>&)>& emit) {
    std::vector<Box> chosen;
    std::unordered_set<Box, BoxHash> chosen_set;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == sites.size()) {
            std::vector<Box> out = chosen;
            std::sort(out.begin(), out.end());
            emit(out);
            return;
        }
        const Box& w = sites[idx];
        bool forced = chosen_set.count(Box{w.x - 1, w.y, w.z}) ||
                      chosen_set.count(Box{w.x, w.y - 1, w.z}) ||
                      chosen_set.count(Box{w.x, w.y, w.z - 1});
        if (!forced) rec(idx + 1);
        if ((int)chosen.size() < max_size) {
            chosen.push_back(w);
            chosen_set.insert(w);
            rec(idx + 1);
            chosen_set.erase(w);
            chosen.pop_back();
        } else if (forced) {
            return; // would exceed the budget; prune
        }
    };
    rec(0);
}

} // namespace

void enumerate_ab_all(const LegTriple& legs, int budget,
                      const std::function<void(const ABConfig&)>& emit) {
    if (budget < 0) fail(errc::bad_argument, "budget must be nonnegative");
    std::vector<Box> sa = a_sites(legs, budget);
    std::vector<Box> sb = b_sites(legs);
    enumerate_closed(sa, budget, [&](const std::vector<Box>& A) {
        enumerate_closed(sb, budget - (int)A.size(), [&](const std::vector<Box>& B) {
            ABConfig ab;
            ab.A = A;
            ab.B = B;
            emit(ab);
        });
    });
}

bool ab_closure_holds(const LegTriple& legs, const ABConfig& ab) {
    std::unordered_set<Box, BoxHash> A(ab.A.begin(), ab.A.end());
    std::unordered_set<Box, BoxHash> B(ab.B.begin(), ab.B.end());
    auto in_a_domain = [&](const Box& w) {
        CylMembership m = cyl_membership(legs, w);
        return (!m.positive && m.count() >= 1) || (m.positive && m.count() == 3);
    };
    auto in_b_domain = [&](const Box& w) {
        CylMembership m = cyl_membership(legs, w);
        return m.positive && m.count() >= 2;
    };
    for (const Box& a : ab.A)
        if (!in_a_domain(a)) return false;
    for (const Box& b : ab.B)
        if (!in_b_domain(b)) return false;
    auto succs = [](const Box& w) {
        return std::vector<Box>{{w.x + 1, w.y, w.z}, {w.x, w.y + 1, w.z}, {w.x, w.y, w.z + 1}};
    };
    for (const Box& a : ab.A)
        for (const Box& s : succs(a))
            if (in_a_domain(s) && !A.count(s)) return false;
    for (const Box& b : ab.B)
        for (const Box& s : succs(b))
            if (in_b_domain(s) && !B.count(s)) return false;
    return true;
}

} // namespace otv
