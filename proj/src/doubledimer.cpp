#include "otv/doubledimer.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace otv {

// ---------------------------------------------------------------------------
// Patch
// ---------------------------------------------------------------------------

Patch::Patch(int N) : n_(N) {
    if (N < 2) fail(errc::bad_argument, "patch size must be at least 2");
    off_ = N + 3;
    dim_ = 2 * N + 7;
    up_.assign((size_t)dim_ * dim_, 0);
    down_.assign((size_t)dim_ * dim_, 0);
    auto put = [&](int a, int b, bool up) {
        (up ? up_ : down_)[(size_t)(a + off_) * dim_ + (b + off_)] = 1;
    };
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
            put(x, y, true); // z-wall
            put(x, y, false);
        }
    for (int y = 0; y < N; ++y)
        for (int z = 0; z < N; ++z) {
            put(-1 - z, y - z, true); // x-wall
            put(-1 - z, y - z - 1, false);
        }
    for (int x = 0; x < N; ++x)
        for (int z = 0; z < N; ++z) {
            put(x - z, -1 - z, false); // y-wall
            put(x - z - 1, -1 - z, true);
        }
    for (int a = -off_; a <= off_; ++a)
        for (int b = -off_; b <= off_; ++b) {
            if (cell(up_, a, b)) tris_.push_back(Tri{a, b, true});
            if (cell(down_, a, b)) tris_.push_back(Tri{a, b, false});
        }
    for (const Tri& t : tris_) {
        Tri n1, n2, n3;
        if (t.up) {
            n1 = Tri{t.a, t.b, false};
            n2 = Tri{t.a, t.b - 1, false};
            n3 = Tri{t.a + 1, t.b, false};
        } else {
            n1 = Tri{t.a, t.b, true};
            n2 = Tri{t.a - 1, t.b, true};
            n3 = Tri{t.a, t.b + 1, true};
        }
        int deg = (contains(n1) ? 1 : 0) + (contains(n2) ? 1 : 0) + (contains(n3) ? 1 : 0);
        if (deg < 3) boundary_.push_back(t);
    }
}

bool Patch::cell(const std::vector<uint8_t>& g, int a, int b) const {
    if (a < -off_ || a > off_ || b < -off_ || b > off_) return false;
    return g[(size_t)(a + off_) * dim_ + (b + off_)] != 0;
}

bool Patch::contains(const Tri& t) const { return cell(t.up ? up_ : down_, t.a, t.b); }

int Patch::sector(const Tri& t) const {
    // centroid of the three face coordinates, times 3; never on a cut ray.
    // Sector 1 (lambda) is centered on the -x direction, sector 2 (mu) on
    // -y, sector 3 (nu) on -z; the cuts pass through the corners in the
    // +x, +y and +z directions.
    long long p = t.up ? 3LL * t.a + 2 : 3LL * t.a + 1;
    long long q = t.up ? 3LL * t.b + 1 : 3LL * t.b + 2;
    if (p > 0 && q > 0) return 3;
    if (p < 0 && q > p) return 1;
    return 2;
}

const Patch& patch_cache(int N) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Patch>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[N];
    if (!slot) slot = std::make_unique<Patch>(N);
    return *slot;
}

// ---------------------------------------------------------------------------
// Height fields
// ---------------------------------------------------------------------------

namespace {
constexpr int TAU_UNSET = INT32_MIN;

bool in_domain_a(const LegTriple& legs, const Box& c) {
    CylMembership m = cyl_membership(legs, c);
    return (!m.positive && m.count() >= 1) || m.count() == 3;
}
bool in_domain_b(const LegTriple& legs, const Box& c) {
    CylMembership m = cyl_membership(legs, c);
    return m.positive && m.count() >= 2;
}
bool in_domain_dt(const LegTriple& legs, const Box& c) {
    CylMembership m = cyl_membership(legs, c);
    return m.positive && m.count() >= 1;
}
} // namespace

HeightField::HeightField(const LegTriple& legs, Side side, const std::vector<Box>& removed,
                         int radius)
    : legs_(&legs), side_(side), removed_(removed.begin(), removed.end()), radius_(radius) {
    off_ = radius + 2;
    dim_ = 2 * off_ + 1;
    memo_.assign((size_t)dim_ * dim_, TAU_UNSET);
}

int HeightField::tau(int a, int b) const {
    bool memoizable = a >= -off_ && a <= off_ && b >= -off_ && b <= off_;
    size_t idx = 0;
    if (memoizable) {
        idx = (size_t)(a + off_) * dim_ + (b + off_);
        if (memo_[idx] != TAU_UNSET) return memo_[idx];
    }
    const LegTriple& legs = *legs_;
    long long best;
    if (side_ == Side::DT) {
        best = std::max({0, -a, -b}) - 1;
    } else if (side_ == Side::A) {
        // R2: need two negative coordinates; cell (a+t, b+t, t) has
        // coordinate c negative up to the thresholds below. The max t with
        // at least two negatives is the second largest threshold.
        long long t1 = -(long long)a - 1, t2 = -(long long)b - 1, t3 = -1;
        long long hi = std::max({t1, t2, t3}), lo = std::min({t1, t2, t3});
        best = t1 + t2 + t3 - hi - lo;
    } else {
        // R1: at least one negative coordinate
        best = std::max({0, -a, -b}) - 1;
    }
    auto consider = [&](long long t) {
        if (t <= best) return;
        Box c{(int)(a + t), (int)(b + t), (int)t};
        bool dom = side_ == Side::A   ? in_domain_a(legs, c)
                   : side_ == Side::B ? in_domain_b(legs, c)
                                      : in_domain_dt(legs, c);
        if (dom && !removed_.count(c)) best = t;
    };
    // domain cells on this diagonal line, read off the three legs
    // lambda: (y,z) = (b+t, t), so cells (r,c) with r - c = b give t = c
    for (int r = 0; r < legs.lambda.length(); ++r) {
        int c = r - b;
        if (c >= 0 && c < legs.lambda.part(r + 1)) consider(c);
    }
    // mu: (z,x) = (t, a+t), so cells (r,c) with c - r = a give t = r
    for (int r = 0; r < legs.mu.length(); ++r) {
        int c = r + a;
        if (c >= 0 && c < legs.mu.part(r + 1)) consider(r);
    }
    // nu: (x,y) = (a+t, b+t), so cells (r,c) with r - c = a - b give t = r - a
    for (int r = 0; r < legs.nu.length(); ++r) {
        int c = r - a + b;
        if (c >= 0 && c < legs.nu.part(r + 1)) consider((long long)r - a);
    }
    if (memoizable) memo_[idx] = (int)best;
    return (int)best;
}

Tri matching_partner(const Tri& t, const HeightField& h) {
    if (t.up) {
        int p = h.tau(t.a, t.b);
        int s = h.tau(t.a + 1, t.b + 1);
        if (s == p) return Tri{t.a, t.b, false};
        int r = h.tau(t.a + 1, t.b);
        if (r == p - 1) return Tri{t.a, t.b - 1, false};
        return Tri{t.a + 1, t.b, false};
    }
    int p = h.tau(t.a, t.b);
    int s = h.tau(t.a + 1, t.b + 1);
    if (s == p) return Tri{t.a, t.b, true};
    int q2 = h.tau(t.a, t.b + 1);
    if (q2 == p - 1) return Tri{t.a - 1, t.b, true};
    return Tri{t.a, t.b + 1, true};
}

namespace {
template <typename Field>
QMono matching_weight_impl(const Patch& patch, const Field& h, int ncolors) {
    QMono w(ncolors);
    int N = patch.N();
    for (int a = -N - 3; a <= N + 3; ++a)
        for (int b = -N - 3; b <= N + 3; ++b) {
            if (!patch.contains(Tri{a, b, true}) || !patch.contains(Tri{a, b, false})) continue;
            if (h.tau(a, b) == h.tau(a + 1, b + 1)) w.mul(a - b, N - 1 - b);
        }
    return w;
}
} // namespace

QMono matching_weight(const Patch& patch, const HeightField& h, int ncolors) {
    return matching_weight_impl(patch, h, ncolors);
}

QMono matching_weight(const Patch& patch, const ShiftedField& h, int ncolors) {
    return matching_weight_impl(patch, h, ncolors);
}

// ---------------------------------------------------------------------------
// Superimposition
// ---------------------------------------------------------------------------

namespace {

uint64_t tri_key(const Tri& t) {
    return ((uint64_t)(uint32_t)(t.a + 2048) << 24) ^ ((uint64_t)(uint32_t)(t.b + 2048) << 1) ^
           (t.up ? 1u : 0u);
}

long long cross_pq(long long p1, long long q1, long long p2, long long q2) {
    return p1 * q2 - p2 * q1;
}

void centroid(const Tri& t, long long& p, long long& q) {
    p = t.up ? 3LL * t.a + 2 : 3LL * t.a + 1;
    q = t.up ? 3LL * t.b + 1 : 3LL * t.b + 2;
}

} // namespace

DoubleDimer superimpose(const Patch& patch, const HeightField& ha, const HeightField& hb) {
    DoubleDimer out;
    std::vector<Tri> node_tris;
    for (const Tri& t : patch.boundary()) {
        Tri pa = matching_partner(t, ha);
        Tri pb = matching_partner(t, hb);
        bool ia = patch.contains(pa), ib = patch.contains(pb);
        if (ia != ib) node_tris.push_back(t);
    }
    // order: sector, then clockwise within the sector
    std::stable_sort(node_tris.begin(), node_tris.end(), [&](const Tri& x, const Tri& y) {
        int sx = patch.sector(x), sy = patch.sector(y);
        if (sx != sy) return sx < sy;
        long long px, qx, py, qy;
        centroid(x, px, qx);
        centroid(y, py, qy);
        long long c = cross_pq(px, qx, py, qy);
        if (c != 0) return c < 0;
        return px * px + qx * qx < py * py + qy * qy;
    });
    std::unordered_map<uint64_t, int> node_index;
    for (const Tri& t : node_tris) {
        NodeInfo info;
        info.tri = t;
        info.sector = patch.sector(t);
        node_index[tri_key(t)] = (int)out.nodes.size();
        out.nodes.push_back(info);
    }
    std::unordered_set<uint64_t> visited;
    // paths: start from each node; edges alternate between the two matchings
    for (const Tri& start : node_tris) {
        if (visited.count(tri_key(start))) continue;
        bool use_a = patch.contains(matching_partner(start, ha));
        Tri cur = start;
        bool step_a = use_a;
        visited.insert(tri_key(cur));
        while (true) {
            // consume the next two edges: step matching, then the other one
            Tri nxt = step_a ? matching_partner(cur, ha) : matching_partner(cur, hb);
            visited.insert(tri_key(nxt));
            Tri cont = step_a ? matching_partner(nxt, hb) : matching_partner(nxt, ha);
            if (!patch.contains(cont)) {
                auto it = node_index.find(tri_key(nxt));
                if (it == node_index.end())
                    fail(errc::patch_too_small, "path ended outside the node set");
                out.paths.emplace_back(node_index.at(tri_key(start)), it->second);
                break;
            }
            visited.insert(tri_key(cont));
            cur = cont;
            if (visited.size() > 4 * patch.triangles().size())
                fail(errc::patch_too_small, "double-dimer walk did not terminate");
        }
    }
    // remaining covered components: doubled edges and loops
    for (const Tri& t : patch.triangles()) {
        if (visited.count(tri_key(t))) continue;
        Tri pa = matching_partner(t, ha);
        Tri pb = matching_partner(t, hb);
        bool ia = patch.contains(pa), ib = patch.contains(pb);
        if (!ia || !ib) continue; // degree < 2 and not a node: off the configuration
        if (pa == pb) {
            visited.insert(tri_key(t));
            visited.insert(tri_key(pa));
            out.doubled++;
            continue;
        }
        Tri cur = t;
        bool step_a = true;
        visited.insert(tri_key(cur));
        size_t guard = 0;
        while (true) {
            Tri nxt = step_a ? matching_partner(cur, ha) : matching_partner(cur, hb);
            if (nxt == t && !step_a) break;
            if (nxt == t && step_a && cur != t) {
                // length-2 alternating cycle closed through the A edge
                break;
            }
            visited.insert(tri_key(nxt));
            cur = nxt;
            step_a = !step_a;
            if (++guard > 4 * patch.triangles().size())
                fail(errc::patch_too_small, "loop walk did not terminate");
        }
        out.loops++;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Nodes, labels, membership
// ---------------------------------------------------------------------------

int stabilization_size(const LegTriple& legs, int ab_boxes) {
    RegionSets r = region_sets(legs);
    long long n = ab_boxes + r.II_total + 2 * r.III_total + legs.lambda.part(1) +
                  legs.lambda.length() + legs.mu.part(1) + legs.mu.length() + legs.nu.part(1) +
                  legs.nu.length();
    return (int)(2 * n + 4);
}

namespace {

DoubleDimer make_double_dimer(const LegTriple& legs, const ABConfig& ab, int N) {
    const Patch& patch = patch_cache(N);
    HeightField ha(legs, HeightField::Side::A, ab.A, N + 3);
    HeightField hb(legs, HeightField::Side::B, ab.B, N + 3);
    return superimpose(patch, ha, hb);
}

ABConfig base_config(const LegTriple& legs) {
    ABConfig base;
    RegionSets r = region_sets(legs);
    base.A = r.III;
    base.B = r.II_all();
    base.B.insert(base.B.end(), r.III.begin(), r.III.end());
    std::sort(base.B.begin(), base.B.end());
    return base;
}

// Within sector i the nodes are numbered clockwise; labels run through the
// half-integers, positive on the counterclockwise side of the sector's
// central corner.
void assign_labels(std::vector<NodeInfo>& nodes) {
    const long long center[4][2] = {{0, 0}, {-1, 0}, {0, -1}, {1, 1}};
    for (int s = 1; s <= 3; ++s) {
        std::vector<NodeInfo*> sec;
        for (auto& n : nodes)
            if (n.sector == s) sec.push_back(&n);
        int pos = 0;
        for (auto* n : sec) {
            long long p, q;
            centroid(n->tri, p, q);
            if (cross_pq(center[s][0], center[s][1], p, q) > 0) pos++;
        }
        for (int k = 0; k < (int)sec.size(); ++k) sec[k]->label2 = 2 * (pos - k) - 1;
    }
}

} // namespace

std::vector<NodeInfo> nodes(const LegTriple& legs, int N) {
    // the vacuum node run carries the label grid; a leg's nodes inherit
    // their labels from their vacuum positions
    LegTriple vac({}, {}, {}, legs.n);
    DoubleDimer vdd = make_double_dimer(vac, ABConfig{}, N);
    assign_labels(vdd.nodes);
    std::map<Tri, NodeInfo> grid;
    for (const NodeInfo& n : vdd.nodes) grid[n.tri] = n;

    DoubleDimer dd = make_double_dimer(legs, base_config(legs), N);
    for (NodeInfo& n : dd.nodes) {
        auto it = grid.find(n.tri);
        if (it == grid.end())
            fail(errc::patch_too_small, "node off the vacuum boundary grid");
        n.label2 = it->second.label2;
        if (n.sector != it->second.sector)
            fail(errc::patch_too_small, "node changed sector");
    }

    // validate: sector i drops exactly the labels of S_i+ u S_i-
    const Partition* parts[4] = {nullptr, &legs.lambda, &legs.mu, &legs.nu};
    for (int s = 1; s <= 3; ++s) {
        MayaDiagram maya = maya_diagram(*parts[s], 0);
        std::vector<int> expect_missing;
        for (int m : maya.positives) expect_missing.push_back(2 * m + 1);
        for (int m : maya.negative_gaps) expect_missing.push_back(2 * m + 1);
        std::sort(expect_missing.begin(), expect_missing.end());
        std::set<int> have;
        for (const auto& n : dd.nodes)
            if (n.sector == s) have.insert(n.label2);
        std::vector<int> missing;
        for (const NodeInfo& n : vdd.nodes)
            if (n.sector == s && !have.count(n.label2)) missing.push_back(n.label2);
        std::sort(missing.begin(), missing.end());
        if (missing != expect_missing)
            fail(errc::patch_too_small, "node labels do not realize the Maya diagrams");
    }
    return dd.nodes;
}

bool ab_membership_at(const LegTriple& legs, const ABConfig& ab, int N) {
    DoubleDimer dd = make_double_dimer(legs, ab, N);
    for (auto [i, j] : dd.paths)
        if (dd.nodes[i].sector != dd.nodes[j].sector) return false;
    return true;
}

bool ab_membership(const LegTriple& legs, const ABConfig& ab) {
    int N = stabilization_size(legs, (int)(ab.A.size() + ab.B.size()));
    bool v1 = ab_membership_at(legs, ab, N);
    bool v2 = ab_membership_at(legs, ab, N + 2);
    if (v1 != v2) fail(errc::unstable, "membership verdicts disagree at N and N+2");
    return v1;
}

QMono ab_patch_weight(const LegTriple& legs, const ABConfig& ab, int N) {
    const Patch& patch = patch_cache(N);
    HeightField ha(legs, HeightField::Side::A, ab.A, N + 3);
    HeightField hb(legs, HeightField::Side::B, ab.B, N + 3);
    QMono w = matching_weight(patch, ha, legs.n);
    w *= matching_weight(patch, hb, legs.n);
    return w;
}

// ---------------------------------------------------------------------------
// Labelled-box oracle
// ---------------------------------------------------------------------------

namespace {

// lines in C^3 / C(1,1,1), normalized as primitive integer pairs (x, y)
// standing for the class of (x, y, 0)
struct Line {
    int x = 0, y = 0;
    bool operator==(const Line&) const = default;
};

Line normalize_line(int x, int y) {
    int g = std::gcd(std::abs(x), std::abs(y));
    if (g) {
        x /= g;
        y /= g;
    }
    if (x < 0 || (x == 0 && y < 0)) {
        x = -x;
        y = -y;
    }
    return Line{x, y};
}

Line coord_line(int i) {
    if (i == 1) return normalize_line(1, 0);
    if (i == 2) return normalize_line(0, 1);
    return normalize_line(-1, -1); // e3 = (0,0,1): class of -(1,1,0)
}

struct Span {
    int dim = 0;
    Line line;
    void add_line(const Line& l) {
        if (dim == 0) {
            dim = 1;
            line = l;
        } else if (dim == 1 && !(line == l)) {
            dim = 2;
        }
    }
    void add_full() { dim = 2; }
};

} // namespace

bool labelled_box_filter(const LegTriple& legs, const ABConfig& ab) {
    std::unordered_set<Box, BoxHash> inA(ab.A.begin(), ab.A.end());
    std::unordered_set<Box, BoxHash> inB(ab.B.begin(), ab.B.end());
    RegionSets regions = region_sets(legs);

    enum class Kind { none, i_minus, ii, iii_unlabelled, iii_labelled };
    auto kind_of = [&](const Box& w) {
        bool a = inA.count(w) > 0, b = inB.count(w) > 0;
        if (!a && !b) return Kind::none;
        CylMembership m = cyl_membership(legs, w);
        if (!m.positive) return Kind::i_minus;
        if (m.count() == 2) return Kind::ii;
        return (a && b) ? Kind::iii_unlabelled : Kind::iii_labelled;
    };

    std::vector<Box> labelled;
    for (const Box& w : regions.III)
        if (kind_of(w) == Kind::iii_labelled) labelled.push_back(w);
    if (labelled.size() > 12) fail(errc::bad_argument, "labelled-box filter is a brute-force oracle");

    const Line generic = normalize_line(1, 2);
    std::vector<Line> label(labelled.size());
    std::unordered_map<Box, int, BoxHash> labelled_index;
    for (size_t i = 0; i < labelled.size(); ++i) labelled_index[labelled[i]] = (int)i;

    auto predecessor = [](const Box& w, int i) {
        Box u = w;
        if (i == 1) u.x--;
        if (i == 2) u.y--;
        if (i == 3) u.z--;
        return u;
    };

    auto valid = [&]() {
        // an absent type II_i site tolerates only III predecessors labelled
        // by the missing coordinate line
        for (int hat = 0; hat < 3; ++hat)
            for (const Box& w : regions.II_hat[hat]) {
                if (inB.count(w)) continue;
                for (int i = 1; i <= 3; ++i) {
                    Kind k = kind_of(predecessor(w, i));
                    if (k == Kind::none) continue;
                    if (k != Kind::iii_labelled) return false;
                    if (!(label[labelled_index[predecessor(w, i)]] == coord_line(hat + 1)))
                        return false;
                }
            }
        for (const Box& w : regions.III) {
            Span span;
            for (int i = 1; i <= 3; ++i) {
                Box u = predecessor(w, i);
                Kind k = kind_of(u);
                if (k == Kind::none) continue;
                if (k == Kind::i_minus) {
                    span.add_line(coord_line(i));
                } else if (k == Kind::iii_unlabelled) {
                    span.add_full();
                } else if (k == Kind::iii_labelled) {
                    span.add_line(label[labelled_index[u]]);
                } else {
                    return false; // a type II box cannot precede a III site
                }
            }
            Kind kw = kind_of(w);
            if (kw == Kind::none) {
                if (span.dim != 0) return false;
            } else if (kw == Kind::iii_labelled) {
                if (span.dim == 2) return false;
                if (span.dim == 1 && !(label[labelled_index[w]] == span.line)) return false;
            }
        }
        return true;
    };

    std::function<bool(size_t)> rec = [&](size_t idx) {
        if (idx == labelled.size()) return valid();
        for (const Line& l : {coord_line(1), coord_line(2), coord_line(3), generic}) {
            label[idx] = l;
            if (rec(idx + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

// ---------------------------------------------------------------------------
// Debug dump
// ---------------------------------------------------------------------------

std::string ascii_dump(const LegTriple& legs, const ABConfig& ab, int N) {
    DoubleDimer dd = make_double_dimer(legs, ab, N);
    assign_labels(dd.nodes);
    std::ostringstream os;
    os << "patch N=" << N << " nodes=" << dd.nodes.size() << " paths=" << dd.paths.size()
       << " loops=" << dd.loops << " doubled=" << dd.doubled << "\n";
    for (auto [i, j] : dd.paths) {
        const NodeInfo &a = dd.nodes[i], &b = dd.nodes[j];
        os << "  path: s" << a.sector << " " << a.label2 << "/2 (" << a.tri.a << "," << a.tri.b
           << (a.tri.up ? "U" : "D") << ") -> s" << b.sector << " " << b.label2 << "/2 ("
           << b.tri.a << "," << b.tri.b << (b.tri.up ? "U" : "D") << ")\n";
    }
    return os.str();
}

} // namespace otv
