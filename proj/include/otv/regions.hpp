#ifndef OTV_REGIONS_HPP
#define OTV_REGIONS_HPP

#include <functional>
#include <string>
#include <vector>

#include "otv/partition.hpp"

namespace otv {

struct Box {
    int x = 0, y = 0, z = 0;
    auto operator<=>(const Box&) const = default;
};

struct BoxHash {
    size_t operator()(const Box& b) const {
        size_t h = (size_t)(uint32_t)b.x;
        h = h * 1000003u ^ (size_t)(uint32_t)b.y;
        h = h * 1000003u ^ (size_t)(uint32_t)b.z;
        return h;
    }
};

inline int box_color(const Box& b, int n) { return normalize_residue((long long)b.x - b.y, n); }

// A triple of outgoing partitions plus the color modulus.
struct LegTriple {
    Partition lambda, mu, nu;
    int n = 1;

    LegTriple() = default;
    LegTriple(Partition l, Partition m, Partition v, int n_)
        : lambda(std::move(l)), mu(std::move(m)), nu(std::move(v)), n(n_) {}

    static LegTriple parse(const std::string& legs, int n); // "3,1;;2"
    std::string str() const;
    int total_size() const { return lambda.size() + mu.size() + nu.size(); }
};

struct CylMembership {
    bool in[3] = {false, false, false}; // Cyl_1, Cyl_2, Cyl_3
    bool positive = false;              // box lies in the nonnegative octant
    int count() const { return (in[0] ? 1 : 0) + (in[1] ? 1 : 0) + (in[2] ? 1 : 0); }
};

CylMembership cyl_membership(const LegTriple& legs, const Box& b);

inline bool in_pi_min(const LegTriple& legs, const Box& b) {
    CylMembership m = cyl_membership(legs, b);
    return m.positive && m.count() >= 1;
}

struct RegionSets {
    std::vector<Box> II_hat[3]; // II_{1^},II_{2^},II_{3^}
    std::vector<Box> III;
    std::vector<long long> II_colored;  // per color l
    std::vector<long long> III_colored; // per color l
    long long II_total = 0;
    long long III_total = 0;

    std::vector<Box> II_all() const;
    std::string json() const;
};

RegionSets region_sets(const LegTriple& legs);

// (-|II|_l - 2|III|_l) per color; equals the colored renormalized volume of
// pi_min.
std::vector<long long> pi_min_colored_volume(const LegTriple& legs);

// Every 3D partition pi = pi_min + extra with |extra| <= k_max, visited once
// in a deterministic order. The callback receives the extra boxes sorted
// lexicographically.
void enumerate_dt(const LegTriple& legs, int k_max,
                  const std::function<void(const std::vector<Box>&)>& emit);

// A/B pair of box sets satisfying the two closure conditions.
struct ABConfig {
    std::vector<Box> A; // subset of I- u III, sorted
    std::vector<Box> B; // subset of II u III, sorted
};

// Every AB configuration with |A|+|B| <= budget, deterministic order.
void enumerate_ab_all(const LegTriple& legs, int budget,
                      const std::function<void(const ABConfig&)>& emit);

// Closure predicates used by the enumerator and its tests.
bool ab_closure_holds(const LegTriple& legs, const ABConfig& ab);

} // namespace otv

#endif
