#ifndef OTV_PARTITION_HPP
#define OTV_PARTITION_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "otv/error.hpp"

namespace otv {

// Integer partition with weakly decreasing positive parts. Parts are
// 1-indexed (part(1) is the largest); cells are 0-indexed pairs (i,j)
// with 0 <= i < length(), 0 <= j < part(i+1).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    static Partition parse(const std::string& text); // "3,1"; "" is empty
    std::string str() const;

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int size() const;                       // |eta|
    int length() const { return (int)parts_.size(); } // ell(eta)
    int part(int i) const;                  // 1-indexed, 0 beyond length
    bool contains_cell(int i, int j) const; // 0-indexed
    bool contains(const Partition& inner) const; // shape containment

    Partition conjugate() const;

    std::vector<std::pair<int, int>> cells() const; // row-major, 0-indexed

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// Maya diagram of a partition, stored as the finite deviation from the
// vacuum. An element value m stands for the half-integer m + 1/2, so
// S(eta) = {eta_i - i + 1/2} has m-values eta_i - i. `positives` holds
// the m >= 0 members of S, `negative_gaps` the m < 0 half-integers
// missing from S. charge = |S+| - |S-|.
struct MayaDiagram {
    std::vector<int> positives;     // sorted increasing
    std::vector<int> negative_gaps; // sorted increasing
    int charge = 0;

    bool operator==(const MayaDiagram&) const = default;
};

MayaDiagram maya_diagram(const Partition& eta, int charge);

// Inverse of maya_diagram: reads the partition off S and returns it with
// the charge c(S) = |S+| - |S-| recomputed from the sets.
std::pair<Partition, int> partition_from_maya(const MayaDiagram& maya);

// d(eta) = max{i : eta_i >= i}, dt(eta) = max{i : eta_i >= d(eta)}.
struct DiagStats {
    int d = 0;
    int dt = 0;
};
DiagStats diag_stats(const Partition& eta); // throws empty_partition on {}

enum class DeriveKind { r, c, rc };

// eta^r / eta^c / eta^rc. Computed both from the Maya-diagram definition
// and from the part-wise closed form; the two must agree.
Partition derive(const Partition& eta, DeriveKind kind);

enum class ColorRole { edge_or_leg3, leg1, leg2 };

// Number of 0-indexed cells (i,j) whose color is l mod n, where the color
// is i-j (edge_or_leg3), -j (leg1) or i (leg2).
int colored_count(const Partition& eta, int n, ColorRole role, int l);

bool is_multi_regular(const Partition& eta, int n);

// Entry s = number of boxes of color s (= a-b mod n) in the (i,j)-hook.
std::vector<int> hook_color_profile(const Partition& nu, int n, int i, int j);

// Sum over cells of floor((i+k)/n), 0 <= k < n.
long long A_stat(const Partition& lambda, int k, int n);

// Sum over all cells, or only cells of color class k mod n, of
// (-m*i - m'*j + 1).
long long C_stat(const Partition& lambda, long long m, long long mp);
long long C_stat(const Partition& lambda, long long m, long long mp, int k, int n);

// All partitions of exactly n / of size at most n, in a fixed
// deterministic order (size, then lexicographic on parts).
std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_up_to(int n);

inline int normalize_residue(long long k, int n) {
    long long r = k % n;
    if (r < 0) r += n;
    return (int)r;
}

} // namespace otv

#endif
