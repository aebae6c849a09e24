#ifndef OTV_DOUBLEDIMER_HPP
#define OTV_DOUBLEDIMER_HPP

#include <memory>
#include <optional>
#include <unordered_set>
#include <string>
#include <vector>

#include "otv/regions.hpp"
#include "otv/weights.hpp"

namespace otv {

// Faces of the infinite honeycomb are cell classes of Z^3 modulo the
// diagonal: the cell (x,y,z) lies on the face (x-z, y-z). Triangles (the
// honeycomb vertices) come in two orientations:
//   up(a,b)   = faces {(a,b), (a+1,b), (a+1,b+1)}
//   down(a,b) = faces {(a,b), (a,b+1), (a+1,b+1)}
struct Tri {
    int a = 0, b = 0;
    bool up = true;
    auto operator<=>(const Tri&) const = default;
};

// The side-N hexagonal patch: the 6N^2 triangles covered by the three
// N x N walls of the empty-room surface. The central face is (0,0).
class Patch {
public:
    explicit Patch(int N);

    int N() const { return n_; }
    bool contains(const Tri& t) const;
    const std::vector<Tri>& triangles() const { return tris_; }

    // 1, 2 or 3; the boundary cuts pass through the patch corners at
    // angles 60/180/300 degrees, so no triangle sits on a cut.
    int sector(const Tri& t) const;

    // Triangles with fewer than three patch neighbours.
    const std::vector<Tri>& boundary() const { return boundary_; }

private:
    int n_ = 0;
    int off_ = 0, dim_ = 0;
    std::vector<uint8_t> up_, down_; // dense membership grids
    std::vector<Tri> tris_;
    std::vector<Tri> boundary_;
    bool cell(const std::vector<uint8_t>& g, int a, int b) const;
};

const Patch& patch_cache(int N);

// Diagonal height function tau(a,b) = max{t : (a+t, b+t, t) in S} of a
// downward-closed box set S; S is frakA = R2 u (I- u III) \ A,
// frakB = R1 u (II u III) \ B, or the single-dimer surface
// R1 u pi_min(legs) of the box-counting side. Values are memoized per face.
class HeightField {
public:
    enum class Side { A, B, DT };
    HeightField(const LegTriple& legs, Side side, const std::vector<Box>& removed, int radius);

    int tau(int a, int b) const;
    Side side() const { return side_; }

private:
    const LegTriple* legs_;
    Side side_;
    std::unordered_set<Box, BoxHash> removed_;
    int radius_, off_, dim_, tmin_, tmax_;
    mutable std::vector<int> memo_;
};

// Height field of a chart translated by the unit box vector v: the surface
// S + v seen in the fixed frame.
class ShiftedField {
public:
    ShiftedField(const HeightField& base, Box v) : base_(&base), v_(v) {}
    int tau(int a, int b) const {
        return base_->tau(a + v_.z - v_.x, b + v_.z - v_.y) + v_.z;
    }

private:
    const HeightField* base_;
    Box v_;
};

QMono matching_weight(const Patch& patch, const ShiftedField& h, int ncolors);

// The matching D_S restricted to the patch, described per triangle: the
// partner triangle of the unique covering edge (before truncation).
Tri matching_partner(const Tri& t, const HeightField& h);

// Total weight of the horizontal dimers of D_S inside the patch.
QMono matching_weight(const Patch& patch, const HeightField& h, int ncolors);

struct NodeInfo {
    Tri tri;
    int sector = 0;
    int label2 = 0; // twice the half-integer boundary label
};

struct DoubleDimer {
    std::vector<NodeInfo> nodes;                // all degree-1 triangles, by sector then label
    std::vector<std::pair<int, int>> paths;     // endpoint indices into nodes
    int loops = 0;
    int doubled = 0;
};

// Superimpose D_A and D_B on the patch and decompose into loops, doubled
// edges and node-to-node paths.
DoubleDimer superimpose(const Patch& patch, const HeightField& ha, const HeightField& hb);

// Stabilization size for a given pair.
int stabilization_size(const LegTriple& legs, int ab_boxes);

// Nodes of the configuration for these legs at patch size N, with
// sector/label data; labels follow the Maya diagrams of the legs.
std::vector<NodeInfo> nodes(const LegTriple& legs, int N);

// Membership test: every path of the superimposed base configuration for
// (A,B) has both endpoints in one sector. Evaluated at the stabilization
// size and re-verified at N+2; throws errc::unstable if the two disagree.
bool ab_membership(const LegTriple& legs, const ABConfig& ab);
bool ab_membership_at(const LegTriple& legs, const ABConfig& ab, int N);

// Independent oracle: does some assignment of projective labels to the
// III boxes of A Delta B make (A u B, labels) a valid labelled box
// configuration?
bool labelled_box_filter(const LegTriple& legs, const ABConfig& ab);

// Edge-weight of D_{(A,B)}(N) (product over both matchings). The chart
// used here realizes the sector profiles of the transposed legs, so the
// base configuration's weight equals the vartheta product evaluated at
// (lambda', mu', nu'); box-set bookkeeping (local moves, colored counts)
// is unaffected by that reflection.
QMono ab_patch_weight(const LegTriple& legs, const ABConfig& ab, int N);

// ASCII dump of the double-dimer decomposition (debug aid, no format contract).
std::string ascii_dump(const LegTriple& legs, const ABConfig& ab, int N);

} // namespace otv

#endif
