#pragma once

#include "arrmorse/faces.hpp"

namespace arrmorse {

// Exact total-order surrogate for the angle vector of a point inside the
// verified cone. Comparison is anti-lexicographic: the last angle first,
// then earlier angles, then the squared radius. On points with all
// coordinates positive, comparing cos^2(theta_j) in reverse equals
// comparing theta_j directly.
struct PolarKey {
    int level = 0;       // i_F: first flag subspace whose closure meets the point
    Vec angle_cos2;      // entry j-1 holds cos^2(theta_j) for j = 1..level-1
    Rational rho2;       // squared distance from the origin

    static int compare(const PolarKey& a, const PolarKey& b);
    bool operator<(const PolarKey& o) const { return compare(*this, o) < 0; }
    bool operator==(const PolarKey& o) const { return compare(*this, o) == 0; }
};

PolarKey theta_key(const Vec& point);

struct FrameReport {
    bool origin_in_chamber = false;
    bool transversal_ok = false;
    bool cone_ok = false;
    bool no_tie_ok = false;
    std::string detail; // first failing predicate, human readable

    bool pass() const { return origin_in_chamber && transversal_ok && cone_ok && no_tie_ok; }
};

// A coordinate frame, applied to the arrangement, in which the standard
// basis plays the role of the generic polar frame: the origin sits in the
// base chamber and V_i = span(e_1..e_i).
struct GenericFrame {
    Mat basis;            // rows b_1..b_n of the linear change (y_i = b_i . x)
    Vec shift;            // translation applied after the linear change
    unsigned long seed = 0;
    int attempts = 0;     // resamples consumed before success

    Arrangement transformed;               // the arrangement seen in frame coordinates
    std::vector<AffineSubspace> flat_support; // transformed support per lattice flat id
    std::vector<Vec> slice_point;          // per flat id: support ∩ V_rank (empty if n/a)

    AffineSubspace flag_subspace(int k) const; // V_k in frame coordinates
};

// Applies (basis, shift) to `arr` and solves the per-flat slice points.
// Throws when a slice point is not a single point (transversality failure).
GenericFrame apply_frame(const Arrangement& arr, const IntersectionLattice& lat, Mat basis,
                         Vec shift);

FrameReport verify_frame(const Arrangement& arr, const IntersectionLattice& lat,
                         const GenericFrame& frame);

// Random search for a verified frame; deterministic in the seed. Throws
// std::runtime_error carrying the last failed predicate when the attempt
// budget is exhausted.
GenericFrame sample_frame(const Arrangement& arr, const IntersectionLattice& lat,
                          unsigned long seed, int max_attempts = 64);

// The arrangement induced on V_k (in frame coordinates), as an arrangement
// in R^k. Requires a verified frame for k >= 1.
Arrangement slice_arrangement(const GenericFrame& frame, int k);

// P_F for the slice facet F ∩ V_k: the smallest level j <= k whose slice
// vertices meet clos(F), together with the key-minimal such vertex.
struct MinVertex {
    int level = 0;
    Vec point;
    PolarKey key;
};
MinVertex facet_min_vertex(const FacePoset& poset, const GenericFrame& frame, int facet, int k);

} // namespace arrmorse
