#pragma once

#include "arrmorse/lattice.hpp"

#include <map>

namespace arrmorse {

// A relatively open stratum of the arrangement, encoded by its sign on
// every hyperplane. Chambers are the facets with no zero signs.
struct Facet {
    int id = -1;
    std::vector<int> signs;   // -1 / 0 / +1 per hyperplane
    int codim = 0;            // rank of the zero-set flat
    int flat = -1;            // support flat in the lattice
    Vec witness;              // exact point in the relative interior
};

// clos(F) contains G, i.e. F precedes G in the face order.
inline bool sign_face_leq(const std::vector<int>& f, const std::vector<int>& g) {
    for (size_t h = 0; h < f.size(); ++h)
        if (g[h] != 0 && g[h] != f[h]) return false;
    return true;
}

struct FacePoset {
    Arrangement arr;
    IntersectionLattice lattice;
    std::vector<Facet> facets;                    // ordered by (codim, sign lex)
    std::vector<std::vector<int>> by_codim;
    std::map<std::vector<int>, int> index;        // sign vector -> facet id
    std::vector<std::vector<int>> covers_up;      // F -> codim+1 facets G, F < G
    std::vector<std::vector<int>> covers_down;
    std::vector<int> chambers;

    int dim() const { return arr.dim; }
    bool is_chamber(int f) const { return facets[f].codim == 0; }

    // Strict face order F < G (clos(F) contains G, F != G).
    bool less(int f, int g) const {
        return f != g && sign_face_leq(facets[f].signs, facets[g].signs);
    }
    bool leq(int f, int g) const { return sign_face_leq(facets[f].signs, facets[g].signs); }

    // The unique chamber containing F in its closure on C's side of every
    // hyperplane through F.
    int compose(int chamber, int facet) const;

    // Chamber on the other side of wall w (codim-1 facet) from chamber c.
    int opposite(int chamber, int wall) const;

    // Hyperplanes separating two chambers.
    std::vector<int> separators(int c, int d) const;

    // The two chambers adjacent to a codim-1 facet.
    std::pair<int, int> wall_chambers(int wall) const;

    // All codim-k cells [C < F^k] in the boundary of the Salvetti cell
    // [D < G]: F^k < G and C = compose(D, F^k). Returned as (C, F) pairs.
    std::vector<std::pair<int, int>> salvetti_boundary_cells(int chamber_d, int facet_g,
                                                             int k) const;

    void check_invariants() const; // witness signs + Zaslavsky count
};

// Incremental hyperplane insertion with exact interior witnesses.
// Requires an essential arrangement.
FacePoset enumerate_facets(const Arrangement& arr);

// Assembles a poset from externally enumerated facets (signs + witness);
// used by the braid fast path. Runs the same invariant checks.
FacePoset assemble_face_poset(const Arrangement& arr,
                              std::vector<std::pair<std::vector<int>, Vec>> raw);

} // namespace arrmorse
