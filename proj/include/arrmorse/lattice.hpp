#pragma once

#include "arrmorse/arrangement.hpp"

#include <map>

namespace arrmorse {

struct Flat {
    int id = -1;
    int rank = 0;                 // codimension of the support
    std::vector<int> defining;    // every hyperplane containing the flat, sorted
    AffineSubspace support;
    Integer mu;                   // Moebius value mu(0^, X)
};

struct IntersectionLattice {
    std::vector<Flat> flats;                 // ordered by (rank, defining-set lex)
    std::vector<std::vector<int>> by_rank;
    std::map<std::vector<int>, int> by_defining;

    const Flat& top() const { return flats[0]; } // the ambient space 0^

    // Reverse-inclusion order: a <= b iff support(a) contains support(b).
    bool leq(int a, int b) const;

    // Flat spanned by a set of hyperplanes (closure); -1 when the
    // intersection is empty.
    int flat_of(const std::vector<int>& hyps) const;

    std::vector<Integer> whitney() const;    // b_k = sum of |mu| over rank-k flats
    Integer chamber_count() const;           // Zaslavsky: sum of |mu| over all flats
};

// Incremental rank-by-rank construction. Rejects duplicate hyperplanes.
IntersectionLattice build_lattice(const Arrangement& arr);

// dim(subspace ∩ flat support) == dim(subspace) - rank(flat), with a negative
// expected dimension meaning the affine intersection must be empty.
bool transversal(const Flat& flat, const AffineSubspace& subspace);

} // namespace arrmorse
