#pragma once

#include "arrmorse/linalg.hpp"

#include <string>

namespace arrmorse {

// H = { x : normal.x = offset }
struct Hyperplane {
    Vec normal;
    Rational offset;
};

struct Arrangement {
    int dim = 0;
    std::vector<Hyperplane> hyperplanes;

    size_t size() const { return hyperplanes.size(); }

    int normal_rank() const {
        Mat m;
        for (auto& h : hyperplanes) m.push_back(h.normal);
        return rank_of(std::move(m));
    }

    bool essential() const { return normal_rank() == dim; }

    Rational eval(int h, const Vec& p) const {
        return dot(hyperplanes[h].normal, p) - hyperplanes[h].offset;
    }

    int sign_at(int h, const Vec& p) const { return sgn(eval(h, p)); }

    std::vector<int> sign_vector(const Vec& p) const {
        std::vector<int> s(size());
        for (size_t h = 0; h < size(); ++h) s[h] = sign_at((int)h, p);
        return s;
    }

    // Throws on malformed input (zero normals, duplicate hyperplanes as sets).
    void validate() const;
};

struct EssentializeResult {
    Arrangement arr;      // quotient arrangement in R^r
    Mat basis;            // rows u_1..u_r of the normal span; z-coords map x -> Sum z_j u_j
    bool was_essential = false;
};

// Quotients along the common lineality space (the orthogonal complement of
// the span of the normals). Hyperplane order and offsets are preserved, so
// sign vectors are unchanged facet by facet.
EssentializeResult essentialize(const Arrangement& input);

// Fixed arrangements used across tests and docs.
Arrangement make_two_points_line();                      // {x=1, x=2} in R^1
Arrangement make_boolean(int n);                         // {x_i = 0}
Arrangement make_braid(int n);                           // A_n in R^{n+1}, pairs (i<j), normal e_i - e_j
Arrangement make_generic_lines(int count);               // generic lines in R^2
Arrangement make_generic_planes_r3();                    // 4 generic planes in R^3

} // namespace arrmorse
