#include "arrmorse/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace arrmorse {

void Arrangement::validate() const {
    for (auto& h : hyperplanes) {
        if ((int)h.normal.size() != dim) throw std::invalid_argument("normal length != dim");
        if (is_zero(h.normal)) throw std::invalid_argument("zero normal");
    }
    // Duplicates as point sets: proportional normals with matching offset.
    for (size_t i = 0; i < size(); ++i) {
        for (size_t j = i + 1; j < size(); ++j) {
            const auto& a = hyperplanes[i];
            const auto& b = hyperplanes[j];
            Rational ratio = 0;
            bool proportional = true;
            for (int k = 0; k < dim && proportional; ++k) {
                if (a.normal[k] == 0 && b.normal[k] == 0) continue;
                if (a.normal[k] == 0 || b.normal[k] == 0) {
                    proportional = false;
                    break;
                }
                Rational r = b.normal[k] / a.normal[k];
                if (ratio == 0)
                    ratio = r;
                else if (r != ratio)
                    proportional = false;
            }
            if (proportional && ratio != 0 && b.offset == ratio * a.offset)
                throw std::invalid_argument("duplicate hyperplanes " + std::to_string(i) +
                                            " and " + std::to_string(j));
        }
    }
}

EssentializeResult essentialize(const Arrangement& input) {
    input.validate();
    EssentializeResult res;
    Mat normals;
    for (auto& h : input.hyperplanes) normals.push_back(h.normal);
    Mat reduced = normals;
    rref(reduced);
    Mat basis;
    for (auto& row : reduced)
        if (!is_zero(row)) basis.push_back(row);
    int r = (int)basis.size();
    if (r == input.dim) {
        res.arr = input;
        res.was_essential = true;
        for (int i = 0; i < input.dim; ++i) {
            Vec e(input.dim, 0);
            e[i] = 1;
            res.basis.push_back(e);
        }
        return res;
    }
    res.arr.dim = r;
    for (auto& h : input.hyperplanes) {
        Vec nn(r);
        for (int j = 0; j < r; ++j) nn[j] = dot(h.normal, basis[j]);
        res.arr.hyperplanes.push_back(Hyperplane{std::move(nn), h.offset});
    }
    res.basis = std::move(basis);
    res.was_essential = false;
    return res;
}

IntersectionLattice build_lattice(const Arrangement& arr) {
    arr.validate();
    IntersectionLattice lat;
    size_t n = arr.size();

    std::map<std::vector<int>, Flat> current; // keyed by defining set
    Flat top;
    top.rank = 0;
    top.defining = {};
    top.support = full_space(arr.dim);
    current[{}] = top;

    std::vector<Flat> all;
    all.push_back(top);

    while (!current.empty()) {
        std::map<std::vector<int>, Flat> next;
        for (auto& [key, flat] : current) {
            for (size_t h = 0; h < n; ++h) {
                if (std::binary_search(flat.defining.begin(), flat.defining.end(), (int)h))
                    continue;
                auto cut = intersect_hyperplane(flat.support, arr.hyperplanes[h].normal,
                                                arr.hyperplanes[h].offset);
                if (!cut || cut->dim() != flat.support.dim() - 1) continue;
                // Closure: collect every hyperplane containing the cut.
                std::vector<int> def;
                for (size_t g = 0; g < n; ++g) {
                    const auto& hp = arr.hyperplanes[g];
                    bool inside = dot(hp.normal, cut->point) == hp.offset;
                    for (auto& d : cut->dirs)
                        if (inside && dot(hp.normal, d) != 0) inside = false;
                    if (inside) def.push_back((int)g);
                }
                if (next.count(def)) continue;
                Flat f;
                f.rank = flat.rank + 1;
                f.defining = std::move(def);
                f.support = std::move(*cut);
                next[f.defining] = f;
            }
        }
        for (auto& [key, f] : next) all.push_back(f);
        current = std::move(next);
    }

    std::sort(all.begin(), all.end(), [](const Flat& a, const Flat& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        return a.defining < b.defining;
    });
    int max_rank = 0;
    for (auto& f : all) max_rank = std::max(max_rank, f.rank);
    lat.by_rank.assign(max_rank + 1, {});
    for (size_t i = 0; i < all.size(); ++i) {
        all[i].id = (int)i;
        lat.by_defining[all[i].defining] = (int)i;
        lat.by_rank[all[i].rank].push_back((int)i);
    }
    lat.flats = std::move(all);

    // Moebius recursion over lower intervals, ranks ascending.
    for (auto& f : lat.flats) {
        if (f.rank == 0) {
            f.mu = 1;
            continue;
        }
        Integer acc = 0;
        for (auto& g : lat.flats) {
            if (g.id == f.id || g.rank >= f.rank) continue;
            if (std::includes(f.defining.begin(), f.defining.end(), g.defining.begin(),
                              g.defining.end()))
                acc += g.mu;
        }
        f.mu = -acc;
    }
    return lat;
}

bool IntersectionLattice::leq(int a, int b) const {
    const auto& fa = flats[a].defining;
    const auto& fb = flats[b].defining;
    return std::includes(fb.begin(), fb.end(), fa.begin(), fa.end());
}

int IntersectionLattice::flat_of(const std::vector<int>& hyps) const {
    if (hyps.empty()) return 0;
    // The closure of a nonempty intersection is the smallest defining set
    // containing the generators; if no flat contains them all, the
    // generators have empty common intersection.
    int best = -1;
    for (auto& f : flats) {
        if (!std::includes(f.defining.begin(), f.defining.end(), hyps.begin(), hyps.end()))
            continue;
        if (best == -1 || f.rank < flats[best].rank) best = f.id;
    }
    return best;
}

std::vector<Integer> IntersectionLattice::whitney() const {
    std::vector<Integer> b(by_rank.size(), 0);
    for (auto& f : flats) b[f.rank] += abs(f.mu);
    return b;
}

Integer IntersectionLattice::chamber_count() const {
    Integer c = 0;
    for (auto& f : flats) c += abs(f.mu);
    return c;
}

bool transversal(const Flat& flat, const AffineSubspace& subspace) {
    int expected = subspace.dim() - flat.rank;
    auto inter = intersect(subspace, flat.support);
    if (expected < 0) return !inter.has_value();
    return inter.has_value() && inter->dim() == expected;
}

} // namespace arrmorse
