#include "arrmorse/faces.hpp"

#include <algorithm>
#include <stdexcept>

namespace arrmorse {

namespace {

struct Partial {
    std::vector<int> signs;
    Vec witness;
    AffineSubspace support;
};

// Relative-interior point of {t : value_i + coeff_i . t > 0} in the cut's
// parameter space, or nullopt when the open region is empty.
std::optional<Vec> open_region_point(const Mat& coeffs, const Vec& consts, size_t dim) {
    Mat strict;
    Vec rhs;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (is_zero(coeffs[i])) {
            if (consts[i] <= 0) return std::nullopt;
            continue;
        }
        strict.push_back(coeffs[i]);
        rhs.push_back(-consts[i]);
    }
    if (dim == 0) return Vec{};
    if (strict.empty()) return Vec(dim, 0);
    return strict_feasible_point({}, {}, strict, rhs, dim);
}

} // namespace

FacePoset enumerate_facets(const Arrangement& arr) {
    arr.validate();
    if (!arr.essential())
        throw std::invalid_argument(
            "arrangement is not essential; essentialize it first (CLI: --essentialize)");

    std::vector<Partial> current;
    current.push_back({{}, Vec(arr.dim, 0), full_space(arr.dim)});

    for (size_t h = 0; h < arr.size(); ++h) {
        const Vec& normal = arr.hyperplanes[h].normal;
        const Rational& offset = arr.hyperplanes[h].offset;
        std::vector<Partial> next;
        next.reserve(current.size() * 2);
        for (auto& p : current) {
            bool contained = dot(normal, p.support.point) == offset;
            for (auto& d : p.support.dirs)
                if (contained && dot(normal, d) != 0) contained = false;
            if (contained) {
                p.signs.push_back(0);
                next.push_back(std::move(p));
                continue;
            }
            auto cut = intersect_hyperplane(p.support, normal, offset);
            std::optional<Vec> w0;
            if (cut) {
                Mat coeffs;
                Vec consts;
                for (size_t g = 0; g < h; ++g) {
                    if (p.signs[g] == 0) continue;
                    const auto& hg = arr.hyperplanes[g];
                    Vec row(cut->dirs.size());
                    for (size_t i = 0; i < cut->dirs.size(); ++i)
                        row[i] = p.signs[g] * dot(hg.normal, cut->dirs[i]);
                    coeffs.push_back(std::move(row));
                    consts.push_back(p.signs[g] * (dot(hg.normal, cut->point) - hg.offset));
                }
                auto t0 = open_region_point(coeffs, consts, cut->dirs.size());
                if (t0) {
                    Vec w = cut->point;
                    for (size_t i = 0; i < cut->dirs.size(); ++i)
                        w = vadd(w, vscale((*t0)[i], cut->dirs[i]));
                    w0 = std::move(w);
                }
            }
            if (!w0) {
                int s = sgn(dot(normal, p.witness) - offset);
                if (s == 0) throw std::logic_error("witness landed on a non-splitting hyperplane");
                p.signs.push_back(s);
                next.push_back(std::move(p));
                continue;
            }
            // Split into the zero part and the two open sides.
            Vec delta(arr.dim, 0);
            for (auto& d : p.support.dirs) delta = vadd(delta, vscale(dot(normal, d), d));
            auto side_witness = [&](int side) {
                Vec dir = (side > 0) ? delta : vscale(rat(-1), delta);
                Rational t = 1;
                for (size_t g = 0; g < h; ++g) {
                    if (p.signs[g] == 0) continue;
                    const auto& hg = arr.hyperplanes[g];
                    Rational slope = p.signs[g] * dot(hg.normal, dir);
                    if (slope >= 0) continue;
                    Rational v = p.signs[g] * (dot(hg.normal, *w0) - hg.offset);
                    Rational bound = v / -slope;
                    if (bound < t) t = bound;
                }
                return vadd(*w0, vscale(t / 2, dir));
            };
            Partial plus{p.signs, side_witness(+1), p.support};
            plus.signs.push_back(+1);
            Partial minus{p.signs, side_witness(-1), p.support};
            minus.signs.push_back(-1);
            Partial zero{std::move(p.signs), *w0, std::move(*cut)};
            zero.signs.push_back(0);
            next.push_back(std::move(plus));
            next.push_back(std::move(minus));
            next.push_back(std::move(zero));
        }
        current = std::move(next);
    }

    std::vector<std::pair<std::vector<int>, Vec>> raw;
    raw.reserve(current.size());
    for (auto& p : current) raw.emplace_back(std::move(p.signs), std::move(p.witness));
    return assemble_face_poset(arr, std::move(raw));
}

FacePoset assemble_face_poset(const Arrangement& arr,
                              std::vector<std::pair<std::vector<int>, Vec>> raw) {
    FacePoset poset;
    poset.arr = arr;
    poset.lattice = build_lattice(arr);

    std::vector<Facet> facets;
    facets.reserve(raw.size());
    for (auto& [signs, witness] : raw) {
        Facet f;
        std::vector<int> zeros;
        for (size_t h = 0; h < signs.size(); ++h)
            if (signs[h] == 0) zeros.push_back((int)h);
        f.flat = poset.lattice.flat_of(zeros);
        if (f.flat < 0) throw std::logic_error("facet zero set has empty intersection");
        f.codim = poset.lattice.flats[f.flat].rank;
        f.signs = std::move(signs);
        f.witness = std::move(witness);
        facets.push_back(std::move(f));
    }
    std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) {
        if (a.codim != b.codim) return a.codim < b.codim;
        return a.signs < b.signs;
    });
    poset.by_codim.assign(arr.dim + 1, {});
    for (size_t i = 0; i < facets.size(); ++i) {
        facets[i].id = (int)i;
        poset.index[facets[i].signs] = (int)i;
        poset.by_codim[facets[i].codim].push_back((int)i);
        if (facets[i].codim == 0) poset.chambers.push_back((int)i);
    }
    if (poset.index.size() != facets.size())
        throw std::logic_error("duplicate sign vectors in facet enumeration");
    poset.facets = std::move(facets);

    poset.covers_up.assign(poset.facets.size(), {});
    poset.covers_down.assign(poset.facets.size(), {});
    for (int c = 0; c + 1 <= arr.dim; ++c) {
        for (int f : poset.by_codim[c]) {
            for (int g : poset.by_codim[c + 1]) {
                if (sign_face_leq(poset.facets[f].signs, poset.facets[g].signs)) {
                    poset.covers_up[f].push_back(g);
                    poset.covers_down[g].push_back(f);
                }
            }
        }
    }
    poset.check_invariants();
    return poset;
}

void FacePoset::check_invariants() const {
    for (auto& f : facets) {
        if (arr.sign_vector(f.witness) != f.signs)
            throw std::logic_error("witness does not realize its sign vector");
        if (lattice.flats[f.flat].rank != f.codim)
            throw std::logic_error("codim disagrees with zero-set flat rank");
    }
    Integer expected = lattice.chamber_count();
    if (Integer((long)chambers.size()) != expected)
        throw std::logic_error("chamber count fails the Zaslavsky cross-check: got " +
                               std::to_string(chambers.size()) + ", lattice says " +
                               expected.get_str());
    for (int k = 1; k <= arr.dim; ++k) {
        for (int f : by_codim[k]) {
            if (covers_down[f].empty())
                throw std::logic_error("codim-" + std::to_string(k) +
                                       " facet with no codim-(k-1) face below");
        }
    }
}

int FacePoset::compose(int chamber, int facet) const {
    const auto& c = facets[chamber].signs;
    const auto& f = facets[facet].signs;
    std::vector<int> composed(c.size());
    for (size_t h = 0; h < c.size(); ++h) composed[h] = f[h] != 0 ? f[h] : c[h];
    auto it = index.find(composed);
    if (it == index.end()) throw std::logic_error("composed sign vector is not a facet");
    return it->second;
}

int FacePoset::opposite(int chamber, int wall) const {
    auto [a, b] = wall_chambers(wall);
    if (a == chamber) return b;
    if (b == chamber) return a;
    throw std::logic_error("chamber is not adjacent to the wall");
}

std::pair<int, int> FacePoset::wall_chambers(int wall) const {
    std::pair<int, int> out{-1, -1};
    for (int c : covers_down[wall]) {
        if (facets[c].codim != 0) continue;
        if (out.first < 0)
            out.first = c;
        else
            out.second = c;
    }
    if (out.first < 0 || out.second < 0)
        throw std::logic_error("wall facet without exactly two adjacent chambers");
    return out;
}

std::vector<int> FacePoset::separators(int c, int d) const {
    std::vector<int> out;
    const auto& sc = facets[c].signs;
    const auto& sd = facets[d].signs;
    for (size_t h = 0; h < sc.size(); ++h)
        if (sc[h] != sd[h]) out.push_back((int)h);
    return out;
}

std::vector<std::pair<int, int>> FacePoset::salvetti_boundary_cells(int chamber_d, int facet_g,
                                                                    int k) const {
    std::vector<std::pair<int, int>> out;
    if (k < 0 || k >= facets[facet_g].codim) return out;
    for (int f : by_codim[k]) {
        if (!less(f, facet_g)) continue;
        out.emplace_back(compose(chamber_d, f), f);
    }
    return out;
}

} // namespace arrmorse
