#include "arrmorse/arrangement.hpp"

namespace arrmorse {

Arrangement make_two_points_line() {
    Arrangement a;
    a.dim = 1;
    a.hyperplanes.push_back({{rat(1)}, rat(1)});
    a.hyperplanes.push_back({{rat(1)}, rat(2)});
    return a;
}

Arrangement make_boolean(int n) {
    Arrangement a;
    a.dim = n;
    for (int i = 0; i < n; ++i) {
        Vec normal(n, 0);
        normal[i] = 1;
        a.hyperplanes.push_back({std::move(normal), rat(0)});
    }
    return a;
}

Arrangement make_braid(int n) {
    Arrangement a;
    a.dim = n + 1;
    for (int i = 0; i < n + 1; ++i) {
        for (int j = i + 1; j < n + 1; ++j) {
            Vec normal(n + 1, 0);
            normal[i] = 1;
            normal[j] = -1;
            a.hyperplanes.push_back({std::move(normal), rat(0)});
        }
    }
    return a;
}

Arrangement make_generic_lines(int count) {
    // Lines y = k*x - k^2 are pairwise non-parallel and meet pairwise in the
    // distinct points (k1+k2, k1*k2); no three share a point.
    Arrangement a;
    a.dim = 2;
    for (int k = 1; k <= count; ++k)
        a.hyperplanes.push_back({{rat(-k), rat(1)}, rat(-k * k)});
    return a;
}

Arrangement make_generic_planes_r3() {
    // Tetrahedron-like configuration: coordinate planes plus x+y+z = 1.
    Arrangement a;
    a.dim = 3;
    a.hyperplanes.push_back({{rat(1), rat(0), rat(0)}, rat(0)});
    a.hyperplanes.push_back({{rat(0), rat(1), rat(0)}, rat(0)});
    a.hyperplanes.push_back({{rat(0), rat(0), rat(1)}, rat(0)});
    a.hyperplanes.push_back({{rat(1), rat(1), rat(1)}, rat(1)});
    return a;
}

} // namespace arrmorse
