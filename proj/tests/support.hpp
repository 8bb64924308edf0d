#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "systolic/actions.hpp"
#include "systolic/complex.hpp"
#include "systolic/disc.hpp"

namespace support {

using namespace systolic;

inline FlagComplex complex_of(std::vector<std::string> vertices,
                              const std::vector<std::pair<std::string, std::string>>& edges)
{
    return FlagComplex::from_edge_list(std::move(vertices), edges);
}

/// Cycle graph on v0..v{n-1}.
inline FlagComplex cycle_graph(int n)
{
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) {
        names.push_back("v" + std::to_string(i));
        edges.emplace_back("v" + std::to_string(i), "v" + std::to_string((i + 1) % n));
    }
    return complex_of(names, edges);
}

/// Path graph on v0..v{n-1}.
inline FlagComplex path_graph(int n)
{
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) {
        names.push_back("v" + std::to_string(i));
        if (i + 1 < n)
            edges.emplace_back("v" + std::to_string(i), "v" + std::to_string(i + 1));
    }
    return complex_of(names, edges);
}

/// Octahedron: three antipodal pairs a/A, b/B, c/C.
inline FlagComplex octahedron()
{
    std::vector<std::string> names{"a", "A", "b", "B", "c", "C"};
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& x : names)
        for (const auto& y : names)
            if (x < y && std::tolower(x[0]) != std::tolower(y[0]))
                edges.emplace_back(x, y);
    return complex_of(names, edges);
}

inline std::vector<Vertex> vs(const FlagComplex& c, const std::vector<std::string>& names)
{
    std::vector<Vertex> out;
    for (const auto& n : names)
        out.push_back(c.at(n));
    return out;
}

inline std::vector<std::string> ns(const FlagComplex& c, const std::vector<Vertex>& vertices)
{
    std::vector<std::string> out;
    for (Vertex v : vertices)
        out.push_back(c.name(v));
    return out;
}

inline std::vector<Vertex> sorted(std::vector<Vertex> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

/// Permutation given by name pairs; omitted vertices fixed.
inline Permutation perm(const FlagComplex& c, const std::vector<std::pair<std::string, std::string>>& map)
{
    Permutation p = identity_permutation(c.size());
    for (const auto& [a, b] : map)
        p[c.at(a)] = c.at(b);
    return p;
}

/// The 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
inline std::vector<Triangle> torus7()
{
    std::vector<Triangle> out;
    for (Vertex i = 0; i < 7; ++i) {
        out.push_back({i, (i + 1) % 7, (i + 3) % 7});
        out.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    for (auto& t : out)
        std::sort(t.begin(), t.end());
    std::sort(out.begin(), out.end());
    return out;
}

/// 6-vertex real projective plane.
inline std::vector<Triangle> rp2_6()
{
    std::vector<Triangle> out{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                              {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
    for (auto& t : out)
        std::sort(t.begin(), t.end());
    std::sort(out.begin(), out.end());
    return out;
}

/// Square grid torus m x m with one diagonal per square; flag and 6-regular for m >= 4.
inline FlagComplex grid_torus(int m)
{
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> edges;
    auto nm = [&](int i, int j) { return "t" + std::to_string(((i % m) + m) % m) + "_" + std::to_string(((j % m) + m) % m); };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            names.push_back(nm(i, j));
            edges.emplace_back(nm(i, j), nm(i + 1, j));
            edges.emplace_back(nm(i, j), nm(i, j + 1));
            edges.emplace_back(nm(i, j), nm(i + 1, j + 1));
        }
    return complex_of(names, edges);
}

}  // namespace support
