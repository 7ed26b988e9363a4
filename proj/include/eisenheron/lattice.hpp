#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "triangle.hpp"

namespace eisenheron {

/// The Eisenstein integer m + n*omega, omega = -1/2 + i*sqrt(3)/2.
struct EisensteinPoint {
    std::int64_t m = 0;
    std::int64_t n = 0;

    friend EisensteinPoint operator+(EisensteinPoint p, EisensteinPoint q) { return {p.m + q.m, p.n + q.n}; }
    friend EisensteinPoint operator-(EisensteinPoint p, EisensteinPoint q) { return {p.m - q.m, p.n - q.n}; }
    friend auto operator<=>(const EisensteinPoint&, const EisensteinPoint&) = default;

    std::string str() const { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }
};

/// Squared length m^2 - mn + n^2 (a Loeschian number).
inline std::int64_t norm(EisensteinPoint p) { return p.m * p.m - p.m * p.n + p.n * p.n; }

inline std::int64_t squared_distance(EisensteinPoint p, EisensteinPoint q) { return norm(p - q); }

/// Multiplication by 1 + omega, a rotation by 60 degrees.
inline EisensteinPoint rotate60(EisensteinPoint p) { return {p.m - p.n, p.m}; }

/// Swapping coordinates is the reflection taking omega to 1 and 1 to omega.
inline EisensteinPoint reflect(EisensteinPoint p) { return {p.n, p.m}; }

/// Applies element `g` (0..11) of the point group: rotation by 60*(g % 6)
/// degrees, preceded by the reflection when g >= 6.
inline EisensteinPoint apply_symmetry(int g, EisensteinPoint p)
{
    if (g >= 6) {
        p = reflect(p);
    }
    for (int k = 0; k < g % 6; ++k) {
        p = rotate60(p);
    }
    return p;
}

struct LatticeTriangle {
    std::array<EisensteinPoint, 3> vertices;

    friend bool operator==(const LatticeTriangle&, const LatticeTriangle&) = default;
    friend auto operator<=>(const LatticeTriangle&, const LatticeTriangle&) = default;

    std::array<std::int64_t, 3> squared_sides() const
    {
        return {squared_distance(vertices[1], vertices[2]), squared_distance(vertices[0], vertices[2]),
                squared_distance(vertices[0], vertices[1])};
    }

    std::string str() const { return vertices[0].str() + " " + vertices[1].str() + " " + vertices[2].str(); }
};

/// k with area = k*sqrt3/4: the absolute determinant of the edge vectors in the
/// {1, omega} basis. Zero exactly for degenerate triangles.
inline std::int64_t area_quantum_of(const LatticeTriangle& tri)
{
    const EisensteinPoint e1 = tri.vertices[1] - tri.vertices[0];
    const EisensteinPoint e2 = tri.vertices[2] - tri.vertices[0];
    const std::int64_t det = e1.m * e2.n - e2.m * e1.n;
    return det < 0 ? -det : det;
}

/// All (m, n) with m^2 - mn + n^2 = N, ascending.
inline std::vector<EisensteinPoint> represent_loeschian(std::int64_t big_n)
{
    if (big_n < 0) {
        throw DomainError("represent_loeschian requires N >= 0");
    }
    if (big_n > (std::int64_t{1} << 60)) {
        throw UnsupportedInput("Loeschian target " + std::to_string(big_n) + " exceeds the 64-bit search range");
    }
    std::vector<EisensteinPoint> points;
    // 4N - 3n^2 >= 0 bounds |n| by sqrt(4N/3).
    const auto bound = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(4 * big_n / 3))) + 1;
    for (std::int64_t n = -bound; n <= bound; ++n) {
        const std::int64_t disc = 4 * big_n - 3 * n * n;
        if (disc < 0) {
            continue;
        }
        auto root = perfect_square_root(static_cast<std::uint64_t>(disc));
        if (!root) {
            continue;
        }
        const auto r = static_cast<std::int64_t>(*root);
        if ((n - r) % 2 != 0) {
            continue;
        }
        points.push_back({(n - r) / 2, n});
        if (r != 0) {
            points.push_back({(n + r) / 2, n});
        }
    }
    std::sort(points.begin(), points.end());
    return points;
}

/// Representative of a triangle's class under translation and the 12-element
/// point group: least vertex at the origin, vertex list lexicographically minimal.
inline LatticeTriangle canonicalize(const LatticeTriangle& tri)
{
    std::optional<LatticeTriangle> best;
    for (int g = 0; g < 12; ++g) {
        LatticeTriangle img;
        for (int i = 0; i < 3; ++i) {
            img.vertices[i] = apply_symmetry(g, tri.vertices[i]);
        }
        std::sort(img.vertices.begin(), img.vertices.end());
        const EisensteinPoint origin = img.vertices[0];
        for (auto& v : img.vertices) {
            v = v - origin;
        }
        if (!best || img < *best) {
            best = img;
        }
    }
    return *best;
}

namespace detail {

inline bool is_orbit_representative(EisensteinPoint p)
{
    for (int g = 1; g < 12; ++g) {
        if (apply_symmetry(g, p) < p) {
            return false;
        }
    }
    return true;
}

inline std::int64_t checked_side_square(const ExactInt& side)
{
    // 3 s^2 must stay within represent_loeschian's range.
    if (side > 600'000'000) {
        throw UnsupportedInput("side " + side.str() + " is too large for the lattice embedding search");
    }
    const auto s = static_cast<std::int64_t>(side);
    return 3 * s * s;
}

inline std::vector<LatticeTriangle> embedding_search(const TriangleSides& t, bool stop_at_first)
{
    auto n = area_quantum(t);
    if (!n) {
        throw UnsupportedInput("triangle " + t.describe() + " is not lattice-Heron; nothing to embed");
    }
    const std::int64_t sa = checked_side_square(t.a());
    const std::int64_t sb = checked_side_square(t.b());
    const std::int64_t sc = checked_side_square(t.c());
    const auto expected_area = static_cast<std::int64_t>(n->value());

    const auto p_candidates = represent_loeschian(sa);
    const auto q_candidates = represent_loeschian(sb);
    std::vector<LatticeTriangle> found;
    for (const EisensteinPoint& p : p_candidates) {
        if (!is_orbit_representative(p)) {
            continue;
        }
        for (const EisensteinPoint& q : q_candidates) {
            if (squared_distance(p, q) != sc) {
                continue;
            }
            const LatticeTriangle tri{{EisensteinPoint{0, 0}, p, q}};
            if (area_quantum_of(tri) != expected_area) {
                throw EmbeddabilityViolation("embedding " + tri.str() + " of " + t.describe() +
                                             " has the right sides but area quantum " +
                                             std::to_string(area_quantum_of(tri)) + " instead of " +
                                             std::to_string(expected_area));
            }
            found.push_back(canonicalize(tri));
            if (stop_at_first) {
                return found;
            }
        }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

} // namespace detail

/// First lattice realization in scan order, canonicalized. Throws
/// EmbeddabilityViolation if an admissible triangle has no realization.
inline LatticeTriangle embed(const TriangleSides& t)
{
    auto found = detail::embedding_search(t, true);
    if (found.empty()) {
        throw EmbeddabilityViolation("no Eisenstein-lattice embedding found for " + t.describe());
    }
    return found.front();
}

/// Every realization up to translation and lattice symmetry, in canonical form.
inline std::vector<LatticeTriangle> embed_all(const TriangleSides& t)
{
    auto found = detail::embedding_search(t, false);
    if (found.empty()) {
        throw EmbeddabilityViolation("no Eisenstein-lattice embedding found for " + t.describe());
    }
    return found;
}

/// Checks that tri realizes t: squared sides {3a^2, 3b^2, 3c^2} and the matching area quantum.
inline bool realizes(const LatticeTriangle& tri, const TriangleSides& t)
{
    auto n = area_quantum(t);
    if (!n) {
        return false;
    }
    auto got = tri.squared_sides();
    std::array<ExactInt, 3> have{got[0], got[1], got[2]};
    std::array<ExactInt, 3> want{3 * t.a() * t.a(), 3 * t.b() * t.b(), 3 * t.c() * t.c()};
    std::sort(have.begin(), have.end());
    std::sort(want.begin(), want.end());
    return have == want && ExactInt(area_quantum_of(tri)) == n->value();
}

} // namespace eisenheron
