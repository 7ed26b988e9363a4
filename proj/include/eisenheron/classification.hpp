#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "pell.hpp"
#include "triangle.hpp"

namespace eisenheron {

// ---------------------------------------------------------------------------
// Family identification
// ---------------------------------------------------------------------------

enum class FamilyTag { equilateral3, family_a, family_b, family_c };

inline const char* to_string(FamilyTag tag)
{
    switch (tag) {
    case FamilyTag::equilateral3: return "equilateral3";
    case FamilyTag::family_a: return "family_a";
    case FamilyTag::family_b: return "family_b";
    case FamilyTag::family_c: return "family_c";
    }
    return "unknown";
}

inline FamilyTag tag_of(Family f)
{
    switch (f) {
    case Family::a: return FamilyTag::family_a;
    case Family::b: return FamilyTag::family_b;
    case Family::c: return FamilyTag::family_c;
    }
    throw DomainError("unknown family");
}

struct FamilyId {
    FamilyTag tag = FamilyTag::equilateral3;
    /// Pell pair and its 1-based index; empty for the equilateral exception.
    std::optional<PellSolution> witness;

    friend bool operator==(const FamilyId& l, const FamilyId& r) { return l.tag == r.tag && l.witness == r.witness; }
};

struct ClassifiedTriangle {
    TriangleSides sides; // descending
    AreaQuantum n;
    FamilyId family;
};

// ---------------------------------------------------------------------------
// Candidate (u, v) cases
// ---------------------------------------------------------------------------

enum class WConstraint { unbounded, bounded_range, single_value };

enum class Disposition { family, eliminated_mod8, eliminated_finite_check, eliminated_not_square, equilateral };

inline const char* to_string(WConstraint c)
{
    switch (c) {
    case WConstraint::unbounded: return "unbounded";
    case WConstraint::bounded_range: return "bounded-range";
    case WConstraint::single_value: return "single-value";
    }
    return "?";
}

inline const char* to_string(Disposition d)
{
    switch (d) {
    case Disposition::family: return "family";
    case Disposition::eliminated_mod8: return "eliminated-mod-8";
    case Disposition::eliminated_finite_check: return "eliminated-finite-check";
    case Disposition::eliminated_not_square: return "eliminated-not-square";
    case Disposition::equilateral: return "equilateral";
    }
    return "?";
}

/// One admissible (u, v) pair with u <= v <= w. For every row
/// n^2 = 3(u+v+w)uvw = coefficient * w * (w + shift) with coefficient = 3uv and
/// shift = u + v; w runs over integers of u's parity from w_min = v.
struct CandidateCase {
    int u = 0;
    int v = 0;
    WConstraint constraint = WConstraint::unbounded;
    int w_min = 0;
    std::optional<int> w_max;
    int n2_coefficient = 0;
    int n2_shift = 0;
    Disposition disposition = Disposition::family;

    bool w_odd() const { return u % 2 != 0; }

    ExactInt n_squared(const ExactInt& w) const { return n2_coefficient * w * (w + n2_shift); }

    std::string n_squared_formula() const
    {
        return std::to_string(n2_coefficient) + "w(w+" + std::to_string(n2_shift) + ")";
    }

    std::vector<int> admissible_w() const
    {
        if (!w_max) {
            throw DomainError("row (" + std::to_string(u) + "," + std::to_string(v) + ") has no upper bound on w");
        }
        std::vector<int> ws;
        for (int w = w_min; w <= *w_max; w += 2) {
            ws.push_back(w);
        }
        return ws;
    }

    friend bool operator==(const CandidateCase&, const CandidateCase&) = default;
};

namespace detail {

inline CandidateCase make_case(int u, int v, WConstraint constraint, std::optional<int> w_max, Disposition d)
{
    return CandidateCase{u, v, constraint, v, w_max, 3 * u * v, u + v, d};
}

} // namespace detail

/// The ten admissible rows, as tabulated for the classification proof.
inline std::vector<CandidateCase> candidate_cases()
{
    using detail::make_case;
    using W = WConstraint;
    using D = Disposition;
    return {
        make_case(1, 1, W::unbounded, std::nullopt, D::family),
        make_case(1, 3, W::unbounded, std::nullopt, D::eliminated_mod8),
        make_case(1, 5, W::unbounded, std::nullopt, D::family),
        make_case(1, 7, W::bounded_range, 25, D::eliminated_mod8),
        make_case(1, 9, W::bounded_range, 13, D::eliminated_finite_check),
        make_case(1, 11, W::single_value, 11, D::eliminated_not_square),
        make_case(2, 2, W::unbounded, std::nullopt, D::family),
        make_case(2, 4, W::bounded_range, 10, D::eliminated_finite_check),
        make_case(2, 6, W::single_value, 6, D::eliminated_not_square),
        make_case(3, 3, W::bounded_range, 7, D::equilateral),
    };
}

struct Mod8Residue {
    int w_residue;
    int n2_residue;
    bool is_square_residue;
};

struct Mod8Report {
    CandidateCase row;
    std::vector<Mod8Residue> residues;
    /// True when no admissible w residue gives a quadratic residue mod 8.
    bool obstructed = false;
};

namespace detail {

inline Mod8Report mod8_residues(const CandidateCase& row)
{
    const auto squares = squares_mod(8);
    Mod8Report report{row, {}, true};
    for (int w = row.w_odd() ? 1 : 0; w < 8; w += 2) {
        const int r = static_cast<int>(residue_mod(row.n_squared(w), 8));
        const bool sq = std::find(squares.begin(), squares.end(), static_cast<std::uint32_t>(r)) != squares.end();
        report.residues.push_back({w, r, sq});
        report.obstructed = report.obstructed && !sq;
    }
    return report;
}

} // namespace detail

/// Exhaustive residue check that n^2 mod 8 is never a square for admissible w.
inline Mod8Report obstruction_mod8(const CandidateCase& row)
{
    if (row.disposition != Disposition::eliminated_mod8) {
        throw DomainError("row (" + std::to_string(row.u) + "," + std::to_string(row.v) +
                          ") is not eliminated mod 8");
    }
    return detail::mod8_residues(row);
}

struct FiniteCheckEntry {
    int w;
    ExactInt n_squared;
    std::optional<ExactInt> root;
};

struct FiniteCheckReport {
    CandidateCase row;
    std::vector<FiniteCheckEntry> entries;

    std::vector<int> square_ws() const
    {
        std::vector<int> ws;
        for (const auto& e : entries) {
            if (e.root) ws.push_back(e.w);
        }
        return ws;
    }
};

inline FiniteCheckReport finite_case_check(const CandidateCase& row)
{
    if (row.constraint == WConstraint::unbounded) {
        throw DomainError("row (" + std::to_string(row.u) + "," + std::to_string(row.v) + ") is unbounded in w");
    }
    FiniteCheckReport report{row, {}};
    for (int w : row.admissible_w()) {
        ExactInt n2 = row.n_squared(w);
        auto root = perfect_square_root(n2);
        report.entries.push_back({w, std::move(n2), std::move(root)});
    }
    return report;
}

/// Rebuilds the candidate rows from 3uvw < 16(u+v+w) alone: the u-bound, the
/// v-bound per u (taking w = v), and the w-bound per (u, v). Dispositions come
/// from the mod 8 residue check and direct square testing.
inline std::vector<CandidateCase> rederive_case_bounds()
{
    auto dominant = [](long u, long v, long w) { return 3 * u * v * w < 16 * (u + v + w); };

    std::vector<CandidateCase> rows;
    // Each loop stops at the first failure; the failing side grows monotonically
    // past that point, so no later value can satisfy the inequality.
    for (int u = 1; dominant(u, u, u); ++u) {
        for (int v = u; dominant(u, v, v); v += 2) {
            CandidateCase row{u, v, WConstraint::unbounded, v, std::nullopt, 3 * u * v, u + v, Disposition::family};
            const int slope = 3 * u * v - 16;
            if (slope > 0) {
                // w * slope < 16(u+v)
                int w_max = (16 * (u + v) - 1) / slope;
                if ((w_max - u) % 2 != 0) {
                    --w_max;
                }
                row.w_max = w_max;
                row.constraint = (w_max == v) ? WConstraint::single_value : WConstraint::bounded_range;
            }

            if (row.constraint == WConstraint::single_value) {
                const bool square = is_perfect_square(row.n_squared(v));
                row.disposition = square ? (u == v ? Disposition::equilateral : Disposition::family)
                                         : Disposition::eliminated_not_square;
            } else if (detail::mod8_residues(row).obstructed) {
                row.disposition = Disposition::eliminated_mod8;
            } else if (row.constraint == WConstraint::bounded_range) {
                const auto squares = finite_case_check(row).square_ws();
                if (squares.empty()) {
                    row.disposition = Disposition::eliminated_finite_check;
                } else if (squares.size() == 1 && squares.front() == u && u == v) {
                    row.disposition = Disposition::equilateral;
                } else {
                    row.disposition = Disposition::family;
                }
            }
            rows.push_back(row);
        }
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Family generators and the classifier
// ---------------------------------------------------------------------------

/// The family triangle built from one Pell solution:
/// (a) (x,x,1), n = 3y; (b) (x,x,2), n = 12y; (c) (3x+1,3x-1,3), n = 45y.
inline ClassifiedTriangle family_triangle(Family f, const PellSolution& s)
{
    const ExactInt& x = s.x;
    const ExactInt& y = s.y;
    switch (f) {
    case Family::a:
        return {TriangleSides(x, x, 1), AreaQuantum(3 * y), FamilyId{FamilyTag::family_a, s}};
    case Family::b:
        return {TriangleSides(x, x, 2), AreaQuantum(12 * y), FamilyId{FamilyTag::family_b, s}};
    case Family::c:
        return {TriangleSides(3 * x + 1, 3 * x - 1, 3), AreaQuantum(45 * y), FamilyId{FamilyTag::family_c, s}};
    }
    throw DomainError("unknown family");
}

inline ClassifiedTriangle family_member(Family f, std::size_t k)
{
    if (k == 0) {
        throw DomainError("family index is 1-based");
    }
    return family_triangle(f, solutions(pell_form_for(f), k).back());
}

inline ClassifiedTriangle equilateral_exception()
{
    return {TriangleSides(3, 3, 3), AreaQuantum(27), FamilyId{FamilyTag::equilateral3, std::nullopt}};
}

/// The equilateral exception plus every family member whose largest (u,v,w)
/// coordinate is at most max_w, in no particular order.
inline std::vector<ClassifiedTriangle> family_members_within(const ExactInt& max_w)
{
    std::vector<ClassifiedTriangle> out;
    if (uvw_from_sides(equilateral_exception().sides).w() <= max_w) {
        out.push_back(equilateral_exception());
    }
    for (Family f : {Family::a, Family::b, Family::c}) {
        PellStream stream(pell_form_for(f));
        for (;;) {
            ClassifiedTriangle t = family_triangle(f, stream.next());
            if (uvw_from_sides(t.sides).w() > max_w) {
                break;
            }
            out.push_back(std::move(t));
        }
    }
    return out;
}

namespace detail {

inline PellSolution locate_solution(Family f, const ExactInt& x, const ExactInt& y, const TriangleSides& t)
{
    const PellForm form = pell_form_for(f);
    if (!form.satisfied_by(x, y)) {
        throw TheoremViolation(t.describe() + " has the shape of family " + family_letter(f) + " but (x,y)=(" +
                               x.str() + "," + y.str() + ") does not satisfy " + form.describe());
    }
    PellStream stream(form);
    for (;;) {
        PellSolution s = stream.next();
        if (s.x == x) {
            return s;
        }
        if (s.x > x) {
            throw TheoremViolation("Pell solution (" + x.str() + "," + y.str() + ") missing from the stream of " +
                                   form.describe());
        }
    }
}

} // namespace detail

/// Identifies a perimeter-dominant lattice-Heron triangle. Returns empty for
/// triangles that are not lattice-Heron or not perimeter-dominant; throws
/// TheoremViolation for an admissible triangle outside every family.
inline std::optional<ClassifiedTriangle> classify(const TriangleSides& t)
{
    auto n = area_quantum(t);
    if (!n || !is_perimeter_dominant(t)) {
        return std::nullopt;
    }
    const auto s = t.descending();
    const TriangleSides sides(s[0], s[1], s[2]);
    const ExactInt& nv = n->value();

    if (s[0] == 3 && s[1] == 3 && s[2] == 3) {
        return ClassifiedTriangle{sides, *n, FamilyId{FamilyTag::equilateral3, std::nullopt}};
    }
    if (s[0] == s[1] && s[2] == 1 && nv % 3 == 0) {
        auto w = detail::locate_solution(Family::a, s[0], ExactInt(nv / 3), sides);
        return ClassifiedTriangle{sides, *n, FamilyId{FamilyTag::family_a, w}};
    }
    if (s[0] == s[1] && s[2] == 2 && nv % 12 == 0) {
        auto w = detail::locate_solution(Family::b, s[0], ExactInt(nv / 12), sides);
        return ClassifiedTriangle{sides, *n, FamilyId{FamilyTag::family_b, w}};
    }
    if (s[2] == 3 && s[0] - s[1] == 2 && (s[0] - 1) % 3 == 0 && nv % 45 == 0) {
        auto w = detail::locate_solution(Family::c, ExactInt((s[0] - 1) / 3), ExactInt(nv / 45), sides);
        return ClassifiedTriangle{sides, *n, FamilyId{FamilyTag::family_c, w}};
    }
    throw TheoremViolation("perimeter-dominant triangle " + sides.describe() + " with n=" + nv.str() +
                           " matches no family");
}

enum class Verdict { classified, not_a_triangle, not_heron, not_perimeter_dominant };

inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::classified: return "classified";
    case Verdict::not_a_triangle: return "not-a-triangle";
    case Verdict::not_heron: return "not-heron";
    case Verdict::not_perimeter_dominant: return "not-perimeter-dominant";
    }
    return "?";
}

struct Assessment {
    Verdict verdict;
    std::optional<ClassifiedTriangle> triangle;
};

/// classify() with the reason for an empty result spelled out.
inline Assessment assess(const ExactInt& a, const ExactInt& b, const ExactInt& c)
{
    if (!TriangleSides::is_triangle(a, b, c)) {
        return {Verdict::not_a_triangle, std::nullopt};
    }
    const TriangleSides t(a, b, c);
    if (!area_quantum(t)) {
        return {Verdict::not_heron, std::nullopt};
    }
    if (!is_perimeter_dominant(t)) {
        return {Verdict::not_perimeter_dominant, std::nullopt};
    }
    return {Verdict::classified, classify(t)};
}

// ---------------------------------------------------------------------------
// Brute-force oracle
// ---------------------------------------------------------------------------

struct OracleTriangle {
    TriangleSides sides; // descending
    UvwTriple uvw;
    AreaQuantum n;
};

inline constexpr std::uint64_t oracle_max_w_limit = 10'000'000;

/// Every triangle with 3uvw < 16(u+v+w) and 3(u+v+w)uvw a perfect square over
/// 1 <= u <= v <= w <= max_w of equal parity, by direct search. Knows nothing
/// about candidate rows or families. Sorted by perimeter, then sides.
inline std::vector<OracleTriangle> enumerate_perimeter_dominant(std::uint64_t max_w, unsigned threads = 1)
{
    if (max_w < 1 || max_w > oracle_max_w_limit) {
        throw DomainError("max_w must lie in [1, " + std::to_string(oracle_max_w_limit) + "]");
    }
    threads = std::max(1U, threads);

    using wide = unsigned __int128;
    struct Hit {
        std::uint64_t u, v, w, n;
    };

    auto scan = [max_w, threads](unsigned worker, std::vector<Hit>& hits) {
        for (std::uint64_t w = 1 + worker; w <= max_w; w += threads) {
            for (std::uint64_t u = (w % 2 == 1) ? 1 : 2; u <= w; u += 2) {
                // With v = u the inequality fails from here on for every larger u and v.
                if (3 * static_cast<wide>(u) * u * w >= 16 * static_cast<wide>(2 * u + w)) {
                    break;
                }
                for (std::uint64_t v = u; v <= w; v += 2) {
                    const std::uint64_t p = u + v + w;
                    const wide lhs = 3 * static_cast<wide>(u) * v * w;
                    if (lhs >= 16 * static_cast<wide>(p)) {
                        break;
                    }
                    // lhs < 16p keeps 3p*uvw below 16p^2, well inside 64 bits.
                    const auto n2 = static_cast<std::uint64_t>(lhs * p);
                    if (auto n = perfect_square_root(n2)) {
                        hits.push_back({u, v, w, *n});
                    }
                }
            }
        }
    };

    std::vector<std::vector<Hit>> per_worker(threads);
    if (threads == 1) {
        scan(0, per_worker[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(scan, t, std::ref(per_worker[t]));
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    std::vector<OracleTriangle> out;
    for (const auto& hits : per_worker) {
        for (const Hit& h : hits) {
            UvwTriple q(h.u, h.v, h.w);
            TriangleSides sides = sides_from_uvw(q);
            out.push_back(OracleTriangle{std::move(sides), std::move(q), AreaQuantum(h.n)});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const OracleTriangle& l, const OracleTriangle& r) { return l.sides < r.sides; });
    return out;
}

} // namespace eisenheron
