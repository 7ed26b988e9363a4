#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <ostream>

#include "numeric.hpp"

namespace eisenheron {

/// Side lengths a, b, c of a triangle whose actual sides are a*sqrt3, b*sqrt3, c*sqrt3.
/// Sides keep the order they were given in; equality compares them as multisets.
class TriangleSides {
public:
    TriangleSides(ExactInt a, ExactInt b, ExactInt c)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c))
    {
        if (a_ < 1 || b_ < 1 || c_ < 1) {
            throw ValidationError("sides must be positive: " + describe());
        }
        if (a_ >= b_ + c_ || b_ >= a_ + c_ || c_ >= a_ + b_) {
            throw ValidationError("sides violate the strict triangle inequality: " + describe());
        }
    }

    static bool is_triangle(const ExactInt& a, const ExactInt& b, const ExactInt& c)
    {
        return a >= 1 && b >= 1 && c >= 1 && a < b + c && b < a + c && c < a + b;
    }

    const ExactInt& a() const { return a_; }
    const ExactInt& b() const { return b_; }
    const ExactInt& c() const { return c_; }

    ExactInt perimeter() const { return a_ + b_ + c_; }

    /// Sides in descending order, the canonical output order.
    std::array<ExactInt, 3> descending() const
    {
        std::array<ExactInt, 3> s{a_, b_, c_};
        std::sort(s.begin(), s.end(), [](const ExactInt& l, const ExactInt& r) { return l > r; });
        return s;
    }

    TriangleSides canonical() const
    {
        auto s = descending();
        return TriangleSides(s[0], s[1], s[2]);
    }

    std::string describe() const { return "(" + a_.str() + "," + b_.str() + "," + c_.str() + ")"; }

    friend bool operator==(const TriangleSides& l, const TriangleSides& r)
    {
        return l.descending() == r.descending();
    }

    /// Orders by perimeter, then lexicographically on the descending side list.
    friend bool operator<(const TriangleSides& l, const TriangleSides& r)
    {
        const ExactInt lp = l.perimeter();
        const ExactInt rp = r.perimeter();
        if (lp != rp) {
            return lp < rp;
        }
        return l.descending() < r.descending();
    }

    friend std::ostream& operator<<(std::ostream& os, const TriangleSides& t) { return os << t.describe(); }

private:
    ExactInt a_;
    ExactInt b_;
    ExactInt c_;
};

/// The substituted coordinates u = -a+b+c, v = a-b+c, w = a+b-c, kept sorted
/// ascending, together with p = u+v+w = a+b+c.
class UvwTriple {
public:
    UvwTriple(ExactInt u, ExactInt v, ExactInt w)
    {
        std::array<ExactInt, 3> s{std::move(u), std::move(v), std::move(w)};
        std::sort(s.begin(), s.end());
        if (s[0] < 1) {
            throw ValidationError("(u,v,w) must be positive: (" + s[0].str() + "," + s[1].str() + "," +
                                  s[2].str() + ")");
        }
        const bool odd = boost::multiprecision::bit_test(s[0], 0);
        if (boost::multiprecision::bit_test(s[1], 0) != odd || boost::multiprecision::bit_test(s[2], 0) != odd) {
            throw ValidationError("(u,v,w) must share parity: (" + s[0].str() + "," + s[1].str() + "," +
                                  s[2].str() + ")");
        }
        u_ = std::move(s[0]);
        v_ = std::move(s[1]);
        w_ = std::move(s[2]);
        p_ = u_ + v_ + w_;
    }

    const ExactInt& u() const { return u_; }
    const ExactInt& v() const { return v_; }
    const ExactInt& w() const { return w_; }
    const ExactInt& p() const { return p_; }

    /// 3 p u v w, which equals n^2 for a lattice-Heron triangle.
    ExactInt heron_quantity() const { return 3 * p_ * u_ * v_ * w_; }

    friend bool operator==(const UvwTriple& l, const UvwTriple& r)
    {
        return l.u_ == r.u_ && l.v_ == r.v_ && l.w_ == r.w_;
    }

private:
    ExactInt u_;
    ExactInt v_;
    ExactInt w_;
    ExactInt p_;
};

/// Integer n with area = n*sqrt3/4.
class AreaQuantum {
public:
    explicit AreaQuantum(ExactInt n) : n_(std::move(n))
    {
        if (n_ < 1) {
            throw ValidationError("area quantum must be positive, got " + n_.str());
        }
    }

    const ExactInt& value() const { return n_; }

    friend bool operator==(const AreaQuantum& l, const AreaQuantum& r) { return l.n_ == r.n_; }

private:
    ExactInt n_;
};

inline UvwTriple uvw_from_sides(const TriangleSides& t)
{
    return UvwTriple(-t.a() + t.b() + t.c(), t.a() - t.b() + t.c(), t.a() + t.b() - t.c());
}

/// Inverse substitution; with u <= v <= w the result is in descending order.
inline TriangleSides sides_from_uvw(const UvwTriple& q)
{
    return TriangleSides((q.v() + q.w()) / 2, (q.u() + q.w()) / 2, (q.u() + q.v()) / 2);
}

/// n with n^2 = 3(a+b+c)(-a+b+c)(a-b+c)(a+b-c), if that quantity is a square.
inline std::optional<AreaQuantum> area_quantum(const TriangleSides& t)
{
    auto root = perfect_square_root(uvw_from_sides(t).heron_quantity());
    if (!root) {
        return std::nullopt;
    }
    return AreaQuantum(std::move(*root));
}

/// Perimeter strictly exceeds area. In (u,v,w) terms: 3uvw < 16(u+v+w).
/// Equable triangles (equality) are not dominant.
inline bool is_perimeter_dominant(const TriangleSides& t)
{
    const UvwTriple q = uvw_from_sides(t);
    return 3 * q.u() * q.v() * q.w() < 16 * q.p();
}

struct ExactMeasures {
    ExactInt perimeter_over_sqrt3;
    /// n/4; denominator always divides 4.
    ExactRational area_over_sqrt3;
};

inline ExactMeasures exact_measures(const TriangleSides& t)
{
    auto n = area_quantum(t);
    if (!n) {
        throw UnsupportedInput("triangle " + t.describe() + " has no integral area quantum");
    }
    return ExactMeasures{t.perimeter(), ExactRational(n->value(), ExactInt(4))};
}

} // namespace eisenheron
