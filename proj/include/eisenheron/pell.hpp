#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace eisenheron {

/// The three infinite families of perimeter-dominant triangles.
enum class Family { a, b, c };

inline const char* family_letter(Family f)
{
    switch (f) {
    case Family::a: return "a";
    case Family::b: return "b";
    case Family::c: return "c";
    }
    return "?";
}

inline Family parse_family(const std::string& s)
{
    if (s == "a") return Family::a;
    if (s == "b") return Family::b;
    if (s == "c") return Family::c;
    throw ValidationError("unknown family '" + s + "' (expected a, b or c)");
}

/// A x^2 - D y^2 = 1 with A in {1, 4} and D a positive non-square.
class PellForm {
public:
    PellForm(int a, ExactInt d) : a_(a), d_(std::move(d))
    {
        if (a_ != 1 && a_ != 4) {
            throw DomainError("Pell form coefficient A must be 1 or 4, got " + std::to_string(a_));
        }
        if (d_ < 2) {
            throw DomainError("Pell form requires D >= 2, got " + d_.str());
        }
        if (is_perfect_square(d_)) {
            throw DomainError("Pell form requires non-square D, got " + d_.str());
        }
    }

    int a() const { return a_; }
    const ExactInt& d() const { return d_; }

    bool satisfied_by(const ExactInt& x, const ExactInt& y) const { return a_ * x * x - d_ * y * y == 1; }

    std::string describe() const
    {
        return (a_ == 1 ? std::string("x^2") : std::string("4x^2")) + " - " + d_.str() + "y^2 = 1";
    }

    friend bool operator==(const PellForm& l, const PellForm& r) { return l.a_ == r.a_ && l.d_ == r.d_; }

private:
    int a_;
    ExactInt d_;
};

inline PellForm pell_form_for(Family f)
{
    switch (f) {
    case Family::a: return PellForm(4, 3);
    case Family::b: return PellForm(1, 3);
    case Family::c: return PellForm(4, 15);
    }
    throw DomainError("unknown family");
}

struct PellSolution {
    ExactInt x;
    ExactInt y;
    std::size_t index = 0; // 1-based

    friend bool operator==(const PellSolution& l, const PellSolution& r)
    {
        return l.x == r.x && l.y == r.y && l.index == r.index;
    }
};

/// Minimal positive (X, y) with X^2 - D y^2 = 1, read off the convergents of
/// the continued fraction of sqrt(D).
inline std::pair<ExactInt, ExactInt> fundamental_solution(const ExactInt& d)
{
    if (d < 2) {
        throw DomainError("fundamental_solution requires D >= 2, got " + d.str());
    }
    const ExactInt a0 = isqrt(d);
    if (a0 * a0 == d) {
        throw DomainError("fundamental_solution requires non-square D, got " + d.str());
    }

    ExactInt m = 0;
    ExactInt q = 1;
    ExactInt a = a0;
    ExactInt h_prev = 1, h_prev2 = 0;
    ExactInt k_prev = 0, k_prev2 = 1;
    for (;;) {
        ExactInt h = a * h_prev + h_prev2;
        ExactInt k = a * k_prev + k_prev2;
        if (h * h - d * k * k == 1) {
            return {h, k};
        }
        h_prev2 = std::move(h_prev);
        h_prev = std::move(h);
        k_prev2 = std::move(k_prev);
        k_prev = std::move(k);

        m = q * a - m;
        q = (d - m * m) / q;
        a = (a0 + m) / q;
    }
}

/// Ascending stream of positive solutions of a PellForm. For A = 4 the
/// underlying X^2 - D y^2 = 1 solutions are filtered to even X and x = X/2.
class PellStream {
public:
    explicit PellStream(PellForm form) : form_(std::move(form))
    {
        auto [x1, y1] = fundamental_solution(form_.d());
        fund_x_ = std::move(x1);
        fund_y_ = std::move(y1);
        if (form_.a() == 4) {
            // (X mod 2, y mod 2) evolves by an invertible map over GF(2), whose
            // order divides 6, so an even X shows up within six powers or never.
            ExactInt x = fund_x_, y = fund_y_;
            bool found = false;
            for (int power = 1; power <= 6 && !found; ++power) {
                found = !boost::multiprecision::bit_test(x, 0);
                advance(x, y);
            }
            if (!found) {
                throw DomainError(form_.describe() + " has no solutions");
            }
        }
    }

    const PellForm& form() const { return form_; }

    PellSolution next()
    {
        for (;;) {
            if (started_) {
                advance(big_x_, y_);
            } else {
                big_x_ = fund_x_;
                y_ = fund_y_;
                started_ = true;
            }
            if (form_.a() == 1) {
                return PellSolution{big_x_, y_, ++index_};
            }
            if (!boost::multiprecision::bit_test(big_x_, 0)) {
                return PellSolution{big_x_ / 2, y_, ++index_};
            }
        }
    }

private:
    void advance(ExactInt& x, ExactInt& y) const
    {
        ExactInt nx = fund_x_ * x + form_.d() * fund_y_ * y;
        ExactInt ny = fund_x_ * y + fund_y_ * x;
        x = std::move(nx);
        y = std::move(ny);
    }

    PellForm form_;
    ExactInt fund_x_;
    ExactInt fund_y_;
    ExactInt big_x_;
    ExactInt y_;
    bool started_ = false;
    std::size_t index_ = 0;
};

inline std::vector<PellSolution> solutions(const PellForm& form, std::size_t count)
{
    if (count == 0) {
        throw DomainError("solutions requires count >= 1");
    }
    PellStream stream(form);
    std::vector<PellSolution> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(stream.next());
    }
    return out;
}

/// x_n = k x_{n-1} - x_{n-2}, seeded with x_1 and x_2.
struct Recurrence {
    ExactInt coefficient;
    ExactInt first;
    ExactInt second;

    std::vector<ExactInt> generate(std::size_t count) const
    {
        std::vector<ExactInt> xs;
        xs.reserve(count);
        if (count >= 1) xs.push_back(first);
        if (count >= 2) xs.push_back(second);
        while (xs.size() < count) {
            const std::size_t n = xs.size();
            xs.push_back(coefficient * xs[n - 1] - xs[n - 2]);
        }
        return xs;
    }
};

inline Recurrence recurrence_for(Family f)
{
    switch (f) {
    case Family::a: return Recurrence{14, 1, 13};
    case Family::b: return Recurrence{4, 2, 7};
    case Family::c: return Recurrence{62, 2, 122};
    }
    throw DomainError("unknown family");
}

/// y = sqrt((A x^2 - 1) / D) when that is a positive integer.
inline std::optional<ExactInt> y_for_x(const PellForm& form, const ExactInt& x)
{
    if (x < 1) {
        return std::nullopt;
    }
    ExactInt numerator = form.a() * x * x - 1;
    if (numerator <= 0 || numerator % form.d() != 0) {
        return std::nullopt;
    }
    return perfect_square_root(ExactInt(numerator / form.d()));
}

} // namespace eisenheron
