#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace eisenheron {

using ExactInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

inline ExactInt parse_exact(const std::string& text)
{
    if (text.empty()) {
        throw ValidationError("empty integer literal");
    }
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) {
        throw ValidationError("malformed integer literal '" + text + "'");
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw ValidationError("malformed integer literal '" + text + "'");
        }
    }
    return ExactInt(text);
}

inline std::string to_decimal(const ExactInt& value) { return value.str(); }

/// Floor square root. Newton iteration from an over-estimate decreases
/// monotonically to the floor.
inline ExactInt isqrt(const ExactInt& n)
{
    if (n < 0) {
        throw DomainError("isqrt of negative value " + n.str());
    }
    if (n < 2) {
        return n;
    }
    const auto bits = boost::multiprecision::msb(n);
    ExactInt x = ExactInt(1) << (bits / 2 + 1);
    for (;;) {
        ExactInt y = (x + n / x) >> 1;
        if (y >= x) {
            return x;
        }
        x = std::move(y);
    }
}

inline std::uint64_t isqrt(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    using wide = unsigned __int128;
    while (static_cast<wide>(r) * r > n) {
        --r;
    }
    while (static_cast<wide>(r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

namespace detail {

template <std::size_t M>
constexpr std::array<bool, M> square_residue_table()
{
    std::array<bool, M> table{};
    for (std::size_t k = 0; k < M; ++k) {
        table[(k * k) % M] = true;
    }
    return table;
}

inline constexpr auto squares_mod64 = square_residue_table<64>();
inline constexpr auto squares_mod63 = square_residue_table<63>();
inline constexpr auto squares_mod65 = square_residue_table<65>();
inline constexpr auto squares_mod11 = square_residue_table<11>();

// Rejects roughly 99.4% of non-squares before any root extraction.
inline bool may_be_square(std::uint64_t residue)
{
    return squares_mod64[residue % 64] && squares_mod63[residue % 63] &&
           squares_mod65[residue % 65] && squares_mod11[residue % 11];
}

} // namespace detail

inline std::optional<std::uint64_t> perfect_square_root(std::uint64_t n)
{
    if (!detail::may_be_square(n)) {
        return std::nullopt;
    }
    const auto r = isqrt(n);
    if (r * r != n) {
        return std::nullopt;
    }
    return r;
}

inline std::optional<ExactInt> perfect_square_root(const ExactInt& n)
{
    if (n < 0) {
        throw DomainError("perfect_square_root of negative value " + n.str());
    }
    // 64*63*65*11 fits in 32 bits, so one big-int remainder feeds every filter.
    constexpr std::uint64_t filter_modulus = 64ULL * 63ULL * 65ULL * 11ULL;
    const auto residue = static_cast<std::uint64_t>(n % filter_modulus);
    if (!detail::may_be_square(residue)) {
        return std::nullopt;
    }
    ExactInt r = isqrt(n);
    if (r * r != n) {
        return std::nullopt;
    }
    return r;
}

inline bool is_perfect_square(const ExactInt& n)
{
    return n >= 0 && perfect_square_root(n).has_value();
}

/// Sorted set of quadratic residues { k^2 mod m : 0 <= k < m }.
inline std::vector<std::uint32_t> squares_mod(std::uint32_t m)
{
    if (m < 2 || m > 1'000'000) {
        throw DomainError("squares_mod requires 2 <= m <= 10^6, got " + std::to_string(m));
    }
    std::vector<bool> hit(m, false);
    for (std::uint64_t k = 0; k < m; ++k) {
        hit[(k * k) % m] = true;
    }
    std::vector<std::uint32_t> residues;
    for (std::uint32_t r = 0; r < m; ++r) {
        if (hit[r]) {
            residues.push_back(r);
        }
    }
    return residues;
}

/// Non-negative remainder of value modulo m.
inline std::uint32_t residue_mod(const ExactInt& value, std::uint32_t m)
{
    ExactInt r = value % m;
    if (r < 0) {
        r += m;
    }
    return static_cast<std::uint32_t>(r);
}

} // namespace eisenheron
