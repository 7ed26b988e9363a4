#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include <eisenheron/numeric.hpp>

using namespace eisenheron;

TEST_CASE("isqrt examples", "[numeric]")
{
    CHECK(isqrt(ExactInt(0)) == 0);
    CHECK(isqrt(ExactInt(2025)) == 45);
    CHECK(isqrt(ExactInt(2026)) == 45);
    CHECK(isqrt(ExactInt(1)) == 1);
    CHECK(isqrt(ExactInt(3)) == 1);
    CHECK_THROWS_AS(isqrt(ExactInt(-1)), DomainError);
}

TEST_CASE("isqrt has floor semantics on random 512-bit values", "[numeric][property]")
{
    std::mt19937_64 rng(20261015);
    for (int trial = 0; trial < 400; ++trial) {
        ExactInt n = 0;
        const int words = 1 + trial % 8;
        for (int w = 0; w < words; ++w) {
            n = (n << 64) | ExactInt(rng());
        }
        const ExactInt r = isqrt(n);
        INFO(n);
        CHECK(r * r <= n);
        CHECK((r + 1) * (r + 1) > n);
        CHECK(perfect_square_root(n).has_value() == (r * r == n));
        const ExactInt sq = r * r;
        REQUIRE(perfect_square_root(sq) == r);
        if (r > 1) {
            CHECK_FALSE(perfect_square_root(ExactInt(sq - 1)).has_value());
        }
    }
}

TEST_CASE("64-bit isqrt agrees with exact isqrt near square boundaries", "[numeric]")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::uint64_t root = rng() >> 33;
        for (std::uint64_t n : {root * root - 1, root * root, root * root + 1}) {
            CHECK(ExactInt(isqrt(n)) == isqrt(ExactInt(n)));
        }
    }
    const std::uint64_t top = ~std::uint64_t{0};
    CHECK(ExactInt(isqrt(top)) == isqrt(ExactInt(top)));
}

TEST_CASE("perfect_square_root examples", "[numeric]")
{
    CHECK(perfect_square_root(ExactInt(729)) == ExactInt(27));
    CHECK_FALSE(perfect_square_root(ExactInt(405)).has_value());
    CHECK(perfect_square_root(ExactInt(1)) == ExactInt(1));
    CHECK(perfect_square_root(ExactInt(0)) == ExactInt(0));
    CHECK_THROWS_AS(perfect_square_root(ExactInt(-4)), DomainError);
    CHECK(perfect_square_root(std::uint64_t{2025}) == std::uint64_t{45});
    CHECK_FALSE(perfect_square_root(std::uint64_t{2026}).has_value());
}

TEST_CASE("residue prefilter never rejects a square", "[numeric][property]")
{
    for (std::uint64_t k = 0; k < 200000; ++k) {
        REQUIRE(perfect_square_root(k * k) == k);
    }
    // brute-force agreement on small non-squares
    std::set<std::uint64_t> squares;
    for (std::uint64_t k = 0; k * k <= 100000; ++k) squares.insert(k * k);
    for (std::uint64_t n = 0; n <= 100000; ++n) {
        REQUIRE(perfect_square_root(n).has_value() == (squares.count(n) == 1));
    }
}

TEST_CASE("squares_mod examples", "[numeric]")
{
    CHECK(squares_mod(8) == std::vector<std::uint32_t>{0, 1, 4});
    CHECK(squares_mod(4) == std::vector<std::uint32_t>{0, 1});
    CHECK(squares_mod(2) == std::vector<std::uint32_t>{0, 1});
    CHECK_THROWS_AS(squares_mod(1), DomainError);
    CHECK_THROWS_AS(squares_mod(0), DomainError);
    CHECK_THROWS_AS(squares_mod(1'000'001), DomainError);
}

TEST_CASE("every k^2 mod m lies in squares_mod(m)", "[numeric][property]")
{
    for (std::uint32_t m : {2U, 3U, 8U, 11U, 63U, 64U, 65U, 97U, 1000U}) {
        const auto res = squares_mod(m);
        const std::set<std::uint32_t> set(res.begin(), res.end());
        for (std::uint64_t k = 0; k < 3000; ++k) {
            REQUIRE(set.count(static_cast<std::uint32_t>((k * k) % m)) == 1);
        }
    }
}

TEST_CASE("residue_mod is non-negative", "[numeric]")
{
    CHECK(residue_mod(ExactInt(-3), 8) == 5);
    CHECK(residue_mod(ExactInt(21), 8) == 5);
}

TEST_CASE("parse_exact", "[numeric]")
{
    CHECK(parse_exact("123456789012345678901234567890") == ExactInt("123456789012345678901234567890"));
    CHECK(parse_exact("-5") == -5);
    CHECK_THROWS_AS(parse_exact(""), ValidationError);
    CHECK_THROWS_AS(parse_exact("12a"), ValidationError);
    CHECK_THROWS_AS(parse_exact("-"), ValidationError);
}
