#include <doctest.h>

#include "f_fixtures.hpp"
#include "yf/graph.hpp"
#include "yf/path_count.hpp"

#include <algorithm>
#include <array>

using namespace yf;

TEST_CASE("brute-force path counts") {
    CHECK(d_bruteforce(Word{}, Word::parse("22")) == 3);
    const Word x = Word::parse("1212");
    CHECK(d_bruteforce(x, x) == 1);
    CHECK(d_bruteforce(Word::parse("22"), Word::parse("11")) == 0);
    CHECK(d_bruteforce(Word::parse("2"), Word::parse("21")) == 1);
    CHECK(d_bruteforce(Word::parse("11"), Word::parse("21")) == 1);
}

TEST_CASE("brute-force guard refuses huge spans") {
    const Word y40 = concat(Word::twos(16), Word::ones(8));
    REQUIRE(y40.rank() == 40);
    CHECK_THROWS_AS(d_bruteforce(Word{}, y40), precondition_error);
    CHECK_THROWS_AS(d_bruteforce(Word::parse("11"), y40), precondition_error);
}

TEST_CASE("enumerate_paths") {
    const auto paths = enumerate_paths(Word{}, Word::parse("2"), 10);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].size() == 3);
    CHECK(paths[0][0].str() == "2");
    CHECK(paths[0][1].str() == "1");
    CHECK(paths[0][2].empty());

    const auto p22 = enumerate_paths(Word{}, Word::parse("22"), 10);
    CHECK(p22.size() == 3);
    for (const auto& p : p22) {
        CHECK(p.front().str() == "22");
        CHECK(p.back().empty());
        for (std::size_t i = 1; i < p.size(); ++i) {
            const auto downs = down_neighbors(p[i - 1]);
            CHECK(std::find(downs.begin(), downs.end(), p[i]) != downs.end());
        }
    }

    CHECK(enumerate_paths(Word::parse("2"), Word::parse("1"), 10).empty());
    CHECK_THROWS_AS(enumerate_paths(Word{}, Word::parse("2222"), 2), precondition_error);
}

TEST_CASE("f fixtures: every grid of rank <= 4 and the 21221 row") {
    for (const auto& table : fixtures::f_tables()) {
        const Word x = Word::parse(table.x);
        REQUIRE(table.rows.size() == x.length() + 1);
        for (std::size_t z = 0; z < table.rows.size(); ++z) {
            REQUIRE(table.rows[z].size() == x.rank() + 1);
            for (std::size_t y = 0; y < table.rows[z].size(); ++y) {
                INFO("x=", table.x, " y=", y, " z=", z);
                CHECK(f_eval(x, y, z) == parse_rat(table.rows[z][y]));
            }
        }
    }
    const Word x = Word::parse("21221");
    const auto& row = fixtures::f_21221_z0();
    for (std::size_t y = 0; y < row.size(); ++y)
        CHECK(f_eval(x, y, 0) == parse_rat(row[y]));
}

TEST_CASE("f domain errors") {
    const Word x = Word::parse("21");
    CHECK_THROWS_AS(f_eval(x, 4, 0), precondition_error);
    CHECK_THROWS_AS(f_eval(x, 0, 3), precondition_error);
    CHECK(f_eval(Word{}, 0, 0) == 1);
}

TEST_CASE("closed form on the worked examples") {
    CHECK(d_closed(Word::parse("1"), Word::parse("21")) == 2);
    CHECK(d_closed(Word{}, Word::parse("22")) == 3);
    CHECK(d_closed(Word::parse("21221"), Word::parse("21221")) == 1);
    CHECK_THROWS_AS(d_closed(Word::parse("22"), Word::parse("1")), precondition_error);
}

TEST_CASE("closed form equals the oracle, ranks <= 8") {
    for (std::size_t ny = 0; ny <= 8; ++ny) {
        const auto ylevel = enumerate_level(ny);
        for (std::size_t nx = 0; nx <= ny; ++nx) {
            for (const Word& x : enumerate_level(nx))
                for (const Word& y : ylevel) {
                    INFO("x=", x.display(), " y=", y.display());
                    CHECK(d_closed(x, y) == d_bruteforce(x, y));
                }
        }
    }
}

TEST_CASE("product formula for d(eps, y)") {
    CHECK(d_to_empty(Word::parse("21221")) == 56);
    CHECK(d_to_empty(Word{}) == 1);
    CHECK(d_to_empty(Word::parse("1111")) == 1);
    for (std::size_t n = 0; n <= 9; ++n)
        for (const Word& y : enumerate_level(n))
            CHECK(d_to_empty(y) == d_bruteforce(Word{}, y));
}

TEST_CASE("restricted counts with a fixed deleted set") {
    const Word a22 = Word::parse("22");
    const std::array<std::size_t, 1> first{1}, second{2};
    CHECK(d_from_twos_fixed(a22, 1, first) == 1);
    CHECK(d_from_twos_fixed(a22, 1, second) == 1);
    CHECK(d_from_twos_fixed(Word::twos(4), 4, {}) == 1);
    CHECK_THROWS_AS(d_from_twos_fixed(a22, 3, {}), precondition_error);
    CHECK_THROWS_AS(d_from_twos_fixed(a22, 1, std::array<std::size_t, 1>{3}), precondition_error);
    // the untouched 2s are inert: stripping them reduces the restricted count
    // to a full path census d(eps, a minus the kept 2s)
    for (std::size_t n = 0; n <= 8; ++n)
        for (const Word& a : enumerate_level(n)) {
            const std::size_t d = a.two_count();
            for (std::size_t mask = 0; mask < (1u << d); ++mask) {
                std::vector<std::size_t> deleted, kept;
                for (std::size_t i = 0; i < d; ++i)
                    (mask & (1u << i) ? deleted : kept).push_back(i + 1);
                const std::size_t k = kept.size();
                CHECK(d_from_twos_fixed(a, k, deleted) == d_to_empty(remove_twos(a, kept)));
            }
        }
}

TEST_CASE("restricted counts match the oracle and partition over deleted sets") {
    CHECK(d_from_twos(Word::parse("22"), 1) == 2);
    CHECK(d_from_twos(Word::parse("11"), 1) == 0);
    CHECK(d_from_twos(Word::parse("21221"), 0) == 56);
    for (std::size_t n = 0; n <= 8; ++n)
        for (const Word& a : enumerate_level(n)) {
            const std::size_t d = a.two_count();
            for (std::size_t k = 0; k <= 4; ++k) {
                const BigInt total = d_from_twos(a, k);
                CHECK(total == d_bruteforce(Word::twos(k), a));
                if (k > d)
                    continue;
                BigInt by_sets = 0;
                for (std::size_t mask = 0; mask < (1u << d); ++mask) {
                    std::vector<std::size_t> deleted;
                    for (std::size_t i = 0; i < d; ++i)
                        if (mask & (1u << i))
                            deleted.push_back(i + 1);
                    if (deleted.size() == d - k)
                        by_sets += d_from_twos_fixed(a, k, deleted);
                }
                CHECK(by_sets == total);
            }
        }
}

TEST_CASE("factorization identity") {
    // d(eps,21221) = 2*4*7; the split at 2|1221 gives d(eps,1221) = 2*4 and
    // d(eps,2111111) = 7 (cross-checked against the brute-force census below)
    const auto fc = factorize_check(Word::parse("2"), Word::parse("1221"));
    CHECK(fc.whole == 56);
    CHECK(fc.suffix_part == 8);
    CHECK(fc.prefix_part == 7);
    const Word x = Word::parse("12212");
    const auto left = factorize_check(Word{}, x);
    CHECK(left.whole == left.suffix_part);
    CHECK(left.prefix_part == 1);
    const auto right = factorize_check(x, Word{});
    CHECK(right.whole == right.prefix_part);
    CHECK(right.suffix_part == 1);
    for (std::size_t n = 0; n <= 9; ++n)
        for (const Word& w : enumerate_level(n)) {
            const std::string& s = w.storage();
            for (std::size_t cut = 0; cut <= s.size(); ++cut) {
                const auto split = factorize_check(Word::from_storage(s.substr(cut)),
                                                   Word::from_storage(s.substr(0, cut)));
                CHECK(split.whole == split.suffix_part * split.prefix_part);
                CHECK(split.whole == d_to_empty(w));
            }
        }
}

TEST_CASE("closed form stays fast far beyond the oracle") {
    const Word y = concat(Word::twos(16), Word::ones(8));
    REQUIRE(y.rank() == 40);
    CHECK(d_to_empty(y) > BigInt("10000000000"));
    for (const Word& x : enumerate_level(8)) {
        const BigInt count = d_closed(x, y);
        CHECK(count >= 0);
    }
}
