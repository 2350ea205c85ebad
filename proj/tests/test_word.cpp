#include <doctest.h>

#include "yf/word.hpp"

using namespace yf;

TEST_CASE("parse and render") {
    CHECK(Word::parse("").empty());
    CHECK(Word::parse("e").empty());
    CHECK(Word::parse("e").display() == "e");
    CHECK(Word::parse("21221").str() == "21221");
    CHECK(Word::parse("21221").display() == "21221");
    CHECK_THROWS_AS(Word::parse("213"), parse_error);
    CHECK_THROWS_AS(Word::parse("x"), parse_error);
    CHECK_THROWS_AS(Word::parse("1 2"), parse_error);
}

TEST_CASE("rank, length and digit counts") {
    CHECK(Word::parse("e").rank() == 0);
    CHECK(Word::parse("21221").rank() == 8);
    CHECK(Word::parse("1111").rank() == 4);
    const Word x = Word::parse("21221");
    CHECK(x.length() == 5);
    CHECK(x.one_count() == 2);
    CHECK(x.two_count() == 3);
    CHECK(x.one_count() + 2 * x.two_count() == x.rank());
    CHECK(x.length() + x.two_count() == x.rank());
    // storage is right to left
    CHECK(x.digit(1) == 1);
    CHECK(x.digit(2) == 2);
    CHECK(x.digit(5) == 2);
}

TEST_CASE("concat") {
    CHECK(concat(Word::parse("2"), Word::parse("1221")).str() == "21221");
    CHECK(concat(Word::parse("222"), Word::parse("11")).str() == "22211");
    const Word x = Word::parse("1212");
    CHECK(concat(x, Word{}) == x);
    CHECK(concat(Word{}, x) == x);
    // associativity and rank additivity on a small sweep
    const Word a = Word::parse("12"), b = Word::parse("221"), c = Word::parse("11");
    CHECK(concat(concat(a, b), c) == concat(a, concat(b, c)));
    CHECK(concat(a, b).rank() == a.rank() + b.rank());
}

TEST_CASE("common suffixes") {
    const Word x = Word::parse("21221");
    CHECK(common_suffix_len(x, x) == 5);
    CHECK(common_suffix_rank(x, x) == x.rank());
    CHECK(common_suffix_len(Word::parse("1"), Word::parse("21")) == 1);
    // longest common suffix of 21221 and 1221 is 1221 itself, digit sum 6
    CHECK(common_suffix_len(Word::parse("21221"), Word::parse("1221")) == 4);
    CHECK(common_suffix_rank(Word::parse("21221"), Word::parse("1221")) == 6);
    CHECK(common_suffix_len(Word::parse("2"), Word::parse("1")) == 0);
    CHECK(common_suffix_rank(Word::parse("2"), Word::parse("1")) == 0);
    // symmetry
    CHECK(common_suffix_rank(Word::parse("1221"), Word::parse("21221")) == 6);
}

TEST_CASE("run decomposition round-trips") {
    const Word x = Word::parse("21221");
    const auto rd = RunDecomposition::of(x);
    REQUIRE(rd.betas.size() == x.two_count());
    CHECK(rd.betas == std::vector<std::size_t>{1, 0, 1});
    CHECK(rd.leading_ones == 0);
    CHECK(rd.reassemble() == x);

    const Word y = Word::parse("11212");
    const auto rdy = RunDecomposition::of(y);
    CHECK(rdy.betas == std::vector<std::size_t>{0, 1});
    CHECK(rdy.leading_ones == 2);
    CHECK(rdy.reassemble() == y);
}

TEST_CASE("clock function g and g'") {
    const Word x = Word::parse("21221");
    CHECK(g(x, 1) == 2);
    CHECK(g(x, 2) == 4);
    CHECK(g(x, 3) == 7);
    CHECK(g(Word::parse("2"), 1) == 1);
    CHECK(g(Word::parse("22"), 2) == 3);
    CHECK(g_prime(x, 1) == 2);
    CHECK(g_prime(Word::parse("2"), 1) == 1);
    CHECK(g_prime(Word::parse("22"), 2) == 1);
    CHECK_THROWS_AS(g(x, 0), precondition_error);
    CHECK_THROWS_AS(g(x, 4), precondition_error);
    CHECK(g_values(x) == std::vector<std::size_t>{2, 4, 7});
}

TEST_CASE("g is strictly increasing and bounded below by 2k-1") {
    for (const char* s : {"2", "22", "1212", "221122", "21221", "222", "121212"}) {
        const Word x = Word::parse(s);
        const auto gs = g_values(x);
        const auto rd = RunDecomposition::of(x);
        std::size_t ones_before = 0;
        for (std::size_t k = 1; k <= gs.size(); ++k) {
            if (k > 1)
                CHECK(gs[k - 1] > gs[k - 2]);
            CHECK(gs[k - 1] >= 2 * k - 1);
            ones_before += rd.betas[k - 1];
            CHECK((gs[k - 1] == 2 * k - 1) == (ones_before == 0));
        }
    }
}

TEST_CASE("remove_twos") {
    const Word x = Word::parse("21221");
    CHECK(remove_twos(x, {1}).str() == "2121");
    CHECK(remove_twos(x, {3}).str() == "1221");
    CHECK(remove_twos(x, {1, 2, 3}).str() == "11");
    CHECK(remove_twos(x, {}) == x);
    CHECK_THROWS_AS(remove_twos(x, {2, 2}), precondition_error);
    CHECK_THROWS_AS(remove_twos(x, {4}), precondition_error);
}
