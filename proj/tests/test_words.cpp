#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "ncprob/words.hpp"

using namespace ncprob;

TEST_CASE("alphabet validation") {
    CHECK_THROWS_AS(Alphabet(0, {}), value_error);
    CHECK_THROWS_AS(Alphabet(2, {1}), value_error);
    CHECK_THROWS_AS(Alphabet(2, {1, 0}), value_error);
    CHECK(Alphabet::ones(3).weights == std::vector<int>{1, 1, 1});
}

TEST_CASE("weighted degree and word validation") {
    Alphabet a(2, {1, 2});
    CHECK(degree(a, Word{{1, 1, 2}}) == 4);
    CHECK(degree(a, Word{}) == 0);
    CHECK_THROWS_AS(check_word(a, Word{{0}}), value_error);
    CHECK_THROWS_AS(check_word(a, Word{{3}}), value_error);
}

TEST_CASE("enumeration is ordered by degree, then length, then lexicographic") {
    Alphabet a(2, {1, 2});
    std::vector<Word> got = enumerate_words(a, 2);
    std::vector<Word> want{Word{{1}}, Word{{2}}, Word{{1, 1}}};
    CHECK(got == want);
    // Unit weights: s + s^2 + ... + s^n words up to degree n.
    CHECK(enumerate_words(Alphabet::ones(2), 4).size() == 2 + 4 + 8 + 16);
    CHECK(enumerate_words(Alphabet::ones(3), 3).size() == 3 + 9 + 27);
    std::vector<Word> unit = enumerate_words(Alphabet::ones(2), 3);
    for (std::size_t i = 1; i < unit.size(); ++i) CHECK(unit[i - 1] < unit[i]);
}

TEST_CASE("word serialization round-trips") {
    Word w{{1, 3, 2}};
    CHECK(word_to_string(w) == "1,3,2");
    CHECK(parse_word("1,3,2") == w);
    CHECK(parse_word(word_to_string(Word{{2}})) == Word{{2}});
    CHECK(parse_word("").empty());
    CHECK_THROWS_AS(parse_word("1,,2"), parse_error);
    CHECK_THROWS_AS(parse_word("1,a"), parse_error);
}

TEST_CASE("contraction merges adjacent blocks on the same leg") {
    FreeMonomial m = make_monomial({Block{1, Word{{1}}}, Block{1, Word{{2}}},
                                    Block{2, Word{{1}}}, Block{1, Word{{1}}}});
    CHECK(m.size() == 3);
    CHECK(m.blocks[0] == Block{1, Word{{1, 2}}});
    CHECK(m.blocks[1] == Block{2, Word{{1}}});
    CHECK(monomial_to_string(m) == "[x|1,2][y|1][x|1]");
    CHECK_THROWS_AS(make_monomial({Block{1, Word{}}}), value_error);
    CHECK_THROWS_AS(make_monomial({Block{3, Word{{1}}}}), value_error);
}

TEST_CASE("monomial product is associative and alternates legs") {
    std::vector<FreeMonomial> ms{
        make_monomial({Block{1, Word{{1}}}}),
        make_monomial({Block{1, Word{{2}}}, Block{2, Word{{1}}}}),
        make_monomial({Block{2, Word{{2}}}, Block{1, Word{{1, 1}}}}),
        make_monomial({Block{1, Word{{1}}}, Block{2, Word{{2}}}, Block{1, Word{{2}}}}),
    };
    for (const FreeMonomial& x : ms)
        for (const FreeMonomial& y : ms)
            for (const FreeMonomial& z : ms) {
                FreeMonomial left = monomial_mul(monomial_mul(x, y), z);
                CHECK(left == monomial_mul(x, monomial_mul(y, z)));
                for (int i = 1; i < left.size(); ++i)
                    CHECK(left.blocks[i - 1].leg != left.blocks[i].leg);
            }
    CHECK(monomial_mul(ms[0], ms[0]) == make_monomial({Block{1, Word{{1, 1}}}}));
}

TEST_CASE("restriction keeps order and re-contracts") {
    FreeMonomial m = make_monomial({Block{1, Word{{1}}}, Block{2, Word{{1}}},
                                    Block{1, Word{{2}}}, Block{2, Word{{2}}}});
    FreeMonomial r = restrict_monomial(m, {0, 2, 3});
    CHECK(r == make_monomial({Block{1, Word{{1, 2}}}, Block{2, Word{{2}}}}));
    CHECK(restrict_monomial(m, {}).empty());
    CHECK_THROWS_AS(restrict_monomial(m, {2, 1}), value_error);
    CHECK_THROWS_AS(restrict_monomial(m, {4}), value_error);
}
