#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "ncprob/ncpart.hpp"
#include "ncprob/words.hpp"

using namespace ncprob;

namespace {

// Interleaving oracle: q complements p in NC(n) iff placing q's points at
// half-integers keeps p union q non-crossing on 2n points; the Kreweras
// complement is the largest such q.  Checked by brute force over set
// partitions, independently of the production implementation.
bool pair_noncrossing_interleaved(const NCPartition& p, const NCPartition& q) {
    // Points 2i-1 for p's element i, 2i for q's element i.
    std::vector<std::vector<int>> blocks;
    for (const auto& b : p.blocks) {
        std::vector<int> mapped;
        for (int x : b) mapped.push_back(2 * x - 1);
        blocks.push_back(mapped);
    }
    for (const auto& b : q.blocks) {
        std::vector<int> mapped;
        for (int x : b) mapped.push_back(2 * x);
        blocks.push_back(mapped);
    }
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = 0; j < blocks.size(); ++j) {
            if (i == j) continue;
            for (std::size_t ai = 0; ai + 1 < blocks[i].size(); ++ai) {
                int a = blocks[i][ai], c = blocks[i][ai + 1];
                for (int b : blocks[j])
                    for (int d : blocks[j])
                        if (a < b && b < c && c < d) return false;
            }
        }
    return true;
}

std::vector<NCPartition> all_set_partitions(int n) {
    std::vector<std::vector<int>> assignment; // assignment[k][i] = block of i+1
    std::vector<int> cur(n, 0);
    std::vector<NCPartition> out;
    // Restricted growth strings enumerate set partitions exactly once.
    std::function<void(int, int)> rec = [&](int i, int maxb) {
        if (i == n) {
            std::vector<std::vector<int>> blocks(maxb);
            for (int k = 0; k < n; ++k) blocks[cur[k]].push_back(k + 1);
            out.push_back(make_partition(n, blocks));
            return;
        }
        for (int b = 0; b <= maxb; ++b) {
            cur[i] = b;
            rec(i + 1, std::max(maxb, b + 1));
        }
    };
    rec(0, 0);
    return out;
}

int refinement_order(const NCPartition& coarse, const NCPartition& fine) {
    // 1 if every block of fine lies inside a block of coarse.
    for (const auto& fb : fine.blocks) {
        bool inside = false;
        for (const auto& cb : coarse.blocks)
            if (std::includes(cb.begin(), cb.end(), fb.begin(), fb.end())) inside = true;
        if (!inside) return 0;
    }
    return 1;
}

} // namespace

TEST_CASE("catalan numbers") {
    std::vector<std::int64_t> want{1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (int n = 0; n <= 8; ++n) CHECK(catalan_number(n) == want[n]);
    CHECK(catalan_number(15) == 9694845);
}

TEST_CASE("enumeration yields exactly the non-crossing partitions") {
    for (int n = 1; n <= 7; ++n) {
        const auto& nc = enumerate_nc(n);
        CHECK(static_cast<std::int64_t>(nc.size()) == catalan_number(n));
        std::set<NCPartition> seen(nc.begin(), nc.end());
        CHECK(seen.size() == nc.size());
        int brute = 0;
        for (const NCPartition& p : all_set_partitions(n))
            if (is_noncrossing(p)) {
                ++brute;
                CHECK(seen.count(p) == 1);
            }
        CHECK(static_cast<std::int64_t>(brute) == catalan_number(n));
    }
}

TEST_CASE("crossing detector agrees with the quadruple scan") {
    for (const NCPartition& p : all_set_partitions(5)) {
        bool brute = true;
        for (const auto& bi : p.blocks)
            for (const auto& bj : p.blocks) {
                if (&bi == &bj) continue;
                for (int a : bi)
                    for (int c : bi)
                        for (int b : bj)
                            for (int d : bj)
                                if (a < b && b < c && c < d) brute = false;
            }
        CHECK(is_noncrossing(p) == brute);
    }
    CHECK(!is_noncrossing(make_partition(4, {{1, 3}, {2, 4}})));
    CHECK(is_noncrossing(make_partition(4, {{1, 4}, {2, 3}})));
}

TEST_CASE("kreweras complement on small cases") {
    CHECK(kreweras(make_partition(2, {{1, 2}})) == make_partition(2, {{1}, {2}}));
    CHECK(kreweras(make_partition(2, {{1}, {2}})) == make_partition(2, {{1, 2}}));
    CHECK(kreweras(make_partition(3, {{1, 3}, {2}})) == make_partition(3, {{1, 2}, {3}}));
    CHECK(kreweras(make_partition(3, {{1, 2}, {3}})) == make_partition(3, {{1}, {2, 3}}));
    CHECK(kreweras(make_partition(3, {{2, 3}, {1}})) == make_partition(3, {{1, 3}, {2}}));
    CHECK(kreweras(make_partition(3, {{1, 2, 3}})) == make_partition(3, {{1}, {2}, {3}}));
}

TEST_CASE("kreweras complement is the largest interleaving-compatible partition") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<NCPartition> all = all_set_partitions(n);
        for (const NCPartition& p : enumerate_nc(n)) {
            NCPartition k = kreweras(p);
            CHECK(is_noncrossing(k));
            CHECK(pair_noncrossing_interleaved(p, k));
            // Maximality: any compatible q refines k.
            for (const NCPartition& q : all)
                if (is_noncrossing(q) && pair_noncrossing_interleaved(p, q))
                    CHECK(refinement_order(k, q) == 1);
        }
    }
}

TEST_CASE("kreweras block-count identity and bijectivity") {
    for (int n = 1; n <= 8; ++n) {
        std::set<NCPartition> image;
        for (const NCPartition& p : enumerate_nc(n)) {
            NCPartition k = kreweras(p);
            CHECK(p.block_count() + k.block_count() == n + 1);
            image.insert(k);
        }
        CHECK(static_cast<std::int64_t>(image.size()) == catalan_number(n));
    }
}

TEST_CASE("word restriction to a block") {
    Word w{{1, 2, 1, 2}};
    CHECK(restrict_word(w, {1, 3}) == Word{{1, 1}});
    CHECK(restrict_word(w, {2, 4}) == Word{{2, 2}});
    CHECK(restrict_word(w, {1, 2, 3, 4}) == w);
    CHECK_THROWS_AS(restrict_word(w, {0}), value_error);
    CHECK_THROWS_AS(restrict_word(w, {5}), value_error);
}

TEST_CASE("partition serialization") {
    CHECK(partition_to_string(make_partition(3, {{1, 3}, {2}})) == "{1,3}{2}");
    CHECK(partition_to_string(make_partition(1, {{1}})) == "{1}");
}
