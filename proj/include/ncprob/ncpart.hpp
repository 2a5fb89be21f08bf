#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncprob/error.hpp"
#include "ncprob/words.hpp"

namespace ncprob {

// Set partition of {1..n} in canonical form: blocks sorted ascending inside,
// blocks ordered by least element.  Validity (non-crossing) is checked on use.
struct NCPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }
    bool operator==(const NCPartition& o) const { return n == o.n && blocks == o.blocks; }
    bool operator<(const NCPartition& o) const {
        if (n != o.n) return n < o.n;
        return blocks < o.blocks;
    }
};

// Canonicalize and validate a block list as a partition of {1..n}.
NCPartition make_partition(int n, std::vector<std::vector<int>> blocks);

// No a < b < c < d with a,c in one block and b,d in another.
bool is_noncrossing(const NCPartition& p);

// All of NC(n) in a fixed deterministic order; cached, n up to 12.
const std::vector<NCPartition>& enumerate_nc(int n);

// Kreweras complement via the long-cycle permutation: the cycles of
// x -> pi^{-1}(gamma(x)) with gamma = (1 2 ... n), pi the block-cycle successor.
NCPartition kreweras(const NCPartition& p);

// Subword of w at the positions of one block (1-based, ascending).
Word restrict_word(const Word& w, const std::vector<int>& block);

std::string partition_to_string(const NCPartition& p);

std::int64_t catalan_number(int n); // n <= 30

} // namespace ncprob
