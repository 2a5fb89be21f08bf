#include "ncprob/ncpart.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace ncprob {

NCPartition make_partition(int n, std::vector<std::vector<int>> blocks) {
    if (n < 1) throw value_error("partition: n must be >= 1");
    std::vector<int> seen(n + 1, 0);
    for (auto& b : blocks) {
        if (b.empty()) throw value_error("partition: empty block");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 1 || x > n) throw value_error("partition: element out of range");
            if (seen[x]++) throw value_error("partition: repeated element");
        }
    }
    for (int x = 1; x <= n; ++x)
        if (!seen[x]) throw value_error("partition: missing element");
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return NCPartition{n, std::move(blocks)};
}

bool is_noncrossing(const NCPartition& p) {
    std::vector<int> owner(p.n + 1, -1);
    for (int bi = 0; bi < p.block_count(); ++bi)
        for (int x : p.blocks[bi]) owner[x] = bi;
    // Scan with a stack of open blocks; a block interleaving a different open one crosses.
    std::vector<int> last(p.block_count());
    for (int bi = 0; bi < p.block_count(); ++bi) last[bi] = p.blocks[bi].back();
    std::vector<int> stack;
    for (int x = 1; x <= p.n; ++x) {
        int b = owner[x];
        if (!stack.empty() && stack.back() == b) {
            // continuing the innermost open block
        } else if (std::find(stack.begin(), stack.end(), b) != stack.end()) {
            return false; // reopening a non-innermost block crosses the ones above it
        } else {
            stack.push_back(b);
        }
        // At most one block can close here: the owner of x at its last element.
        if (!stack.empty() && last[stack.back()] == x) stack.pop_back();
    }
    return true;
}

namespace {

// Recursive enumeration on an ascending point set: choose the block of the least
// point, then fill the independent gaps between consecutive chosen points.
void enum_on(const std::vector<int>& pts, std::vector<std::vector<std::vector<int>>>& out) {
    if (pts.empty()) {
        out.push_back({});
        return;
    }
    int m = static_cast<int>(pts.size());
    // Subsets of pts containing pts[0], as sorted index lists.
    std::vector<int> idx;
    for (int mask = 0; mask < (1 << (m - 1)); ++mask) {
        idx.clear();
        idx.push_back(0);
        for (int j = 0; j < m - 1; ++j)
            if (mask & (1 << j)) idx.push_back(j + 1);
        // Gaps: points strictly between consecutive chosen indices, plus the tail.
        std::vector<std::vector<int>> gaps;
        for (std::size_t t = 0; t + 1 < idx.size(); ++t)
            gaps.push_back(std::vector<int>(pts.begin() + idx[t] + 1, pts.begin() + idx[t + 1]));
        gaps.push_back(std::vector<int>(pts.begin() + idx.back() + 1, pts.end()));
        std::vector<int> block;
        for (int i : idx) block.push_back(pts[i]);
        // Cartesian product of the gap partitions.
        std::vector<std::vector<std::vector<std::vector<int>>>> gap_parts;
        for (const auto& g : gaps) {
            std::vector<std::vector<std::vector<int>>> parts;
            enum_on(g, parts);
            gap_parts.push_back(std::move(parts));
        }
        std::vector<std::size_t> pick(gap_parts.size(), 0);
        while (true) {
            std::vector<std::vector<int>> blocks{block};
            for (std::size_t t = 0; t < gap_parts.size(); ++t)
                for (const auto& b : gap_parts[t][pick[t]]) blocks.push_back(b);
            out.push_back(std::move(blocks));
            std::size_t t = 0;
            for (; t < pick.size(); ++t) {
                if (++pick[t] < gap_parts[t].size()) break;
                pick[t] = 0;
            }
            if (t == pick.size()) break;
        }
    }
}

} // namespace

const std::vector<NCPartition>& enumerate_nc(int n) {
    if (n < 1 || n > 12) throw value_error("enumerate_nc: n out of range [1,12]");
    static std::mutex mu;
    static std::map<int, std::vector<NCPartition>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<int> pts(n);
    for (int i = 0; i < n; ++i) pts[i] = i + 1;
    std::vector<std::vector<std::vector<int>>> raw;
    enum_on(pts, raw);
    std::vector<NCPartition> out;
    out.reserve(raw.size());
    for (auto& blocks : raw) out.push_back(make_partition(n, std::move(blocks)));
    std::sort(out.begin(), out.end());
    return cache.emplace(n, std::move(out)).first->second;
}

NCPartition kreweras(const NCPartition& p) {
    if (!is_noncrossing(p)) throw value_error("kreweras: partition is crossing");
    std::vector<int> next(p.n + 1);
    for (const auto& b : p.blocks)
        for (std::size_t i = 0; i < b.size(); ++i) next[b[i]] = b[(i + 1) % b.size()];
    std::vector<int> prev(p.n + 1);
    for (int x = 1; x <= p.n; ++x) prev[next[x]] = x;
    // sigma(x) = pi^{-1}(gamma(x)), gamma(n) = 1
    std::vector<int> sigma(p.n + 1);
    for (int x = 1; x <= p.n; ++x) sigma[x] = prev[x % p.n + 1];
    std::vector<bool> seen(p.n + 1, false);
    std::vector<std::vector<int>> blocks;
    for (int x = 1; x <= p.n; ++x) {
        if (seen[x]) continue;
        std::vector<int> cycle;
        int y = x;
        while (!seen[y]) {
            seen[y] = true;
            cycle.push_back(y);
            y = sigma[y];
        }
        blocks.push_back(std::move(cycle));
    }
    return make_partition(p.n, std::move(blocks));
}

Word restrict_word(const Word& w, const std::vector<int>& block) {
    Word out;
    out.letters.reserve(block.size());
    for (int pos : block) {
        if (pos < 1 || pos > w.length()) throw value_error("restrict_word: position out of range");
        out.letters.push_back(w.letters[pos - 1]);
    }
    return out;
}

std::string partition_to_string(const NCPartition& p) {
    std::string out;
    for (const auto& b : p.blocks) {
        out += "{";
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(b[i]);
        }
        out += "}";
    }
    return out;
}

std::int64_t catalan_number(int n) {
    if (n < 0 || n > 30) throw value_error("catalan: n out of range");
    std::int64_t c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

} // namespace ncprob
