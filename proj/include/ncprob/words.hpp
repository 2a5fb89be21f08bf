#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "ncprob/error.hpp"

namespace ncprob {

// Alphabet [s] = {1..s} with a positive integer weight per letter.
struct Alphabet {
    int s = 1;
    std::vector<int> weights; // size s, all >= 1

    Alphabet() : weights{1} {}
    Alphabet(int s_, std::vector<int> w) : s(s_), weights(std::move(w)) {
        if (s < 1) throw value_error("alphabet: s must be >= 1");
        if (static_cast<int>(weights.size()) != s) throw value_error("alphabet: weight count != s");
        for (int d : weights)
            if (d < 1) throw value_error("alphabet: weights must be >= 1");
    }
    static Alphabet ones(int s_) { return Alphabet(s_, std::vector<int>(s_, 1)); }

    bool operator==(const Alphabet& o) const { return s == o.s && weights == o.weights; }
    bool operator!=(const Alphabet& o) const { return !(*this == o); }
};

// Finite word over [s]; empty allowed only transiently (series index words are nonempty).
struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> ls) : letters(std::move(ls)) {}

    int length() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }

    bool operator==(const Word& o) const { return letters == o.letters; }
    bool operator!=(const Word& o) const { return letters != o.letters; }
    // Canonical intrinsic order: length first, then lexicographic.
    bool operator<(const Word& o) const {
        if (letters.size() != o.letters.size()) return letters.size() < o.letters.size();
        return letters < o.letters;
    }
};

inline void check_word(const Alphabet& a, const Word& w) {
    for (int x : w.letters)
        if (x < 1 || x > a.s) throw value_error("word: letter out of range");
}

inline int degree(const Alphabet& a, const Word& w) {
    int d = 0;
    for (int x : w.letters) {
        if (x < 1 || x > a.s) throw value_error("word: letter out of range");
        d += a.weights[x - 1];
    }
    return d;
}

inline Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

inline std::string word_to_string(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w.letters[i]);
    }
    return out;
}

inline Word parse_word(const std::string& text) {
    Word w;
    if (text.empty()) return w;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty()) throw parse_error("word: empty letter in \"" + text + "\"");
        for (char ch : tok)
            if (ch < '0' || ch > '9') throw parse_error("word: bad letter \"" + tok + "\"");
        w.letters.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return w;
}

// All nonempty words of weighted degree <= max_deg, ordered by
// (degree, length, lexicographic).  Canonical order for every enumeration.
inline std::vector<Word> enumerate_words(const Alphabet& a, int max_deg) {
    if (max_deg < 0) throw value_error("enumerate_words: negative degree bound");
    std::vector<Word> out;
    std::vector<std::pair<int, Word>> frontier{{0, Word{}}};
    // Breadth-first by length; degrees only grow, weights >= 1 bound length by max_deg.
    std::vector<std::vector<Word>> by_deg(max_deg + 1);
    while (!frontier.empty()) {
        std::vector<std::pair<int, Word>> next;
        for (const auto& [d, w] : frontier) {
            for (int x = 1; x <= a.s; ++x) {
                int nd = d + a.weights[x - 1];
                if (nd > max_deg) continue;
                Word nw = w;
                nw.letters.push_back(x);
                by_deg[nd].push_back(nw);
                next.emplace_back(nd, std::move(nw));
            }
        }
        frontier = std::move(next);
    }
    for (int d = 1; d <= max_deg; ++d) {
        std::sort(by_deg[d].begin(), by_deg[d].end()); // Word order = (length, lex)
        out.insert(out.end(), by_deg[d].begin(), by_deg[d].end());
    }
    return out;
}

// One tensor factor of a free-product monomial: leg 1 or 2, nonempty word.
struct Block {
    int leg = 1;
    Word word;

    bool operator==(const Block& o) const { return leg == o.leg && word == o.word; }
    bool operator<(const Block& o) const {
        if (leg != o.leg) return leg < o.leg;
        return word < o.word;
    }
};

// Alternating product a_1 ... a_m in the free product of two copies of the
// word algebra.  Invariant: legs alternate and every block word is nonempty.
struct FreeMonomial {
    std::vector<Block> blocks;

    int size() const { return static_cast<int>(blocks.size()); }
    bool empty() const { return blocks.empty(); }

    bool operator==(const FreeMonomial& o) const { return blocks == o.blocks; }
    bool operator<(const FreeMonomial& o) const { return blocks < o.blocks; }
};

// Normalize a block list into an alternating monomial by merging adjacent
// blocks of equal leg (boundary contraction).  Block words must be nonempty.
inline FreeMonomial contract_blocks(const std::vector<Block>& raw) {
    FreeMonomial m;
    for (const Block& b : raw) {
        if (b.leg != 1 && b.leg != 2) throw value_error("monomial: leg must be 1 or 2");
        if (b.word.empty()) throw value_error("monomial: empty block word");
        if (!m.blocks.empty() && m.blocks.back().leg == b.leg)
            m.blocks.back().word = concat(m.blocks.back().word, b.word);
        else
            m.blocks.push_back(b);
    }
    return m;
}

inline FreeMonomial make_monomial(std::vector<Block> blocks) { return contract_blocks(blocks); }

inline FreeMonomial monomial_mul(const FreeMonomial& a, const FreeMonomial& b) {
    std::vector<Block> raw = a.blocks;
    raw.insert(raw.end(), b.blocks.begin(), b.blocks.end());
    return contract_blocks(raw);
}

// Sub-product over a subset of block indices (ascending), re-contracted.
inline FreeMonomial restrict_monomial(const FreeMonomial& m, const std::vector<int>& indices) {
    std::vector<Block> raw;
    raw.reserve(indices.size());
    int prev = -1;
    for (int i : indices) {
        if (i < 0 || i >= m.size()) throw value_error("monomial: restriction index out of range");
        if (i <= prev) throw value_error("monomial: restriction indices must ascend");
        prev = i;
        raw.push_back(m.blocks[i]);
    }
    return contract_blocks(raw);
}

inline std::string monomial_to_string(const FreeMonomial& m) {
    if (m.empty()) return "[]";
    std::string out;
    for (const Block& b : m.blocks)
        out += "[" + std::string(b.leg == 1 ? "x" : "y") + "|" + word_to_string(b.word) + "]";
    return out;
}

} // namespace ncprob
