#include "lgskein/braid.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>

namespace lgs {

BraidWord::BraidWord(int strands, Word w) : n(strands), letters(std::move(w)) {
    if (n < 1) throw IndexOutOfRange("strand count must be positive");
    for (int x : letters)
        if (x == 0 || std::abs(x) >= n)
            throw IndexOutOfRange("generator " + std::to_string(x) + " out of range for " + std::to_string(n) +
                                  " strands");
}

std::string word_str(const Word& w) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(w[i]);
    }
    return out;
}

std::string BraidWord::str() const { return word_str(letters); }

Word parse_word(std::string_view text) {
    Word w;
    size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        std::string_view tok = text.substr(i, j - i);
        int v = 0;
        const char* b = tok.data();
        if (!tok.empty() && tok[0] == '+') ++b;
        auto [ptr, ec] = std::from_chars(b, tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw ParseError("bad braid letter '" + std::string(tok) + "'");
        if (v == 0) throw ParseError("braid letter 0");
        w.push_back(v);
        i = j;
    }
    return w;
}

BraidWord parse_braid(std::string_view text, int n) { return BraidWord(n, parse_word(text)); }

std::vector<int> braid_permutation(const BraidWord& w) {
    // pos[s] = current position of the strand that started at s.
    std::vector<int> at(w.n);
    std::iota(at.begin(), at.end(), 0);
    for (int x : w.letters) {
        int i = std::abs(x) - 1;
        std::swap(at[i], at[i + 1]);
    }
    // at[position] = starting strand; invert to start -> end.
    std::vector<int> perm(w.n);
    for (int pos = 0; pos < w.n; ++pos) perm[at[pos]] = pos;
    return perm;
}

int count_index(const Word& w, int g) {
    return static_cast<int>(std::count_if(w.begin(), w.end(), [g](int x) { return std::abs(x) == g; }));
}

ClosureInfo closure_info(const BraidWord& w) {
    ClosureInfo ci;
    std::vector<int> perm = braid_permutation(w);
    std::vector<bool> seen(w.n, false);
    for (int s = 0; s < w.n; ++s) {
        if (seen[s]) continue;
        ++ci.components;
        for (int x = s; !seen[x]; x = perm[x]) seen[x] = true;
    }
    for (int x : w.letters) ci.writhe += x > 0 ? 1 : -1;
    for (int g = 1; g < w.n; ++g)
        if (count_index(w.letters, g) == 0) ci.is_split_detectable = true;
    return ci;
}

BraidWord check_automorphism(const BraidWord& w) {
    Word out;
    out.reserve(w.letters.size());
    for (int x : w.letters) out.push_back(x > 0 ? w.n - x : -(w.n - (-x)));
    return BraidWord(w.n, std::move(out));
}

BraidWord markov_destabilize(const BraidWord& w) {
    int g = w.n - 1;
    if (g < 1 || count_index(w.letters, g) != 1)
        throw Inapplicable("destabilization needs exactly one occurrence of generator " + std::to_string(g));
    auto it = std::find_if(w.letters.begin(), w.letters.end(), [g](int x) { return std::abs(x) == g; });
    Word out(it + 1, w.letters.end());
    out.insert(out.end(), w.letters.begin(), it);
    return BraidWord(w.n - 1, std::move(out));
}

BraidWord markov_stabilize(const BraidWord& w, int sign) {
    Word out = w.letters;
    out.push_back(sign > 0 ? w.n : -w.n);
    return BraidWord(w.n + 1, std::move(out));
}

BraidWord move_insert_pair(const BraidWord& w, size_t pos, int letter) {
    Word out = w.letters;
    pos = std::min(pos, out.size());
    out.insert(out.begin() + static_cast<long>(pos), {letter, -letter});
    return BraidWord(w.n, std::move(out));
}

BraidWord move_rotate(const BraidWord& w, size_t k) {
    Word out = w.letters;
    if (!out.empty()) std::rotate(out.begin(), out.begin() + static_cast<long>(k % out.size()), out.end());
    return BraidWord(w.n, std::move(out));
}

bool move_braid_relation(BraidWord& w, size_t pos) {
    auto& L = w.letters;
    if (pos + 2 >= L.size()) return false;
    int a = L[pos], b = L[pos + 1], c = L[pos + 2];
    if (a != c || (a > 0) != (b > 0) || std::abs(std::abs(a) - std::abs(b)) != 1) return false;
    L[pos] = b;
    L[pos + 1] = a;
    L[pos + 2] = b;
    return true;
}

bool move_far_commute(BraidWord& w, size_t pos) {
    auto& L = w.letters;
    if (pos + 1 >= L.size() || std::abs(std::abs(L[pos]) - std::abs(L[pos + 1])) < 2) return false;
    std::swap(L[pos], L[pos + 1]);
    return true;
}

bool move_cancel_pair(BraidWord& w, size_t pos) {
    auto& L = w.letters;
    if (pos + 1 >= L.size() || L[pos] != -L[pos + 1]) return false;
    L.erase(L.begin() + static_cast<long>(pos), L.begin() + static_cast<long>(pos) + 2);
    return true;
}

BraidWord random_markov_perturb(const BraidWord& w, uint64_t seed, PerturbOptions opt) {
    std::mt19937_64 rng(seed);
    auto pick = [&](size_t bound) { return std::uniform_int_distribution<size_t>(0, bound - 1)(rng); };
    BraidWord cur = w;
    for (int step = 0; step < opt.steps; ++step) {
        size_t len = cur.letters.size();
        switch (pick(7)) {
            case 0:
                if (cur.n >= 2 && len + 2 <= static_cast<size_t>(opt.max_length)) {
                    int g = static_cast<int>(pick(cur.n - 1)) + 1;
                    cur = move_insert_pair(cur, pick(len + 1), pick(2) ? g : -g);
                }
                break;
            case 1:
                for (size_t k = 0, s = len ? pick(len) : 0; k < len; ++k)
                    if (move_cancel_pair(cur, (s + k) % len)) break;
                break;
            case 2:
                for (size_t k = 0, s = len ? pick(len) : 0; k < len; ++k)
                    if (move_braid_relation(cur, (s + k) % len)) break;
                break;
            case 3:
                for (size_t k = 0, s = len ? pick(len) : 0; k < len; ++k)
                    if (move_far_commute(cur, (s + k) % len)) break;
                break;
            case 4:
                if (len) cur = move_rotate(cur, pick(len));
                break;
            case 5:
                if (cur.n < opt.max_strands && len + 1 <= static_cast<size_t>(opt.max_length))
                    cur = markov_stabilize(cur, pick(2) ? 1 : -1);
                break;
            case 6:
                if (cur.n >= 2 && count_index(cur.letters, cur.n - 1) == 1) cur = markov_destabilize(cur);
                break;
        }
    }
    return cur;
}

}  // namespace lgs
