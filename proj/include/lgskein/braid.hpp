#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lgskein/expr_parser.hpp"

namespace lgs {

struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct ComponentMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct Inapplicable : std::logic_error {
    using std::logic_error::logic_error;
};

// Letter i > 0 is s_i, i < 0 is the inverse of s_|i|.
using Word = std::vector<int>;

struct BraidWord {
    int n = 1;
    Word letters;

    BraidWord() = default;
    BraidWord(int strands, Word w);  // validates

    std::string str() const;
    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

BraidWord parse_braid(std::string_view text, int n);
Word parse_word(std::string_view text);
std::string word_str(const Word& w);

struct ClosureInfo {
    int components = 0;
    int writhe = 0;
    bool is_split_detectable = false;
};

// Image of strand positions 0..n-1 under the underlying permutation.
std::vector<int> braid_permutation(const BraidWord& w);
ClosureInfo closure_info(const BraidWord& w);

// s_k -> s_{n-k}, signs and order kept.
BraidWord check_automorphism(const BraidWord& w);

// Number of letters with |letter| == g.
int count_index(const Word& w, int g);

BraidWord markov_destabilize(const BraidWord& w);
BraidWord markov_stabilize(const BraidWord& w, int sign);

struct PerturbOptions {
    int steps = 8;
    int max_strands = 5;
    int max_length = 16;
};

// Random closure-preserving moves: pair insertion and cancellation, braid relation,
// far commutation, cyclic rotation, stabilization and destabilization.
BraidWord random_markov_perturb(const BraidWord& w, uint64_t seed, PerturbOptions opt = {});

// Individual moves, each returning the moved word.
BraidWord move_insert_pair(const BraidWord& w, size_t pos, int letter);
BraidWord move_rotate(const BraidWord& w, size_t k);
// Rewrites a b a -> b a b at pos when the three letters share a sign and |a|, |b| are adjacent.
bool move_braid_relation(BraidWord& w, size_t pos);
// Swaps letters pos, pos+1 when their indices differ by at least 2.
bool move_far_commute(BraidWord& w, size_t pos);
// Removes letters pos, pos+1 when they are mutually inverse.
bool move_cancel_pair(BraidWord& w, size_t pos);

}  // namespace lgs
