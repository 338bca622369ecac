#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lgskein/braid.hpp"
#include "lgskein/fraction.hpp"
#include "lgskein/rmatrix.hpp"
#include "lgskein/rt_eval.hpp"
#include "lgskein/specialize.hpp"

namespace lgs {

struct SingularSigma : std::logic_error {
    using std::logic_error::logic_error;
};
struct NonTermination : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DependentSupport : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UncertifiedRule : std::logic_error {
    using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Skein elements

// Linear combination of braid words on a fixed number of strands.
class SkeinElement {
public:
    using Terms = std::map<Word, Fraction>;

    SkeinElement() = default;
    explicit SkeinElement(int n) : n_(n) {}
    static SkeinElement of_word(int n, Word w, const Fraction& c = Fraction(1));

    int strands() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    // Coefficient of w, zero when absent.
    Fraction coeff(const Word& w) const;

    void add(const Word& w, const Fraction& c);
    void add_scaled(const SkeinElement& e, const Fraction& c);
    SkeinElement& operator+=(const SkeinElement& e);
    SkeinElement& operator-=(const SkeinElement& e);
    SkeinElement& operator*=(const Fraction& c);

    // Concatenation on the left or right by a word.
    SkeinElement times_left(const Word& w) const;
    SkeinElement times_right(const Word& w) const;

    std::string str() const;

private:
    int n_ = 0;
    Terms terms_;
};

SkeinElement operator+(SkeinElement a, const SkeinElement& b);
SkeinElement operator-(SkeinElement a, const SkeinElement& b);
SkeinElement operator*(SkeinElement a, const Fraction& c);
// Bilinear extension of word concatenation.
SkeinElement operator*(const SkeinElement& a, const SkeinElement& b);
bool operator==(const SkeinElement& a, const SkeinElement& b);

// Letters 1.. of a window word moved to generators base, base+1, ...
Word shift_word(const Word& w, int base);
SkeinElement shift_element(const SkeinElement& e, int base, int n);

// ---------------------------------------------------------------------------
// Relation tables

enum class RuleTag { R1, R2, ModR2, R3, Consequence, ThreeStrand, FourStrand };
std::string tag_name(RuleTag t);
RuleTag parse_tag(const std::string& s);

struct RelationTerm {
    Word word;
    Fraction coeff;
};

// sum(lhs) = sum(rhs), written in window letters 1, 2, 3 (= s_i, s_j, s_k).
struct Relation {
    std::string name;
    RuleTag tag = RuleTag::R1;
    std::vector<RelationTerm> lhs;
    std::vector<RelationTerm> rhs;

    // Strands needed to realize the window.
    int arity() const;
    // lhs - rhs as a single element on arity() strands.
    SkeinElement as_zero(int base = 1, int n = 0) const;
};

struct RelationTable {
    std::vector<Relation> relations;

    const Relation& get(const std::string& name) const;
    std::string dump() const;
};

// Parses the relation data format; errors carry the line number.
RelationTable parse_relations(std::string_view text);
const std::string& builtin_relation_text();
const RelationTable& builtin_relations();

// The 78 words and coefficients on the right of R3, in their fixed order.
struct R3Data {
    std::vector<Word> words;
    std::vector<Fraction> coeffs;
};
const R3Data& r3_data();

// ---------------------------------------------------------------------------
// Representation images

// Sum over terms of c * rho(w) applied to basis column col, at the point P.
SparseVec<PVal> apply_element(const SkeinElement& e, const Rep<PVal>& M, const SpecPoint& P, uint32_t col);
// rho(a) == rho(b) on every basis column at P.
CheckResult same_image(const SkeinElement& a, const SkeinElement& b, const Rep<PVal>& M, const SpecPoint& P);

// Points used for rule certificates: admissible, rational p and q.
const std::vector<SpecPoint>& certificate_points();

// ---------------------------------------------------------------------------
// Rewrite rules

struct RewriteRule {
    std::string name;
    RuleTag tag = RuleTag::R1;
    Word lhs;          // window letters
    SkeinElement rhs;  // window letters, on arity strands
    int arity = 2;
    int certified_points = 0;
};

// Checks rho_V1(lhs) == rho_V1(rhs) at the certificate points; records the count.
// Throws UncertifiedRule on a mismatch. With use_lg, reruns the check under rho_LG.
void certify(RewriteRule& r, int points = 2, bool use_lg = false);

enum class RelationKind { R1, R2, R3 };
enum class VerifyMode { Symbolic, Specialized };

// Substitutes generators by the R-matrix action and checks the relation exactly.
CheckResult verify_relation(RelationKind rel, Kind kind, VerifyMode mode, int points = 5, uint64_t seed = 1);

// ---------------------------------------------------------------------------
// Reduction engine

// Token letters standing for an unresolved word s_{b+2}^a sbar_{b+1} s_b sbar_{b+1} s_{b+2}^c
// at base b; used while deriving the four-strand rules.
constexpr int kHardToken = 1000;
int hard_token(int base, int a, int c);
bool is_hard_token(int letter);
Word hard_word(int base, int a, int c);
// Replaces hard tokens by the words they stand for.
Word expand_tokens(const Word& w);

// Expansion of s_3^a sbar_2 s_1 sbar_2 s_3^c (index 2*(a<0) + (c<0)) into words with at most
// one s_3^{+-1} and the words sbar_3 s_2 sbar_3, s_1 sbar_3 s_2 sbar_3, sbar_1 sbar_3 s_2 sbar_3.
using FourStrandRules = std::array<std::optional<SkeinElement>, 4>;

struct ReduceStats {
    uint64_t word_steps = 0;
    uint64_t memo_hits = 0;
};

class Engine {
public:
    // Without four-strand rules, unresolved hard words are kept as tokens.
    explicit Engine(FourStrandRules rules = {}, uint64_t budget = 50'000'000);

    // Two-generator normal form on the window (base, base+1), in the 20-word basis.
    SkeinElement reduce_window(const Word& w, int base, int n);
    // Powers of a single generator reduced to 1, s, sbar.
    SkeinElement reduce_b2(const SkeinElement& e);
    SkeinElement reduce_b3(const SkeinElement& e);
    // Normal form on n strands: at most one s_{n-1}^{+-1}, or c sbar_{n-1} s_{n-2} sbar_{n-1}
    // with c on n-2 strands; n = 3 uses the 20-word basis.
    SkeinElement reduce(const SkeinElement& e);
    SkeinElement reduce_word(const Word& w, int n);

    const std::vector<RewriteRule>& rules() const { return rules_; }
    const RewriteRule& rule(const std::string& name) const;
    const ReduceStats& stats() const { return stats_; }
    const FourStrandRules& four_strand_rules() const { return hard_; }

private:
    std::vector<RewriteRule> rules_;
    FourStrandRules hard_;
    uint64_t budget_;
    ReduceStats stats_;
    std::map<Word, SkeinElement> window_memo_;  // window letters 1, 2
    std::map<std::pair<int, Word>, SkeinElement> memo_;

    void register_rules();
    void step();
    const SkeinElement& window_nf(const Word& w);
    SkeinElement window_nf_uncached(const Word& w);
    SkeinElement reduce_top(const Word& w, int n);
    SkeinElement reduce_pair(const Word& X, int a, const Word& w, int b, const Word& y, int n);
    SkeinElement with_triple(const Word& left, const Word& right, const Fraction& c, int n);
    SkeinElement absorb(const Word& t, int n);
    SkeinElement reduce_around_token(const Word& w, int n);
};

// The 20 words spanning C_3, in letters 1, 2.
const std::vector<Word>& window_basis();
// Normal form checks.
bool in_window_basis(const Word& w);              // one of the 20 basis words, letters 1, 2
bool has_normal_shape(const Word& w, int n);       // n >= 4 output shape

// ---------------------------------------------------------------------------
// Four-strand derivation

struct FourStrandDerivation {
    FourStrandRules rules;
    Fraction det_sigma_pp;  // determinant of the 2x2 system for s3 sbar2 s1 sbar2 s3
    Fraction det_sigma_mm;  // the analogous system for the inverse letters
    std::vector<std::string> log;
};

// Derives the expansions of s_3^{+-1} sbar_2 s_1 sbar_2 s_3^{+-1}; throws SingularSigma
// if a determinant vanishes or disagrees with the closed form.
FourStrandDerivation derive_four_strand_rules();
const FourStrandDerivation& four_strand_derivation();

// Engine with the derived four-strand rules, shared and immutable after construction.
Engine& default_engine();

// Closed form of det(Sigma) and its expression in the R3 coefficients.
Fraction det_sigma_closed_form();
Fraction det_sigma_from_coefficients();

// ---------------------------------------------------------------------------
// Evaluation and checks

// Reduction of w in C_n to the normal shape.
SkeinElement reduce_normal_form(const SkeinElement& e, int n);

// Recursive evaluation through reduction, split vanishing and destabilization.
// Compared against evaluate_rt when check_against_rt is set.
InvariantValue evaluate_skein(const BraidWord& w, Kind kind, bool check_against_rt = true);
Fraction skein_value(const BraidWord& w);

struct SkeinMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rank of the images of the 20 basis words of C_3 at an admissible point.
int rank_c3(Kind kind = Kind::LG, const std::optional<SpecPoint>& P = std::nullopt, bool duplicate_one = false);

// Solves for the 78 coefficients of R3 under rho_V1 at P.
std::vector<PVal> solve_r3_at_point(const SpecPoint& P, Kind kind = Kind::V1);

// Common denominator D of the R3 coefficients, so that D * R3 has Laurent coefficients.
Scalar r3_common_denominator();
// Left side of D * R3 under rho_V1 at (t0, t1), i.e. D(t0, t1) times the operator
// s1 sbar3 s2 sbar3 - sbar3 s2 sbar3 s1; throws std::logic_error if D * R3 fails there.
bool r3_left_side_vanishes(const mpq_class& t0, const mpq_class& t1);
// The bare operator s1 sbar3 s2 sbar3 - sbar3 s2 sbar3 s1 under rho_V1.
bool r3_left_operator_vanishes(const mpq_class& t0, const mpq_class& t1);
bool check_r3_degeneration();

// (2n-2)! (2n-1)! / ((n-1)! n!)^2
mpz_class conjectured_dim(int n);

}  // namespace lgs
