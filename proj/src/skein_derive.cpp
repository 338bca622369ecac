#include <algorithm>
#include <cstdlib>
#include <optional>

#include "lgskein/skein.hpp"

namespace lgs {

namespace {

constexpr int kPP = 0, kPM = 1, kMP = 2, kMM = 3;

int code_of(int a, int c) { return (a < 0 ? 2 : 0) + (c < 0 ? 1 : 0); }

bool has_token(const Word& w) {
    for (int x : w)
        if (is_hard_token(x)) return true;
    return false;
}

SkeinElement without_tokens(const SkeinElement& e) {
    SkeinElement out(e.strands());
    for (const auto& [w, c] : e.terms())
        if (!has_token(w)) out.add(w, c);
    return out;
}

// Token words of e other than those in allowed.
std::vector<Word> stray_tokens(const SkeinElement& e, const std::vector<Word>& allowed) {
    std::vector<Word> out;
    for (const auto& [w, c] : e.terms())
        if (has_token(w) && std::find(allowed.begin(), allowed.end(), w) == allowed.end()) out.push_back(w);
    return out;
}

SkeinElement reversed(const SkeinElement& e) {
    SkeinElement out(e.strands());
    for (const auto& [w, c] : e.terms()) out.add(Word(w.rbegin(), w.rend()), c);
    return out;
}

// Letters 1, 2 of a window element sent to generators i, j.
SkeinElement relabel(const SkeinElement& e, int i, int j, int n) {
    SkeinElement out(n);
    for (const auto& [w, c] : e.terms()) {
        Word v = w;
        for (int& x : v) x = (x > 0 ? 1 : -1) * (std::abs(x) == 1 ? i : j);
        out.add(v, c);
    }
    return out;
}

// sbar3 s2^e s3 = s2 s3^e sbar2, a braid identity for e = +-1.
Word rewrite_prefix(const Word& w) {
    if (w.size() < 3 || w[0] != -3 || std::abs(w[1]) != 2 || w[2] != 3) return w;
    Word v{2, w[1] > 0 ? 3 : -3, -2};
    v.insert(v.end(), w.begin() + 3, w.end());
    return v;
}

// The word u h with h a hard word on base 1 and u free of s3, as (u, code).
std::optional<std::pair<Word, int>> split_hard_suffix(const Word& w) {
    if (w.size() < 5) return std::nullopt;
    Word u(w.begin(), w.end() - 5), h(w.end() - 5, w.end());
    for (int x : u)
        if (std::abs(x) == 3) return std::nullopt;
    for (int a : {1, -1})
        for (int c : {1, -1})
            if (h == hard_word(1, a, c)) return std::make_pair(u, code_of(a, c));
    return std::nullopt;
}

// Reduces e term by term; words braid-equal to u h (h hard) keep h as a token, or use
// the expansion of h when one is already known.
SkeinElement reduce_keeping_hard(Engine& E, const SkeinElement& e) {
    SkeinElement out(4);
    for (const auto& [w, c] : e.terms()) {
        Word v = rewrite_prefix(w);
        if (auto split = split_hard_suffix(v)) {
            const auto& [u, code] = *split;
            if (const auto& rule = E.four_strand_rules()[code]) {
                out.add_scaled(E.reduce(rule->times_left(u)), c);
            } else {
                Word t = u;
                t.push_back(hard_token(1, (code & 2) ? -1 : 1, (code & 1) ? -1 : 1));
                out.add_scaled(E.reduce_word(t, 4), c);
            }
            continue;
        }
        out.add_scaled(E.reduce_word(w, 4), c);
    }
    return out;
}

void certify_rule(const SkeinElement& rhs, int code, int points) {
    int a = (code & 2) ? -1 : 1, c = (code & 1) ? -1 : 1;
    RewriteRule r;
    r.name = "four-strand " + word_str(hard_word(1, a, c));
    r.tag = RuleTag::FourStrand;
    r.lhs = hard_word(1, a, c);
    r.rhs = rhs;
    r.arity = 4;
    certify(r, points);
    for (const auto& [w, x] : rhs.terms())
        if (has_token(w) || !has_normal_shape(w, 4))
            throw UncertifiedRule(r.name + " has a term outside the normal shape: " + word_str(w));
}

SkeinElement scaled(const SkeinElement& e, const Fraction& c) { return e * c; }

}  // namespace

Fraction det_sigma_closed_form() {
    static const Fraction f = Fraction::parse("(t0 + t1 - 1)*(1 + t0*t1 + t0^2*t1 + t0*t1^2)/((t0 + t1)*(t0*t1 + 1)*(t0*t1 - 1))");
    return f;
}

Fraction det_sigma_from_coefficients() {
    const auto& a = r3_data().coeffs;
    auto at = [&](int l) { return a.at(l - 1); };
    return at(39) - at(75) - at(53) - at(47) - at(78);
}

FourStrandDerivation derive_four_strand_rules() {
    FourStrandDerivation D;
    const int X = hard_token(1, 1, 1), W = hard_token(1, -1, -1);
    auto note = [&](std::string s) { D.log.push_back(std::move(s)); };

    // s3 sbar2 s1 sbar2 sbar3 = sbar2 sbar3 s2 s3 s1 sbar2 sbar3 reduces without new hard words.
    {
        Engine E0;
        SkeinElement r = E0.reduce_word({-2, -3, 2, 3, 1, -2, -3}, 4);
        if (!stray_tokens(r, {}).empty()) throw SingularSigma("the +- hard word did not reduce");
        D.rules[kPM] = r;
        note("+-: direct reduction, " + std::to_string(r.size()) + " terms");
    }
    // Reading the +- expansion right to left gives the -+ word in terms of reducible words.
    {
        FourStrandRules R;
        R[kPM] = D.rules[kPM];
        Engine E1(R);
        SkeinElement r = E1.reduce(reversed(*D.rules[kPM]));
        if (!stray_tokens(r, {}).empty()) throw SingularSigma("the -+ hard word did not reduce");
        D.rules[kMP] = r;
        note("-+: reversed +- expansion, " + std::to_string(r.size()) + " terms");
    }

    FourStrandRules R12;
    R12[kPM] = D.rules[kPM];
    R12[kMP] = D.rules[kMP];
    Engine E(R12);
    // R2 with (i, j) = (3, 2) and the 78-term R3.
    const SkeinElement Z = relabel(builtin_relations().get("R2").as_zero(1, 3), 3, 2, 4);
    const SkeinElement Z3 = builtin_relations().get("R3").as_zero(1, 4);

    // ++: the system of Z s1 sbar2 s3 and R3 sbar2 s3 in x = s3 sbar2 s1 sbar2 s3, y = s2 x.
    {
        const Word x{X}, y{2, X}, yb{-2, X};
        SkeinElement e1 = reduce_keeping_hard(E, Z.times_right({1, -2, 3}));
        SkeinElement e4 = reduce_keeping_hard(E, Z3.times_right({-2, 3}));
        if (!stray_tokens(e1, {x, y}).empty() || !stray_tokens(e4, {x, y, yb}).empty())
            throw SingularSigma("unexpected hard words in the ++ equations");
        const Fraction cx = e1.coeff(x), cy = e1.coeff(y);
        const SkeinElement r1 = without_tokens(e1);
        // sbar2 (cx x + cy y + r1) = cx sbar2 x + cy x + sbar2 r1.
        SkeinElement s1 = E.reduce(r1.times_left({-2}));
        if (!stray_tokens(s1, {}).empty()) throw SingularSigma("unexpected hard words in sbar2 r1");
        const Fraction icx = cx.inverse();
        const Fraction ay = e4.coeff(y), ab = e4.coeff(yb);
        const Fraction ax = e4.coeff(x) - ab * cy * icx;
        const SkeinElement r4 = without_tokens(e4) - scaled(s1, ab * icx);
        D.det_sigma_pp = cx * ay - cy * ax;
        note("++: det(Sigma) = " + D.det_sigma_pp.str());
        if (D.det_sigma_pp.is_zero()) throw SingularSigma("det(Sigma) vanishes");
        if (!fraction_eq(D.det_sigma_pp, det_sigma_closed_form()))
            throw SingularSigma("det(Sigma) differs from the closed form: " + D.det_sigma_pp.str());
        D.rules[kPP] = scaled(scaled(r4, cy) - scaled(r1, ay), D.det_sigma_pp.inverse());
        note("++: " + std::to_string(D.rules[kPP]->size()) + " terms");
    }
    // --: Z s1 sbar2 sbar3 and R3 sbar2 sbar3 in w = sbar3 sbar2 s1 sbar2 sbar3 and w s2 = s2 w.
    {
        const Word w{W}, ws{W, 2}, sw{2, W};
        SkeinElement e2 = reduce_keeping_hard(E, Z.times_right({1, -2, -3}));
        SkeinElement e5 = reduce_keeping_hard(E, Z3.times_right({-2, -3}));
        // s2 w = w s2 as braids (sbar2 sbar3 s2 = s3 sbar2 sbar3); the engine may produce either.
        for (SkeinElement* e : {&e2, &e5}) {
            Fraction c = e->coeff(sw);
            if (c.is_zero()) continue;
            e->add(sw, -c);
            e->add(ws, c);
        }
        if (!stray_tokens(e2, {w, ws}).empty() || !stray_tokens(e5, {w, ws}).empty())
            throw SingularSigma("unexpected hard words in the -- equations");
        const Fraction p2 = e2.coeff(w), q2 = e2.coeff(ws), p5 = e5.coeff(w), q5 = e5.coeff(ws);
        D.det_sigma_mm = p2 * q5 - q2 * p5;
        note("--: det = " + D.det_sigma_mm.str());
        if (D.det_sigma_mm.is_zero()) throw SingularSigma("the -- determinant vanishes");
        D.rules[kMM] = scaled(scaled(without_tokens(e5), q2) - scaled(without_tokens(e2), q5), D.det_sigma_mm.inverse());
        note("--: " + std::to_string(D.rules[kMM]->size()) + " terms");
    }

    for (int code = 0; code < 4; ++code) certify_rule(*D.rules[code], code, 3);
    note("all four expansions certified at 3 points");
    return D;
}

const FourStrandDerivation& four_strand_derivation() {
    static const FourStrandDerivation d = derive_four_strand_rules();
    return d;
}

Engine& default_engine() {
    static Engine E(four_strand_derivation().rules);
    return E;
}

}  // namespace lgs
