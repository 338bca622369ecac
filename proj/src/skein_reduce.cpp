#include <algorithm>
#include <cstdlib>

#include "lgskein/skein.hpp"

namespace lgs {

namespace {

int idx(int x) { return std::abs(x); }
int sgn_of(int x) { return x > 0 ? 1 : -1; }

Word concat(std::initializer_list<const Word*> parts) {
    Word out;
    for (const Word* p : parts) out.insert(out.end(), p->begin(), p->end());
    return out;
}

// Real letters on generators base, base+1 to window letters 1, 2.
Word to_window(const Word& w, int base) {
    Word out(w);
    for (int& x : out) x = sgn_of(x) * (idx(x) - base + 1);
    return out;
}

int count_of(const Word& w, int g) {
    int c = 0;
    for (int x : w) c += idx(x) == g;
    return c;
}

bool has_token(const Word& w) {
    return std::any_of(w.begin(), w.end(), [](int x) { return is_hard_token(x); });
}

// Solves sum(lhs) - sum(rhs) = 0 for the word `target`.
SkeinElement solve_for(const Relation& r, const Word& target, int n) {
    SkeinElement z = r.as_zero(1, n);
    Fraction c = z.coeff(target);
    if (c.is_zero()) throw std::logic_error(r.name + " does not contain the requested word");
    SkeinElement rest(n);
    for (const auto& [w, x] : z.terms())
        if (w != target) rest.add(w, -x);
    return rest * c.inverse();
}

// Half twist of B_3: letters 1 <-> 2.
SkeinElement swap_window(const SkeinElement& e) {
    SkeinElement out(e.strands());
    for (const auto& [w, x] : e.terms()) {
        Word v(w);
        for (int& y : v) y = sgn_of(y) * (3 - idx(y));
        out.add(v, x);
    }
    return out;
}

const Word kWindowD{-2, 1, -2};

}  // namespace

// ---------------------------------------------------------------------------

const std::vector<Word>& window_basis() {
    static const std::vector<Word> basis = {
        {},          {1},         {-1},         {2},          {-2},         {2, 1},        {2, -1},
        {-2, 1},     {-2, -1},    {1, 2},       {-1, 2},      {1, -2},      {-1, -2},      {1, 2, 1},
        {1, 2, -1},  {1, -2, -1}, {-1, -2, 1},  {-1, -2, -1}, {-1, 2, -1},  {-2, 1, -2}};
    return basis;
}

bool in_window_basis(const Word& w) {
    const auto& basis = window_basis();
    return std::find(basis.begin(), basis.end(), w) != basis.end();
}

bool has_normal_shape(const Word& w, int n) {
    const int m = n - 1;
    if (has_token(w)) return false;
    for (int x : w)
        if (idx(x) > m || x == 0) return false;
    int c = count_of(w, m);
    if (c <= 1) return true;
    if (c != 2 || w.size() < 3) return false;
    Word tail(w.end() - 3, w.end());
    if (tail != Word{-m, m - 1, -m}) return false;
    for (size_t i = 0; i + 3 < w.size(); ++i)
        if (idx(w[i]) >= m - 1) return false;
    return true;
}

Engine::Engine(FourStrandRules rules, uint64_t budget) : hard_(std::move(rules)), budget_(budget) { register_rules(); }

const RewriteRule& Engine::rule(const std::string& name) const {
    for (const auto& r : rules_)
        if (r.name == name) return r;
    throw std::out_of_range("no rule named " + name);
}

namespace {

RewriteRule make_rule(std::string name, RuleTag tag, Word lhs, SkeinElement rhs, int arity) {
    RewriteRule r;
    r.name = std::move(name);
    r.tag = tag;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.arity = arity;
    certify(r);
    return r;
}

// Rules read off the relation data, certified once per process.
const std::vector<RewriteRule>& base_rules() {
    static const std::vector<RewriteRule> rules = [] {
        std::vector<RewriteRule> out;
        const RelationTable& T = builtin_relations();
        auto add = [&](std::string name, RuleTag tag, Word lhs, SkeinElement rhs, int arity) {
            out.push_back(make_rule(std::move(name), tag, std::move(lhs), std::move(rhs), arity));
        };
        const Relation& r1 = T.get("R1");
        add("R1 square", RuleTag::Consequence, {1, 1}, solve_for(r1, {1, 1}, 2), 2);
        // Multiply R1 by sbar on the left: s + a + b sbar + c sbar^2 = 0.
        {
            SkeinElement z = r1.as_zero(1, 2).times_left({-1});
            SkeinElement norm(2);
            for (const auto& [w, x] : z.terms()) {
                Word v = w;
                if (v.size() >= 2 && v[0] == -1 && v[1] == 1) v.erase(v.begin(), v.begin() + 2);
                norm.add(v, x);
            }
            Relation tmp;
            tmp.name = "R1 inverse";
            for (const auto& [w, x] : norm.terms()) tmp.lhs.push_back({w, x});
            add("R1 inverse square", RuleTag::Consequence, {-1, -1}, solve_for(tmp, {-1, -1}, 2), 2);
        }
        add("R2 solved", RuleTag::R2, {-1, 2, 1}, solve_for(T.get("R2"), {-1, 2, 1}, 3), 3);
        {
            const Relation& m = T.get("modR2");
            SkeinElement rhs(3);
            for (const auto& t : m.rhs) rhs.add(t.word, t.coeff);
            add("modR2", RuleTag::ModR2, {2, -1, 2}, rhs, 3);
            add("modR2 mirrored", RuleTag::ModR2, {1, -2, 1}, swap_window(rhs), 3);
        }
        for (const char* name : {"C1", "C2", "C3", "C4"}) {
            const Relation& c = T.get(name);
            SkeinElement rhs(3);
            for (const auto& t : c.rhs) rhs.add(t.word, t.coeff);
            add(std::string("three-strand ") + name, RuleTag::ThreeStrand, c.lhs.at(0).word, rhs, 3);
        }
        // R3 in the four directions: s_i^{+-1} D and D s_i^{+-1}, D = sbar_k s_j sbar_k.
        {
            const Relation& r3 = T.get("R3");
            SkeinElement sum(4);
            for (const auto& t : r3.rhs) sum.add(t.word, t.coeff);
            const Word D{-3, 2, -3};
            Word D1 = concat({&D});
            D1.push_back(1);
            Word Dm = concat({&D});
            Dm.push_back(-1);
            Word oneD{1, -3, 2, -3}, moneD{-1, -3, 2, -3};
            SkeinElement conj = sum.times_left({-1}).times_right({-1});
            // s_i D = D s_i + sum
            add("R3 left", RuleTag::R3, oneD, SkeinElement::of_word(4, D1) + sum, 4);
            add("R3 right", RuleTag::R3, D1, SkeinElement::of_word(4, oneD) - sum, 4);
            // sbar_i D = D sbar_i - sbar_i sum sbar_i
            add("R3 inverse left", RuleTag::Consequence, moneD, SkeinElement::of_word(4, Dm) - conj, 4);
            add("R3 inverse right", RuleTag::Consequence, Dm, SkeinElement::of_word(4, moneD) + conj, 4);
        }
        return out;
    }();
    return rules;
}

}  // namespace

void Engine::register_rules() {
    rules_ = base_rules();
    for (int code = 0; code < 4; ++code) {
        if (!hard_[code]) continue;
        int a = (code & 2) ? -1 : 1, c = (code & 1) ? -1 : 1;
        rules_.push_back(make_rule("four-strand " + word_str(hard_word(1, a, c)), RuleTag::FourStrand, hard_word(1, a, c), *hard_[code], 4));
    }
}

void Engine::step() {
    if (++stats_.word_steps > budget_) throw NonTermination("reduction budget exhausted");
}

// ---------------------------------------------------------------------------
// Two-generator window

const SkeinElement& Engine::window_nf(const Word& w) {
    auto it = window_memo_.find(w);
    if (it != window_memo_.end()) {
        ++stats_.memo_hits;
        return it->second;
    }
    SkeinElement e = window_nf_uncached(w);
    return window_memo_.emplace(w, std::move(e)).first->second;
}

SkeinElement Engine::window_nf_uncached(const Word& w) {
    step();
    SkeinElement out(3);
    auto expand = [&](const Word& pre, const SkeinElement& mid, const Word& post, const Fraction& c) {
        for (const auto& [u, x] : mid.terms()) {
            Word v = concat({&pre, &u, &post});
            out.add_scaled(window_nf(v), c * x);
        }
    };
    // Free cancellation, then R1 on the first adjacent equal-index pair.
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        if (idx(w[i]) != idx(w[i + 1])) continue;
        Word pre(w.begin(), w.begin() + i), post(w.begin() + i + 2, w.end());
        if (w[i] == -w[i + 1]) {
            out.add_scaled(window_nf(concat({&pre, &post})), 1);
            return out;
        }
        const RewriteRule& r = rule(w[i] > 0 ? "R1 square" : "R1 inverse square");
        expand(pre, shift_element(r.rhs, idx(w[i]), 3), post, 1);
        return out;
    }
    if (w.size() <= 2 || in_window_basis(w)) {
        out.add(w, 1);
        return out;
    }
    if (w.size() >= 5) {
        Word pre(w.begin(), w.end() - 1), last{w.back()};
        expand({}, window_nf(pre), last, 1);
        return out;
    }
    if (w.size() == 3) {
        for (const char* name : {"R2 solved", "modR2", "modR2 mirrored"}) {
            const RewriteRule& r = rule(name);
            if (r.lhs == w) {
                expand({}, r.rhs, {}, 1);
                return out;
            }
        }
    }
    // Braid relation: x^e y^e x^f = y^f x^e y^e, read in either direction.
    for (size_t i = 0; i + 2 < w.size(); ++i) {
        int p = w[i], q = w[i + 1], r = w[i + 2];
        Word pre(w.begin(), w.begin() + i), post(w.begin() + i + 3, w.end());
        Word mid;
        if (sgn_of(p) == sgn_of(q))
            mid = {sgn_of(r) * idx(q), p, q};
        else if (sgn_of(q) == sgn_of(r))
            mid = {q, r, sgn_of(p) * idx(q)};
        else
            continue;
        out.add_scaled(window_nf(concat({&pre, &mid, &post})), 1);
        return out;
    }
    for (const char* name : {"three-strand C1", "three-strand C2", "three-strand C3", "three-strand C4"}) {
        const RewriteRule& r = rule(name);
        if (r.lhs == w) {
            expand({}, r.rhs, {}, 1);
            return out;
        }
    }
    throw std::logic_error("no window rule applies to " + word_str(w));
}

SkeinElement Engine::reduce_window(const Word& w, int base, int n) {
    SkeinElement out(n);
    for (const auto& [u, x] : window_nf(to_window(w, base)).terms()) out.add(shift_word(u, base), x);
    return out;
}

SkeinElement Engine::reduce_b2(const SkeinElement& e) {
    SkeinElement out(e.strands());
    for (const auto& [w, x] : e.terms()) {
        if (w.empty()) {
            out.add(w, x);
            continue;
        }
        for (int y : w)
            if (idx(y) != idx(w[0])) throw std::invalid_argument("reduce_b2 needs a single generator index");
        out.add_scaled(reduce_window(w, idx(w[0]), e.strands()), x);
    }
    return out;
}

SkeinElement Engine::reduce_b3(const SkeinElement& e) {
    SkeinElement out(e.strands());
    for (const auto& [w, x] : e.terms()) {
        if (w.empty()) {
            out.add(w, x);
            continue;
        }
        int lo = idx(w[0]), hi = idx(w[0]);
        for (int y : w) lo = std::min(lo, idx(y)), hi = std::max(hi, idx(y));
        if (hi - lo > 1) throw std::invalid_argument("reduce_b3 needs two adjacent generator indices");
        int base = hi == lo ? std::max(1, std::min(lo, e.strands() - 2)) : lo;
        if (hi == lo && lo == base + 1) base = lo - 1;
        out.add_scaled(reduce_window(w, base, e.strands()), x);
    }
    return out;
}

// ---------------------------------------------------------------------------
// n strands

SkeinElement Engine::reduce(const SkeinElement& e) {
    SkeinElement out(e.strands());
    for (const auto& [w, x] : e.terms()) out.add_scaled(reduce_word(w, e.strands()), x);
    return out;
}

SkeinElement Engine::reduce_word(const Word& w, int n) {
    auto key = std::make_pair(n, w);
    if (auto it = memo_.find(key); it != memo_.end()) {
        ++stats_.memo_hits;
        return it->second;
    }
    step();
    SkeinElement out(n);
    if (has_token(w)) {
        out = reduce_around_token(w, n);
    } else if (n <= 1) {
        if (!w.empty()) throw IndexOutOfRange("word " + word_str(w) + " on one strand");
        out.add(w, 1);
    } else if (n <= 3) {
        for (int x : w)
            if (idx(x) >= n || x == 0) throw IndexOutOfRange("letter " + std::to_string(x) + " on " + std::to_string(n) + " strands");
        for (const auto& [u, x] : window_nf(w).terms()) out.add(u, x);
    } else {
        out = reduce_top(w, n);
    }
    return memo_.emplace(key, std::move(out)).first->second;
}

SkeinElement Engine::reduce_top(const Word& w, int n) {
    const int m = n - 1;
    std::vector<size_t> pos;
    for (size_t i = 0; i < w.size(); ++i) {
        if (idx(w[i]) > m || w[i] == 0) throw IndexOutOfRange("letter " + std::to_string(w[i]) + " on " + std::to_string(n) + " strands");
        if (idx(w[i]) == m) pos.push_back(i);
    }
    SkeinElement out(n);
    if (pos.empty()) {
        for (const SkeinElement e_ = reduce_word(w, n - 1); const auto& [u, x] : e_.terms()) out.add(u, x);
        return out;
    }
    if (pos.size() == 1) {
        Word a(w.begin(), w.begin() + pos[0]), b(w.begin() + pos[0] + 1, w.end());
        SkeinElement A = reduce_word(a, n - 1), B = reduce_word(b, n - 1);
        for (const auto& [u, x] : A.terms())
            for (const auto& [v, y] : B.terms()) {
                Word t = u;
                t.push_back(w[pos[0]]);
                t.insert(t.end(), v.begin(), v.end());
                out.add(t, x * y);
            }
        return out;
    }
    size_t p1 = pos[pos.size() - 2], p2 = pos.back();
    Word X(w.begin(), w.begin() + p1), mid(w.begin() + p1 + 1, w.begin() + p2), y(w.begin() + p2 + 1, w.end());
    return reduce_pair(X, w[p1], mid, w[p2], y, n);
}

SkeinElement Engine::reduce_pair(const Word& X, int a, const Word& mid, int b, const Word& y, int n) {
    const int m = n - 1;
    SkeinElement out(n);
    const Word Dlow{-(m - 1), m - 2, -(m - 1)};
    for (const SkeinElement e_ = reduce_word(mid, n - 1); const auto& [wp, c] : e_.terms()) {
        if (has_token(wp)) {
            Word v = X;
            v.push_back(a);
            v.insert(v.end(), wp.begin(), wp.end());
            v.push_back(b);
            v.insert(v.end(), y.begin(), y.end());
            out.add(v, c);
            continue;
        }
        int cnt = count_of(wp, m - 1);
        if (cnt == 0) {
            // wp commutes with s_m; the two top letters become adjacent.
            Word pre = concat({&X, &wp});
            if (a == -b) {
                out.add_scaled(reduce_word(concat({&pre, &y}), n), c);
                continue;
            }
            const RewriteRule& r = rule(a > 0 ? "R1 square" : "R1 inverse square");
            for (const auto& [u, x] : r.rhs.terms()) {
                Word su = shift_word(u, m);
                out.add_scaled(reduce_word(concat({&pre, &su, &y}), n), c * x);
            }
            continue;
        }
        if (cnt == 1) {
            size_t k = 0;
            while (idx(wp[k]) != m - 1) ++k;
            Word u(wp.begin(), wp.begin() + k), v(wp.begin() + k + 1, wp.end());
            Word T{a, wp[k], b};
            for (const auto& [t, ct] : window_nf(to_window(T, m - 1)).terms()) {
                if (t == kWindowD) {
                    out += with_triple(concat({&X, &u}), concat({&v, &y}), c * ct, n);
                } else {
                    Word st = shift_word(t, m - 1);
                    out.add_scaled(reduce_word(concat({&X, &u, &st, &v, &y}), n), c * ct);
                }
            }
            continue;
        }
        // wp = c0 sbar_{m-1} s_{m-2} sbar_{m-1} with c0 on generators below m-2.
        if (cnt != 2 || wp.size() < 3 || Word(wp.end() - 3, wp.end()) != Dlow)
            throw std::logic_error("unexpected normal form " + word_str(wp));
        Word c0(wp.begin(), wp.end() - 3);
        const int base = m - 2;
        const int code = (a < 0 ? 2 : 0) + (b < 0 ? 1 : 0);
        if (!hard_[code]) {
            Word v = concat({&X, &c0});
            v.push_back(hard_token(base, a, b));
            v.insert(v.end(), y.begin(), y.end());
            out.add(v, c);
            continue;
        }
        for (const auto& [t, ct] : hard_[code]->terms()) {
            Word st = shift_word(t, base);
            if (count_of(st, m) == 2) {
                Word pre(st.begin(), st.end() - 3);
                out += with_triple(concat({&X, &c0, &pre}), y, c * ct, n);
            } else {
                out.add_scaled(reduce_word(concat({&X, &c0, &st, &y}), n), c * ct);
            }
        }
    }
    return out;
}

// L D R with D = sbar_m s_{m-1} sbar_m and R free of s_m.
SkeinElement Engine::with_triple(const Word& L, const Word& R, const Fraction& c, int n) {
    const int m = n - 1;
    std::vector<std::pair<Word, Fraction>> rest;
    std::map<Word, Fraction> states{{Word{}, Fraction(1)}};
    const Word Dw{-m, m - 1, -m};
    for (size_t i = 0; i < R.size(); ++i) {
        const int l = R[i];
        Word tail(R.begin() + i + 1, R.end());
        std::map<Word, Fraction> next;
        for (const auto& [P, cf] : states) {
            Word P2 = P;
            Fraction keep = cf;
            if (idx(l) == m - 1) {
                Word wd = kWindowD;
                wd.push_back(sgn_of(l));
                keep = Fraction();
                for (const auto& [t, ct] : window_nf(wd).terms()) {
                    if (t == kWindowD) {
                        keep = cf * ct;
                    } else {
                        Word st = shift_word(t, m - 1);
                        rest.emplace_back(concat({&L, &P, &st, &tail}), cf * ct);
                    }
                }
            } else {
                if (idx(l) == m - 2) {
                    const RewriteRule& r = rule(l > 0 ? "R3 right" : "R3 inverse right");
                    for (const auto& [t, ct] : r.rhs.terms()) {
                        Word st = shift_word(t, m - 2);
                        if (count_of(st, m) == 2) continue;  // the moved term l D
                        rest.emplace_back(concat({&L, &P, &st, &tail}), cf * ct);
                    }
                }
                P2.push_back(l);
            }
            if (keep.is_zero()) continue;
            auto [it, fresh] = next.try_emplace(P2, keep);
            if (!fresh) it->second += keep;
        }
        states.clear();
        for (auto& [P, cf] : next)
            if (!cf.is_zero()) states.emplace(P, cf);
    }
    SkeinElement out(n);
    for (const auto& [P, cf] : states)
        for (const SkeinElement e_ = reduce_word(concat({&L, &P}), n); const auto& [t, ct] : e_.terms()) out.add_scaled(absorb(t, n), cf * ct);
    for (const auto& [w, x] : rest) out.add_scaled(reduce_word(w, n), x);
    out *= c;
    (void)Dw;
    return out;
}

// Reduced t D for t in normal shape.
SkeinElement Engine::absorb(const Word& t, int n) {
    const int m = n - 1;
    const Word Dw{-m, m - 1, -m};
    SkeinElement out(n);
    if (has_token(t)) {
        out.add(concat({&t, &Dw}), 1);
        return out;
    }
    step();
    const int cm = count_of(t, m);
    if (cm == 2) {
        // t = c D: D D reduces in the window.
        Word c0(t.begin(), t.end() - 3);
        Word dd = kWindowD;
        dd.insert(dd.end(), kWindowD.begin(), kWindowD.end());
        for (const auto& [u, x] : window_nf(dd).terms()) {
            Word su = shift_word(u, m - 1);
            Word v = concat({&c0, &su});
            if (u == kWindowD)
                out.add(v, x);
            else
                out.add_scaled(reduce_word(v, n), x);
        }
        return out;
    }
    if (cm == 1) {
        size_t k = 0;
        while (idx(t[k]) != m) ++k;
        Word a(t.begin(), t.begin() + k), b(t.begin() + k + 1, t.end());
        const int e = t[k];
        for (const SkeinElement e_ = absorb(b, n); const auto& [u, x] : e_.terms()) {
            if (count_of(u, m) == 2 && Word(u.end() - 3, u.end()) == Dw) {
                Word q(u.begin(), u.end() - 3);
                Word we{sgn_of(e) * 2};
                we.insert(we.end(), kWindowD.begin(), kWindowD.end());
                for (const auto& [v, y] : window_nf(we).terms()) {
                    if (v == kWindowD) {
                        out.add_scaled(absorb(concat({&a, &q}), n), x * y);
                    } else {
                        Word sv = shift_word(v, m - 1);
                        out.add_scaled(reduce_word(concat({&a, &q, &sv}), n), x * y);
                    }
                }
            } else {
                Word v = a;
                v.push_back(e);
                v.insert(v.end(), u.begin(), u.end());
                out.add_scaled(reduce_word(v, n), x);
            }
        }
        return out;
    }
    // t free of s_m: absorb letters of index m-1 from the right, moving lower letters across D.
    std::vector<std::pair<Word, Fraction>> rest;
    size_t last = t.size();
    for (size_t i = 0; i < t.size(); ++i)
        if (idx(t[i]) == m - 1) last = i;
    std::map<Word, Fraction> states{{Word{}, Fraction(1)}};  // r with prefix D r
    if (last != t.size()) {
        for (size_t i = t.size(); i-- > 0;) {
            const int l = t[i];
            Word prefix(t.begin(), t.begin() + i);
            std::map<Word, Fraction> next;
            for (const auto& [r, cf] : states) {
                Word r2 = r;
                Fraction keep = cf;
                if (idx(l) == m - 1) {
                    Word wd{sgn_of(l)};
                    wd.insert(wd.end(), kWindowD.begin(), kWindowD.end());
                    keep = Fraction();
                    for (const auto& [v, y] : window_nf(wd).terms()) {
                        if (v == kWindowD) {
                            keep = cf * y;
                        } else {
                            Word sv = shift_word(v, m - 1);
                            rest.emplace_back(concat({&prefix, &sv, &r}), cf * y);
                        }
                    }
                } else {
                    if (idx(l) == m - 2) {
                        const RewriteRule& rr = rule(l > 0 ? "R3 left" : "R3 inverse left");
                        for (const auto& [v, y] : rr.rhs.terms()) {
                            Word sv = shift_word(v, m - 2);
                            if (count_of(sv, m) == 2) continue;
                            rest.emplace_back(concat({&prefix, &sv, &r}), cf * y);
                        }
                    }
                    r2.insert(r2.begin(), l);
                }
                if (keep.is_zero()) continue;
                auto [it, fresh] = next.try_emplace(r2, keep);
                if (!fresh) it->second += keep;
            }
            states.clear();
            for (auto& [r, cf] : next)
                if (!cf.is_zero()) states.emplace(r, cf);
            if (i == last) {
                // Everything left of here is below m-1; stop absorbing.
                Word pre(t.begin(), t.begin() + i);
                std::map<Word, Fraction> moved;
                for (const auto& [r, cf] : states) moved.emplace(concat({&pre, &Dw, &r}), cf);
                // Pull r back to the left of D.
                for (const auto& [w, cf] : moved) {
                    Word pr = pre;
                    Word r(w.begin() + pre.size() + 3, w.end());
                    std::map<Word, Fraction> pulls{{Word{}, cf}};
                    for (size_t j = 0; j < r.size(); ++j) {
                        const int l2 = r[j];
                        Word tail(r.begin() + j + 1, r.end());
                        std::map<Word, Fraction> nx;
                        for (const auto& [P, pc] : pulls) {
                            if (idx(l2) == m - 2) {
                                const RewriteRule& rr = rule(l2 > 0 ? "R3 right" : "R3 inverse right");
                                for (const auto& [v, y] : rr.rhs.terms()) {
                                    Word sv = shift_word(v, m - 2);
                                    if (count_of(sv, m) == 2) continue;
                                    rest.emplace_back(concat({&pr, &P, &sv, &tail}), pc * y);
                                }
                            }
                            Word P2 = P;
                            P2.push_back(l2);
                            auto [it, fresh] = nx.try_emplace(P2, pc);
                            if (!fresh) it->second += pc;
                        }
                        pulls = std::move(nx);
                    }
                    for (const auto& [P, pc] : pulls) {
                        if (pc.is_zero()) continue;
                        for (const SkeinElement e_ = reduce_word(concat({&pr, &P}), n - 2); const auto& [q, qc] : e_.terms()) out.add(concat({&q, &Dw}), pc * qc);
                    }
                }
                break;
            }
        }
    } else {
        for (const SkeinElement e_ = reduce_word(t, n - 2); const auto& [q, qc] : e_.terms()) out.add(concat({&q, &Dw}), qc);
    }
    for (const auto& [w, x] : rest) out.add_scaled(reduce_word(w, n), x);
    return out;
}

// u T v with a single token T: contexts free of s_{n-1} are reduced on n-1 strands.
SkeinElement Engine::reduce_around_token(const Word& w, int n) {
    SkeinElement out(n);
    size_t k = 0;
    while (!is_hard_token(w[k])) ++k;
    Word u(w.begin(), w.begin() + k), v(w.begin() + k + 1, w.end());
    if (has_token(u) || has_token(v) || count_of(u, n - 1) || count_of(v, n - 1)) {
        out.add(w, 1);
        return out;
    }
    const SkeinElement U = reduce_word(u, n - 1), V = reduce_word(v, n - 1);
    for (const auto& [a, x] : U.terms())
        for (const auto& [b, y] : V.terms()) {
            Word t = a;
            t.push_back(w[k]);
            t.insert(t.end(), b.begin(), b.end());
            out.add(t, x * y);
        }
    return out;
}

}  // namespace lgs
