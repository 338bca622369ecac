#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <random>
#include <sstream>

#include "lgskein/skein.hpp"

namespace lgs {

// ---------------------------------------------------------------------------
// SkeinElement

SkeinElement SkeinElement::of_word(int n, Word w, const Fraction& c) {
    SkeinElement e(n);
    e.add(w, c);
    return e;
}

Fraction SkeinElement::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Fraction() : it->second;
}

void SkeinElement::add(const Word& w, const Fraction& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void SkeinElement::add_scaled(const SkeinElement& e, const Fraction& c) {
    if (c.is_zero()) return;
    if (n_ == 0) n_ = e.n_;
    for (const auto& [w, x] : e.terms_) add(w, x * c);
}

SkeinElement& SkeinElement::operator+=(const SkeinElement& e) {
    if (n_ == 0) n_ = e.n_;
    for (const auto& [w, x] : e.terms_) add(w, x);
    return *this;
}

SkeinElement& SkeinElement::operator-=(const SkeinElement& e) {
    if (n_ == 0) n_ = e.n_;
    for (const auto& [w, x] : e.terms_) add(w, -x);
    return *this;
}

SkeinElement& SkeinElement::operator*=(const Fraction& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, x] : terms_) x *= c;
    return *this;
}

SkeinElement SkeinElement::times_left(const Word& w) const {
    SkeinElement out(n_);
    for (const auto& [u, x] : terms_) {
        Word v = w;
        v.insert(v.end(), u.begin(), u.end());
        out.add(v, x);
    }
    return out;
}

SkeinElement SkeinElement::times_right(const Word& w) const {
    SkeinElement out(n_);
    for (const auto& [u, x] : terms_) {
        Word v = u;
        v.insert(v.end(), w.begin(), w.end());
        out.add(v, x);
    }
    return out;
}

std::string SkeinElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, x] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + x.str() + ")*[" + (w.empty() ? std::string("e") : word_str(w)) + "]";
    }
    return s;
}

SkeinElement operator+(SkeinElement a, const SkeinElement& b) { return a += b; }
SkeinElement operator-(SkeinElement a, const SkeinElement& b) { return a -= b; }
SkeinElement operator*(SkeinElement a, const Fraction& c) { return a *= c; }

SkeinElement operator*(const SkeinElement& a, const SkeinElement& b) {
    SkeinElement out(std::max(a.strands(), b.strands()));
    for (const auto& [u, x] : a.terms())
        for (const auto& [v, y] : b.terms()) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.add(w, x * y);
        }
    return out;
}

bool operator==(const SkeinElement& a, const SkeinElement& b) {
    if (a.size() != b.size()) return false;
    auto it = b.terms().begin();
    for (const auto& [w, x] : a.terms()) {
        if (w != it->first || !fraction_eq(x, it->second)) return false;
        ++it;
    }
    return true;
}

Word shift_word(const Word& w, int base) {
    Word out(w);
    for (int& x : out) {
        if (is_hard_token(x)) {
            int rel = x - kHardToken;
            x = kHardToken + (rel / 100 + base - 1) * 100 + rel % 100;
        } else {
            x = x > 0 ? x + base - 1 : x - base + 1;
        }
    }
    return out;
}

SkeinElement shift_element(const SkeinElement& e, int base, int n) {
    SkeinElement out(n);
    for (const auto& [w, x] : e.terms()) out.add(shift_word(w, base), x);
    return out;
}

// ---------------------------------------------------------------------------
// Hard tokens

int hard_token(int base, int a, int c) { return kHardToken + base * 100 + (a < 0 ? 2 : 0) + (c < 0 ? 1 : 0); }

bool is_hard_token(int letter) { return letter >= kHardToken; }

Word hard_word(int base, int a, int c) {
    return {a > 0 ? base + 2 : -(base + 2), -(base + 1), base, -(base + 1), c > 0 ? base + 2 : -(base + 2)};
}

Word expand_tokens(const Word& w) {
    Word out;
    for (int x : w) {
        if (!is_hard_token(x)) {
            out.push_back(x);
            continue;
        }
        int rel = x - kHardToken;
        int code = rel % 100;
        Word h = hard_word(rel / 100, (code & 2) ? -1 : 1, (code & 1) ? -1 : 1);
        out.insert(out.end(), h.begin(), h.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Relation tables

std::string tag_name(RuleTag t) {
    switch (t) {
        case RuleTag::R1: return "R1";
        case RuleTag::R2: return "R2";
        case RuleTag::ModR2: return "modR2";
        case RuleTag::R3: return "R3";
        case RuleTag::Consequence: return "consequence";
        case RuleTag::ThreeStrand: return "three-strand";
        case RuleTag::FourStrand: return "four-strand";
    }
    return "?";
}

RuleTag parse_tag(const std::string& s) {
    for (RuleTag t : {RuleTag::R1, RuleTag::R2, RuleTag::ModR2, RuleTag::R3, RuleTag::Consequence,
                      RuleTag::ThreeStrand, RuleTag::FourStrand})
        if (tag_name(t) == s) return t;
    throw ParseError("unknown relation tag '" + s + "'");
}

int Relation::arity() const {
    int m = 0;
    for (const auto* side : {&lhs, &rhs})
        for (const auto& t : *side)
            for (int x : t.word) m = std::max(m, std::abs(x));
    return m + 1;
}

SkeinElement Relation::as_zero(int base, int n) const {
    if (n == 0) n = arity() + base - 1;
    SkeinElement e(n);
    for (const auto& t : lhs) e.add(shift_word(t.word, base), t.coeff);
    for (const auto& t : rhs) e.add(shift_word(t.word, base), -t.coeff);
    return e;
}

const Relation& RelationTable::get(const std::string& name) const {
    for (const auto& r : relations)
        if (r.name == name) return r;
    throw std::out_of_range("no relation named " + name);
}

std::string RelationTable::dump() const {
    std::ostringstream os;
    os << "# lgskein relation tables, format 1.\n";
    for (const auto& r : relations) {
        os << "\nrelation " << r.name << " tag " << tag_name(r.tag) << "\n";
        for (const auto* side : {&r.lhs, &r.rhs}) {
            os << (side == &r.lhs ? "lhs\n" : "rhs\n");
            for (const auto& t : *side)
                os << "word := " << (t.word.empty() ? std::string("e") : word_str(t.word))
                   << " ; coeff := " << t.coeff.str() << "\n";
        }
        os << "end\n";
    }
    return os.str();
}

namespace {

std::string trim(std::string_view s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

}  // namespace

RelationTable parse_relations(std::string_view text) {
    RelationTable table;
    std::optional<Relation> cur;
    std::vector<RelationTerm>* side = nullptr;
    size_t lineno = 0;
    size_t pos = 0;
    auto fail = [&](const std::string& what) -> void {
        throw ParseError("line " + std::to_string(lineno) + ": " + what);
    };
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string line = trim(text.substr(pos, nl - pos));
        pos = nl + 1;
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line = trim(line.substr(0, h));
        if (line.empty()) continue;
        std::istringstream is(line);
        std::string head;
        is >> head;
        if (head == "relation") {
            if (cur) fail("relation inside relation");
            std::string name, tagkw, tag;
            is >> name >> tagkw >> tag;
            if (name.empty() || tagkw != "tag" || tag.empty()) fail("expected 'relation NAME tag TAG'");
            cur.emplace();
            cur->name = name;
            try {
                cur->tag = parse_tag(tag);
            } catch (const ParseError& e) {
                fail(e.what());
            }
            side = nullptr;
        } else if (head == "lhs" || head == "rhs") {
            if (!cur) fail("side outside relation");
            side = head == "lhs" ? &cur->lhs : &cur->rhs;
        } else if (head == "end") {
            if (!cur) fail("'end' outside relation");
            table.relations.push_back(std::move(*cur));
            cur.reset();
            side = nullptr;
        } else if (head == "word") {
            if (!side) fail("term outside lhs/rhs");
            auto semi = line.find(';');
            auto w1 = line.find(":=");
            if (semi == std::string::npos || w1 == std::string::npos || w1 > semi) fail("expected 'word := ... ; coeff := ...'");
            std::string wtext = trim(line.substr(w1 + 2, semi - w1 - 2));
            std::string rest = trim(line.substr(semi + 1));
            if (rest.rfind("coeff", 0) != 0) fail("expected 'coeff :='");
            auto c1 = rest.find(":=");
            if (c1 == std::string::npos) fail("expected 'coeff :='");
            RelationTerm t;
            try {
                if (wtext != "e") t.word = parse_word(wtext);
                t.coeff = Fraction::parse(trim(rest.substr(c1 + 2)));
            } catch (const std::exception& e) {
                fail(e.what());
            }
            side->push_back(std::move(t));
        } else {
            fail("unknown directive '" + head + "'");
        }
    }
    if (cur) throw ParseError("line " + std::to_string(lineno) + ": missing 'end'");
    return table;
}

// Defined in the generated source that embeds data/relations.txt.
extern const char* const kRelationData;

const std::string& builtin_relation_text() {
    static const std::string text(kRelationData);
    return text;
}

const RelationTable& builtin_relations() {
    static const RelationTable table = parse_relations(builtin_relation_text());
    return table;
}

const R3Data& r3_data() {
    static const R3Data data = [] {
        R3Data d;
        for (const auto& t : builtin_relations().get("R3").rhs) {
            d.words.push_back(t.word);
            d.coeffs.push_back(t.coeff);
        }
        return d;
    }();
    return data;
}

// ---------------------------------------------------------------------------
// Images

namespace {

using SpecTerms = std::vector<std::pair<Word, PVal>>;

SpecTerms specialize_terms(const SkeinElement& e, const SpecPoint& P) {
    SpecTerms out;
    out.reserve(e.size());
    for (const auto& [w, c] : e.terms()) out.emplace_back(expand_tokens(w), specialize(c, P));
    return out;
}

SparseVec<PVal> apply_terms(const SpecTerms& terms, const Rep<PVal>& M, int n, uint32_t col) {
    SparseVec<PVal> acc;
    for (const auto& [w, cv] : terms) {
        for (auto& [k, x] : apply_word(basis_vector<PVal>(col), M, n, w)) {
            PVal y = cv * x;
            if (y.is_zero()) continue;
            auto [it, fresh] = acc.try_emplace(k, y);
            if (!fresh) {
                it->second += y;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
    }
    return acc;
}

}  // namespace

SparseVec<PVal> apply_element(const SkeinElement& e, const Rep<PVal>& M, const SpecPoint& P, uint32_t col) {
    return apply_terms(specialize_terms(e, P), M, e.strands(), col);
}

CheckResult same_image(const SkeinElement& a, const SkeinElement& b, const Rep<PVal>& M, const SpecPoint& P) {
    const int n = std::max(a.strands(), b.strands());
    SkeinElement diff(n);
    diff += a;
    diff -= b;
    const SpecTerms terms = specialize_terms(diff, P);
    const uint32_t N = ipow(M.d, n);
    for (uint32_t c = 0; c < N; ++c)
        if (!apply_terms(terms, M, n, c).empty()) return {false, "basis column " + std::to_string(c) + " at " + P.str()};
    return {};
}

const std::vector<SpecPoint>& certificate_points() {
    static const std::vector<SpecPoint> pts = [] {
        std::vector<SpecPoint> v;
        v.push_back(SpecPoint::from_roots(mpq_class(3, 2), mpq_class(5, 3)));
        v.push_back(SpecPoint::from_roots(mpq_class(-2), mpq_class(7, 4)));
        v.push_back(SpecPoint::from_roots(mpq_class(5, 4), mpq_class(-3)));
        return v;
    }();
    return pts;
}

void certify(RewriteRule& r, int points, bool use_lg) {
    const auto& pts = certificate_points();
    points = std::min<int>(points, static_cast<int>(pts.size()));
    SkeinElement lhs = SkeinElement::of_word(r.arity, r.lhs);
    SkeinElement rhs(r.arity);
    rhs += r.rhs;
    for (Kind k : use_lg ? std::vector<Kind>{Kind::V1, Kind::LG} : std::vector<Kind>{Kind::V1}) {
        for (int i = 0; i < points; ++i) {
            Rep<PVal> M = specialize_rep(builtin_rmatrix(k), pts[i]);
            CheckResult res = same_image(lhs, rhs, M, pts[i]);
            if (!res.ok) throw UncertifiedRule("rule " + r.name + " fails under " + kind_name(k) + ": " + res.witness);
        }
    }
    r.certified_points = points;
}

// ---------------------------------------------------------------------------
// Relation verification on the R-matrices

namespace {

const Relation& relation_for(RelationKind rel) {
    switch (rel) {
        case RelationKind::R1: return builtin_relations().get("R1");
        case RelationKind::R2: return builtin_relations().get("R2");
        case RelationKind::R3: return builtin_relations().get("R3");
    }
    throw std::logic_error("relation kind");
}

PVal coefficient_at(Kind kind, const Fraction& c, const SpecPoint& P) {
    if (kind != Kind::ADO) return specialize(c, P);
    PVal d = specialize(ado_substitute(c.den()), P);
    if (d.is_zero()) throw DenominatorVanishes("denominator vanishes at t=" + P.t->get_str());
    return specialize(ado_substitute(c.num()), P) * d.inverse();
}

}  // namespace

CheckResult verify_relation(RelationKind rel, Kind kind, VerifyMode mode, int points, uint64_t seed) {
    const Relation& r = relation_for(rel);
    const int n = r.arity();
    std::vector<std::pair<Word, Fraction>> terms;
    for (const auto& t : r.lhs) terms.emplace_back(t.word, t.coeff);
    for (const auto& t : r.rhs) terms.emplace_back(t.word, -t.coeff);
    const EnhancedRMatrix& M = builtin_rmatrix(kind);
    if (mode == VerifyMode::Symbolic) {
        Fraction::Exponents common{};
        for (const auto& [w, c] : terms) common = exponent_max(common, c.exponents());
        LinearRelation<Scalar> lin;
        for (const auto& [w, c] : terms) lin.emplace_back(w, coefficient_for(kind, c.numerator_over(common)));
        return check_linear_relation(lin, static_cast<const Rep<Scalar>&>(M), n);
    }
    std::vector<SpecPoint> pts;
    if (kind == Kind::ADO) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
        while (static_cast<int>(pts.size()) < points) {
            mpq_class t(num(rng), den(rng));
            t.canonicalize();
            if (sgn(t) == 0 || abs(t) == 1) continue;
            SpecPoint P = SpecPoint::at(t * t, 1);
            P.t = t;
            P.require_admissible = false;
            pts.push_back(P);
        }
    } else {
        pts = random_points(seed, points, {true, false});
    }
    for (const auto& P : pts) {
        Rep<PVal> S = specialize_rep(M, P);
        LinearRelation<PVal> lin;
        try {
            for (const auto& [w, c] : terms) lin.emplace_back(w, coefficient_at(kind, c, P));
        } catch (const DenominatorVanishes&) {
            continue;
        }
        CheckResult res = check_linear_relation(lin, S, n);
        if (!res.ok) return {false, res.witness + " at " + (P.t ? "t=" + P.t->get_str() : P.str())};
    }
    return {};
}

}  // namespace lgs
