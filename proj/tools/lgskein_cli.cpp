#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <iostream>
#include <optional>

#include "lgskein/alexander.hpp"
#include "lgskein/skein.hpp"
#include "lgskein/table.hpp"

using namespace lgs;

namespace {

struct Check {
    std::string name;
    bool ok = false;
    std::string witness;
    double seconds = 0;
};

class Report {
public:
    explicit Report(bool timing) : timing_(timing) {}

    // Runs f, which returns ok and may fill the witness; exceptions count as failures.
    template <class F>
    void run(const std::string& name, F&& f) {
        const auto start = std::chrono::steady_clock::now();
        Check c{name};
        try {
            c.ok = f(c.witness);
        } catch (const std::exception& e) {
            c.ok = false;
            c.witness = e.what();
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        print(c);
        checks_.push_back(std::move(c));
    }

    void note(const std::string& s) { std::cout << "      " << s << "\n"; }

    int finish() const {
        size_t failed = 0;
        for (const auto& c : checks_) failed += !c.ok;
        std::cout << checks_.size() << " checks, " << failed << " failed\n";
        return failed == 0 ? 0 : 1;
    }

private:
    bool timing_;
    std::vector<Check> checks_;

    void print(const Check& c) const {
        std::cout << (c.ok ? "PASS  " : "FAIL  ") << c.name;
        if (!c.witness.empty()) std::cout << " : " << c.witness;
        if (timing_) std::cout << " (" << std::fixed << std::setprecision(2) << c.seconds << "s)";
        std::cout << "\n";
    }
};

std::vector<Kind> kinds_from(const std::string& s) {
    if (s.empty()) return {Kind::LG, Kind::V1, Kind::ADO};
    return {parse_kind(s)};
}

std::string relation_name(RelationKind r) {
    switch (r) {
        case RelationKind::R1: return "R1";
        case RelationKind::R2: return "R2";
        case RelationKind::R3: return "R3";
    }
    return "?";
}

Scalar value_by(const BraidWord& w, Kind kind, const std::string& method) {
    if (method == "rt") return evaluate_rt(w, kind).value;
    if (method == "skein") return evaluate_skein(w, kind).value;
    throw CLI::ValidationError("method", "expected rt or skein");
}

bool want(const std::string& check, const char* name) { return check == "all" || check == name; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Links-Gould and V1 link invariants: state sums, skein reduction and checks"};
    app.require_subcommand(1);
    uint64_t seed = 0;
    bool timing = false;
    app.add_option("--seed", seed, "seed for all random choices")->capture_default_str();
    app.add_flag("--timing", timing, "print wall time per check");

    // verify
    auto* verify = app.add_subcommand("verify", "relation and enhancement checks");
    verify->require_subcommand(1);
    std::string rmatrix, mode = "symbolic";
    int points = 5;
    auto* vrel = verify->add_subcommand("relations", "R1, R2, R3 under the R-matrices");
    vrel->add_option("--rmatrix", rmatrix)->check(CLI::IsMember({"lg", "v1", "ado"}));
    vrel->add_option("--mode", mode)->check(CLI::IsMember({"symbolic", "specialized"}))->capture_default_str();
    vrel->add_option("--points", points)->check(CLI::PositiveNumber)->capture_default_str();
    vrel->add_option("--seed", seed);
    auto* venh = verify->add_subcommand("enhancement", "enhanced R-matrix axioms");
    venh->add_option("--rmatrix", rmatrix)->check(CLI::IsMember({"lg", "v1", "ado"}));

    // eval
    auto* eval = app.add_subcommand("eval", "invariant of a braid closure");
    int strands = 0;
    std::string braid, invariant, method = "rt";
    eval->add_option("--strands", strands)->required()->check(CLI::PositiveNumber);
    eval->add_option("--braid", braid)->required();
    eval->add_option("--invariant", invariant)->required()->check(CLI::IsMember({"lg", "v1", "ado"}));
    eval->add_option("--method", method)->check(CLI::IsMember({"rt", "skein"}))->capture_default_str();

    // compare
    auto* compare = app.add_subcommand("compare", "compare two invariants over a table");
    std::string table, lhs = "v1", rhs = "lg", cmp_method = "rt";
    compare->add_option("--table", table)->required()->check(CLI::ExistingFile);
    compare->add_option("--lhs", lhs)->check(CLI::IsMember({"lg", "v1", "ado"}))->capture_default_str();
    compare->add_option("--rhs", rhs)->check(CLI::IsMember({"lg", "v1", "ado"}))->capture_default_str();
    compare->add_option("--method", cmp_method)->check(CLI::IsMember({"rt", "skein", "both"}))->capture_default_str();

    // specialize
    auto* spec = app.add_subcommand("specialize", "specialization identities over a table");
    std::string check = "all";
    spec->add_option("--table", table)->required()->check(CLI::ExistingFile);
    spec->add_option("--check", check)->check(CLI::IsMember({"alexander", "ado", "symmetry", "unit", "all"}))->capture_default_str();

    // dim-c3
    auto* dim = app.add_subcommand("dim-c3", "rank of the 20 three-strand basis images");
    int dim_points = 3;
    std::string dim_kind = "v1";
    dim->add_option("--points", dim_points)->check(CLI::PositiveNumber)->capture_default_str();
    dim->add_option("--rmatrix", dim_kind)->check(CLI::IsMember({"v1", "lg"}))->capture_default_str();

    // derive-r3
    auto* r3 = app.add_subcommand("derive-r3", "solve for the R3 coefficients at a point");
    std::string point;
    r3->add_option("--point", point, "t0=A/B,t1=C/D")->required();

    // rules
    auto* rules = app.add_subcommand("rules", "relation tables and derived rules");
    rules->require_subcommand(1);
    auto* rderive = rules->add_subcommand("derive", "derive the four-strand expansions");
    auto* rdump = rules->add_subcommand("dump", "print the relation tables");
    bool dump_derived = false;
    rdump->add_flag("--derived", dump_derived, "also print the four-strand expansions");
    auto* rverify = rules->add_subcommand("verify", "re-parse and re-certify every rule");
    bool with_lg = false;
    rverify->add_flag("--lg", with_lg, "repeat certificates under the LG representation");

    CLI11_PARSE(app, argc, argv);

    Report rep(timing);
    try {
        if (vrel->parsed()) {
            const VerifyMode m = mode == "symbolic" ? VerifyMode::Symbolic : VerifyMode::Specialized;
            for (Kind k : kinds_from(rmatrix))
                for (RelationKind r : {RelationKind::R1, RelationKind::R2, RelationKind::R3})
                    rep.run(relation_name(r) + " " + kind_name(k) + " " + mode, [&](std::string& wit) {
                        CheckResult res = verify_relation(r, k, m, points, seed);
                        wit = res.witness;
                        return res.ok;
                    });
        } else if (venh->parsed()) {
            for (Kind k : kinds_from(rmatrix)) {
                const EnhancedRMatrix& M = builtin_rmatrix(k);
                const Rep<Scalar>& R = M;
                auto add = [&](const std::string& what, auto f) {
                    rep.run(kind_name(k) + " " + what, [&](std::string& wit) {
                        CheckResult res = f();
                        wit = res.witness;
                        return res.ok;
                    });
                };
                add("inverse", [&] { return check_inverse(R); });
                add("braid relation", [&] { return check_braid_relation(R); });
                add("cubic minimal polynomial", [&] { return check_cubic_minimal_poly(M); });
                add("(h x h) commutes and partial traces", [&] { return check_enhancement(R); });
                rep.run(kind_name(k) + " tr(h) = 0", [&](std::string& wit) {
                    wit = trace_h(R).str();
                    return trace_h(R).is_zero();
                });
            }
        } else if (eval->parsed()) {
            const BraidWord w = parse_braid(braid, strands);
            std::cout << value_by(w, parse_kind(invariant), method).str() << "\n";
            return 0;
        } else if (compare->parsed()) {
            const Kind kl = parse_kind(lhs), kr = parse_kind(rhs);
            if (cmp_method != "rt" && kl == Kind::ADO)
                throw CLI::ValidationError("--method", "skein evaluation covers lg and v1");
            for (const KnotTableEntry& e : load_table(table)) {
                const Scalar right = evaluate_rt(e.word, kr).value;
                if (cmp_method != "skein")
                    rep.run(e.name + " " + lhs + " = " + rhs + " [rt]", [&](std::string& wit) {
                        const Scalar left = evaluate_rt(e.word, kl).value;
                        wit = left == right ? std::string() : left.str() + " vs " + right.str();
                        return left == right;
                    });
                if (cmp_method != "rt")
                    rep.run(e.name + " " + lhs + " [skein] = " + rhs + " [rt]", [&](std::string& wit) {
                        const Scalar left = evaluate_skein(e.word, kl, false).value;
                        wit = left == right ? std::string() : left.str() + " vs " + right.str();
                        return left == right;
                    });
                for (const auto& [name, kind] : {std::pair{lhs, kl}, std::pair{rhs, kr}}) {
                    auto it = e.expected.find(name);
                    if (it == e.expected.end()) continue;
                    rep.run(e.name + " " + name + " matches the table", [&, k = kind](std::string& wit) {
                        const Scalar v = evaluate_rt(e.word, k).value;
                        wit = v == it->second ? std::string() : v.str();
                        return v == it->second;
                    });
                }
            }
        } else if (spec->parsed()) {
            for (const KnotTableEntry& e : load_table(table)) {
                if (closure_info(e.word).components == 1) {
                    for (const CheckRecord& r : specialization_suite(e.word, 12, seed)) {
                        const bool alex = r.name.find("Alexander") != std::string::npos;
                        const bool unit = r.name.find(") = 1") != std::string::npos;
                        const bool sym = r.name.find("LG(t0,t1)") != std::string::npos;
                        const bool ado = r.name.find("ADO") != std::string::npos;
                        if ((alex && want(check, "alexander")) || (unit && want(check, "unit")) ||
                            (sym && want(check, "symmetry")) || (ado && want(check, "ado")))
                            rep.run(e.name + " " + r.name, [&](std::string& wit) {
                                wit = r.witness;
                                return r.ok;
                            });
                    }
                    continue;
                }
                // Links: the symmetry and ADO identities still apply.
                const Scalar lg = evaluate_rt(e.word, Kind::LG).value;
                if (want(check, "symmetry"))
                    rep.run(e.name + " LG(t0,t1) = LG(t1,t0)", [&](std::string& wit) {
                        wit = lg.str();
                        return swap_t0_t1(lg) == lg;
                    });
                if (want(check, "ado"))
                    rep.run(e.name + " ADO(t) = LG(t^2, w^2 t^-2)", [&](std::string& wit) {
                        const Scalar a = evaluate_rt(e.word, Kind::ADO).value, b = ado_substitute(lg);
                        wit = a == b ? std::string() : a.str() + " vs " + b.str();
                        return a == b;
                    });
            }
        } else if (dim->parsed()) {
            const Kind k = parse_kind(dim_kind);
            std::vector<SpecPoint> pts = certificate_points();
            if (dim_points > static_cast<int>(pts.size())) {
                for (const SpecPoint& P : random_points(seed, dim_points - static_cast<int>(pts.size()), {true, true}))
                    pts.push_back(P);
            }
            pts.resize(dim_points);
            for (const SpecPoint& P : pts)
                rep.run("rank C3 " + dim_kind + " at " + P.str(), [&](std::string& wit) {
                    const int r = rank_c3(k, P);
                    wit = "rank " + std::to_string(r);
                    return r == 20;
                });
            std::cout << "conjectured dimensions:";
            for (int n = 2; n <= 6; ++n) std::cout << " " << conjectured_dim(n).get_str();
            std::cout << "\n";
        } else if (r3->parsed()) {
            const SpecPoint P = SpecPoint::parse(point);
            std::vector<PVal> x;
            rep.run("solve R3 at " + P.str(), [&](std::string&) {
                x = solve_r3_at_point(P);
                return true;
            });
            for (size_t l = 0; l < x.size(); ++l)
                rep.run("a" + std::to_string(l + 1) + " = " + x[l].str(), [&](std::string& wit) {
                    const PVal a = specialize(r3_data().coeffs[l], P);
                    wit = a == x[l] ? std::string() : "table gives " + a.str();
                    return a == x[l];
                });
        } else if (rderive->parsed()) {
            FourStrandDerivation D;
            rep.run("derive four-strand expansions", [&](std::string&) {
                D = derive_four_strand_rules();
                return true;
            });
            for (const std::string& s : D.log) rep.note(s);
            rep.run("det(Sigma) equals the closed form", [&](std::string& wit) {
                wit = D.det_sigma_pp.str();
                return fraction_eq(D.det_sigma_pp, det_sigma_closed_form());
            });
            rep.run("det(Sigma) from the R3 coefficients", [&](std::string&) {
                return fraction_eq(det_sigma_from_coefficients(), det_sigma_closed_form());
            });
        } else if (rdump->parsed()) {
            std::cout << builtin_relations().dump();
            if (dump_derived) {
                const FourStrandDerivation& D = four_strand_derivation();
                for (int code = 0; code < 4; ++code) {
                    const Word lhs_word = hard_word(1, (code & 2) ? -1 : 1, (code & 1) ? -1 : 1);
                    std::cout << "# derived\n" << word_str(lhs_word) << " = " << D.rules[code]->str() << "\n";
                }
            }
            return 0;
        } else if (rverify->parsed()) {
            rep.run("relation text round trip", [&](std::string& wit) {
                const RelationTable a = parse_relations(builtin_relation_text());
                const RelationTable b = parse_relations(a.dump());
                if (a.relations.size() != b.relations.size()) return false;
                for (size_t i = 0; i < a.relations.size(); ++i)
                    if (!(a.relations[i].as_zero() == b.relations[i].as_zero())) {
                        wit = a.relations[i].name;
                        return false;
                    }
                return true;
            });
            for (Kind k : {Kind::LG, Kind::V1, Kind::ADO})
                for (RelationKind r : {RelationKind::R1, RelationKind::R2, RelationKind::R3})
                    rep.run(relation_name(r) + " " + kind_name(k) + " specialized", [&](std::string& wit) {
                        CheckResult res = verify_relation(r, k, VerifyMode::Specialized, 2, seed);
                        wit = res.witness;
                        return res.ok;
                    });
            Engine E;
            for (RewriteRule r : E.rules())
                rep.run("certify " + r.name, [&](std::string&) {
                    certify(r, 2, with_lg);
                    return true;
                });
            const FourStrandDerivation& D = four_strand_derivation();
            for (int code = 0; code < 4; ++code) {
                RewriteRule r;
                const int a = (code & 2) ? -1 : 1, c = (code & 1) ? -1 : 1;
                r.name = "four-strand " + word_str(hard_word(1, a, c));
                r.tag = RuleTag::FourStrand;
                r.lhs = hard_word(1, a, c);
                r.rhs = *D.rules[code];
                r.arity = 4;
                rep.run("certify " + r.name, [&](std::string&) {
                    certify(r, 3, with_lg);
                    return true;
                });
            }
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rep.finish();
}
