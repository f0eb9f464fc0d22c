// Acceptance suite: one pass/fail line per criterion, exact equality
// throughout. Exit code = number of failed criteria.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "wheelkit/dpois.hpp"
#include "wheelkit/fock.hpp"
#include "wheelkit/matred.hpp"
#include "wheelkit/ncgeo.hpp"
#include "wheelkit/perm.hpp"
#include "wheelkit/wheelcore.hpp"

using namespace wheelkit;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void line(int num, bool ok, const std::string& what, long cases, double secs,
          const std::string& extra = "") {
    if (!ok) ++failures;
    std::printf("criterion-%02d %s %s (cases=%ld, %.1fs)%s%s\n", num, ok ? "PASS" : "FAIL",
                what.c_str(), cases, secs, extra.empty() ? "" : " ", extra.c_str());
    std::fflush(stdout);
}

DoubleBracketSpec linear_spec() {
    FreeAlgebra A = FreeAlgebra::make({"x"});
    TensorElem xx = TensorElem::simple({0}, {}, 1) + TensorElem::simple({}, {0}, -1);
    return DoubleBracketSpec::make(A, {{{0, 0}, xx}});
}

void criterion_1() {
    Timer t;
    IdentityReport r = verify_identities(5);
    bool ok = r.ok && t.secs() < 30.0;
    line(1, ok, "symmetric-group identity suite, total arity <= 5", r.cases, t.secs(),
         r.ok ? "" : r.counterexample);
}

void criterion_2() {
    Timer t;
    FockBounds b;
    b.word_len = 2;
    b.neck_len = 2;
    b.neck_count = 1;
    auto h = fock_handle(2, b);
    Report r = check_axioms(h, 3);
    bool ok = r.ok && t.secs() < 300.0;
    line(2, ok, "Fock wheelspace axioms, arity <= 3, word len <= 2, necklace len <= 2",
         r.cases, t.secs(), r.ok ? "" : r.counterexample);
}

void criterion_3() {
    Timer t;
    FockBounds b;
    b.word_len = 2;
    b.neck_len = 2;
    b.neck_count = 1;
    Report rf = check_algebra(fock_handle(2, b), 3, 3);
    Report re = check_algebra(end_handle(2), 3, 3);
    bool ok = rf.ok && re.ok;
    line(3, ok, "commutative wheelgebra axioms for F(k<x,y>) and End(V), dim 2",
         rf.cases + re.cases, t.secs(),
         ok ? "" : (rf.ok ? re.counterexample : rf.counterexample));
}

void criterion_4() {
    Timer t;
    const int d = 3, n_max = 3;
    auto h = end_handle(d);
    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<int> coef(-5, 5);
    long cases = 0;
    bool ok = true;
    for (int round = 0; round < 200; ++round) {
        const int n = 1 + static_cast<int>(rng() % n_max);
        EndElem e = EndElem::zero(n, d);
        for (const EndElem& bb : end_basis(n, d))
            for (const auto& [k, c] : bb.t) {
                (void)c;
                e.add_term(k.first, k.second, coef(rng));
            }
        std::uniform_int_distribution<int> pick(1, n);
        const int i = pick(rng), j = pick(rng);
        ++cases;
        if (!(contract_general(h, n, i, j, e) == end_contract(i, j, e))) ok = false;
    }
    line(4, ok, "End(V) generic vs native contraction, 200 random elements, dim 3", cases,
         t.secs());
}

void criterion_5() {
    Timer t;
    // the contracted product on arity 1 is the A (x) Sym(A_cyc) product
    long cases = 0;
    bool ok = true;
    auto prod = [](const FockElem& u, const FockElem& v) {
        return fock_contract(2, 2, 1, fock_mul(u, v));
    };
    std::vector<FockElem> elems;
    for (const Word& w : all_words(2, 2))
        for (const CycMonomial& m : neck_monomials(2, 1, 1)) {
            FockElem e{1, {}};
            e.add_term(FockKey{{w}, Perm(1), m}, 1);
            elems.push_back(std::move(e));
        }
    for (const FockElem& u : elems)
        for (const FockElem& v : elems) {
            const FockKey& ku = u.t.begin()->first;
            const FockKey& kv = v.t.begin()->first;
            FockElem want{1, {}};
            want.add_term(
                FockKey{{word_cat(ku.slots[0], kv.slots[0])}, Perm(1),
                        sym_mul(ku.neck, kv.neck)},
                1);
            ++cases;
            if (!(prod(u, v) == want)) ok = false;
        }
    // associativity on small triples
    std::vector<FockElem> smalls(elems.begin(), elems.begin() + 9);
    for (const FockElem& u : smalls)
        for (const FockElem& v : smalls)
            for (const FockElem& w : smalls) {
                ++cases;
                if (!(prod(prod(u, v), w) == prod(u, prod(v, w)))) ok = false;
            }
    line(5, ok, "contracted product on F(A)(1) = product of A (x) Sym(A_cyc), associative",
         cases, t.secs());
}

void criterion_6() {
    Timer t;
    Report r = check_double_jacobi(linear_spec(), 3);
    // negative control: quadratic skew bracket, Jacobiator reported exactly
    FreeAlgebra A = FreeAlgebra::make({"x"});
    TensorElem q = TensorElem::simple({0, 0}, {}, 1) + TensorElem::simple({}, {0, 0}, -1);
    DoubleBracketSpec bad = DoubleBracketSpec::make(A, {{{0, 0}, q}});
    T3Elem j = double_jacobiator(bad, AlgElem::gen(0), AlgElem::gen(0), AlgElem::gen(0));
    std::string jstr;
    for (const auto& [key, c] : j.t) {
        if (!jstr.empty()) jstr += " + ";
        jstr += rat_str(c) + "*" + A.word_str(std::get<0>(key)) + "(x)" +
                A.word_str(std::get<1>(key)) + "(x)" + A.word_str(std::get<2>(key));
    }
    line(6, r.ok, "double Jacobi for <x,x> = x(x)1 - 1(x)x, word len <= 3", r.cases, t.secs(),
         "[negative control <x,x> = x^2(x)1 - 1(x)x^2 at (x,x,x): " +
             (jstr.empty() ? std::string("0") : jstr) + "]");
}

void criterion_7() {
    Timer t;
    WheeledBracketEngine eng = WheeledBracketEngine::make(linear_spec());
    PoissonBounds b;
    b.max_arity = 2;
    b.fock = FockBounds{2, 2, 1};
    Report r = check_poisson_axioms(eng, b);
    Report s = check_shift_compat(eng, b);
    bool ok = r.ok && s.ok && t.secs() < 600.0;
    line(7, ok, "wheeled Poisson axioms + shift compatibility, arity <= 2, word len <= 2",
         r.cases + s.cases, t.secs(),
         (r.ok && s.ok) ? "" : (r.ok ? s.counterexample : r.counterexample));
}

void criterion_8() {
    Timer t;
    WheeledBracketEngine eng = big_bracket_engine(FreeAlgebra::make({"x", "y"}));
    Report r = check_big_bracket(eng, 2);
    line(8, r.ok, "big bracket generator table and weight -2 homogeneity", r.cases, t.secs(),
         r.ok ? "" : r.counterexample);
}

void criterion_9() {
    Timer t;
    FormAlgebra F = FormAlgebra::make({"x", "th"});
    AlgElem omega = AlgElem::word({F.diff_of(0), F.diff_of(1)}); // dx.dth
    bool closed = d_dr(F, dr_project(F, omega)).is_zero();
    Report r = symplectic_pairing_check(F, omega);
    bool ok = closed && r.ok;
    line(9, ok, "symplectic pairing for A = k<x,th>, omega = dx.dth", r.cases + 1, t.secs(),
         ok ? "" : (closed ? r.counterexample : "omega not closed"));
}

void criterion_10() {
    Timer t;
    FreeAlgebra base = FreeAlgebra::make({"x"});
    MatredBounds b;
    b.d = 2;
    b.max_arity = 2;
    b.fock = FockBounds{2, 1, 1};
    Report r = check_matrix_relations(base, b);
    EntrySpace e = EntrySpace::make(base, 2);
    bool census = (e.entries.gens.size() == 4);
    bool ok = r.ok && census;
    line(10, ok, "matrix-reduction evaluation relations at d=2, arity <= 2, plus d^2 census",
         r.cases + 1, t.secs(), ok ? "" : (census ? r.counterexample : "census mismatch"));
}

void criterion_11() {
    Timer t;
    WheeledBracketEngine eng = WheeledBracketEngine::make(linear_spec());
    EntrySpace e = EntrySpace::make(eng.spec.alg, 2);
    long cases = 0;
    bool ok = true;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k)
                for (int l = 1; l <= 2; ++l) {
                    PolyElem got =
                        kr_bracket(eng, e, AlgElem::gen(0), AlgElem::gen(0), i, j, k, l);
                    PolyElem want;
                    if (i == l) want.add_term({e.sym(0, k, j)}, 1);
                    if (k == j) want.add_term({e.sym(0, i, l)}, -1);
                    ++cases;
                    if (!(got == want)) ok = false;
                }
    Report jr = jacobi_poly(kr_bracket_table(eng, e), e);
    ok = ok && jr.ok && t.secs() < 60.0;
    line(11, ok, "representation bracket regression (16 quadruples) + polynomial Jacobi",
         cases + jr.cases, t.secs(), jr.ok ? "" : jr.counterexample);
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    std::printf("%s: %d/11 criteria passed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                11 - failures);
    return failures;
}
