#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wheelkit/matred.hpp"

using namespace wheelkit;

namespace {
FreeAlgebra base() { return FreeAlgebra::make({"x"}); }

WheeledBracketEngine linear_engine() {
    TensorElem xx = TensorElem::simple({0}, {}, 1) + TensorElem::simple({}, {0}, -1);
    return WheeledBracketEngine::make(DoubleBracketSpec::make(base(), {{{0, 0}, xx}}));
}
} // namespace

TEST_CASE("generic matrices") {
    EntrySpace E = EntrySpace::make(base(), 2);
    CHECK(E.entries.gens.size() == 4); // one generator, d^2 free symbols
    MatElem one = rep_matrix(E, AlgElem::one());
    CHECK(one[0][0] == AlgElem::one());
    CHECK(one[0][1].is_zero());
    MatElem x2 = rep_matrix(E, AlgElem::word({0, 0}));
    CHECK(x2[0][0] == AlgElem::word({E.sym(0, 1, 1), E.sym(0, 1, 1)}) +
                          AlgElem::word({E.sym(0, 1, 2), E.sym(0, 2, 1)}));
    // linearity
    MatElem s = rep_matrix(E, AlgElem::gen(0) + AlgElem::one());
    CHECK(s[0][0] == AlgElem::gen(E.sym(0, 1, 1)) + AlgElem::one());
}

TEST_CASE("wheeled evaluation basics") {
    EntrySpace E = EntrySpace::make(base(), 2);
    CHECK(wheeled_eval(E, FockElem::unit(), {}, {}) == AlgElem::one());
    // arity 1: a slot evaluates to the matrix entry
    CHECK(wheeled_eval(E, FockElem::slot_word({0}), {1}, {2}) ==
          AlgElem::gen(E.sym(0, 1, 2)));
    // arity 0: a necklace evaluates to the trace
    CHECK(wheeled_eval(E, FockElem::necklace({0}), {}, {}) ==
          AlgElem::gen(E.sym(0, 1, 1)) + AlgElem::gen(E.sym(0, 2, 2)));
    // the empty necklace traces the identity
    FockElem en{0, {}};
    en.add_term(FockKey{{}, Perm(0), {Word{}}}, 1);
    CHECK(wheeled_eval(E, en, {}, {}) == AlgElem::one().scaled(2));
}

TEST_CASE("abelianization") {
    EntrySpace E = EntrySpace::make(base(), 2);
    AlgElem comm = AlgElem::word({E.sym(0, 1, 2), E.sym(0, 2, 1)}) -
                   AlgElem::word({E.sym(0, 2, 1), E.sym(0, 1, 2)});
    CHECK(abelianize(comm).is_zero());
    CHECK(abelianize(AlgElem::one()) == abelianize(AlgElem::one()));
    MatElem x2 = rep_matrix(E, AlgElem::word({0, 0}));
    PolyElem p = abelianize(x2[0][0]);
    CHECK(p.t.size() == 2);
}

TEST_CASE("defining relations of the evaluation") {
    MatredBounds b;
    b.d = 2;
    b.max_arity = 2;
    b.fock = FockBounds{2, 1, 1};
    CHECK(check_matrix_relations(base(), b).ok);
}

TEST_CASE("column wiring is pinned by the arity-3 dressing relation") {
    REQUIRE(matred_wire_inverse() == true);
    MatredBounds b;
    b.d = 2;
    b.max_arity = 3;
    b.fock = FockBounds{1, 0, 0};
    CHECK(check_matrix_relations(base(), b).ok);
    matred_wire_inverse() = false; // negative control
    CHECK(!check_matrix_relations(base(), b).ok);
    matred_wire_inverse() = true;
}

TEST_CASE("representation bracket regression") {
    WheeledBracketEngine eng = linear_engine();
    EntrySpace E = EntrySpace::make(base(), 2);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k)
                for (int l = 1; l <= 2; ++l) {
                    PolyElem got =
                        kr_bracket(eng, E, AlgElem::gen(0), AlgElem::gen(0), i, j, k, l);
                    PolyElem want;
                    if (i == l) want.add_term({E.sym(0, k, j)}, 1);
                    if (k == j) want.add_term({E.sym(0, i, l)}, -1);
                    CHECK(got == want);
                }
    // bracket with a constant vanishes
    CHECK(kr_bracket(eng, E, AlgElem::gen(0), AlgElem::one(), 1, 2, 1, 2).is_zero());
}

TEST_CASE("polynomial Poisson suite") {
    WheeledBracketEngine eng = linear_engine();
    EntrySpace E = EntrySpace::make(base(), 2);
    PolyBracketTable tab = kr_bracket_table(eng, E);
    CHECK(jacobi_poly(tab, E).ok);
    // zero table passes trivially
    PolyBracketTable zero;
    for (const auto& [k, v] : tab) {
        (void)v;
        zero[k] = PolyElem{};
    }
    CHECK(jacobi_poly(zero, E).ok);
    // perturbed table fails with a counterexample
    PolyBracketTable bad = tab;
    PolyElem pert;
    pert.add_term({E.sym(0, 1, 1), E.sym(0, 1, 1)}, 1);
    bad[{E.sym(0, 1, 1), E.sym(0, 1, 2)}] = bad[{E.sym(0, 1, 1), E.sym(0, 1, 2)}] + pert;
    Report r = jacobi_poly(bad, E);
    CHECK(!r.ok);
    CHECK(!r.counterexample.empty());
}
