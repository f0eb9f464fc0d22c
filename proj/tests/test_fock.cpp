#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wheelkit/fock.hpp"
#include "wheelkit/wheelcore.hpp"

using namespace wheelkit;

namespace {
const int X = 0, Y = 1;

FockBounds small_bounds() {
    FockBounds b;
    b.word_len = 1;
    b.neck_len = 1;
    b.neck_count = 1;
    return b;
}

// run the axiom suites at arity <= 3 under the current convention knobs
bool axioms_hold() {
    auto h = fock_handle(2, small_bounds());
    return check_axioms(h, 3).ok && check_algebra(h, 3, 3).ok;
}
} // namespace

TEST_CASE("canonical form") {
    // W=(x,y), lambda=(1 2), mu=id reduces to ((y,x), (1 2))
    FockElem nrm = fock_normalize({{X}, {Y}}, cycle(1, 2, 2), Perm(2), {});
    FockElem want{2, {}};
    want.add_term(FockKey{{{Y}, {X}}, cycle(1, 2, 2), {}}, 1);
    CHECK(nrm == want);
    // necklace monomials are canonicalized and sorted
    CHECK(neck_normal({{1, 0}, {0}}) == CycMonomial{{0}, {0, 1}});
}

TEST_CASE("product") {
    FockElem x = FockElem::slot_word({X});
    FockElem y = FockElem::slot_word({Y});
    FockElem p = fock_mul(x, y);
    FockElem want{2, {}};
    want.add_term(FockKey{{{X}, {Y}}, Perm(2), {}}, 1);
    CHECK(p == want);
    CHECK(fock_mul(FockElem::unit(), x) == x);
    // dressed commutativity: y.x = block-swap of x.y
    Perm sw = block_perm({1, 1}, cycle(1, 2, 2));
    CHECK(fock_mul(y, x) == fock_act(sw, p, sw.inverse()));
}

TEST_CASE("partial contraction") {
    // identity right slot: last slot closes onto a necklace
    FockElem u1 = fock_normalize({{X}, {Y}}, Perm(2), Perm(2), {});
    FockElem want1{1, {}};
    want1.add_term(FockKey{{{X}}, Perm(1), {{Y}}}, 1);
    CHECK(fock_partial(u1) == want1);
    // transposed right slot: slots merge
    FockElem u2 = fock_normalize({{X}, {Y}}, Perm(2), cycle(1, 2, 2), {});
    CHECK(fock_partial(u2) == FockElem::slot_word({Y, X}));
}

TEST_CASE("contraction composed with the product recovers concatenation") {
    FockElem x = FockElem::slot_word({X});
    FockElem y = FockElem::slot_word({Y});
    CHECK(fock_contract(2, 2, 1, fock_mul(x, y)) == FockElem::slot_word({X, Y}));
    CHECK(fock_contract(2, 1, 2, fock_mul(x, y)) == FockElem::slot_word({Y, X}));
    // closing a slot pair of the same element traces it out
    CHECK(fock_contract(2, 1, 1, fock_mul(x, y)) ==
          fock_mul(FockElem::necklace({X}), y));
}

TEST_CASE("axiom suite at arity <= 3") {
    auto h = fock_handle(2, small_bounds());
    Report ax = check_axioms(h, 3);
    CHECK(ax.ok);
    CHECK(ax.cases > 100000);
    Report alg = check_algebra(h, 3, 3);
    CHECK(alg.ok);
}

TEST_CASE("convention pinning: flipping any orientation knob breaks the axioms") {
    FockConv saved = fock_conv();
    REQUIRE(saved.slot_by_lambda_inv == true);
    REQUIRE(saved.right_mu_lambda == false);
    REQUIRE(saved.act_right_pre == false);
    REQUIRE(saved.partial_j_by_rho == true);

    fock_conv().slot_by_lambda_inv = !saved.slot_by_lambda_inv;
    CHECK(!axioms_hold());
    fock_conv() = saved;

    fock_conv().right_mu_lambda = !saved.right_mu_lambda;
    CHECK(!axioms_hold());
    fock_conv() = saved;

    fock_conv().act_right_pre = !saved.act_right_pre;
    CHECK(!axioms_hold());
    fock_conv() = saved;

    fock_conv().partial_j_by_rho = !saved.partial_j_by_rho;
    CHECK(!axioms_hold());
    fock_conv() = saved;

    CHECK(axioms_hold());
}

TEST_CASE("functoriality") {
    // substitute x -> x + y, y -> y.x
    std::vector<AlgElem> images{AlgElem::gen(X) + AlgElem::gen(Y),
                                AlgElem::word({Y, X})};
    FockElem u = fock_mul(FockElem::slot_word({X}), FockElem::necklace({Y}));
    FockElem v = fock_map(u, images);
    FockElem want = fock_mul(FockElem::slot_word({X}) + FockElem::slot_word({Y}),
                             FockElem::necklace({X, Y})); // yx ~ xy as a necklace
    CHECK(v == want);
    // morphisms commute with the contraction
    FockElem w = fock_mul(FockElem::slot_word({X}), FockElem::slot_word({Y}));
    CHECK(fock_map(fock_partial(w), images) == fock_partial(fock_map(w, images)));
}

TEST_CASE("weight grading") {
    FreeAlgebra A = FreeAlgebra::make({"x", "y"}, {1, 2});
    FockElem u = fock_mul(FockElem::slot_word({X, Y}), FockElem::necklace({Y}));
    for (const auto& [k, c] : u.t) {
        (void)c;
        CHECK(fock_term_weight(A, k) == 5);
    }
    CHECK(grading_component(A, u, 5) == u);
    CHECK(grading_component(A, u, 4).is_zero());
}
