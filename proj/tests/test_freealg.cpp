#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wheelkit/freealg.hpp"

using namespace wheelkit;

TEST_CASE("free algebra arithmetic") {
    FreeAlgebra A = FreeAlgebra::make({"x", "y"});
    AlgElem x = AlgElem::gen(0), y = AlgElem::gen(1);
    CHECK((x * y).t.begin()->first == Word{0, 1});
    CHECK(!(x * y == y * x));
    CHECK((x + y) * (x + y) == x * x + x * y + y * x + y * y);
    CHECK((x - x).is_zero());
    CHECK(AlgElem::one() * x == x);
    CHECK(x.scaled(0).is_zero());
    CHECK(A.index("y") == 1);
    CHECK_THROWS(A.index("z"));
    CHECK(A.word_str({0, 1}) == "x.y");
}

TEST_CASE("weights") {
    FreeAlgebra A = FreeAlgebra::make({"x", "dx"}, {0, 1});
    CHECK(A.word_weight({0, 1, 1}) == 2);
    CHECK(A.word_weight({}) == 0);
}

TEST_CASE("necklaces") {
    CHECK(neck_canon({1, 0, 1}) == Word{0, 1, 1});
    CHECK(neck_canon({}) == Word{});
    // cyclic projection kills commutators
    AlgElem x = AlgElem::gen(0), y = AlgElem::gen(1);
    CHECK(cyc_project(x * y - y * x).is_zero());
    CHECK(!cyc_project(x * y + y * x).is_zero());
    CHECK(cyc_project(x * y) == cyc_project(y * x));
}

TEST_CASE("symmetric monomials of necklaces") {
    CycMonomial a{{1}, {0}};
    CycMonomial b{{0, 1}};
    CycMonomial p = sym_mul(a, b);
    CHECK(p == CycMonomial{{0}, {0, 1}, {1}});
    CHECK(sym_mul(p, sym_one()) == p);
    SymCycElem e = SymCycElem::one();
    CHECK((e * e) == e);
}

TEST_CASE("tensor elements") {
    TensorElem t = TensorElem::simple({0}, {1}, 2);
    CHECK(t.flip() == TensorElem::simple({1}, {0}, 2));
    CHECK(t.lmul_outer({1}) == TensorElem::simple({1, 0}, {1}, 2));
    CHECK(t.rmul_outer({0}) == TensorElem::simple({0}, {1, 0}, 2));
    CHECK(t.rmul_inner({1}) == TensorElem::simple({0, 1}, {1}, 2));
    CHECK(t.lmul_inner({0}) == TensorElem::simple({0}, {0, 1}, 2));
    CHECK(t.collapse() == AlgElem::word({0, 1}, 2));
    CHECK((t - t).is_zero());
}

TEST_CASE("word enumeration") {
    auto w1 = all_words(2, 2);
    CHECK(w1.size() == 1 + 2 + 4);
    auto w2 = all_words(1, 3);
    CHECK(w2.size() == 4);
}
