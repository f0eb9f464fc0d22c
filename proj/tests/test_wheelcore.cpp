#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wheelkit/wheelcore.hpp"

using namespace wheelkit;

TEST_CASE("matrix-unit model basics") {
    EndElem e = EndElem::matrix_unit({1, 2}, {2, 1}, 2);
    // contraction matches index deletion with a delta
    EndElem c11 = end_contract(1, 1, e); // delta_{a_1, b_1} = delta_{1,2} = 0
    CHECK(c11.t.empty());
    EndElem c12 = end_contract(1, 2, e); // delta_{a_2, b_1} = delta_{2,2} = 1
    CHECK(c12 == EndElem::matrix_unit({1}, {1}, 2));
    EndElem d = end_act(cycle(1, 2, 2), e, Perm(2));
    CHECK(d == EndElem::matrix_unit({2, 1}, {2, 1}, 2));
    CHECK(end_mul(EndElem::unit_of(2), e) == e);
}

TEST_CASE("wheelspace axioms for End(V), dim 2") {
    auto h = end_handle(2);
    Report ax = check_axioms(h, 3);
    CHECK(ax.ok);
    Report alg = check_algebra(h, 3, 3);
    CHECK(alg.ok);
    Report nat = check_native_agreement(h, 3);
    CHECK(nat.ok);
}

TEST_CASE("generic contraction equals the native one on random elements") {
    auto h = end_handle(3);
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int round = 0; round < 40; ++round) {
        const int n = 1 + static_cast<int>(rng() % 3);
        EndElem e = EndElem::zero(n, 3);
        for (const EndElem& b : end_basis(n, 3))
            for (const auto& [k, c] : b.t) {
                (void)c;
                e.add_term(k.first, k.second, coef(rng));
            }
        std::uniform_int_distribution<int> pick(1, n);
        const int i = pick(rng), j = pick(rng);
        CHECK(contract_general(h, n, i, j, e) == end_contract(i, j, e));
    }
}
