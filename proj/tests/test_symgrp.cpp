#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wheelkit/perm.hpp"

using namespace wheelkit;

TEST_CASE("permutation basics") {
    Perm id3(3);
    CHECK(id3.is_identity());
    Perm c = cycle(1, 3, 3); // 1->2->3->1
    CHECK(c.of(1) == 2);
    CHECK(c.of(2) == 3);
    CHECK(c.of(3) == 1);
    CHECK((c * c * c).is_identity());
    CHECK(c.inverse() * c == id3);
    // composition applies the right factor first
    Perm t = cycle(1, 2, 3);
    CHECK((t * c).of(1) == 1); // c: 1->2, t: 2->1
    CHECK_THROWS(Perm::from_images({1, 1, 2}));
}

TEST_CASE("cycle conventions") {
    // (i ... j): k -> k+1 for i <= k < j, j -> i
    Perm c = cycle(2, 4, 5);
    CHECK(c.of(1) == 1);
    CHECK(c.of(2) == 3);
    CHECK(c.of(3) == 4);
    CHECK(c.of(4) == 2);
    CHECK(c.of(5) == 5);
    CHECK(cycle(3, 3, 4).is_identity());
}

TEST_CASE("ordered sums and block permutations") {
    Perm s = ordered_sum({cycle(1, 2, 2), Perm(1)}, {2, 1});
    CHECK(s.of(1) == 2);
    CHECK(s.of(2) == 1);
    CHECK(s.of(3) == 3);

    // block swap of sizes (2,1): block 1 lands after block 2
    Perm b = block_perm({2, 1}, cycle(1, 2, 2));
    CHECK(b.of(1) == 2);
    CHECK(b.of(2) == 3);
    CHECK(b.of(3) == 1);

    // zero-size blocks are legal
    Perm bz = block_perm({0, 2, 0}, cycle(1, 3, 3));
    CHECK(bz.n() == 2);

    // composition rule: b(sizes permuted, tau2) b(sizes, tau) = b(sizes, tau2 tau)
    std::vector<int> sizes{1, 2, 3};
    Perm tau = cycle(1, 3, 3);
    std::vector<int> permuted{3, 1, 2};
    for (const Perm& tau2 : all_perms(3)) {
        std::vector<int> p2(3);
        Perm tinv = tau2.inverse();
        CHECK(block_perm(permuted, tau2) * block_perm(sizes, tau) ==
              block_perm(sizes, tau2 * tau));
    }
}

TEST_CASE("partial-contraction index maps") {
    for (int n = 2; n <= 4; ++n)
        for (const Perm& sigma : all_perms(n))
            for (int i = 1; i <= n; ++i) {
                // deleting and re-embedding matches conjugation by cycles
                Perm lhs_r = embed_e(n - 1, n, rmap(n, i, sigma));
                Perm rhs_r = cycle(sigma.of(i), n, n).inverse() * sigma * cycle(i, n, n);
                CHECK(lhs_r == rhs_r);
                CHECK(lmap(n, i, sigma) == rmap(n, i, sigma.inverse()).inverse());
            }
    CHECK(restrict_top(cycle(1, 2, 3)) == cycle(1, 2, 2));
    CHECK_THROWS(restrict_top(cycle(1, 3, 3)));
}

TEST_CASE("tuple actions") {
    std::vector<int> s{10, 20, 30};
    Perm c = cycle(1, 3, 3);
    auto l = act_left(c, s);
    CHECK(l == std::vector<int>{30, 10, 20});
    auto r = act_right(s, c);
    CHECK(r == std::vector<int>{20, 30, 10});
    CHECK(act_right(act_left(c, s), c) == s);
}

TEST_CASE("identity suite up to total arity 4") {
    IdentityReport rep = verify_identities(4);
    CHECK(rep.ok);
    CHECK(rep.cases > 1000);
}
