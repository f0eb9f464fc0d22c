#pragma once

// Wheelspace abstraction: the End(V) instance, the capability-record handle,
// general contractions rebuilt from the partial one, and the axiom suites
// (equivariance, exchange, trace-commutation, algebra laws).

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wheelkit/freealg.hpp"
#include "wheelkit/perm.hpp"
#include "wheelkit/rat.hpp"
#include "wheelkit/report.hpp"

namespace wheelkit {

// ---------------------------------------------------------------------------
// End(V)^e: arity-n component spanned by matrix units E_{alpha,beta} with
// alpha, beta index n-tuples in {1..d}.

struct EndElem {
    int n = 0;
    int d = 1;
    std::map<std::pair<std::vector<int>, std::vector<int>>, Rat> t;

    static EndElem zero(int n, int d) { return EndElem{n, d, {}}; }
    static EndElem unit_of(int d) {
        EndElem e{0, d, {}};
        e.t.emplace(std::make_pair(std::vector<int>{}, std::vector<int>{}), 1);
        return e;
    }
    static EndElem matrix_unit(std::vector<int> a, std::vector<int> b, int d, Rat c = 1) {
        EndElem e{static_cast<int>(a.size()), d, {}};
        if (c != 0) e.t.emplace(std::make_pair(std::move(a), std::move(b)), std::move(c));
        return e;
    }

    bool operator==(const EndElem&) const = default;

    EndElem& add_term(const std::vector<int>& a, const std::vector<int>& b, const Rat& c) {
        if (c == 0) return *this;
        auto key = std::make_pair(a, b);
        auto [it, fresh] = t.emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) t.erase(it);
        }
        return *this;
    }
    EndElem operator+(const EndElem& o) const {
        EndElem r = *this;
        for (const auto& [k, c] : o.t) r.add_term(k.first, k.second, c);
        return r;
    }
    EndElem scaled(const Rat& c) const {
        EndElem r{n, d, {}};
        if (c == 0) return r;
        for (const auto& [k, v] : t) r.t.emplace(k, v * c);
        return r;
    }
};

// sigma' . E_{a,b} . tau' = E_{sigma'.a, b.tau'}
inline EndElem end_act(const Perm& sl, const EndElem& e, const Perm& sr) {
    EndElem r{e.n, e.d, {}};
    for (const auto& [k, c] : e.t)
        r.add_term(act_left(sl, k.first), act_right(k.second, sr), c);
    return r;
}

inline EndElem end_mul(const EndElem& f, const EndElem& g) {
    if (f.d != g.d) throw std::invalid_argument("end_mul: dimension mismatch");
    EndElem r{f.n + g.n, f.d, {}};
    for (const auto& [k1, c1] : f.t)
        for (const auto& [k2, c2] : g.t) {
            std::vector<int> a = k1.first, b = k1.second;
            a.insert(a.end(), k2.first.begin(), k2.first.end());
            b.insert(b.end(), k2.second.begin(), k2.second.end());
            r.add_term(a, b, c1 * c2);
        }
    return r;
}

// t^n_{j,i}(E_{a,b}) = delta_{a_j, b_i} E_{drop_j a, drop_i b}
inline EndElem end_contract(int i, int j, const EndElem& e) {
    if (e.n < 1 || i < 1 || i > e.n || j < 1 || j > e.n)
        throw std::invalid_argument("end_contract: bad indices");
    EndElem r{e.n - 1, e.d, {}};
    for (const auto& [k, c] : e.t) {
        if (k.first[static_cast<size_t>(j) - 1] != k.second[static_cast<size_t>(i) - 1])
            continue;
        std::vector<int> a = k.first, b = k.second;
        a.erase(a.begin() + (j - 1));
        b.erase(b.begin() + (i - 1));
        r.add_term(a, b, c);
    }
    return r;
}

inline std::vector<EndElem> end_basis(int n, int d) {
    std::vector<EndElem> out;
    std::vector<int> a(static_cast<size_t>(n), 1), b(static_cast<size_t>(n), 1);
    auto advance = [&](std::vector<int>& v) {
        for (int p = n - 1; p >= 0; --p) {
            if (++v[static_cast<size_t>(p)] <= d) return true;
            v[static_cast<size_t>(p)] = 1;
        }
        return false;
    };
    do {
        b.assign(static_cast<size_t>(n), 1);
        do {
            out.push_back(EndElem::matrix_unit(a, b, d));
        } while (n > 0 && advance(b));
    } while (n > 0 && advance(a));
    return out;
}

// ---------------------------------------------------------------------------
// Capability record for a wheelspace (optionally wheelgebra) instance.

template <typename E>
struct WheelHandle {
    std::string name;
    std::function<std::vector<E>(int)> basis; // bounded basis of component n
    std::function<E(const Perm&, const E&, const Perm&)> act;
    std::function<E(const E&)> partial;             // t^n = t^n_{n,n}
    std::function<E(const E&, const E&)> mul;       // optional
    std::function<E()> unit;                        // optional
    std::function<E(int i, int j, const E&)> native_tji; // optional
};

// t^n_{j,i}(v) = t^n((j...n)^{-1} . v . (i...n))
template <typename E>
E contract_general(const WheelHandle<E>& S, int n, int i, int j, const E& v) {
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::invalid_argument("contract_general: bad indices");
    return S.partial(S.act(cycle(j, n, n).inverse(), v, cycle(i, n, n)));
}

// W.1 equivariance, W.2 exchange, and the (n n+1)-conjugation invariance of
// the iterated partial contraction, exhaustive over the handle's basis.
template <typename E>
Report check_axioms(const WheelHandle<E>& S, int n_max) {
    Report rep{"wheelspace-axioms", S.name, "n_max=" + std::to_string(n_max)};

    for (int n = 1; n <= n_max; ++n) {
        auto B = S.basis(n);
        auto perms = all_perms(n);
        for (const E& v : B) {
            for (const Perm& sigma : perms)
                for (const Perm& tau : perms) {
                    E dressed = S.act(sigma, v, tau);
                    Perm sinv = sigma.inverse();
                    for (int i = 1; i <= n; ++i)
                        for (int j = 1; j <= n; ++j) {
                            ++rep.cases;
                            E lhs = contract_general(S, n, i, j, dressed);
                            E core = contract_general(S, n, tau.of(i), sinv.of(j), v);
                            E rhs = (n == 1) ? core
                                             : S.act(lmap(n, j, sigma), core, rmap(n, i, tau));
                            if (!(lhs == rhs)) {
                                rep.fail("W.1 at n=" + std::to_string(n) +
                                         " i=" + std::to_string(i) + " j=" + std::to_string(j) +
                                         " sigma=" + sigma.str() + " tau=" + tau.str());
                                return rep;
                            }
                        }
                }
        }
    }

    for (int n = 1; n + 1 <= n_max; ++n) {
        auto B = S.basis(n + 1);
        for (const E& v : B) {
            for (int k = 1; k <= n + 1; ++k)
                for (int l = 1; l <= n + 1; ++l)
                    for (int i = 1; i <= n; ++i)
                        for (int j = 1; j <= n; ++j) {
                            ++rep.cases;
                            int i2 = (i < k) ? k - 1 : k;
                            int k2 = (i < k) ? i : i + 1;
                            int j2 = (j < l) ? l - 1 : l;
                            int l2 = (j < l) ? j : j + 1;
                            E lhs = contract_general(S, n, i, j,
                                                     contract_general(S, n + 1, k, l, v));
                            E rhs = contract_general(S, n, i2, j2,
                                                     contract_general(S, n + 1, k2, l2, v));
                            if (!(lhs == rhs)) {
                                rep.fail("W.2 at n=" + std::to_string(n) + " (i,j,k,l)=(" +
                                         std::to_string(i) + "," + std::to_string(j) + "," +
                                         std::to_string(k) + "," + std::to_string(l) + ")");
                                return rep;
                            }
                        }
            // (n n+1)-conjugation invariance of t^n o t^{n+1}
            ++rep.cases;
            Perm c = cycle(n, n + 1, n + 1);
            E lhs = S.partial(S.partial(S.act(c, v, c)));
            E rhs = S.partial(S.partial(v));
            if (!(lhs == rhs)) {
                rep.fail("part-trace-comm at n=" + std::to_string(n));
                return rep;
            }
        }
    }
    return rep;
}

// Commutative-wheelgebra laws: associativity, unit, and dressed commutativity.
template <typename E>
Report check_algebra(const WheelHandle<E>& S, int n_max, int triple_max) {
    Report rep{"wheelgebra-axioms", S.name,
               "n_max=" + std::to_string(n_max) + ",triple_max=" + std::to_string(triple_max)};
    Perm s12 = cycle(1, 2, 2);

    for (int n = 0; n <= n_max; ++n) {
        for (const E& u : S.basis(n)) {
            ++rep.cases;
            if (!(S.mul(S.unit(), u) == u) || !(S.mul(u, S.unit()) == u)) {
                rep.fail("unit law at n=" + std::to_string(n));
                return rep;
            }
        }
        for (int m = 0; n + m <= n_max; ++m) {
            auto Bn = S.basis(n);
            auto Bm = S.basis(m);
            for (const E& u : Bn)
                for (const E& v : Bm) {
                    ++rep.cases;
                    E lhs = S.mul(u, v);
                    E rhs = S.mul(v, u);
                    if (n + m > 0) {
                        Perm bl = block_perm({m, n}, s12);
                        Perm br = block_perm({n, m}, s12);
                        rhs = S.act(bl, rhs, br);
                    }
                    if (!(lhs == rhs)) {
                        rep.fail("comm-wh at (n,m)=(" + std::to_string(n) + "," +
                                 std::to_string(m) + ")");
                        return rep;
                    }
                }
            for (int p = 0; n + m + p <= triple_max; ++p) {
                for (const E& u : Bn)
                    for (const E& v : Bm)
                        for (const E& w : S.basis(p)) {
                            ++rep.cases;
                            if (!(S.mul(S.mul(u, v), w) == S.mul(u, S.mul(v, w)))) {
                                rep.fail("assoc-wh at (n,m,p)=(" + std::to_string(n) + "," +
                                         std::to_string(m) + "," + std::to_string(p) + ")");
                                return rep;
                            }
                        }
            }
        }
    }
    return rep;
}

// Rebuilt contractions agree with the instance's native ones.
template <typename E>
Report check_native_agreement(const WheelHandle<E>& S, int n_max) {
    Report rep{"contraction-rebuild", S.name, "n_max=" + std::to_string(n_max)};
    if (!S.native_tji) {
        rep.note = "no native contraction provided";
        return rep;
    }
    for (int n = 1; n <= n_max; ++n)
        for (const E& v : S.basis(n))
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    ++rep.cases;
                    if (!(contract_general(S, n, i, j, v) == S.native_tji(i, j, v))) {
                        rep.fail("mismatch at n=" + std::to_string(n) + " (i,j)=(" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
                        return rep;
                    }
                }
    return rep;
}

inline WheelHandle<EndElem> end_handle(int d, int word_cap /*unused, uniform API*/ = 0) {
    (void)word_cap;
    WheelHandle<EndElem> h;
    h.name = "End(V),d=" + std::to_string(d);
    h.basis = [d](int n) { return end_basis(n, d); };
    h.act = [](const Perm& s, const EndElem& e, const Perm& t) { return end_act(s, e, t); };
    h.partial = [](const EndElem& e) { return end_contract(e.n, e.n, e); };
    h.mul = [](const EndElem& a, const EndElem& b) { return end_mul(a, b); };
    h.unit = [d]() { return EndElem::unit_of(d); };
    h.native_tji = [](int i, int j, const EndElem& e) { return end_contract(i, j, e); };
    return h;
}

} // namespace wheelkit
