#pragma once

// Double brackets on free algebras and the wheeled Poisson bracket they induce
// on the Fock wheelgebra F(A).
//
// A double bracket is determined by its values on generator pairs; it extends
// to all of A as a double derivation in the second argument for the outer
// bimodule structure,
//     <a, bc> = <a,b>.c + b.<a,c>,   b.(u (x) v).c = bu (x) vc,
// and to the first argument through the skew identity <a,b> = -tau<b,a>.
// The double Jacobiator is  sum_{s in C3} tau_s ( <,<,>'> (x) <,>'' ) tau_s^{-1}.
//
// The wheeled bracket on F(A) is the unique biderivation (for the exchange
// and Leibniz identities with their block-permutation dressings) whose base
// cases on single factors are
//     {a, b}_{1,1}      = <a,b> (x) ((1 2) | id) (x) 1            (slot-slot)
//     {pi(c), b}_{0,1}  = slot({c,b})                             (neck-slot)
//     {a, pi(c)}_{1,0}  = -{pi(c), a}_{0,1}                       (slot-neck)
//     {pi(c), pi(c')}   = necklace({c,c'})                        (neck-neck)
// where {a,b} = mult <a,b> is the associated bracket.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wheelkit/fock.hpp"
#include "wheelkit/freealg.hpp"
#include "wheelkit/ncgeo.hpp"
#include "wheelkit/perm.hpp"
#include "wheelkit/rat.hpp"
#include "wheelkit/report.hpp"

namespace wheelkit {

// ---------------------------------------------------------------------------
// Double brackets.

struct DoubleBracketSpec {
    FreeAlgebra alg;
    std::map<std::pair<int, int>, TensorElem> table;
    bool skew = true; // whether the table was skew-completed and validated

    // If skew_complete, fill in each missing reverse pair (h,g) as -tau<g,h>
    // and reject tables violating <g,h> = -tau<h,g>.
    static DoubleBracketSpec make(FreeAlgebra a,
                                  std::map<std::pair<int, int>, TensorElem> entries,
                                  bool skew_complete = true) {
        DoubleBracketSpec s;
        s.alg = std::move(a);
        s.table = std::move(entries);
        s.skew = skew_complete;
        if (skew_complete) {
            auto snapshot = s.table;
            for (const auto& [gh, val] : snapshot) {
                auto rev = std::make_pair(gh.second, gh.first);
                if (!s.table.count(rev)) s.table.emplace(rev, val.flip().scaled(-1));
            }
            for (const auto& [gh, val] : s.table) {
                auto rev = std::make_pair(gh.second, gh.first);
                auto it = s.table.find(rev);
                if (it == s.table.end() || !(val == it->second.flip().scaled(-1)))
                    throw std::invalid_argument(
                        "DoubleBracketSpec: table is not skew on pair (" +
                        s.alg.gens.at(static_cast<size_t>(gh.first)) + "," +
                        s.alg.gens.at(static_cast<size_t>(gh.second)) + ")");
            }
        }
        return s;
    }

    const TensorElem& entry(int g, int h) const {
        auto it = table.find({g, h});
        if (it == table.end())
            throw std::invalid_argument("DoubleBracketSpec: no table entry for (" +
                                        alg.gens.at(static_cast<size_t>(g)) + "," +
                                        alg.gens.at(static_cast<size_t>(h)) + ")");
        return it->second;
    }
};

inline TensorElem dbracket_words(const DoubleBracketSpec& s, const Word& v, const Word& w) {
    if (v.empty() || w.empty()) return {};
    if (v.size() == 1 && w.size() == 1) return s.entry(v[0], w[0]);
    if (w.size() > 1) {
        // second-argument Leibniz for the outer bimodule structure
        TensorElem r;
        for (size_t k = 0; k < w.size(); ++k) {
            Word pre(w.begin(), w.begin() + static_cast<long>(k));
            Word suf(w.begin() + static_cast<long>(k) + 1, w.end());
            r = r + dbracket_words(s, v, Word{w[k]}).lmul_outer(pre).rmul_outer(suf);
        }
        return r;
    }
    // first argument routed through the skew identity
    return dbracket_words(s, w, v).flip().scaled(-1);
}

inline TensorElem dbracket(const DoubleBracketSpec& s, const AlgElem& a, const AlgElem& b) {
    TensorElem r;
    for (const auto& [v, c1] : a.t)
        for (const auto& [w, c2] : b.t) r = r + dbracket_words(s, v, w).scaled(c1 * c2);
    return r;
}

// Associated bracket {a,b} = mult <a,b>.
inline AlgElem assoc_bracket(const DoubleBracketSpec& s, const AlgElem& a, const AlgElem& b) {
    return dbracket(s, a, b).collapse();
}

// Descended brackets A_cyc x A -> A and A_cyc x A_cyc -> A_cyc, computed on
// necklace representatives (well-defined by the trace property of {.,.}).
inline AlgElem cyc_alg_bracket(const DoubleBracketSpec& s, const Word& neck,
                               const AlgElem& b) {
    return assoc_bracket(s, AlgElem::word(neck), b);
}

inline CycElem cyc_cyc_bracket(const DoubleBracketSpec& s, const Word& na, const Word& nb) {
    return cyc_project(assoc_bracket(s, AlgElem::word(na), AlgElem::word(nb)));
}

// ---------------------------------------------------------------------------
// Double Jacobiator.

// Left-iterated bracket (x,y,z) |-> <x, <y,z>'> (x) <y,z>''.
inline T3Elem dbracket_left(const DoubleBracketSpec& s, const AlgElem& x, const AlgElem& y,
                            const AlgElem& z) {
    T3Elem r;
    TensorElem inner = dbracket(s, y, z);
    for (const auto& [pq, c1] : inner.t) {
        TensorElem outer = dbracket(s, x, AlgElem::word(pq.first));
        for (const auto& [uv, c2] : outer.t)
            r.add_term(uv.first, uv.second, pq.second, c1 * c2);
    }
    return r;
}

inline T3Elem double_jacobiator(const DoubleBracketSpec& s, const AlgElem& a,
                                const AlgElem& b, const AlgElem& c) {
    T3Elem jac;
    const std::vector<AlgElem> args{a, b, c};
    const Perm c3 = cycle(1, 3, 3); // (1 2 3)
    Perm sigma(3);
    for (int q = 0; q < 3; ++q) {
        // tau_{sigma^{-1}} on the arguments: component k receives x_{sigma(k)}
        std::vector<AlgElem> in(3);
        for (int k = 1; k <= 3; ++k)
            in[static_cast<size_t>(k) - 1] = args[static_cast<size_t>(sigma.of(k)) - 1];
        T3Elem l = dbracket_left(s, in[0], in[1], in[2]);
        // tau_sigma on the output: component k receives the old sigma^{-1}(k)
        for (const auto& [key, coef] : l.t) {
            std::vector<Word> ws{std::get<0>(key), std::get<1>(key), std::get<2>(key)};
            std::vector<Word> moved = act_left(sigma, ws);
            jac.add_term(moved[0], moved[1], moved[2], coef);
        }
        sigma = c3 * sigma;
    }
    return jac;
}

// ---------------------------------------------------------------------------
// The wheeled bracket on F(A).

struct WheeledBracketEngine {
    DoubleBracketSpec spec;

    static WheeledBracketEngine make(DoubleBracketSpec s) { return {std::move(s)}; }
    int ngens() const { return static_cast<int>(spec.alg.gens.size()); }
};

namespace detail {

// A symmetric-algebra factor of a canonical triple: a slot word (arity 1) or a
// necklace word (arity 0). A canonical triple (W, id, m) is the product of its
// factors, slots first.
struct WheelFactor {
    bool is_neck = false;
    Word w;
};

inline std::vector<WheelFactor> factors_of(const FockKey& k) {
    std::vector<WheelFactor> f;
    f.reserve(k.slots.size() + k.neck.size());
    for (const Word& w : k.slots) f.push_back({false, w});
    for (const Word& w : k.neck) f.push_back({true, w});
    return f;
}

inline int factor_arity(const std::vector<WheelFactor>& f) {
    int n = 0;
    for (const WheelFactor& x : f)
        if (!x.is_neck) ++n;
    return n;
}

inline FockElem factor_elem(const WheelFactor& f) {
    return f.is_neck ? FockElem::necklace(f.w) : FockElem::slot_word(f.w);
}

inline FockElem factors_elem(const std::vector<WheelFactor>& fs) {
    FockElem r = FockElem::unit();
    for (const WheelFactor& f : fs) r = fock_mul(r, factor_elem(f));
    return r;
}

// Base cases on single factors.
inline FockElem wb_base(const WheeledBracketEngine& eng, const WheelFactor& f,
                        const WheelFactor& g) {
    const DoubleBracketSpec& s = eng.spec;
    if (!f.is_neck && !g.is_neck) {
        FockElem r = FockElem::zero(2);
        TensorElem db = dbracket_words(s, f.w, g.w);
        for (const auto& [uv, c] : db.t)
            r = r + fock_normalize({uv.first, uv.second}, cycle(1, 2, 2), Perm(2), {}, c);
        return r;
    }
    if (f.is_neck && !g.is_neck) {
        FockElem r = FockElem::zero(1);
        AlgElem ab = assoc_bracket(s, AlgElem::word(f.w), AlgElem::word(g.w));
        for (const auto& [w, c] : ab.t) r = r + FockElem::slot_word(w, c);
        return r;
    }
    if (!f.is_neck && g.is_neck) return wb_base(eng, g, f).scaled(-1);
    FockElem r = FockElem::zero(0);
    CycElem cc = cyc_cyc_bracket(s, f.w, g.w);
    for (const auto& [w, c] : cc.t) r = r + FockElem::necklace(w, c);
    return r;
}

inline Perm s3_12() { return cycle(1, 2, 3); }
inline Perm s3_23() { return cycle(2, 3, 3); }

// Bracket of two factor lists (both with trivial right permutations).
inline FockElem wb_core(const WheeledBracketEngine& eng, const std::vector<WheelFactor>& f1,
                        const std::vector<WheelFactor>& f2) {
    const int a1 = factor_arity(f1);
    const int a2 = factor_arity(f2);
    if (f1.empty() || f2.empty()) return FockElem::zero(a1 + a2); // bracket with the unit
    if (f1.size() > 1) {
        // first-argument Leibniz: {mu(v,w), u} with v = first factor, w = rest
        const WheelFactor v = f1.front();
        std::vector<WheelFactor> w(f1.begin() + 1, f1.end());
        const int n = v.is_neck ? 0 : 1;
        const int m = factor_arity(w);
        const int p = a2;
        FockElem t1 = fock_mul(wb_core(eng, {v}, f2), factors_elem(w));
        t1 = fock_act(block_perm({n, p, m}, s3_23()), t1, block_perm({n, m, p}, s3_23()));
        FockElem t2 = fock_mul(factor_elem(v), wb_core(eng, w, f2));
        return t1 + t2;
    }
    if (f2.size() > 1) {
        // second-argument Leibniz: {u, mu(v,w)} with v = first factor, w = rest
        const WheelFactor v = f2.front();
        std::vector<WheelFactor> w(f2.begin() + 1, f2.end());
        const int p = a1;
        const int n = v.is_neck ? 0 : 1;
        const int m = factor_arity(w);
        FockElem t1 = fock_mul(wb_core(eng, f1, {v}), factors_elem(w));
        FockElem t2 = fock_mul(factor_elem(v), wb_core(eng, f1, w));
        t2 = fock_act(block_perm({n, p, m}, s3_12()), t2, block_perm({p, n, m}, s3_12()));
        return t1 + t2;
    }
    return wb_base(eng, f1.front(), f2.front());
}

} // namespace detail

inline FockElem wheeled_bracket(const WheeledBracketEngine& eng, const FockElem& u,
                                const FockElem& v) {
    FockElem r = FockElem::zero(u.n + v.n);
    for (const auto& [k1, c1] : u.t)
        for (const auto& [k2, c2] : v.t) {
            FockElem core = detail::wb_core(eng, detail::factors_of(k1), detail::factors_of(k2));
            // reinstate the right permutations by equivariance
            Perm dress = ordered_sum({k1.rho, k2.rho}, {u.n, v.n});
            r = r + fock_act(Perm(u.n + v.n), core, dress).scaled(c1 * c2);
        }
    return r;
}

// Direct expansion of {pi(a), u}_{0,n}: the associated bracket acts as a
// derivation on each slot and each necklace of u separately.
inline FockElem calculation_oracle(const WheeledBracketEngine& eng, const Word& a,
                                   const FockElem& u) {
    const DoubleBracketSpec& s = eng.spec;
    FockElem r = FockElem::zero(u.n);
    for (const auto& [k, c] : u.t) {
        for (size_t i = 0; i < k.slots.size(); ++i) {
            AlgElem ab = assoc_bracket(s, AlgElem::word(a), AlgElem::word(k.slots[i]));
            for (const auto& [w, c2] : ab.t) {
                FockKey kk = k;
                kk.slots[i] = w;
                r.add_term(kk, c * c2);
            }
        }
        for (size_t j = 0; j < k.neck.size(); ++j) {
            CycElem nb = cyc_cyc_bracket(s, a, k.neck[j]);
            for (const auto& [w, c2] : nb.t) {
                FockKey kk = k;
                kk.neck[j] = w;
                kk.neck = neck_normal(kk.neck);
                r.add_term(kk, c * c2);
            }
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Axiom suites.

struct PoissonBounds {
    int max_arity = 2; // total arity of each identity instance
    FockBounds fock{2, 2, 1};

    std::string str() const {
        return "max_arity=" + std::to_string(max_arity) +
               ",word_len=" + std::to_string(fock.word_len) +
               ",neck_len=" + std::to_string(fock.neck_len) +
               ",neck_count=" + std::to_string(fock.neck_count);
    }
};

// Exchange, Leibniz and Jacobi identities with their exact block-permutation
// dressings, exhaustive over the bounded bases.
inline Report check_poisson_axioms(const WheeledBracketEngine& eng, const PoissonBounds& b) {
    Report rep;
    rep.check = "wheeled-poisson-axioms";
    rep.bounds = b.str();
    const FreeAlgebra& A = eng.spec.alg;
    const int ng = eng.ngens();
    std::vector<std::vector<FockElem>> basis;
    for (int n = 0; n <= b.max_arity; ++n) basis.push_back(fock_basis(ng, n, b.fock));

    auto p12 = detail::s3_12();
    auto p123 = cycle(1, 3, 3);        // (1 2 3)
    auto p132 = p123 * p123;           // (1 3 2)

    // exchange
    for (int n = 0; n <= b.max_arity; ++n)
        for (int m = 0; n + m <= b.max_arity; ++m)
            for (const FockElem& v : basis[static_cast<size_t>(n)])
                for (const FockElem& w : basis[static_cast<size_t>(m)]) {
                    FockElem lhs = wheeled_bracket(eng, v, w);
                    FockElem rhs = fock_act(block_perm({m, n}, cycle(1, 2, 2)),
                                            wheeled_bracket(eng, w, v),
                                            block_perm({n, m}, cycle(1, 2, 2)))
                                       .scaled(-1);
                    ++rep.cases;
                    if (!(lhs == rhs))
                        rep.fail("exchange at v=" + v.str(A) + " w=" + w.str(A));
                }

    // Leibniz and Jacobi
    for (int p = 0; p <= b.max_arity; ++p)
        for (int n = 0; p + n <= b.max_arity; ++n)
            for (int m = 0; p + n + m <= b.max_arity; ++m)
                for (const FockElem& u : basis[static_cast<size_t>(p)])
                    for (const FockElem& v : basis[static_cast<size_t>(n)])
                        for (const FockElem& w : basis[static_cast<size_t>(m)]) {
                            FockElem lhs = wheeled_bracket(eng, u, fock_mul(v, w));
                            FockElem rhs =
                                fock_mul(wheeled_bracket(eng, u, v), w) +
                                fock_act(block_perm({n, p, m}, p12),
                                         fock_mul(v, wheeled_bracket(eng, u, w)),
                                         block_perm({p, n, m}, p12));
                            ++rep.cases;
                            if (!(lhs == rhs))
                                rep.fail("leibniz at u=" + u.str(A) + " v=" + v.str(A) +
                                         " w=" + w.str(A));

                            FockElem j1 =
                                wheeled_bracket(eng, u, wheeled_bracket(eng, v, w));
                            FockElem j2 = fock_act(
                                block_perm({n, m, p}, p123),
                                wheeled_bracket(eng, v, wheeled_bracket(eng, w, u)),
                                block_perm({p, n, m}, p132));
                            FockElem j3 = fock_act(
                                block_perm({m, p, n}, p132),
                                wheeled_bracket(eng, w, wheeled_bracket(eng, u, v)),
                                block_perm({p, n, m}, p123));
                            ++rep.cases;
                            if (!((j1 + j2 + j3).is_zero()))
                                rep.fail("jacobi at u=" + u.str(A) + " v=" + v.str(A) +
                                         " w=" + w.str(A));
                        }
    return rep;
}

// Compatibility of the bracket with the partial contraction:
//   t({pi(a), u}_{0,n}) = {pi(a), t(u)}_{0,n-1}
//   t({a, u}_{1,n})     = {a, t(u)}_{1,n-1}
// where t contracts the last slot of u on both sides.
inline Report check_shift_compat(const WheeledBracketEngine& eng, const PoissonBounds& b) {
    Report rep;
    rep.check = "shift-compat";
    rep.bounds = b.str();
    const FreeAlgebra& A = eng.spec.alg;
    const int ng = eng.ngens();
    std::vector<Word> words = all_words(ng, b.fock.word_len);
    for (int n = 1; n <= b.max_arity; ++n) {
        std::vector<FockElem> basis = fock_basis(ng, n, b.fock);
        for (const Word& a : words) {
            if (a.empty()) continue;
            FockElem an = FockElem::necklace(a);
            FockElem as = FockElem::slot_word(a);
            for (const FockElem& u : basis) {
                FockElem lhs0 = fock_partial(wheeled_bracket(eng, an, u));
                FockElem rhs0 = wheeled_bracket(eng, an, fock_partial(u));
                ++rep.cases;
                if (!(lhs0 == rhs0))
                    rep.fail("arity-0 shift at a=" + A.word_str(a) + " u=" + u.str(A));
                FockElem lhs1 = fock_partial(wheeled_bracket(eng, as, u));
                FockElem rhs1 = wheeled_bracket(eng, as, fock_partial(u));
                ++rep.cases;
                if (!(lhs1 == rhs1))
                    rep.fail("arity-1 shift at a=" + A.word_str(a) + " u=" + u.str(A));
            }
        }
    }
    return rep;
}

// The direct slotwise/necklacewise expansion of {pi(a), u} agrees with the
// recursive engine.
inline Report check_calculation(const WheeledBracketEngine& eng, const PoissonBounds& b) {
    Report rep;
    rep.check = "necklace-bracket-expansion";
    rep.bounds = b.str();
    const FreeAlgebra& A = eng.spec.alg;
    const int ng = eng.ngens();
    std::vector<Word> words = all_words(ng, b.fock.word_len);
    for (int n = 0; n <= b.max_arity; ++n) {
        std::vector<FockElem> basis = fock_basis(ng, n, b.fock);
        for (const Word& a : words) {
            if (a.empty()) continue;
            for (const FockElem& u : basis) {
                FockElem lhs = wheeled_bracket(eng, FockElem::necklace(a), u);
                FockElem rhs = calculation_oracle(eng, a, u);
                ++rep.cases;
                if (!(lhs == rhs))
                    rep.fail("expansion at a=" + A.word_str(a) + " u=" + u.str(A));
            }
        }
    }
    return rep;
}

// Double Jacobi identity over bounded word triples.
inline Report check_double_jacobi(const DoubleBracketSpec& s, int maxlen) {
    Report rep;
    rep.check = "double-jacobi";
    rep.bounds = "word_len=" + std::to_string(maxlen);
    const int ng = static_cast<int>(s.alg.gens.size());
    std::vector<Word> words = all_words(ng, maxlen);
    for (const Word& a : words)
        for (const Word& b : words)
            for (const Word& c : words) {
                if (a.empty() || b.empty() || c.empty()) continue;
                ++rep.cases;
                T3Elem j = double_jacobiator(s, AlgElem::word(a), AlgElem::word(b),
                                             AlgElem::word(c));
                if (!j.is_zero())
                    rep.fail("jacobiator nonzero at (" + s.alg.word_str(a) + "," +
                             s.alg.word_str(b) + "," + s.alg.word_str(c) + ")");
            }
    return rep;
}

// ---------------------------------------------------------------------------
// The big bracket on T_B(Der B (+) Omega^1 B).
//
// Alphabet layout for a base algebra B on generators x_1..x_r:
//   indices [0,r)    : x_i        weight 0
//   indices [r,2r)   : d:x_i      weight 1
//   indices [2r,3r)  : der:x_i    weight 1
// The only nonzero generator pairs are <d:x_i, der:x_i> = <der:x_i, d:x_i>
// = 1 (x) 1; the extension is computed in the ungraded algebra with weight
// bookkeeping only.

inline WheeledBracketEngine big_bracket_engine(const FreeAlgebra& base) {
    const int r = static_cast<int>(base.gens.size());
    std::vector<std::string> names;
    std::vector<long> weights;
    names.reserve(static_cast<size_t>(3 * r));
    for (const std::string& g : base.gens) names.push_back(g);
    for (const std::string& g : base.gens) names.push_back("d:" + g);
    for (const std::string& g : base.gens) names.push_back("der:" + g);
    weights.assign(static_cast<size_t>(r), 0);
    weights.insert(weights.end(), static_cast<size_t>(2 * r), 1);
    FreeAlgebra ext = FreeAlgebra::make(std::move(names), std::move(weights));

    std::map<std::pair<int, int>, TensorElem> table;
    for (int g = 0; g < 3 * r; ++g)
        for (int h = 0; h < 3 * r; ++h) table.emplace(std::make_pair(g, h), TensorElem{});
    for (int i = 0; i < r; ++i) {
        table[{r + i, 2 * r + i}] = TensorElem::simple({}, {}, 1);
        table[{2 * r + i, r + i}] = TensorElem::simple({}, {}, 1);
    }
    return WheeledBracketEngine::make(
        DoubleBracketSpec::make(std::move(ext), std::move(table), /*skew_complete=*/false));
}

// Generator table and homogeneity of weight -2 for the big bracket.
inline Report check_big_bracket(const WheeledBracketEngine& eng, int maxlen) {
    Report rep;
    rep.check = "big-bracket";
    rep.bounds = "word_len=" + std::to_string(maxlen);
    const DoubleBracketSpec& s = eng.spec;
    const FreeAlgebra& A = s.alg;
    const int r = static_cast<int>(A.gens.size()) / 3;

    for (int g = 0; g < 3 * r; ++g)
        for (int h = 0; h < 3 * r; ++h) {
            TensorElem want;
            const bool dual = (g >= r && g < 2 * r && h == g + r) ||
                              (g >= 2 * r && h == g - r);
            if (dual) want = TensorElem::simple({}, {}, 1);
            ++rep.cases;
            if (!(s.entry(g, h) == want))
                rep.fail("generator pair (" + A.gens[static_cast<size_t>(g)] + "," +
                         A.gens[static_cast<size_t>(h)] + ")");
        }

    std::vector<Word> words = all_words(3 * r, maxlen);
    for (const Word& v : words)
        for (const Word& w : words) {
            if (v.empty() || w.empty()) continue;
            ++rep.cases;
            const long want = A.word_weight(v) + A.word_weight(w) - 2;
            TensorElem db = dbracket_words(s, v, w);
            for (const auto& [uv, c] : db.t) {
                (void)c;
                if (A.word_weight(uv.first) + A.word_weight(uv.second) != want) {
                    rep.fail("weight at (" + A.word_str(v) + "," + A.word_str(w) + ")");
                    break;
                }
            }
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Symplectic pairing.
//
// For a closed 2-form class omega with representative omega_hat, the arity-0
// element  varpi = t(omega_hat (x) (id|id) (x) 1)  pairs against coordinate
// double derivations Theta through the wheeled bracket, and the result must be
// the contraction iota(omega)(Theta) placed in a single slot. The check walks
// the defining chain of equalities:
//   {varpi, Theta}_{0,1} = t_1^2({omega_hat, Theta}_{1,1})      (shift compat)
//   {omega_hat, Theta}_{1,1} = i_Theta(omega_hat) (x) ((1 2)|id) (x) 1
// with the graded contraction i_Theta of the forms module, followed by the
// partial contraction; an equivalent contraction route (slot indices (1,2) on
// the undressed tensor) is verified alongside.

inline Report symplectic_pairing_check(const FormAlgebra& F, const AlgElem& omega_hat) {
    Report rep;
    rep.check = "symplectic-pairing";
    rep.instance = "nbase=" + std::to_string(F.nbase);
    for (const auto& [w, c] : omega_hat.t) {
        (void)c;
        if (F.word_deg(w) != 2)
            throw std::invalid_argument("symplectic_pairing_check: form is not of degree 2");
    }
    if (!d_dr(F, dr_project(F, omega_hat)).is_zero())
        rep.note = "warning: form is not closed";

    for (int g = 0; g < F.nbase; ++g) {
        DoubleDerivation th = DoubleDerivation::coordinate(g, F.nbase);
        TensorElem it = i_theta(F, omega_hat, th);

        FockElem bracket = FockElem::zero(2);
        FockElem undressed = FockElem::zero(2);
        for (const auto& [uv, c] : it.t) {
            bracket =
                bracket + fock_normalize({uv.first, uv.second}, cycle(1, 2, 2), Perm(2), {}, c);
            undressed =
                undressed + fock_normalize({uv.first, uv.second}, Perm(2), Perm(2), {}, c);
        }
        FockElem lhs = fock_contract(2, 1, 1, bracket);
        FockElem lhs_alt = fock_contract(2, 1, 2, undressed);

        AlgElem iota = reduced_contraction(F, omega_hat, th);
        FockElem rhs = FockElem::zero(1);
        for (const auto& [w, c] : iota.t) rhs = rhs + FockElem::slot_word(w, c);

        ++rep.cases;
        if (!(lhs == rhs))
            rep.fail("pairing mismatch at coordinate derivation " +
                     F.alg.gens[static_cast<size_t>(g)]);
        ++rep.cases;
        if (!(lhs_alt == lhs))
            rep.fail("contraction routes disagree at coordinate derivation " +
                     F.alg.gens[static_cast<size_t>(g)]);
    }
    return rep;
}

} // namespace wheelkit
