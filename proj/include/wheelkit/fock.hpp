#pragma once

// The Fock wheelgebra F(A) of a free algebra A: canonical normal form for the
// induced S_n-bimodules, product, partial contraction, functoriality and the
// weight grading.
//
// Canonical form: every arity-n basis triple is (W, rho, m) standing for
// W (x)_{kS_n} (id | rho) (x) m, with W an n-tuple of words, rho in S_n and m
// a monomial of Sym(A_cyc). The reduction used to reach the canonical form,
// the composition orientation in the right slot, and the right-slot
// factorization inside the partial contraction each admit a binary
// orientation choice; the defaults in FockConv are the unique combination
// under which the full axiom suite (equivariance, exchange,
// trace-commutation, dressed commutativity) holds exactly — the suite in
// tests/test_fock.cpp pins them and keeps negative controls for the flips.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wheelkit/freealg.hpp"
#include "wheelkit/perm.hpp"
#include "wheelkit/rat.hpp"
#include "wheelkit/wheelcore.hpp"

namespace wheelkit {

struct FockConv {
    bool slot_by_lambda_inv = true; // canonical slots W' = W.lambda (false) or W.lambda^{-1}
    bool right_mu_lambda = false;   // canonical rho = lambda*mu (false) or mu*lambda
    bool act_right_pre = false;     // right action on rho: rho*tau' (false) or tau'*rho
    bool partial_j_by_rho = true;   // factor rho as tau(j..n)^{-1} (false) or (j..n)tau (true)
};

inline FockConv& fock_conv() {
    static FockConv c;
    return c;
}

struct FockKey {
    std::vector<Word> slots;
    Perm rho;
    CycMonomial neck;
    auto operator<=>(const FockKey&) const = default;
};

struct FockElem {
    int n = 0;
    std::map<FockKey, Rat> t;

    static FockElem zero(int n) { return FockElem{n, {}}; }
    static FockElem unit() {
        FockElem e{0, {}};
        e.t.emplace(FockKey{{}, Perm(0), {}}, 1);
        return e;
    }
    // single-slot element (a) (x) (id|id) (x) 1 for a word a
    static FockElem slot_word(Word w, Rat c = 1) {
        FockElem e{1, {}};
        if (c != 0) e.t.emplace(FockKey{{std::move(w)}, Perm(1), {}}, std::move(c));
        return e;
    }
    // arity-0 element given by one necklace
    static FockElem necklace(const Word& w, Rat c = 1) {
        FockElem e{0, {}};
        if (c != 0) e.t.emplace(FockKey{{}, Perm(0), {neck_canon(w)}}, std::move(c));
        return e;
    }

    bool is_zero() const { return t.empty(); }
    bool operator==(const FockElem&) const = default;

    FockElem& add_term(const FockKey& k, const Rat& c) {
        if (c == 0) return *this;
        auto [it, fresh] = t.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) t.erase(it);
        }
        return *this;
    }
    FockElem operator+(const FockElem& o) const {
        if (n != o.n) throw std::invalid_argument("FockElem: arity mismatch in addition");
        FockElem r = *this;
        for (const auto& [k, c] : o.t) r.add_term(k, c);
        return r;
    }
    FockElem operator-(const FockElem& o) const { return *this + o.scaled(-1); }
    FockElem operator-() const { return scaled(-1); }
    FockElem scaled(const Rat& c) const {
        FockElem r{n, {}};
        if (c == 0) return r;
        for (const auto& [k, v] : t) r.t.emplace(k, v * c);
        return r;
    }

    std::string str(const FreeAlgebra& alg) const {
        if (t.empty()) return "0";
        std::string s;
        for (const auto& [k, c] : t) {
            if (!s.empty()) s += " + ";
            s += rat_str(c) + "*(";
            for (size_t i = 0; i < k.slots.size(); ++i)
                s += (i ? "," : "") + alg.word_str(k.slots[i]);
            s += "|" + k.rho.str() + "|";
            for (size_t i = 0; i < k.neck.size(); ++i)
                s += (i ? "," : "") + std::string("<") + alg.word_str(k.neck[i]) + ">";
            s += ")";
        }
        return s;
    }
};

inline CycMonomial neck_normal(CycMonomial m) {
    for (Word& w : m) w = neck_canon(w);
    std::sort(m.begin(), m.end());
    return m;
}

// Canonical form of W (x) (lambda|mu) (x) m.
inline FockElem fock_normalize(const std::vector<Word>& W, const Perm& lambda, const Perm& mu,
                               const CycMonomial& m, Rat coef = 1) {
    const int n = static_cast<int>(W.size());
    if (lambda.n() != n || mu.n() != n)
        throw std::invalid_argument("fock_normalize: arity mismatch");
    const FockConv& cv = fock_conv();
    std::vector<Word> slots =
        cv.slot_by_lambda_inv ? act_right(W, lambda.inverse()) : act_right(W, lambda);
    Perm rho = cv.right_mu_lambda ? (mu * lambda) : (lambda * mu);
    FockElem e{n, {}};
    e.add_term(FockKey{std::move(slots), std::move(rho), neck_normal(m)}, coef);
    return e;
}

// Bimodule action on canonical triples: sigma' . (W, id|rho) . tau'
// = (W, sigma' | rho tau'), then renormalize.
inline FockElem fock_act(const Perm& sl, const FockElem& u, const Perm& sr) {
    if (sl.n() != u.n || sr.n() != u.n)
        throw std::invalid_argument("fock_act: arity mismatch");
    FockElem r{u.n, {}};
    for (const auto& [k, c] : u.t) {
        Perm mu = fock_conv().act_right_pre ? (sr * k.rho) : (k.rho * sr);
        FockElem term = fock_normalize(k.slots, sl, mu, k.neck, c);
        for (const auto& [k2, c2] : term.t) r.add_term(k2, c2);
    }
    return r;
}

// mu_{n,m}: slot concatenation, ordered sum of right permutations, necklace
// monomial product. Closed on canonical triples.
inline FockElem fock_mul(const FockElem& u, const FockElem& v) {
    FockElem r{u.n + v.n, {}};
    for (const auto& [k1, c1] : u.t)
        for (const auto& [k2, c2] : v.t) {
            FockKey k;
            k.slots = k1.slots;
            k.slots.insert(k.slots.end(), k2.slots.begin(), k2.slots.end());
            k.rho = ordered_sum({k1.rho, k2.rho}, {u.n, v.n});
            k.neck = sym_mul(k1.neck, k2.neck);
            r.add_term(k, c1 * c2);
        }
    return r;
}

// The partial contraction t^n. On a canonical triple (W, rho, m) the left
// coset datum is i = n, sigma = id; factoring the right slot (with the pinned
// orientation) gives j = rho(n), tau = (j...n)^{-1} rho. If j = n the last
// slot closes onto a necklace; otherwise slot j is absorbed into slot n as
// the word W_n W_j.
inline FockElem fock_partial(const FockElem& u) {
    if (u.n < 1) throw std::invalid_argument("fock_partial: arity 0 has no contraction");
    const int n = u.n;
    FockElem r{n - 1, {}};
    for (const auto& [k, c] : u.t) {
        const bool mirror = fock_conv().partial_j_by_rho;
        const int j = mirror ? k.rho.of(n) : k.rho.inverse().of(n);
        Perm tau = mirror ? cycle(j, n, n).inverse() * k.rho : k.rho * cycle(j, n, n);
        Perm tau_res = restrict_top(tau);
        if (j == n) {
            std::vector<Word> slots(k.slots.begin(), k.slots.end() - 1);
            CycMonomial m = k.neck;
            m.push_back(neck_canon(k.slots.back()));
            FockElem term = fock_normalize(slots, Perm(n - 1), tau_res, m, c);
            for (const auto& [k2, c2] : term.t) r.add_term(k2, c2);
        } else {
            std::vector<Word> slots;
            slots.reserve(static_cast<size_t>(n) - 1);
            for (int p = 1; p <= n - 1; ++p)
                if (p != j) slots.push_back(k.slots[static_cast<size_t>(p) - 1]);
            slots.push_back(word_cat(k.slots.back(), k.slots[static_cast<size_t>(j) - 1]));
            Perm lam = cycle(j, n - 1, n - 1).inverse();
            FockElem term = fock_normalize(slots, lam, tau_res, k.neck, c);
            for (const auto& [k2, c2] : term.t) r.add_term(k2, c2);
        }
    }
    return r;
}

inline FockElem fock_contract(int n, int i, int j, const FockElem& u) {
    if (u.n != n) throw std::invalid_argument("fock_contract: arity mismatch");
    return fock_partial(fock_act(cycle(j, n, n).inverse(), u, cycle(i, n, n)));
}

// ---------------------------------------------------------------------------
// Functoriality: apply an algebra morphism (generator -> AlgElem) slotwise and
// necklace-wise.

inline AlgElem apply_subst(const Word& w, const std::vector<AlgElem>& images) {
    AlgElem r = AlgElem::one();
    for (int g : w) r = r * images.at(static_cast<size_t>(g));
    return r;
}

inline FockElem fock_map(const FockElem& u, const std::vector<AlgElem>& images) {
    FockElem r{u.n, {}};
    for (const auto& [k, c] : u.t) {
        // expand slot images
        std::vector<FockKey> keys{FockKey{{}, k.rho, {}}};
        std::vector<Rat> coefs{c};
        for (const Word& s : k.slots) {
            AlgElem img = apply_subst(s, images);
            std::vector<FockKey> nk;
            std::vector<Rat> nc;
            for (size_t q = 0; q < keys.size(); ++q)
                for (const auto& [w2, c2] : img.t) {
                    FockKey kk = keys[q];
                    kk.slots.push_back(w2);
                    nk.push_back(std::move(kk));
                    nc.push_back(coefs[q] * c2);
                }
            keys = std::move(nk);
            coefs = std::move(nc);
        }
        // expand necklace images
        for (const Word& nw : k.neck) {
            CycElem img = cyc_project(apply_subst(nw, images));
            std::vector<FockKey> nk;
            std::vector<Rat> nc;
            for (size_t q = 0; q < keys.size(); ++q)
                for (const auto& [w2, c2] : img.t) {
                    FockKey kk = keys[q];
                    kk.neck.push_back(w2);
                    nk.push_back(std::move(kk));
                    nc.push_back(coefs[q] * c2);
                }
            keys = std::move(nk);
            coefs = std::move(nc);
        }
        for (size_t q = 0; q < keys.size(); ++q) {
            keys[q].neck = neck_normal(keys[q].neck);
            r.add_term(keys[q], coefs[q]);
        }
    }
    return r;
}

inline long fock_term_weight(const FreeAlgebra& alg, const FockKey& k) {
    long s = 0;
    for (const Word& w : k.slots) s += alg.word_weight(w);
    for (const Word& w : k.neck) s += alg.word_weight(w);
    return s;
}

inline FockElem grading_component(const FreeAlgebra& alg, const FockElem& u, long k) {
    FockElem r{u.n, {}};
    for (const auto& [key, c] : u.t)
        if (fock_term_weight(alg, key) == k) r.add_term(key, c);
    return r;
}

// ---------------------------------------------------------------------------
// Bounded basis enumeration.

inline std::vector<Word> canonical_necklaces(int ngens, int maxlen) {
    std::vector<Word> out;
    for (const Word& w : all_words(ngens, maxlen))
        if (w == neck_canon(w)) out.push_back(w);
    return out;
}

inline std::vector<CycMonomial> neck_monomials(int ngens, int maxlen, int maxcount) {
    std::vector<Word> necks = canonical_necklaces(ngens, maxlen);
    std::vector<CycMonomial> out{{}};
    // multisets of size <= maxcount (combinations with repetition)
    std::vector<CycMonomial> layer{{}};
    for (int c = 1; c <= maxcount; ++c) {
        std::vector<CycMonomial> next;
        for (const CycMonomial& m : layer)
            for (const Word& w : necks) {
                if (!m.empty() && w < m.back()) continue;
                CycMonomial mm = m;
                mm.push_back(w);
                next.push_back(std::move(mm));
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

struct FockBounds {
    int word_len = 2;
    int neck_len = 2;
    int neck_count = 1;
};

inline std::vector<FockElem> fock_basis(int ngens, int n, const FockBounds& b) {
    std::vector<Word> words = all_words(ngens, b.word_len);
    std::vector<CycMonomial> monos = neck_monomials(ngens, b.neck_len, b.neck_count);
    std::vector<Perm> perms = all_perms(n);
    std::vector<FockElem> out;
    std::vector<size_t> idx(static_cast<size_t>(n), 0);
    while (true) {
        std::vector<Word> slots;
        slots.reserve(static_cast<size_t>(n));
        for (int p = 0; p < n; ++p) slots.push_back(words[idx[static_cast<size_t>(p)]]);
        for (const Perm& rho : perms)
            for (const CycMonomial& m : monos) {
                FockElem e{n, {}};
                e.add_term(FockKey{slots, rho, m}, 1);
                out.push_back(std::move(e));
            }
        int p = n - 1;
        while (p >= 0 && ++idx[static_cast<size_t>(p)] == words.size()) {
            idx[static_cast<size_t>(p)] = 0;
            --p;
        }
        if (p < 0) break;
    }
    return out;
}

inline WheelHandle<FockElem> fock_handle(int ngens, const FockBounds& b,
                                         const std::string& name = "F(A)") {
    WheelHandle<FockElem> h;
    h.name = name;
    h.basis = [ngens, b](int n) { return fock_basis(ngens, n, b); };
    h.act = [](const Perm& s, const FockElem& u, const Perm& t) { return fock_act(s, u, t); };
    h.partial = [](const FockElem& u) { return fock_partial(u); };
    h.mul = [](const FockElem& u, const FockElem& v) { return fock_mul(u, v); };
    h.unit = []() { return FockElem::unit(); };
    h.native_tji = {};
    return h;
}

} // namespace wheelkit
