#pragma once

// Noncommutative calculus on a free algebra: differential forms over the
// doubled alphabet {x_i, dx_i}, the de Rham-type quotient by graded
// commutators (signed necklaces), double derivations, contractions and their
// reduced variants, and the degree-2-form machinery (contraction matrix,
// Hamiltonian double derivations for signed-permutation forms).

#include <stdexcept>
#include <string>
#include <vector>

#include "wheelkit/freealg.hpp"
#include "wheelkit/report.hpp"

namespace wheelkit {

// Form algebra over nbase generators: letters [0, nbase) are the degree-0
// generators x_i, letters [nbase, 2*nbase) are their differentials dx_i.
struct FormAlgebra {
    FreeAlgebra alg; // 2*nbase letters, named "x" and "d:x"
    int nbase = 0;

    static FormAlgebra make(std::vector<std::string> base_names) {
        FormAlgebra f;
        f.nbase = static_cast<int>(base_names.size());
        std::vector<std::string> names = base_names;
        for (const std::string& s : base_names) names.push_back("d:" + s);
        f.alg = FreeAlgebra::make(std::move(names));
        return f;
    }

    int letter_deg(int g) const { return g >= nbase ? 1 : 0; }
    int diff_of(int g) const {
        if (g >= nbase) throw std::invalid_argument("diff_of: already a differential");
        return g + nbase;
    }
    int base_of(int g) const {
        if (g < nbase) throw std::invalid_argument("base_of: not a differential");
        return g - nbase;
    }

    int word_deg(const Word& w) const {
        int s = 0;
        for (int g : w) s += letter_deg(g);
        return s;
    }
    bool word_is_base(const Word& w) const {
        for (int g : w)
            if (g >= nbase) return false;
        return true;
    }
};

// Degree of a homogeneous form; throws on mixed degrees.
inline int form_deg(const FormAlgebra& F, const AlgElem& a) {
    int deg = -1;
    for (const auto& [w, c] : a.t) {
        int d = F.word_deg(w);
        if (deg == -1) deg = d;
        if (d != deg) throw std::invalid_argument("form_deg: inhomogeneous form");
    }
    return deg == -1 ? 0 : deg;
}

// The differential: d(x_i) = dx_i, d(dx_i) = 0, graded Leibniz.
inline AlgElem d_form(const FormAlgebra& F, const AlgElem& a) {
    AlgElem r;
    for (const auto& [w, c] : a.t) {
        int sign = 1;
        for (size_t p = 0; p < w.size(); ++p) {
            int g = w[p];
            if (F.letter_deg(g) == 0) {
                Word nw = w;
                nw[p] = F.diff_of(g);
                r.add_term(nw, c * sign);
            } else {
                sign = -sign;
            }
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Signed graded necklaces: the quotient by graded commutators.

// Canonical rotation of a graded cyclic word: lexicographically minimal
// rotation, with the Koszul sign accumulated one step at a time as
// (-1)^{deg(moved letter) * deg(rest)}. Returns sign 0 when some rotation
// fixes the word with sign -1 (the class vanishes).
inline std::pair<Word, int> dr_canon(const FormAlgebra& F, const Word& w) {
    if (w.size() < 2) return {w, 1};
    int total = F.word_deg(w);
    Word best = w, cur = w;
    int best_sign = 1, sign = 1;
    for (size_t k = 1; k < w.size(); ++k) {
        int dl = F.letter_deg(cur.front());
        sign *= ((dl * (total - dl)) % 2 == 0) ? 1 : -1;
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) {
            best = cur;
            best_sign = sign;
        } else if (cur == best && sign != best_sign) {
            return {best, 0};
        }
    }
    return {best, best_sign};
}

// Element of the quotient of forms by graded commutators.
struct DRElem {
    std::map<Word, Rat> t; // keys are canonical rotations

    bool is_zero() const { return t.empty(); }
    bool operator==(const DRElem&) const = default;

    DRElem& add_canon(const Word& w, const Rat& c) {
        if (c == 0) return *this;
        auto [it, fresh] = t.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) t.erase(it);
        }
        return *this;
    }
    DRElem operator+(const DRElem& o) const {
        DRElem r = *this;
        for (const auto& [w, c] : o.t) r.add_canon(w, c);
        return r;
    }
    DRElem operator-() const {
        DRElem r;
        for (const auto& [w, c] : t) r.t.emplace(w, -c);
        return r;
    }
    DRElem operator-(const DRElem& o) const { return *this + (-o); }
};

inline DRElem dr_project(const FormAlgebra& F, const AlgElem& a) {
    DRElem r;
    for (const auto& [w, c] : a.t) {
        auto [canon, sign] = dr_canon(F, w);
        if (sign != 0) r.add_canon(canon, c * sign);
    }
    return r;
}

inline DRElem d_dr(const FormAlgebra& F, const DRElem& u) {
    AlgElem rep;
    for (const auto& [w, c] : u.t) rep.add_term(w, c);
    return dr_project(F, d_form(F, rep));
}

// ---------------------------------------------------------------------------
// Double derivations A -> A (x) A and their contractions on forms.

struct DoubleDerivation {
    std::vector<TensorElem> val; // value on each base generator

    static DoubleDerivation zero(int nbase) {
        return DoubleDerivation{std::vector<TensorElem>(static_cast<size_t>(nbase))};
    }
    // the coordinate double derivation: x_g -> 1 (x) 1, other generators -> 0
    static DoubleDerivation coordinate(int g, int nbase) {
        DoubleDerivation d = zero(nbase);
        d.val.at(static_cast<size_t>(g)) = TensorElem::simple({}, {}, 1);
        return d;
    }
    DoubleDerivation operator-() const {
        DoubleDerivation d = *this;
        for (TensorElem& v : d.val) v = -v;
        return d;
    }
    bool is_zero() const {
        for (const TensorElem& v : val)
            if (!v.is_zero()) return false;
        return true;
    }
    bool operator==(const DoubleDerivation&) const = default;
};

// Contraction i_Theta: kills x_i, sends dx_i to Theta(x_i), and extends by
// the graded double Leibniz rule with the outer-bimodule placement
// alpha.(u (x) v) = alpha u (x) v and (u (x) v).beta = u (x) v beta.
inline TensorElem i_theta_word(const FormAlgebra& F, const Word& w,
                               const DoubleDerivation& th) {
    TensorElem r;
    int sign = 1;
    Word prefix;
    for (size_t p = 0; p < w.size(); ++p) {
        int g = w[p];
        if (F.letter_deg(g) == 1) {
            const TensorElem& base = th.val.at(static_cast<size_t>(F.base_of(g)));
            if (!base.is_zero()) {
                Word suffix(w.begin() + static_cast<long>(p) + 1, w.end());
                TensorElem term = base.lmul_outer(prefix).rmul_outer(suffix).scaled(sign);
                r = r + term;
            }
            sign = -sign;
        }
        prefix.push_back(g);
    }
    return r;
}

inline TensorElem i_theta(const FormAlgebra& F, const AlgElem& a, const DoubleDerivation& th) {
    TensorElem r;
    for (const auto& [w, c] : a.t) r = r + i_theta_word(F, w, th).scaled(c);
    return r;
}

// u (x) v  ->  (-1)^{|u||v|} v u
inline AlgElem reduce_tensor(const FormAlgebra& F, const TensorElem& t) {
    AlgElem r;
    for (const auto& [k, c] : t.t) {
        int s = ((F.word_deg(k.first) * F.word_deg(k.second)) % 2 == 0) ? 1 : -1;
        r.add_term(word_cat(k.second, k.first), c * s);
    }
    return r;
}

inline AlgElem reduced_contraction(const FormAlgebra& F, const AlgElem& a,
                                   const DoubleDerivation& th) {
    return reduce_tensor(F, i_theta(F, a, th));
}

inline AlgElem dr_representative(const DRElem& u) {
    AlgElem rep;
    for (const auto& [w, c] : u.t) rep.add_term(w, c);
    return rep;
}

inline AlgElem reduced_contraction(const FormAlgebra& F, const DRElem& u,
                                   const DoubleDerivation& th) {
    return reduced_contraction(F, dr_representative(u), th);
}

// graded tensor swap (u (x) v) -> (-1)^{|u||v|} (v (x) u)
inline TensorElem tensor_swap_graded(const FormAlgebra& F, const TensorElem& t) {
    TensorElem r;
    for (const auto& [k, c] : t.t) {
        int s = ((F.word_deg(k.first) * F.word_deg(k.second)) % 2 == 0) ? 1 : -1;
        r.add_term(k.second, k.first, c * s);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Degree-2 forms: the matrix of reduced contractions against the coordinate
// double derivations, and Hamiltonian double derivations in the
// signed-permutation case.

struct ContractionMatrix {
    int n = 0;                             // base generators
    std::vector<std::vector<TensorElem>> m; // m[g][j]: coefficient of dx_j in i_{d/dx_g}
    bool signed_perm = false;               // each row/column one entry, value +-(1 (x) 1)
};

inline ContractionMatrix contraction_matrix(const FormAlgebra& F, const DRElem& omega) {
    AlgElem rep = dr_representative(omega);
    if (!rep.is_zero() && form_deg(F, rep) != 2)
        throw std::invalid_argument("contraction_matrix: form degree must be 2");
    ContractionMatrix M;
    M.n = F.nbase;
    M.m.assign(static_cast<size_t>(F.nbase),
               std::vector<TensorElem>(static_cast<size_t>(F.nbase)));
    for (int g = 0; g < F.nbase; ++g) {
        AlgElem row = reduced_contraction(F, rep, DoubleDerivation::coordinate(g, F.nbase));
        for (const auto& [w, c] : row.t) {
            // degree-1 word u dx_j v
            size_t pos = 0;
            while (pos < w.size() && F.letter_deg(w[pos]) == 0) ++pos;
            if (pos == w.size()) throw std::logic_error("contraction_matrix: degree drop");
            int j = F.base_of(w[pos]);
            Word u(w.begin(), w.begin() + static_cast<long>(pos));
            Word v(w.begin() + static_cast<long>(pos) + 1, w.end());
            M.m[static_cast<size_t>(g)][static_cast<size_t>(j)].add_term(u, v, c);
        }
    }
    // signed-permutation test: unique unit entry per row and per column
    TensorElem unit = TensorElem::simple({}, {}, 1);
    std::vector<int> col_hits(static_cast<size_t>(F.nbase), 0);
    bool ok = F.nbase > 0;
    for (int g = 0; g < F.nbase && ok; ++g) {
        int hits = 0;
        for (int j = 0; j < F.nbase; ++j) {
            const TensorElem& e = M.m[static_cast<size_t>(g)][static_cast<size_t>(j)];
            if (e.is_zero()) continue;
            ++hits;
            ++col_hits[static_cast<size_t>(j)];
            if (!(e == unit || e == unit.scaled(-1))) ok = false;
        }
        if (hits != 1) ok = false;
    }
    for (int j = 0; j < F.nbase && ok; ++j)
        if (col_hits[static_cast<size_t>(j)] != 1) ok = false;
    M.signed_perm = ok;
    return M;
}

// Hamiltonian double derivation H_a of a degree-0 element, defined by
// reduced_contraction(omega, H_a) = d a; solved only when the contraction
// matrix of omega is a signed permutation over units, and always verified by
// substitution.
inline DoubleDerivation hamiltonian(const FormAlgebra& F, const AlgElem& a,
                                    const DRElem& omega) {
    ContractionMatrix M = contraction_matrix(F, omega);
    if (!M.signed_perm)
        throw std::invalid_argument(
            "hamiltonian: contraction matrix is not a signed permutation over units");
    // row[g] = (column j, sign) of the single entry of row g
    std::vector<std::pair<int, int>> row(static_cast<size_t>(F.nbase), {-1, 0});
    TensorElem unit = TensorElem::simple({}, {}, 1);
    for (int g = 0; g < F.nbase; ++g)
        for (int j = 0; j < F.nbase; ++j) {
            const TensorElem& e = M.m[static_cast<size_t>(g)][static_cast<size_t>(j)];
            if (!e.is_zero()) row[static_cast<size_t>(g)] = {j, e == unit ? 1 : -1};
        }
    AlgElem da = d_form(F, a);
    DoubleDerivation H = DoubleDerivation::zero(F.nbase);
    for (const auto& [w, c] : da.t) {
        size_t pos = 0;
        while (pos < w.size() && F.letter_deg(w[pos]) == 0) ++pos;
        int j = F.base_of(w[pos]);
        Word u(w.begin(), w.begin() + static_cast<long>(pos));
        Word v(w.begin() + static_cast<long>(pos) + 1, w.end());
        // find the generator g whose contraction row hits column j
        int g = -1, s = 0;
        for (int gg = 0; gg < F.nbase; ++gg)
            if (row[static_cast<size_t>(gg)].first == j) {
                g = gg;
                s = row[static_cast<size_t>(gg)].second;
            }
        // contraction of a unit-coefficient row entry s.dx_j against
        // H(x_g) = p (x) q contributes s.(q dx_j p); match u dx_j v
        H.val.at(static_cast<size_t>(g)) =
            H.val.at(static_cast<size_t>(g)) + TensorElem::simple(v, u, c * s);
    }
    if (!(reduced_contraction(F, omega, H) == da))
        throw std::invalid_argument("hamiltonian: substitution check failed");
    return H;
}

// ---------------------------------------------------------------------------
// Property suites.

inline Report check_d_squared(const FormAlgebra& F, int maxlen) {
    Report rep{"d-squared", "forms over " + std::to_string(F.nbase) + " generators",
               "maxlen=" + std::to_string(maxlen)};
    for (const Word& w : all_words(2 * F.nbase, maxlen)) {
        ++rep.cases;
        if (!d_form(F, d_form(F, AlgElem::word(w))).is_zero()) {
            rep.fail("d(d(w)) != 0 at " + F.alg.word_str(w));
            return rep;
        }
    }
    return rep;
}

// i_Theta iota_Delta + swap . i_Delta iota_Theta = 0 for coordinate
// double derivations, on all words of bounded length.
inline Report check_rc1(const FormAlgebra& F, int maxlen) {
    Report rep{"reduced-contraction-antisymmetry", "coordinate double derivations",
               "maxlen=" + std::to_string(maxlen)};
    for (int g1 = 0; g1 < F.nbase; ++g1)
        for (int g2 = 0; g2 < F.nbase; ++g2) {
            DoubleDerivation th = DoubleDerivation::coordinate(g1, F.nbase);
            DoubleDerivation dl = DoubleDerivation::coordinate(g2, F.nbase);
            for (const Word& w : all_words(2 * F.nbase, maxlen)) {
                ++rep.cases;
                AlgElem a = AlgElem::word(w);
                TensorElem lhs = i_theta(F, reduced_contraction(F, a, dl), th);
                TensorElem sw =
                    tensor_swap_graded(F, i_theta(F, reduced_contraction(F, a, th), dl));
                if (!(lhs + sw).is_zero()) {
                    rep.fail("violated at word " + F.alg.word_str(w) + " (g1=" +
                             std::to_string(g1) + ",g2=" + std::to_string(g2) + ")");
                    return rep;
                }
            }
        }
    return rep;
}

// Reduced contraction kills graded commutators, hence descends to the
// quotient by them.
inline Report check_rc2(const FormAlgebra& F, int maxlen) {
    Report rep{"reduced-contraction-descends", "coordinate double derivations",
               "maxlen=" + std::to_string(maxlen)};
    std::vector<Word> words = all_words(2 * F.nbase, maxlen);
    for (int g = 0; g < F.nbase; ++g) {
        DoubleDerivation th = DoubleDerivation::coordinate(g, F.nbase);
        for (const Word& w1 : words)
            for (const Word& w2 : words) {
                if (w1.size() + w2.size() > static_cast<size_t>(maxlen)) continue;
                ++rep.cases;
                AlgElem a = AlgElem::word(w1), b = AlgElem::word(w2);
                int s = ((F.word_deg(w1) * F.word_deg(w2)) % 2 == 0) ? 1 : -1;
                AlgElem comm = a * b - (b * a).scaled(s);
                if (!reduced_contraction(F, comm, th).is_zero()) {
                    rep.fail("nonzero on commutator of " + F.alg.word_str(w1) + ", " +
                             F.alg.word_str(w2));
                    return rep;
                }
            }
    }
    return rep;
}

} // namespace wheelkit
