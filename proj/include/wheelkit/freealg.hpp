#pragma once

// Free associative algebras over exact rationals: words, linear combinations,
// cyclic words (necklaces) and the free commutative monoid they generate.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "wheelkit/rat.hpp"

namespace wheelkit {

// A word is a sequence of generator indices; the empty word is the unit.
using Word = std::vector<int>;

struct FreeAlgebra {
    std::vector<std::string> gens;
    std::vector<long> weights; // per-generator weight (default 0)

    static FreeAlgebra make(std::vector<std::string> names, std::vector<long> w = {}) {
        FreeAlgebra a;
        a.gens = std::move(names);
        a.weights = std::move(w);
        if (a.weights.empty()) a.weights.assign(a.gens.size(), 0);
        if (a.weights.size() != a.gens.size())
            throw std::invalid_argument("FreeAlgebra: weights/gens mismatch");
        return a;
    }

    int index(const std::string& name) const {
        for (size_t i = 0; i < gens.size(); ++i)
            if (gens[i] == name) return static_cast<int>(i);
        throw std::invalid_argument("FreeAlgebra: unknown generator '" + name + "'");
    }

    long word_weight(const Word& w) const {
        long s = 0;
        for (int g : w) s += weights.at(static_cast<size_t>(g));
        return s;
    }

    std::string word_str(const Word& w) const {
        if (w.empty()) return "1";
        std::string s;
        for (int g : w) {
            if (!s.empty()) s += ".";
            s += gens.at(static_cast<size_t>(g));
        }
        return s;
    }
};

inline Word word_cat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

struct AlgElem {
    std::map<Word, Rat> t;

    static AlgElem zero() { return {}; }
    static AlgElem one() { return word(Word{}); }
    static AlgElem gen(int g) { return word(Word{g}); }
    static AlgElem word(Word w, Rat c = 1) {
        AlgElem e;
        if (c != 0) e.t.emplace(std::move(w), std::move(c));
        return e;
    }

    bool is_zero() const { return t.empty(); }
    bool operator==(const AlgElem&) const = default;

    AlgElem& add_term(const Word& w, const Rat& c) {
        if (c == 0) return *this;
        auto [it, fresh] = t.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) t.erase(it);
        }
        return *this;
    }

    AlgElem operator+(const AlgElem& o) const {
        AlgElem r = *this;
        for (const auto& [w, c] : o.t) r.add_term(w, c);
        return r;
    }
    AlgElem operator-(const AlgElem& o) const { return *this + o.scaled(-1); }
    AlgElem operator-() const { return scaled(-1); }

    AlgElem scaled(const Rat& c) const {
        AlgElem r;
        if (c == 0) return r;
        for (const auto& [w, k] : t) r.t.emplace(w, k * c);
        return r;
    }

    AlgElem operator*(const AlgElem& o) const {
        AlgElem r;
        for (const auto& [w1, c1] : t)
            for (const auto& [w2, c2] : o.t) r.add_term(word_cat(w1, w2), c1 * c2);
        return r;
    }

    std::string str(const FreeAlgebra& alg) const {
        if (t.empty()) return "0";
        std::string s;
        for (const auto& [w, c] : t) {
            if (!s.empty()) s += " + ";
            s += rat_str(c) + "*" + alg.word_str(w);
        }
        return s;
    }
};

// ---------------------------------------------------------------------------
// Necklaces: cyclic words, stored as their lexicographically minimal rotation.

inline Word neck_canon(const Word& w) {
    if (w.size() < 2) return w;
    Word best = w;
    Word rot = w;
    for (size_t k = 1; k < w.size(); ++k) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

// Element of A_cyc = A/[A,A]: rational combination of necklaces.
struct CycElem {
    std::map<Word, Rat> t; // keys canonical

    static CycElem neck(const Word& w, Rat c = 1) {
        CycElem e;
        if (c != 0) e.t.emplace(neck_canon(w), std::move(c));
        return e;
    }
    bool is_zero() const { return t.empty(); }
    bool operator==(const CycElem&) const = default;

    CycElem& add_term(const Word& canon, const Rat& c) {
        if (c == 0) return *this;
        auto [it, fresh] = t.emplace(canon, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) t.erase(it);
        }
        return *this;
    }
    CycElem operator+(const CycElem& o) const {
        CycElem r = *this;
        for (const auto& [w, c] : o.t) r.add_term(w, c);
        return r;
    }
    CycElem operator-() const {
        CycElem r;
        for (const auto& [w, c] : t) r.t.emplace(w, -c);
        return r;
    }
};

inline CycElem cyc_project(const AlgElem& a) {
    CycElem r;
    for (const auto& [w, c] : a.t) r.add_term(neck_canon(w), c);
    return r;
}

// Monomial of Sym(A_cyc): multiset of necklaces, kept sorted.
using CycMonomial = std::vector<Word>;

inline CycMonomial sym_mul(const CycMonomial& a, const CycMonomial& b) {
    CycMonomial r = a;
    r.insert(r.end(), b.begin(), b.end());
    std::sort(r.begin(), r.end());
    return r;
}

inline CycMonomial sym_one() { return {}; }

// Element of Sym(A_cyc).
struct SymCycElem {
    std::map<CycMonomial, Rat> t;

    static SymCycElem one() {
        SymCycElem e;
        e.t.emplace(sym_one(), 1);
        return e;
    }
    bool operator==(const SymCycElem&) const = default;

    SymCycElem& add_term(const CycMonomial& m, const Rat& c) {
        if (c == 0) return *this;
        auto [it, fresh] = t.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) t.erase(it);
        }
        return *this;
    }
    SymCycElem operator+(const SymCycElem& o) const {
        SymCycElem r = *this;
        for (const auto& [m, c] : o.t) r.add_term(m, c);
        return r;
    }
    SymCycElem operator*(const SymCycElem& o) const {
        SymCycElem r;
        for (const auto& [m1, c1] : t)
            for (const auto& [m2, c2] : o.t) r.add_term(sym_mul(m1, m2), c1 * c2);
        return r;
    }
};

// ---------------------------------------------------------------------------
// Elements of A (x) A and A (x) A (x) A, used by double brackets.

struct TensorElem {
    std::map<std::pair<Word, Word>, Rat> t;

    static TensorElem simple(Word u, Word v, Rat c = 1) {
        TensorElem e;
        if (c != 0) e.t.emplace(std::make_pair(std::move(u), std::move(v)), std::move(c));
        return e;
    }
    bool is_zero() const { return t.empty(); }
    bool operator==(const TensorElem&) const = default;

    TensorElem& add_term(const Word& u, const Word& v, const Rat& c) {
        if (c == 0) return *this;
        auto key = std::make_pair(u, v);
        auto [it, fresh] = t.emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) t.erase(it);
        }
        return *this;
    }
    TensorElem operator+(const TensorElem& o) const {
        TensorElem r = *this;
        for (const auto& [k, c] : o.t) r.add_term(k.first, k.second, c);
        return r;
    }
    TensorElem operator-(const TensorElem& o) const { return *this + o.scaled(-1); }
    TensorElem operator-() const { return scaled(-1); }
    TensorElem scaled(const Rat& c) const {
        TensorElem r;
        if (c == 0) return r;
        for (const auto& [k, v] : t) r.t.emplace(k, v * c);
        return r;
    }

    // tensor flip tau(u (x) v) = v (x) u
    TensorElem flip() const {
        TensorElem r;
        for (const auto& [k, c] : t) r.add_term(k.second, k.first, c);
        return r;
    }

    // w.(u (x) v) = wu (x) v
    TensorElem lmul_outer(const Word& w) const {
        TensorElem r;
        for (const auto& [k, c] : t) r.add_term(word_cat(w, k.first), k.second, c);
        return r;
    }
    // (u (x) v).w = u (x) vw
    TensorElem rmul_outer(const Word& w) const {
        TensorElem r;
        for (const auto& [k, c] : t) r.add_term(k.first, word_cat(k.second, w), c);
        return r;
    }
    // inner bimodule action: (u (x) v) * w = uw (x) v
    TensorElem rmul_inner(const Word& w) const {
        TensorElem r;
        for (const auto& [k, c] : t) r.add_term(word_cat(k.first, w), k.second, c);
        return r;
    }
    // w * (u (x) v) = u (x) wv
    TensorElem lmul_inner(const Word& w) const {
        TensorElem r;
        for (const auto& [k, c] : t) r.add_term(k.first, word_cat(w, k.second), c);
        return r;
    }

    // multiplication map A (x) A -> A
    AlgElem collapse() const {
        AlgElem r;
        for (const auto& [k, c] : t) r.add_term(word_cat(k.first, k.second), c);
        return r;
    }
};

struct T3Elem {
    std::map<std::tuple<Word, Word, Word>, Rat> t;

    bool is_zero() const { return t.empty(); }
    bool operator==(const T3Elem&) const = default;

    T3Elem& add_term(const Word& a, const Word& b, const Word& c, const Rat& k) {
        if (k == 0) return *this;
        auto key = std::make_tuple(a, b, c);
        auto [it, fresh] = t.emplace(key, k);
        if (!fresh) {
            it->second += k;
            if (it->second == 0) t.erase(it);
        }
        return *this;
    }
    T3Elem operator+(const T3Elem& o) const {
        T3Elem r = *this;
        for (const auto& [k, c] : o.t)
            r.add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k), c);
        return r;
    }
};

// All words of length <= maxlen over ngens generators (includes the empty word).
inline std::vector<Word> all_words(int ngens, int maxlen) {
    std::vector<Word> out{Word{}};
    size_t lo = 0;
    for (int len = 1; len <= maxlen; ++len) {
        size_t hi = out.size();
        for (size_t i = lo; i < hi; ++i)
            for (int g = 0; g < ngens; ++g) {
                Word w = out[i];
                w.push_back(g);
                out.push_back(std::move(w));
            }
        lo = hi;
    }
    return out;
}

} // namespace wheelkit
