#pragma once

// JSON (de)serialization for the library types used by the command-line
// front end. Rationals travel as "p/q" strings so exactness survives
// round-trips; words are arrays of generator names; permutations are 1-based
// image arrays.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wheelkit/dpois.hpp"
#include "wheelkit/fock.hpp"
#include "wheelkit/freealg.hpp"
#include "wheelkit/matred.hpp"
#include "wheelkit/perm.hpp"
#include "wheelkit/rat.hpp"
#include "wheelkit/report.hpp"

namespace wheelkit {

using json = nlohmann::json;

// --------------------------------------------------------------------------
// Basic pieces.

inline json perm_to_json(const Perm& p) {
    json a = json::array();
    for (int v : p.images()) a.push_back(v);
    return a;
}

inline Perm perm_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("perm: expected array of images");
    std::vector<int> img;
    for (const auto& v : j) img.push_back(v.get<int>());
    return Perm::from_images(std::move(img));
}

inline json word_to_json(const FreeAlgebra& alg, const Word& w) {
    json a = json::array();
    for (int g : w) a.push_back(alg.gens.at(static_cast<size_t>(g)));
    return a;
}

inline Word word_from_json(const FreeAlgebra& alg, const json& j) {
    if (!j.is_array()) throw std::invalid_argument("word: expected array of generator names");
    Word w;
    for (const auto& v : j) w.push_back(alg.index(v.get<std::string>()));
    return w;
}

inline FreeAlgebra algebra_from_json(const json& j) {
    if (!j.is_object() || !j.contains("gens"))
        throw std::invalid_argument("algebra: expected {\"gens\": [...]}");
    std::vector<std::string> names;
    for (const auto& v : j.at("gens")) names.push_back(v.get<std::string>());
    std::vector<long> weights;
    if (j.contains("weights"))
        for (const auto& v : j.at("weights")) weights.push_back(v.get<long>());
    return FreeAlgebra::make(std::move(names), std::move(weights));
}

inline json algebra_to_json(const FreeAlgebra& a) {
    json j;
    j["gens"] = a.gens;
    bool nontrivial = false;
    for (long w : a.weights) nontrivial |= (w != 0);
    if (nontrivial) j["weights"] = a.weights;
    return j;
}

// --------------------------------------------------------------------------
// Algebra elements: [[coef, [letters...]], ...].

inline json algelem_to_json(const FreeAlgebra& alg, const AlgElem& a) {
    json out = json::array();
    for (const auto& [w, c] : a.t) out.push_back(json::array({rat_str(c), word_to_json(alg, w)}));
    return out;
}

inline AlgElem algelem_from_json(const FreeAlgebra& alg, const json& j) {
    if (!j.is_array()) throw std::invalid_argument("element: expected array of terms");
    AlgElem r;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2)
            throw std::invalid_argument("element term: expected [coef, word]");
        r.add_term(word_from_json(alg, t.at(1)), parse_rat(t.at(0).get<std::string>()));
    }
    return r;
}

// TensorElem values: [[coef, left word, right word], ...].
inline json tensor_to_json(const FreeAlgebra& alg, const TensorElem& t) {
    json out = json::array();
    for (const auto& [uv, c] : t.t)
        out.push_back(json::array(
            {rat_str(c), word_to_json(alg, uv.first), word_to_json(alg, uv.second)}));
    return out;
}

inline TensorElem tensor_from_json(const FreeAlgebra& alg, const json& j) {
    if (!j.is_array()) throw std::invalid_argument("tensor: expected array of terms");
    TensorElem r;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3)
            throw std::invalid_argument("tensor term: expected [coef, left, right]");
        r.add_term(word_from_json(alg, t.at(1)), word_from_json(alg, t.at(2)),
                   parse_rat(t.at(0).get<std::string>()));
    }
    return r;
}

// --------------------------------------------------------------------------
// Fock elements.

inline json fock_to_json(const FreeAlgebra& alg, const FockElem& u) {
    json j;
    j["n"] = u.n;
    json terms = json::array();
    for (const auto& [k, c] : u.t) {
        json t;
        t["coef"] = rat_str(c);
        json slots = json::array();
        for (const Word& w : k.slots) slots.push_back(word_to_json(alg, w));
        t["slots"] = slots;
        t["perm"] = perm_to_json(k.rho);
        json neck = json::array();
        for (const Word& w : k.neck) neck.push_back(word_to_json(alg, w));
        t["neck"] = neck;
        terms.push_back(std::move(t));
    }
    j["terms"] = terms;
    return j;
}

inline FockElem fock_from_json(const FreeAlgebra& alg, const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
        throw std::invalid_argument("fock element: expected {\"n\":..., \"terms\":[...]}");
    const int n = j.at("n").get<int>();
    FockElem r = FockElem::zero(n);
    for (const auto& t : j.at("terms")) {
        std::vector<Word> slots;
        for (const auto& s : t.at("slots")) slots.push_back(word_from_json(alg, s));
        if (static_cast<int>(slots.size()) != n)
            throw std::invalid_argument("fock term: slot count does not match n");
        Perm rho = t.contains("perm") ? perm_from_json(t.at("perm")) : Perm(n);
        CycMonomial neck;
        if (t.contains("neck"))
            for (const auto& s : t.at("neck")) neck.push_back(word_from_json(alg, s));
        Rat c = parse_rat(t.at("coef").get<std::string>());
        // normalize through the canonical form so arbitrary inputs are legal
        FockElem term = fock_normalize(slots, Perm(n), rho, neck, c);
        r = r + term;
    }
    return r;
}

// --------------------------------------------------------------------------
// Double-bracket tables.

inline DoubleBracketSpec bracket_from_json(const FreeAlgebra& alg, const json& j,
                                           bool skew_complete = true) {
    if (!j.is_object() || !j.contains("entries"))
        throw std::invalid_argument("bracket: expected {\"entries\": [...]}");
    std::map<std::pair<int, int>, TensorElem> table;
    for (const auto& e : j.at("entries")) {
        int g = alg.index(e.at("lhs").get<std::string>());
        int h = alg.index(e.at("rhs").get<std::string>());
        table[{g, h}] = tensor_from_json(alg, e.at("value"));
    }
    return DoubleBracketSpec::make(alg, std::move(table), skew_complete);
}

inline json bracket_to_json(const DoubleBracketSpec& s) {
    json entries = json::array();
    for (const auto& [gh, val] : s.table) {
        json e;
        e["lhs"] = s.alg.gens.at(static_cast<size_t>(gh.first));
        e["rhs"] = s.alg.gens.at(static_cast<size_t>(gh.second));
        e["value"] = tensor_to_json(s.alg, val);
        entries.push_back(std::move(e));
    }
    return json{{"entries", entries}};
}

// --------------------------------------------------------------------------
// Polynomials and reports.

inline json poly_to_json(const FreeAlgebra& entries, const PolyElem& p) {
    json out = json::array();
    for (const auto& [m, c] : p.t)
        out.push_back(json::array({rat_str(c), word_to_json(entries, m)}));
    return out;
}

inline json report_to_json(const Report& r) {
    json j;
    j["check"] = r.check;
    if (!r.instance.empty()) j["instance"] = r.instance;
    if (!r.bounds.empty()) j["bounds"] = r.bounds;
    j["status"] = r.ok ? "pass" : "fail";
    j["cases"] = r.cases;
    if (!r.counterexample.empty()) j["counterexample"] = r.counterexample;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

} // namespace wheelkit
