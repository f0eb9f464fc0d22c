// Batch verification and computation front end. Each subcommand runs one
// check or computation and emits a single JSON report to stdout or --out;
// exit code 0 on pass, 1 when a counterexample was found, 2 on usage errors.

#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "wheelkit/dpois.hpp"
#include "wheelkit/fock.hpp"
#include "wheelkit/jsonio.hpp"
#include "wheelkit/matred.hpp"
#include "wheelkit/ncgeo.hpp"
#include "wheelkit/perm.hpp"
#include "wheelkit/wheelcore.hpp"

using namespace wheelkit;

namespace {

struct Bounds {
    int max_arity = 3;
    int max_word_len = 2;
    int max_necklace_len = 2;
    int dim_v = 2;

    FockBounds fock() const { return FockBounds{max_word_len, max_necklace_len, 1}; }
    PoissonBounds poisson() const {
        PoissonBounds b;
        b.max_arity = max_arity;
        b.fock = fock();
        return b;
    }
    std::string str() const {
        return "max_arity=" + std::to_string(max_arity) +
               ",max_word_len=" + std::to_string(max_word_len) +
               ",max_necklace_len=" + std::to_string(max_necklace_len) +
               ",dim_V=" + std::to_string(dim_v);
    }
};

struct JobContext {
    json job;       // parsed --job file (possibly empty object)
    Bounds bounds;
    unsigned long long seed = 0;
    std::string out_path;
    int threads = 1;
};

void apply_bounds_string(Bounds& b, const std::string& s) {
    std::stringstream ss(s);
    std::string kv;
    while (std::getline(ss, kv, ',')) {
        if (kv.empty()) continue;
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bounds: expected k=v, got '" + kv + "'");
        const std::string key = kv.substr(0, eq);
        const int val = std::stoi(kv.substr(eq + 1));
        if (val <= 0 && key != "max_necklace_len")
            throw std::invalid_argument("bounds: '" + key + "' must be positive");
        if (key == "max_arity")
            b.max_arity = val;
        else if (key == "max_word_len")
            b.max_word_len = val;
        else if (key == "max_necklace_len")
            b.max_necklace_len = val;
        else if (key == "dim_V")
            b.dim_v = val;
        else
            throw std::invalid_argument("bounds: unknown key '" + key + "'");
    }
}

FreeAlgebra job_algebra(const JobContext& ctx, std::vector<std::string> fallback) {
    if (ctx.job.contains("algebra")) return algebra_from_json(ctx.job.at("algebra"));
    return FreeAlgebra::make(std::move(fallback));
}

DoubleBracketSpec job_bracket(const JobContext& ctx) {
    if (ctx.job.contains("bracket")) {
        FreeAlgebra alg = job_algebra(ctx, {"x"});
        return bracket_from_json(alg, ctx.job.at("bracket"));
    }
    // default instance: <x,x> = x (x) 1 - 1 (x) x on one generator
    FreeAlgebra alg = job_algebra(ctx, {"x"});
    TensorElem xx = TensorElem::simple({0}, {}, 1) + TensorElem::simple({}, {0}, -1);
    std::map<std::pair<int, int>, TensorElem> table;
    for (size_t g = 0; g < alg.gens.size(); ++g)
        table[{static_cast<int>(g), static_cast<int>(g)}] = xx;
    return DoubleBracketSpec::make(alg, std::move(table));
}

int emit(const JobContext& ctx, json out, bool ok) {
    const std::string text = out.dump(2) + "\n";
    if (!ctx.out_path.empty()) {
        std::ofstream f(ctx.out_path);
        if (!f) {
            std::cerr << "error: cannot open output file " << ctx.out_path << "\n";
            return 2;
        }
        f << text;
    } else {
        std::cout << text;
    }
    return ok ? 0 : 1;
}

int emit_report(const JobContext& ctx, Report r) {
    if (r.bounds.empty()) r.bounds = ctx.bounds.str();
    return emit(ctx, report_to_json(r), r.ok);
}

// randomized supplement: dense random elements extend the exhaustive core
EndElem random_end_elem(std::mt19937_64& rng, int n, int d) {
    std::uniform_int_distribution<int> coef(-3, 3);
    EndElem e = EndElem::zero(n, d);
    for (const EndElem& b : end_basis(n, d))
        for (const auto& [k, c] : b.t) {
            (void)c;
            e.add_term(k.first, k.second, coef(rng));
        }
    return e;
}

int run_symgrp(const JobContext& ctx) {
    IdentityReport ir = verify_identities(ctx.bounds.max_arity);
    Report r;
    r.check = "symgrp-identities";
    r.bounds = "n_max=" + std::to_string(ctx.bounds.max_arity);
    r.ok = ir.ok;
    r.cases = ir.cases;
    r.counterexample = ir.counterexample;
    return emit_report(ctx, r);
}

int run_wheel_axioms(const JobContext& ctx, const std::string& instance) {
    Report total;
    total.check = "wheel-axioms";
    total.instance = instance;
    total.bounds = ctx.bounds.str();
    const int n_max = ctx.bounds.max_arity;
    if (instance == "end") {
        auto h = end_handle(ctx.bounds.dim_v);
        total.merge(check_axioms(h, n_max));
        total.merge(check_algebra(h, n_max, n_max));
        total.merge(check_native_agreement(h, n_max));
        // seeded random supplement over dense elements, sharded over threads
        std::mt19937_64 rng(ctx.seed);
        const int rounds = 50;
        std::vector<EndElem> elems;
        std::vector<std::array<int, 3>> idx;
        std::uniform_int_distribution<int> pick_n(1, n_max);
        for (int q = 0; q < rounds; ++q) {
            const int n = pick_n(rng);
            std::uniform_int_distribution<int> pick_i(1, n);
            elems.push_back(random_end_elem(rng, n, ctx.bounds.dim_v));
            idx.push_back({n, pick_i(rng), pick_i(rng)});
        }
        std::vector<int> bad(static_cast<size_t>(rounds), 0);
        const int nthreads = std::max(1, std::min(ctx.threads, rounds));
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&, t]() {
                for (int q = t; q < rounds; q += nthreads) {
                    const auto [n, i, j] = idx[static_cast<size_t>(q)];
                    EndElem lhs = contract_general(h, n, i, j, elems[static_cast<size_t>(q)]);
                    EndElem rhs = end_contract(i, j, elems[static_cast<size_t>(q)]);
                    if (!(lhs == rhs)) bad[static_cast<size_t>(q)] = 1;
                }
            });
        for (auto& th : pool) th.join();
        total.cases += rounds;
        for (int q = 0; q < rounds; ++q)
            if (bad[static_cast<size_t>(q)])
                total.fail("random contraction sample " + std::to_string(q) +
                           " (seed=" + std::to_string(ctx.seed) + ")");
    } else if (instance == "fock") {
        FreeAlgebra alg = job_algebra(ctx, {"x", "y"});
        auto h = fock_handle(static_cast<int>(alg.gens.size()), ctx.bounds.fock());
        total.merge(check_axioms(h, n_max));
        total.merge(check_algebra(h, n_max, n_max));
    } else {
        throw std::invalid_argument("wheel-axioms: instance must be 'end' or 'fock'");
    }
    return emit_report(ctx, total);
}

int run_fock_mul(const JobContext& ctx) {
    FreeAlgebra alg = job_algebra(ctx, {"x", "y"});
    if (!ctx.job.contains("u") || !ctx.job.contains("v"))
        throw std::invalid_argument("fock-mul: job must provide \"u\" and \"v\"");
    FockElem u = fock_from_json(alg, ctx.job.at("u"));
    FockElem v = fock_from_json(alg, ctx.job.at("v"));
    json out;
    out["check"] = "fock-mul";
    out["status"] = "pass";
    out["cases"] = 1;
    out["value"] = fock_to_json(alg, fock_mul(u, v));
    return emit(ctx, out, true);
}

int run_fock_contract(const JobContext& ctx) {
    FreeAlgebra alg = job_algebra(ctx, {"x", "y"});
    if (!ctx.job.contains("u") || !ctx.job.contains("i") || !ctx.job.contains("j"))
        throw std::invalid_argument("fock-contract: job must provide \"u\", \"i\", \"j\"");
    FockElem u = fock_from_json(alg, ctx.job.at("u"));
    const int i = ctx.job.at("i").get<int>();
    const int j = ctx.job.at("j").get<int>();
    json out;
    out["check"] = "fock-contract";
    out["status"] = "pass";
    out["cases"] = 1;
    out["value"] = fock_to_json(alg, fock_contract(u.n, i, j, u));
    return emit(ctx, out, true);
}

int run_double_jacobi(const JobContext& ctx) {
    DoubleBracketSpec s = job_bracket(ctx);
    return emit_report(ctx, check_double_jacobi(s, ctx.bounds.max_word_len));
}

int run_poisson_axioms(const JobContext& ctx) {
    WheeledBracketEngine eng = WheeledBracketEngine::make(job_bracket(ctx));
    Report r = check_poisson_axioms(eng, ctx.bounds.poisson());
    r.merge(check_calculation(eng, ctx.bounds.poisson()));
    return emit_report(ctx, r);
}

int run_shift_compat(const JobContext& ctx) {
    WheeledBracketEngine eng = WheeledBracketEngine::make(job_bracket(ctx));
    return emit_report(ctx, check_shift_compat(eng, ctx.bounds.poisson()));
}

int run_big_bracket(const JobContext& ctx) {
    FreeAlgebra base = job_algebra(ctx, {"x"});
    WheeledBracketEngine eng = big_bracket_engine(base);
    Report r = check_big_bracket(eng, ctx.bounds.max_word_len);
    // jacobiator of each dual triple (d:g, der:g, g)
    const int nb = static_cast<int>(base.gens.size());
    for (int g = 0; g < nb; ++g) {
        ++r.cases;
        T3Elem j = double_jacobiator(eng.spec, AlgElem::gen(nb + g), AlgElem::gen(2 * nb + g),
                                     AlgElem::gen(g));
        if (!j.is_zero()) r.fail("jacobiator at dual triple of " + base.gens[static_cast<size_t>(g)]);
    }
    return emit_report(ctx, r);
}

int run_symplectic(const JobContext& ctx) {
    std::vector<std::string> base_names{"x", "th"};
    if (ctx.job.contains("algebra")) {
        base_names.clear();
        for (const auto& v : ctx.job.at("algebra").at("gens"))
            base_names.push_back(v.get<std::string>());
    }
    FormAlgebra F = FormAlgebra::make(base_names);
    AlgElem omega;
    if (ctx.job.contains("omega")) {
        omega = algelem_from_json(F.alg, ctx.job.at("omega"));
    } else {
        if (F.nbase < 2)
            throw std::invalid_argument(
                "symplectic-pairing: default form needs at least 2 generators");
        omega = AlgElem::word({F.diff_of(0), F.diff_of(1)});
    }
    return emit_report(ctx, symplectic_pairing_check(F, omega));
}

int run_matred_relations(const JobContext& ctx) {
    FreeAlgebra base = job_algebra(ctx, {"x"});
    MatredBounds b;
    b.d = ctx.bounds.dim_v;
    b.max_arity = ctx.bounds.max_arity;
    b.fock = ctx.bounds.fock();
    Report r = check_matrix_relations(base, b);
    // generator census: arity-1 letters span exactly k*d^2 free symbols
    EntrySpace e = EntrySpace::make(base, b.d);
    ++r.cases;
    if (static_cast<int>(e.entries.gens.size()) !=
        static_cast<int>(base.gens.size()) * b.d * b.d)
        r.fail("generator census mismatch");
    return emit_report(ctx, r);
}

AlgElem job_base_elem(const JobContext& ctx, const FreeAlgebra& alg, const std::string& key) {
    if (!ctx.job.contains(key))
        throw std::invalid_argument("job must provide \"" + key + "\"");
    const json& v = ctx.job.at(key);
    if (v.is_string()) return AlgElem::gen(alg.index(v.get<std::string>()));
    return algelem_from_json(alg, v);
}

int run_kr_bracket(const JobContext& ctx) {
    DoubleBracketSpec s = job_bracket(ctx);
    WheeledBracketEngine eng = WheeledBracketEngine::make(s);
    EntrySpace e = EntrySpace::make(s.alg, ctx.bounds.dim_v);
    AlgElem a = job_base_elem(ctx, s.alg, "a");
    AlgElem b = job_base_elem(ctx, s.alg, "b");
    const int i = ctx.job.at("i").get<int>();
    const int j = ctx.job.at("j").get<int>();
    const int k = ctx.job.at("k").get<int>();
    const int l = ctx.job.at("l").get<int>();
    PolyElem p = kr_bracket(eng, e, a, b, i, j, k, l);
    json out;
    out["check"] = "kr-bracket";
    out["status"] = "pass";
    out["cases"] = 1;
    out["value"] = poly_to_json(e.entries, p);
    return emit(ctx, out, true);
}

int run_kr_jacobi(const JobContext& ctx) {
    DoubleBracketSpec s = job_bracket(ctx);
    WheeledBracketEngine eng = WheeledBracketEngine::make(s);
    EntrySpace e = EntrySpace::make(s.alg, ctx.bounds.dim_v);
    PolyBracketTable tab = kr_bracket_table(eng, e);
    return emit_report(ctx, jacobi_poly(tab, e));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"wheelkit: exact verification of wheelspace/wheelgebra structures"};
    app.require_subcommand(1);

    std::string job_path, out_path, bounds_str, instance = "fock";
    unsigned long long seed = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--job", job_path, "JSON job file");
        sub->add_option("--out", out_path, "output file (default stdout)");
        sub->add_option("--seed", seed, "seed for randomized supplements");
        sub->add_option("--bounds", bounds_str,
                        "bounds k=v,... (max_arity, max_word_len, max_necklace_len, dim_V)");
        return sub;
    };

    std::vector<std::string> names{"symgrp-identities", "wheel-axioms",      "fock-mul",
                                   "fock-contract",     "double-jacobi",     "wheeled-poisson-axioms",
                                   "shift-compat",      "big-bracket",       "symplectic-pairing",
                                   "matred-relations",  "kr-bracket",        "kr-jacobi"};
    for (const auto& n : names) {
        CLI::App* sub = app.add_subcommand(n);
        add_common(sub);
        if (n == "wheel-axioms")
            sub->add_option("--instance", instance, "end | fock")->capture_default_str();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // help exits clean, bad usage exits 2
    }

    try {
        JobContext ctx;
        if (!job_path.empty()) {
            std::ifstream f(job_path);
            if (!f) throw std::invalid_argument("cannot open job file " + job_path);
            f >> ctx.job;
        } else {
            ctx.job = json::object();
        }
        if (ctx.job.contains("bounds")) {
            const json& jb = ctx.job.at("bounds");
            if (jb.contains("max_arity")) ctx.bounds.max_arity = jb.at("max_arity").get<int>();
            if (jb.contains("max_word_len"))
                ctx.bounds.max_word_len = jb.at("max_word_len").get<int>();
            if (jb.contains("max_necklace_len"))
                ctx.bounds.max_necklace_len = jb.at("max_necklace_len").get<int>();
            if (jb.contains("dim_V")) ctx.bounds.dim_v = jb.at("dim_V").get<int>();
        }
        if (!bounds_str.empty()) apply_bounds_string(ctx.bounds, bounds_str);
        if (ctx.bounds.max_arity < 1 || ctx.bounds.max_word_len < 0 ||
            ctx.bounds.max_necklace_len < 0 || ctx.bounds.dim_v < 1)
            throw std::invalid_argument("bounds must be positive");
        CLI::App* parsed = app.get_subcommands().at(0);
        ctx.seed = ctx.job.contains("seed") ? ctx.job.at("seed").get<unsigned long long>() : seed;
        if (parsed->count("--seed") > 0) ctx.seed = seed; // command line wins
        ctx.out_path = !out_path.empty()
                           ? out_path
                           : (ctx.job.contains("out") ? ctx.job.at("out").get<std::string>() : "");
        if (const char* tenv = std::getenv("WHEELKIT_THREADS"))
            ctx.threads = std::max(1, std::atoi(tenv));

        const std::string cmd = app.get_subcommands().at(0)->get_name();
        if (cmd == "symgrp-identities") return run_symgrp(ctx);
        if (cmd == "wheel-axioms") {
            std::string inst = ctx.job.contains("instance")
                                   ? ctx.job.at("instance").get<std::string>()
                                   : instance;
            return run_wheel_axioms(ctx, inst);
        }
        if (cmd == "fock-mul") return run_fock_mul(ctx);
        if (cmd == "fock-contract") return run_fock_contract(ctx);
        if (cmd == "double-jacobi") return run_double_jacobi(ctx);
        if (cmd == "wheeled-poisson-axioms") return run_poisson_axioms(ctx);
        if (cmd == "shift-compat") return run_shift_compat(ctx);
        if (cmd == "big-bracket") return run_big_bracket(ctx);
        if (cmd == "symplectic-pairing") return run_symplectic(ctx);
        if (cmd == "matred-relations") return run_matred_relations(ctx);
        if (cmd == "kr-bracket") return run_kr_bracket(ctx);
        if (cmd == "kr-jacobi") return run_kr_jacobi(ctx);
        std::cerr << "error: unknown subcommand\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
