#pragma once

// Permutations of {1,...,n} with the block/cycle combinators used throughout
// the library: cycles (i ... j), ordered sums, block permutations, the
// e/f embeddings and the l/r partial maps, plus the identity-verification
// suite over all of them.

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace wheelkit {

class Perm {
public:
    Perm() = default;
    explicit Perm(int n) : img_(static_cast<size_t>(n)) {
        if (n < 0) throw std::invalid_argument("Perm: negative size");
        std::iota(img_.begin(), img_.end(), 1);
    }
    // images are 1-based: images[k-1] = sigma(k)
    static Perm from_images(std::vector<int> images) {
        Perm p;
        p.img_ = std::move(images);
        std::vector<char> seen(p.img_.size(), 0);
        for (int v : p.img_) {
            if (v < 1 || v > static_cast<int>(p.img_.size()) || seen[v - 1])
                throw std::invalid_argument("Perm: not a bijection");
            seen[v - 1] = 1;
        }
        return p;
    }

    int n() const { return static_cast<int>(img_.size()); }
    int of(int k) const { return img_[static_cast<size_t>(k - 1)]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (int k = 1; k <= n(); ++k)
            if (of(k) != k) return false;
        return true;
    }

    // (p*q)(k) = p(q(k)) : apply q first
    Perm operator*(const Perm& q) const {
        if (n() != q.n()) throw std::invalid_argument("Perm: size mismatch in composition");
        Perm r;
        r.img_.resize(img_.size());
        for (int k = 1; k <= n(); ++k) r.img_[k - 1] = of(q.of(k));
        return r;
    }

    Perm inverse() const {
        Perm r;
        r.img_.resize(img_.size());
        for (int k = 1; k <= n(); ++k) r.img_[of(k) - 1] = k;
        return r;
    }

    bool operator==(const Perm&) const = default;
    auto operator<=>(const Perm&) const = default;

    std::string str() const {
        std::string s = "[";
        for (int k = 1; k <= n(); ++k) {
            if (k > 1) s += ",";
            s += std::to_string(of(k));
        }
        return s + "]";
    }

private:
    std::vector<int> img_;
};

// The cycle (i ... j) in S_n: k -> k+1 for i <= k < j, j -> i, fixed elsewhere.
inline Perm cycle(int i, int j, int n) {
    if (i < 1 || j < i || j > n) throw std::invalid_argument("cycle: bad range");
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    for (int k = i; k < j; ++k) img[k - 1] = k + 1;
    img[j - 1] = i;
    return Perm::from_images(std::move(img));
}

// Ordered sum s_{m_1,...,m_l}(p_1,...,p_l): block-diagonal action.
inline Perm ordered_sum(const std::vector<Perm>& perms, const std::vector<int>& sizes) {
    if (perms.size() != sizes.size())
        throw std::invalid_argument("ordered_sum: perms/sizes length mismatch");
    int total = 0;
    for (size_t b = 0; b < perms.size(); ++b) {
        if (perms[b].n() != sizes[b])
            throw std::invalid_argument("ordered_sum: size mismatch in block");
        total += sizes[b];
    }
    std::vector<int> img;
    img.reserve(static_cast<size_t>(total));
    int off = 0;
    for (size_t b = 0; b < perms.size(); ++b) {
        for (int k = 1; k <= sizes[b]; ++k) img.push_back(perms[b].of(k) + off);
        off += sizes[b];
    }
    return Perm::from_images(std::move(img));
}

inline Perm ordered_sum(const std::vector<Perm>& perms) {
    std::vector<int> sizes;
    sizes.reserve(perms.size());
    for (const auto& p : perms) sizes.push_back(p.n());
    return ordered_sum(perms, sizes);
}

// Block permutation b_{m_1,...,m_l}(tau): moves whole blocks; block j lands at
// position tau(j) in the new order, i.e. with offset sum of m_{tau^{-1}(i)}
// over i < tau(j).
inline Perm block_perm(const std::vector<int>& sizes, const Perm& tau) {
    const int l = static_cast<int>(sizes.size());
    if (tau.n() != l) throw std::invalid_argument("block_perm: tau size mismatch");
    int total = 0;
    for (int m : sizes) {
        if (m < 0) throw std::invalid_argument("block_perm: negative block size");
        total += m;
    }
    Perm tinv = tau.inverse();
    std::vector<int> newoff(static_cast<size_t>(l) + 1, 0);
    // newoff[p] = total size of blocks placed before new position p
    int acc = 0;
    for (int p = 1; p <= l; ++p) {
        newoff[p - 1] = acc;
        acc += sizes[static_cast<size_t>(tinv.of(p)) - 1];
    }
    std::vector<int> img(static_cast<size_t>(total));
    int off = 0;
    for (int j = 1; j <= l; ++j) {
        const int mj = sizes[static_cast<size_t>(j) - 1];
        const int dest = newoff[static_cast<size_t>(tau.of(j)) - 1];
        for (int k = 1; k <= mj; ++k) img[static_cast<size_t>(off + k) - 1] = dest + k;
        off += mj;
    }
    return Perm::from_images(std::move(img));
}

// e_{n,m}: S_n -> S_m acting on the bottom n points.
inline Perm embed_e(int n, int m, const Perm& sigma) {
    if (sigma.n() != n || m < n) throw std::invalid_argument("embed_e: bad sizes");
    std::vector<int> img(static_cast<size_t>(m));
    for (int k = 1; k <= n; ++k) img[k - 1] = sigma.of(k);
    for (int k = n + 1; k <= m; ++k) img[k - 1] = k;
    return Perm::from_images(std::move(img));
}

// f_{n,m}: S_n -> S_m acting on the top n points (identity on the bottom m-n).
inline Perm embed_f(int n, int m, const Perm& sigma) {
    if (sigma.n() != n || m < n) throw std::invalid_argument("embed_f: bad sizes");
    const int k0 = m - n;
    std::vector<int> img(static_cast<size_t>(m));
    for (int k = 1; k <= k0; ++k) img[k - 1] = k;
    for (int k = k0 + 1; k <= m; ++k) img[k - 1] = sigma.of(k - k0) + k0;
    return Perm::from_images(std::move(img));
}

// r_i^n: S_n -> S_{n-1}, deleting input slot i and output slot sigma(i).
inline Perm rmap(int n, int i, const Perm& sigma) {
    if (sigma.n() != n || i < 1 || i > n) throw std::invalid_argument("rmap: bad index");
    std::vector<int> img(static_cast<size_t>(n) - 1);
    const int si = sigma.of(i);
    for (int k = 1; k <= n - 1; ++k) {
        const int v = (k <= i - 1) ? sigma.of(k) : sigma.of(k + 1);
        img[k - 1] = (v <= si - 1) ? v : v - 1;
    }
    return Perm::from_images(std::move(img));
}

inline Perm lmap(int n, int i, const Perm& sigma) {
    return rmap(n, i, sigma.inverse()).inverse();
}

// Restriction of sigma in S_n with sigma(n) = n to S_{n-1}.
inline Perm restrict_top(const Perm& sigma) {
    const int n = sigma.n();
    if (n < 1 || sigma.of(n) != n)
        throw std::invalid_argument("restrict_top: permutation does not fix n");
    std::vector<int> img(sigma.images().begin(), sigma.images().end() - 1);
    return Perm::from_images(std::move(img));
}

inline std::vector<Perm> all_perms(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::vector<Perm> out;
    do {
        out.push_back(Perm::from_images(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

// Tuple actions: (sigma . s)_k = s_{sigma^{-1}(k)},  (s . sigma)_k = s_{sigma(k)}.
template <typename T>
std::vector<T> act_left(const Perm& sigma, const std::vector<T>& s) {
    if (static_cast<int>(s.size()) != sigma.n())
        throw std::invalid_argument("act_left: size mismatch");
    Perm inv = sigma.inverse();
    std::vector<T> r(s.size());
    for (int k = 1; k <= sigma.n(); ++k) r[k - 1] = s[static_cast<size_t>(inv.of(k)) - 1];
    return r;
}

template <typename T>
std::vector<T> act_right(const std::vector<T>& s, const Perm& sigma) {
    if (static_cast<int>(s.size()) != sigma.n())
        throw std::invalid_argument("act_right: size mismatch");
    std::vector<T> r(s.size());
    for (int k = 1; k <= sigma.n(); ++k) r[k - 1] = s[static_cast<size_t>(sigma.of(k)) - 1];
    return r;
}

struct IdentityReport {
    bool ok = true;
    long cases = 0;
    std::string counterexample;

    void fail(std::string what) {
        if (ok) {
            ok = false;
            counterexample = std::move(what);
        }
    }
};

// Exhaustive check of the cycle-factorization cases, block-permutation
// composition rules, l/r identities and the e/l/r compatibilities up to
// total arity n_max.
inline IdentityReport verify_identities(int n_max) {
    IdentityReport rep;
    auto check = [&](bool cond, const std::string& what) {
        ++rep.cases;
        if (!cond) rep.fail(what);
    };

    // Case identities for (n n+1) in S_{n+1}.
    for (int n = 1; n + 1 <= n_max; ++n) {
        const int N = n + 1;
        Perm swap_top = cycle(n, n + 1, N);
        for (int i = 1; i <= n; ++i)
            for (int k = 1; k <= n; ++k) {
                if (i < k) {
                    Perm rhs = cycle(i, n, N).inverse() * cycle(k, n + 1, N).inverse() *
                               cycle(i, n + 1, N) * cycle(k - 1, n, N);
                    check(rhs == swap_top,
                          "case i<k at n=" + std::to_string(n) + ", i=" + std::to_string(i) +
                              ", k=" + std::to_string(k));
                } else {
                    Perm rhs = cycle(i, n, N).inverse() * cycle(k, n + 1, N).inverse() *
                               cycle(i + 1, n + 1, N) * cycle(k, n, N);
                    check(rhs == swap_top,
                          "case i>=k at n=" + std::to_string(n) + ", i=" + std::to_string(i) +
                              ", k=" + std::to_string(k));
                }
            }
    }

    // l-id / r-id / l-r-id / e-l-r.
    for (int n = 2; n <= n_max; ++n) {
        for (const Perm& sigma : all_perms(n))
            for (int i = 1; i <= n; ++i) {
                Perm lhs_l = embed_e(n - 1, n, lmap(n, i, sigma));
                Perm rhs_l =
                    cycle(i, n, n).inverse() * sigma * cycle(sigma.inverse().of(i), n, n);
                check(lhs_l == rhs_l, "l-id at n=" + std::to_string(n) + ", i=" +
                                          std::to_string(i) + ", sigma=" + sigma.str());
                Perm lhs_r = embed_e(n - 1, n, rmap(n, i, sigma));
                Perm rhs_r = cycle(sigma.of(i), n, n).inverse() * sigma * cycle(i, n, n);
                check(lhs_r == rhs_r, "r-id at n=" + std::to_string(n) + ", i=" +
                                          std::to_string(i) + ", sigma=" + sigma.str());
            }
        for (int i = 1; i <= n; ++i) {
            check(lmap(n, i, cycle(i, n, n)).is_identity(),
                  "l-r-id (l) at n=" + std::to_string(n) + ", i=" + std::to_string(i));
            check(rmap(n, i, cycle(i, n, n).inverse()).is_identity(),
                  "l-r-id (r) at n=" + std::to_string(n) + ", i=" + std::to_string(i));
        }
        for (const Perm& sigma : all_perms(n - 1)) {
            check(lmap(n, n, embed_e(n - 1, n, sigma)) == sigma,
                  "e-l-r (l) at n=" + std::to_string(n));
            check(rmap(n, n, embed_e(n - 1, n, sigma)) == sigma,
                  "e-l-r (r) at n=" + std::to_string(n));
        }
    }

    // Block-permutation composition and the intertwining with ordered sums,
    // over all size compositions with total <= n_max (zero blocks included
    // implicitly via small parts).
    std::vector<std::vector<int>> comps;
    {
        // compositions (ordered tuples of sizes >= 0, length <= 3, total <= n_max)
        for (int l = 1; l <= 3; ++l) {
            std::vector<int> cur(static_cast<size_t>(l), 0);
            while (true) {
                int tot = std::accumulate(cur.begin(), cur.end(), 0);
                if (tot <= n_max) comps.push_back(cur);
                int p = l - 1;
                while (p >= 0 && cur[static_cast<size_t>(p)] == n_max) {
                    cur[static_cast<size_t>(p)] = 0;
                    --p;
                }
                if (p < 0) break;
                ++cur[static_cast<size_t>(p)];
            }
        }
    }
    for (const auto& sizes : comps) {
        const int l = static_cast<int>(sizes.size());
        for (const Perm& tau : all_perms(l)) {
            std::vector<int> permuted(static_cast<size_t>(l));
            Perm tinv = tau.inverse();
            for (int i = 1; i <= l; ++i)
                permuted[i - 1] = sizes[static_cast<size_t>(tinv.of(i)) - 1];
            for (const Perm& tau2 : all_perms(l)) {
                check(block_perm(permuted, tau2) * block_perm(sizes, tau) ==
                          block_perm(sizes, tau2 * tau),
                      "block composition at sizes/taus");
            }
            // intertwining: s_{m o sigma^{-1}}(t_{sigma^{-1}(.)}) b_m(sigma) = b_m(sigma) s_m(t)
            if (std::accumulate(sizes.begin(), sizes.end(), 0) <= n_max) {
                std::vector<std::vector<Perm>> choices(static_cast<size_t>(l));
                for (int b = 0; b < l; ++b) choices[static_cast<size_t>(b)] = all_perms(sizes[static_cast<size_t>(b)]);
                std::vector<size_t> idx(static_cast<size_t>(l), 0);
                while (true) {
                    std::vector<Perm> ts(static_cast<size_t>(l));
                    for (int b = 0; b < l; ++b) ts[static_cast<size_t>(b)] = choices[static_cast<size_t>(b)][idx[static_cast<size_t>(b)]];
                    std::vector<Perm> ts_moved(static_cast<size_t>(l));
                    for (int i = 1; i <= l; ++i)
                        ts_moved[i - 1] = ts[static_cast<size_t>(tinv.of(i)) - 1];
                    check(ordered_sum(ts_moved, permuted) * block_perm(sizes, tau) ==
                              block_perm(sizes, tau) * ordered_sum(ts, sizes),
                          "ordered-sum/block intertwining");
                    int p = l - 1;
                    while (p >= 0 && ++idx[static_cast<size_t>(p)] == choices[static_cast<size_t>(p)].size()) {
                        idx[static_cast<size_t>(p)] = 0;
                        --p;
                    }
                    if (p < 0) break;
                }
            }
        }
    }
    return rep;
}

} // namespace wheelkit
