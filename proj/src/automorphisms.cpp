#include "rud/automorphisms.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <map>
#include <set>
#include <thread>

namespace rud::bin {

namespace {

// F2 span with tagged rows: reduce a code and carry its image along.
struct TaggedSpan {
    std::vector<std::pair<uint8_t, uint8_t>> rows;  // (value, tag), descending

    std::pair<uint8_t, uint8_t> reduce(uint8_t v, uint8_t tag) const {
        for (auto [rv, rt] : rows)
            if ((v ^ rv) < v) { v ^= rv; tag ^= rt; }
        return {v, tag};
    }
    bool add(uint8_t v, uint8_t tag) {
        auto [rv, rt] = reduce(v, tag);
        if (!rv) return false;
        rows.emplace_back(rv, rt);
        std::sort(rows.rbegin(), rows.rend());
        return true;
    }
};

// word in the generators, evaluated bottom-up: leaves 0..2 are generators,
// leaf 3 is the identity; internal nodes multiply children
struct Word {
    int op = -1;  // -1: leaf
    int leaf = 0;
    int lhs = 0, rhs = 0;  // indices into the word pool
};

struct WordPool {
    std::vector<Word> words;
    int leaf(int k) {
        words.push_back({-1, k, 0, 0});
        return int(words.size()) - 1;
    }
    int mul(int a, int b) {
        words.push_back({1, 0, a, b});
        return int(words.size()) - 1;
    }
};

uint8_t eval_word(const WordPool& pool, int idx, const BinaryAlgebra& alg,
                  uint8_t a, uint8_t b, uint8_t c) {
    const Word& w = pool.words[size_t(idx)];
    if (w.op < 0) {
        switch (w.leaf) {
            case 0: return a;
            case 1: return b;
            case 2: return c;
            default: return alg.identity_code();
        }
    }
    return alg.multiply(eval_word(pool, w.lhs, alg, a, b, c), eval_word(pool, w.rhs, alg, a, b, c));
}

// values of all products of words in the given generators (the generated
// unital subalgebra spans their F2 closure)
std::map<uint8_t, int> word_closure(const BinaryAlgebra& alg, WordPool& pool,
                                    const std::vector<std::pair<uint8_t, int>>& gens) {
    std::map<uint8_t, int> vals{{alg.identity_code(), pool.leaf(3)}};
    for (auto [v, w] : gens) vals.emplace(v, w);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::pair<uint8_t, int>> items(vals.begin(), vals.end());
        for (auto [v1, w1] : items)
            for (auto [v2, w2] : items) {
                uint8_t pv = alg.multiply(v1, v2);
                if (!vals.count(pv)) {
                    vals.emplace(pv, pool.mul(w1, w2));
                    changed = true;
                }
            }
    }
    return vals;
}

int span_rank(const std::map<uint8_t, int>& vals) {
    TaggedSpan sp;
    int r = 0;
    for (auto& [v, w] : vals)
        if (sp.add(v, 0)) ++r;
    return r;
}

}  // namespace

std::vector<Automorphism> aut_group_search(const BinaryAlgebra& alg, bool parallel) {
    auto roots = alg.elements_of(ElementType::CubeRootOfUnity);

    // deterministic generating triple of cube roots: smallest g1; smallest g2
    // spanning a 4-dim subalgebra with it; smallest g3 reaching rank 8
    WordPool pool;
    uint8_t g1 = roots.front(), g2 = 0, g3 = 0;
    int w1 = pool.leaf(0), w2 = pool.leaf(1), w3 = pool.leaf(2);
    std::map<uint8_t, int> sub2;
    for (uint8_t c : roots) {
        if (c == g1) continue;
        WordPool probe;
        auto vals = word_closure(alg, probe, {{g1, probe.leaf(0)}, {c, probe.leaf(1)}});
        if (span_rank(vals) == 4) { g2 = c; break; }
    }
    if (!g2) throw SearchIncomplete("no quaternion-spanning pair of cube roots");
    sub2 = word_closure(alg, pool, {{g1, w1}, {g2, w2}});
    std::map<uint8_t, int> full;
    for (uint8_t c : roots) {
        if (c == g1 || c == g2) continue;
        WordPool probe;
        auto vals = word_closure(alg, probe,
                                 {{g1, probe.leaf(0)}, {g2, probe.leaf(1)}, {c, probe.leaf(2)}});
        if (span_rank(vals) == 8) { g3 = c; break; }
    }
    if (!g3) throw SearchIncomplete("no rank-8 generating triple of cube roots");
    full = word_closure(alg, pool, {{g1, w1}, {g2, w2}, {g3, w3}});

    // linear word bases for the pair subalgebra and the full algebra
    std::vector<std::pair<uint8_t, int>> wb2, wb8;
    {
        TaggedSpan sp;
        for (auto& [v, w] : sub2)
            if (sp.add(v, 0)) wb2.emplace_back(v, w);
        TaggedSpan sp8;
        for (auto& [v, w] : full)
            if (sp8.add(v, 0)) wb8.emplace_back(v, w);
    }
    if (wb2.size() != 4 || wb8.size() != 8) throw SearchIncomplete("word basis extraction failed");

    std::vector<uint8_t> sub2_elems;
    for (auto& [v, w] : sub2) sub2_elems.push_back(v);

    // stage A: candidate images (c1, c2) consistent on the pair subalgebra
    auto pair_consistent = [&](uint8_t c1, uint8_t c2) {
        TaggedSpan sp;
        for (auto [v, w] : wb2) sp.add(v, eval_word(pool, w, alg, c1, c2, 0));
        std::map<uint8_t, uint8_t> img;
        for (uint8_t u : sub2_elems) {
            auto [rv, rt] = sp.reduce(u, 0);
            if (rv) return false;
            img[u] = rt;
        }
        for (uint8_t u : sub2_elems)
            for (uint8_t v : sub2_elems)
                if (alg.multiply(img[u], img[v]) != img[alg.multiply(u, v)]) return false;
        return true;
    };

    std::vector<std::pair<uint8_t, uint8_t>> pairs;
    for (uint8_t c1 : roots)
        for (uint8_t c2 : roots)
            if (pair_consistent(c1, c2)) pairs.emplace_back(c1, c2);

    // stage B: extend by c3, build the linear map, verify on basis products
    auto extend = [&](uint8_t c1, uint8_t c2, uint8_t c3,
                      std::vector<Automorphism>& out) {
        TaggedSpan sp;
        for (auto [v, w] : wb8) sp.add(v, eval_word(pool, w, alg, c1, c2, c3));
        Automorphism m;
        for (int k = 0; k < 8; ++k) {
            auto [rv, rt] = sp.reduce(uint8_t(1u << k), 0);
            if (rv) return;
            m.image[size_t(k)] = rt;
        }
        TaggedSpan inv;
        int rank = 0;
        for (int k = 0; k < 8; ++k)
            if (inv.add(m.image[size_t(k)], 0)) ++rank;
        if (rank != 8) return;
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                uint8_t prod = alg.multiply(uint8_t(1u << i), uint8_t(1u << j));
                if (m.apply(prod) != alg.multiply(m.image[size_t(i)], m.image[size_t(j)])) return;
            }
        out.push_back(m);
    };

    auto run_chunk = [&](size_t lo, size_t hi) {
        std::vector<Automorphism> out;
        for (size_t i = lo; i < hi; ++i)
            for (uint8_t c3 : roots) extend(pairs[i].first, pairs[i].second, c3, out);
        return out;
    };

    std::vector<Automorphism> group;
    if (parallel && pairs.size() > 64) {
        size_t nthreads = std::min<size_t>(std::thread::hardware_concurrency(), 8);
        nthreads = std::max<size_t>(nthreads, 1);
        std::vector<std::future<std::vector<Automorphism>>> futs;
        size_t chunk = (pairs.size() + nthreads - 1) / nthreads;
        for (size_t t = 0; t < nthreads; ++t) {
            size_t lo = t * chunk, hi = std::min(pairs.size(), lo + chunk);
            if (lo >= hi) break;
            futs.push_back(std::async(std::launch::async, run_chunk, lo, hi));
        }
        for (auto& f : futs) {
            auto part = f.get();
            group.insert(group.end(), part.begin(), part.end());
        }
    } else {
        group = run_chunk(0, pairs.size());
    }

    std::sort(group.begin(), group.end());
    group.erase(std::unique(group.begin(), group.end()), group.end());
    return group;
}

Perm28 perm_image(const Automorphism& g, const std::vector<DeltaPair>& delta,
                  const BinaryAlgebra& alg) {
    std::array<int8_t, 256> pair_of;
    pair_of.fill(-1);
    for (const auto& p : delta) {
        pair_of[p.canonical] = int8_t(p.id);
        pair_of[p.partner] = int8_t(p.id);
    }
    Perm28 out{};
    for (const auto& p : delta) {
        int8_t t = pair_of[g.apply(p.canonical)];
        if (t < 0) throw UnclassifiableElement("automorphism does not preserve cube roots");
        out[size_t(p.id)] = uint8_t(t);
    }
    return out;
}

Perm28 perm_compose(const Perm28& a, const Perm28& b) {
    Perm28 c{};
    for (int i = 0; i < 28; ++i) c[i] = a[b[i]];
    return c;
}

uint32_t perm_apply_mask(const Perm28& p, uint32_t mask) {
    uint32_t out = 0;
    while (mask) {
        int i = std::countr_zero(mask);
        mask &= mask - 1;
        out |= 1u << p[size_t(i)];
    }
    return out;
}

int perm_sign(const Perm28& p) {
    std::array<bool, 28> seen{};
    int sign = 1;
    for (int i = 0; i < 28; ++i) {
        if (seen[size_t(i)]) continue;
        int len = 0, j = i;
        while (!seen[size_t(j)]) {
            seen[size_t(j)] = true;
            j = p[size_t(j)];
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

std::vector<Perm28> permutation_group(const std::vector<Automorphism>& autos,
                                      const std::vector<DeltaPair>& delta,
                                      const BinaryAlgebra& alg) {
    std::vector<Perm28> perms;
    perms.reserve(autos.size());
    for (const auto& g : autos) perms.push_back(perm_image(g, delta, alg));
    std::sort(perms.begin(), perms.end());
    perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
    return perms;
}

std::pair<Perm28, Perm28> find_generating_pair(const std::vector<Perm28>& group) {
    auto generates = [&](const Perm28& a, const Perm28& b) {
        std::set<Perm28> gen{perm_identity()};
        std::vector<Perm28> frontier{perm_identity()};
        while (!frontier.empty() && gen.size() <= group.size()) {
            std::vector<Perm28> next;
            for (const auto& g : frontier)
                for (const auto& h : {a, b}) {
                    Perm28 ng = perm_compose(h, g);
                    if (gen.insert(ng).second) next.push_back(ng);
                }
            frontier = std::move(next);
        }
        return gen.size() == group.size();
    };
    // fixed-seed pseudo-random probes; almost any pair generates
    uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next_idx = [&] {
        state ^= state << 13; state ^= state >> 7; state ^= state << 17;
        return size_t(state % group.size());
    };
    for (int attempt = 0; attempt < 512; ++attempt) {
        size_t i = next_idx(), j = next_idx();
        if (i == j) continue;
        if (generates(group[i], group[j])) {
            Perm28 a = group[std::min(i, j)], b = group[std::max(i, j)];
            return {a, b};
        }
    }
    throw SearchIncomplete("no 2-element generating set found");
}

size_t orbit_size_on_points(const std::vector<Perm28>& group, int point) {
    std::set<uint8_t> orbit;
    for (const auto& p : group) orbit.insert(p[size_t(point)]);
    return orbit.size();
}

size_t orbit_size_on_idempotent_pairs(const std::vector<Automorphism>& autos,
                                      const BinaryAlgebra& alg) {
    auto pairs = build_idempotent_pairs(alg);
    std::array<int8_t, 256> pair_of;
    pair_of.fill(-1);
    for (const auto& p : pairs) {
        pair_of[p.canonical] = int8_t(p.id);
        pair_of[p.partner] = int8_t(p.id);
    }
    std::set<int8_t> orbit;
    for (const auto& g : autos) orbit.insert(pair_of[g.apply(pairs.front().canonical)]);
    return orbit.size();
}

}  // namespace rud::bin
