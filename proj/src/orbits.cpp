#include "rud/orbits.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "rud/errors.hpp"

namespace rud::orb {

uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * uint64_t(n - k + i) / uint64_t(i);
    return r;
}

uint64_t fixed_k_subsets(const std::vector<int>& cycles, int k) {
    std::vector<uint64_t> dp(size_t(k) + 1, 0);
    dp[0] = 1;
    for (int len : cycles) {
        if (len > k) continue;
        for (int d = k; d >= len; --d) dp[size_t(d)] += dp[size_t(d - len)];
    }
    return dp[size_t(k)];
}

std::vector<int> cycle_lengths(const bin::Perm28& p) {
    std::vector<int> out;
    std::array<bool, 28> seen{};
    for (int i = 0; i < 28; ++i) {
        if (seen[size_t(i)]) continue;
        int len = 0, j = i;
        while (!seen[size_t(j)]) {
            seen[size_t(j)] = true;
            j = p[size_t(j)];
            ++len;
        }
        out.push_back(len);
    }
    return out;
}

uint64_t burnside_orbit_count(const std::vector<bin::Perm28>& group, int k) {
    // group the elements by cycle type first; fix counts depend only on it
    std::map<std::vector<int>, uint64_t> types;
    for (const auto& p : group) {
        auto c = cycle_lengths(p);
        std::sort(c.begin(), c.end());
        ++types[c];
    }
    uint64_t total = 0;
    for (const auto& [cyc, count] : types) total += count * fixed_k_subsets(cyc, k);
    if (total % group.size() != 0)
        throw OrbitCountMismatch("Burnside sum not divisible by the group order");
    return total / group.size();
}

MaskPermTable::MaskPermTable(const bin::Perm28& p) {
    for (int block = 0; block < 4; ++block) {
        t_[block].resize(128);
        for (uint32_t v = 0; v < 128; ++v) {
            uint32_t out = 0;
            for (int b = 0; b < 7; ++b) {
                int idx = block * 7 + b;
                if (idx < 28 && (v & (1u << b))) out |= 1u << p[size_t(idx)];
            }
            t_[block][v] = out;
        }
    }
}

std::vector<uint32_t> orbit_of_mask(const std::pair<bin::Perm28, bin::Perm28>& gens,
                                    uint32_t mask) {
    MaskPermTable ta(gens.first), tb(gens.second);
    std::unordered_set<uint32_t> seen{mask};
    std::vector<uint32_t> queue{mask};
    size_t head = 0;
    while (head < queue.size()) {
        uint32_t m = queue[head++];
        for (const MaskPermTable* t : {&ta, &tb}) {
            uint32_t nm = t->apply(m);
            if (seen.insert(nm).second) queue.push_back(nm);
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

std::vector<OrbitRecord> enumerate_orbits(const std::pair<bin::Perm28, bin::Perm28>& gens,
                                          int k, const std::vector<bin::Perm28>* full_group,
                                          bool check_burnside) {
    MaskPermTable ta(gens.first), tb(gens.second);
    std::vector<uint64_t> visited(1u << 22, 0);  // one bit per 28-bit mask
    auto test_and_set = [&](uint32_t m) {
        uint64_t& w = visited[m >> 6];
        uint64_t bit = 1ull << (m & 63);
        bool was = w & bit;
        w |= bit;
        return was;
    };

    std::vector<OrbitRecord> records;
    std::vector<uint32_t> orbit_max;  // complementation commutes with the
                                      // action, so min(full ^ orbit) = full ^ max(orbit)
    std::vector<uint32_t> queue;
    uint64_t covered = 0;

    uint32_t mask = (k == 0) ? 0 : (1u << k) - 1;
    const uint32_t limit = 1u << 28;
    while (true) {
        if (!test_and_set(mask)) {
            // mask is the orbit minimum: every smaller member would have been
            // visited by an earlier scan position
            queue.clear();
            queue.push_back(mask);
            uint32_t maxm = mask;
            size_t head = 0;
            while (head < queue.size()) {
                uint32_t m = queue[head++];
                uint32_t na = ta.apply(m), nb = tb.apply(m);
                if (!test_and_set(na)) { queue.push_back(na); maxm = std::max(maxm, na); }
                if (!test_and_set(nb)) { queue.push_back(nb); maxm = std::max(maxm, nb); }
            }
            records.push_back({mask, uint32_t(queue.size()), -1, 0});
            orbit_max.push_back(maxm);
            covered += queue.size();
        }
        if (k == 0) break;
        // Gosper: next mask of the same popcount
        uint32_t c = mask & (0u - mask);
        uint32_t r = mask + c;
        uint32_t next = (((r ^ mask) >> 2) / c) | r;
        if (next >= limit) break;
        mask = next;
    }

    if (covered != binomial(28, k))
        throw OrbitCountMismatch("orbit sizes do not partition the k-subsets");

    if (2 * k == 28) {
        std::map<uint32_t, int32_t> rep_index;
        for (size_t i = 0; i < records.size(); ++i) rep_index[records[i].rep] = int32_t(i);
        const uint32_t full = (1u << 28) - 1;
        for (size_t i = 0; i < records.size(); ++i)
            records[i].complement = rep_index.at(full ^ orbit_max[i]);
        for (size_t i = 0; i < records.size(); ++i) {
            int32_t j = records[i].complement;
            if (records[size_t(j)].complement != int32_t(i))
                throw OrbitCountMismatch("complementation is not an involution on orbits");
        }
    }

    if (check_burnside) {
        if (!full_group) throw OrbitCountMismatch("Burnside check requested without the group");
        uint64_t b = burnside_orbit_count(*full_group, k);
        if (b != records.size())
            throw OrbitCountMismatch("explicit enumeration disagrees with the Burnside count");
    }
    return records;
}

int sign_parity_filter(std::vector<OrbitRecord>& records, const std::vector<bin::Dozen>& dozens,
                       const std::pair<bin::Perm28, bin::Perm28>& gens) {
    int passing = 0;
    uint64_t rng = 0x243f6a8885a308d3ull;
    for (auto& r : records) {
        bool even = true;
        for (const auto& d : dozens)
            if (std::popcount(r.rep & d.members) % 2) { even = false; break; }
        if (!even) continue;
        // equivariance spot check on up to three other orbit members
        auto orbit = orbit_of_mask(gens, r.rep);
        for (int probe = 0; probe < 3 && orbit.size() > 1; ++probe) {
            rng ^= rng << 13; rng ^= rng >> 7; rng ^= rng << 17;
            uint32_t m = orbit[rng % orbit.size()];
            for (const auto& d : dozens)
                if (std::popcount(m & d.members) % 2)
                    throw OrbitCountMismatch("sign parity is not orbit-invariant");
        }
        r.flags |= kFlagSignParity;
        ++passing;
    }
    return passing;
}

}  // namespace rud::orb
