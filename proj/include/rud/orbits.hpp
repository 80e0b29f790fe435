#pragma once

#include <cstdint>
#include <vector>

#include "rud/automorphisms.hpp"
#include "rud/binary_algebra.hpp"

namespace rud::orb {

inline constexpr uint8_t kFlagSignParity = 1;
inline constexpr uint8_t kFlagInvariant = 2;

struct OrbitRecord {
    uint32_t rep = 0;       // minimal mask in the orbit
    uint32_t size = 0;
    int32_t complement = -1;  // orbit index of the complemented masks
    uint8_t flags = 0;
};

uint64_t binomial(int n, int k);

// number of k-subsets fixed by a permutation with the given cycle lengths
// (unions of whole cycles, by subset-sum convolution)
uint64_t fixed_k_subsets(const std::vector<int>& cycle_lengths, int k);

std::vector<int> cycle_lengths(const bin::Perm28& p);

// Cauchy-Frobenius count over an explicitly enumerated group.
uint64_t burnside_orbit_count(const std::vector<bin::Perm28>& group, int k);

// Explicit orbit decomposition of all C(28,k) masks: increasing-order scan
// with per-orbit BFS over a bitmap of the 2^28 mask space.  When
// check_burnside is set, throws OrbitCountMismatch unless the counts agree.
std::vector<OrbitRecord> enumerate_orbits(const std::pair<bin::Perm28, bin::Perm28>& gens,
                                          int k,
                                          const std::vector<bin::Perm28>* full_group = nullptr,
                                          bool check_burnside = false);

// Marks orbits whose members meet every dozen evenly; the representative
// check suffices by equivariance, which is spot-verified on random members.
int sign_parity_filter(std::vector<OrbitRecord>& records, const std::vector<bin::Dozen>& dozens,
                       const std::pair<bin::Perm28, bin::Perm28>& gens);

// Fast application of a fixed permutation to 28-bit masks via 4x7-bit tables.
struct MaskPermTable {
    explicit MaskPermTable(const bin::Perm28& p);
    uint32_t apply(uint32_t mask) const {
        return t_[0][mask & 127u] | t_[1][(mask >> 7) & 127u] | t_[2][(mask >> 14) & 127u] |
               t_[3][(mask >> 21) & 127u];
    }

  private:
    std::vector<uint32_t> t_[4];
};

// Orbit of one mask under the two generators (sorted).
std::vector<uint32_t> orbit_of_mask(const std::pair<bin::Perm28, bin::Perm28>& gens, uint32_t mask);

}  // namespace rud::orb
