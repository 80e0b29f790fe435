#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rud/binary_algebra.hpp"

namespace rud::bin {

// Invertible F2-linear map on codes, stored as images of the 8 basis bits.
struct Automorphism {
    std::array<uint8_t, 8> image{};

    uint8_t apply(uint8_t code) const {
        uint8_t out = 0;
        while (code) {
            out ^= image[size_t(std::countr_zero(code))];
            code &= uint8_t(code - 1);
        }
        return out;
    }
    uint64_t key() const {
        uint64_t k = 0;
        for (int i = 0; i < 8; ++i) k |= uint64_t(image[i]) << (8 * i);
        return k;
    }
    friend bool operator==(const Automorphism&, const Automorphism&) = default;
    friend auto operator<=>(const Automorphism& a, const Automorphism& b) { return a.key() <=> b.key(); }
};

// Backtracking over images of a generating triple of cube roots, pruned by
// type preservation and partial-multiplication consistency on the quaternion
// subalgebra of the first two generators.  Returns the full group, sorted.
// Throws SearchIncomplete if no generating triple is found.
std::vector<Automorphism> aut_group_search(const BinaryAlgebra& alg, bool parallel = false);

using Perm28 = std::array<uint8_t, 28>;

Perm28 perm_image(const Automorphism& g, const std::vector<DeltaPair>& delta,
                  const BinaryAlgebra& alg);

inline Perm28 perm_identity() {
    Perm28 p{};
    for (int i = 0; i < 28; ++i) p[i] = uint8_t(i);
    return p;
}
Perm28 perm_compose(const Perm28& a, const Perm28& b);  // a after b
uint32_t perm_apply_mask(const Perm28& p, uint32_t mask);
int perm_sign(const Perm28& p);

// Distinct pair permutations, sorted (faithfulness = size match with source).
std::vector<Perm28> permutation_group(const std::vector<Automorphism>& autos,
                                      const std::vector<DeltaPair>& delta,
                                      const BinaryAlgebra& alg);

// Smallest pair of group elements (in sort order) generating the whole group.
std::pair<Perm28, Perm28> find_generating_pair(const std::vector<Perm28>& group);

size_t orbit_size_on_points(const std::vector<Perm28>& group, int point);

// Orbit size of the induced action on idempotent pairs.
size_t orbit_size_on_idempotent_pairs(const std::vector<Automorphism>& autos,
                                      const BinaryAlgebra& alg);

}  // namespace rud::bin
