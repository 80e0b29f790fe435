#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rud/automorphisms.hpp"
#include "rud/binary_algebra.hpp"

namespace rud::mono {

// Signed/phased coordinate permutation of the 28-dimensional space: sends the
// basis vector at P to i^{phase[P]} times the basis vector at perm[P].
struct MonomialOperator {
    bin::Perm28 perm{};
    std::array<uint8_t, 28> phase{};  // exponent of i, mod 4 (source-indexed)

    static MonomialOperator identity();
    static MonomialOperator dozen_sign(uint32_t members);  // -1 on the dozen
    static MonomialOperator pure_perm(const bin::Perm28& p);

    MonomialOperator compose(const MonomialOperator& other) const;  // this after other
    bool is_diagonal() const;
    // sign pattern of a +-1 diagonal operator (requires phases in {0,2})
    uint32_t diagonal_pattern() const;

    // product of phases times permutation sign, as an exponent of i mod 4;
    // this is the scalar the operator applies to the full wedge a_Delta
    int wedge_character_exponent() const;

    friend bool operator==(const MonomialOperator&, const MonomialOperator&) = default;
    friend auto operator<=>(const MonomialOperator&, const MonomialOperator&) = default;
};

enum class LiftStatus : uint8_t { Found, Absent };

struct MonomialGroup {
    std::vector<MonomialOperator> sign_generators;  // one per dozen
    std::vector<MonomialOperator> lifted;           // lifts of the perm generators
    std::vector<uint32_t> sign_span;                // all sign patterns (order 128)
    LiftStatus lift = LiftStatus::Absent;

    std::vector<MonomialOperator> generators() const;
    uint64_t order() const;  // |sign span| * |perm group| when the lift holds
};

// Builds the sign subgroup from the dozens and searches for phase lifts of
// the two permutation generators subject to: conjugation permutes the dozen
// signs, relations land in the sign subgroup, and phase-product times
// permutation sign is 1.  The identity-phase lift is tried first; when the
// permutation group is even, it satisfies all constraints exactly.  When no
// assignment passes within budget the group degrades (lift = Absent) and
// invariant filtering falls back to the sign subgroup plus unsigned
// permutations.
MonomialGroup build_monomial_group(const std::vector<bin::Dozen>& dozens,
                                   const std::pair<bin::Perm28, bin::Perm28>& perm_gens,
                                   const std::vector<bin::Perm28>& perm_group,
                                   uint64_t closure_budget = 4u << 20);

// nu = 1_X + a_Delta 1_X; fixed by m iff m's wedge character is trivial and
// the empty wedge is (always) fixed.
struct NuVector {
    // coefficients at the empty mask and the full mask, exponents of i
    uint8_t empty_phase = 0;
    uint8_t full_phase = 0;
};

NuVector build_nu();
bool check_nu_invariance(const MonomialGroup& group);

}  // namespace rud::mono
