#include "rud/monomial.hpp"

#include <algorithm>
#include <set>

namespace rud::mono {

MonomialOperator MonomialOperator::identity() {
    MonomialOperator m;
    m.perm = bin::perm_identity();
    return m;
}

MonomialOperator MonomialOperator::dozen_sign(uint32_t members) {
    MonomialOperator m = identity();
    for (int i = 0; i < 28; ++i)
        if (members & (1u << i)) m.phase[size_t(i)] = 2;
    return m;
}

MonomialOperator MonomialOperator::pure_perm(const bin::Perm28& p) {
    MonomialOperator m;
    m.perm = p;
    return m;
}

MonomialOperator MonomialOperator::compose(const MonomialOperator& other) const {
    // (this*other) a_P = this( i^{other.phase[P]} a_{other.perm[P]} )
    MonomialOperator out;
    out.perm = bin::perm_compose(perm, other.perm);
    for (int p = 0; p < 28; ++p)
        out.phase[size_t(p)] =
            uint8_t((other.phase[size_t(p)] + phase[other.perm[size_t(p)]]) % 4);
    return out;
}

bool MonomialOperator::is_diagonal() const { return perm == bin::perm_identity(); }

uint32_t MonomialOperator::diagonal_pattern() const {
    uint32_t pat = 0;
    for (int i = 0; i < 28; ++i) {
        if (phase[size_t(i)] % 2) return 0xffffffffu;  // not a +-1 diagonal
        if (phase[size_t(i)] == 2) pat |= 1u << i;
    }
    return pat;
}

int MonomialOperator::wedge_character_exponent() const {
    int e = 0;
    for (int i = 0; i < 28; ++i) e += phase[size_t(i)];
    if (bin::perm_sign(perm) < 0) e += 2;
    return e % 4;
}

std::vector<MonomialOperator> MonomialGroup::generators() const {
    std::vector<MonomialOperator> g = sign_generators;
    g.insert(g.end(), lifted.begin(), lifted.end());
    return g;
}

uint64_t MonomialGroup::order() const {
    return uint64_t(sign_span.size()) * (lift == LiftStatus::Found ? 12096u : 1u);
}

namespace {

bool perm_preserves_dozens(const bin::Perm28& p, const std::vector<bin::Dozen>& dozens) {
    std::vector<uint32_t> masks;
    masks.reserve(dozens.size());
    for (const auto& d : dozens) masks.push_back(d.members);
    std::sort(masks.begin(), masks.end());
    for (uint32_t m : masks)
        if (!std::binary_search(masks.begin(), masks.end(), bin::perm_apply_mask(p, m)))
            return false;
    return true;
}

// Full closure check for a candidate lift with nontrivial phases: the group
// generated must have order |sign span| * |perm group| and every diagonal
// element must be a sign pattern from the span.
bool closes_into_sign_subgroup(const std::vector<MonomialOperator>& gens,
                               const std::vector<uint32_t>& span,
                               size_t perm_group_order, uint64_t budget) {
    uint64_t target = uint64_t(span.size()) * perm_group_order;
    std::set<MonomialOperator> seen{MonomialOperator::identity()};
    std::vector<MonomialOperator> frontier{MonomialOperator::identity()};
    while (!frontier.empty()) {
        std::vector<MonomialOperator> next;
        for (const auto& g : frontier)
            for (const auto& h : gens) {
                MonomialOperator ng = h.compose(g);
                if (uint64_t(seen.size()) > budget || uint64_t(seen.size()) > target) return false;
                if (seen.insert(ng).second) {
                    if (ng.is_diagonal() && !bin::span_contains(span, ng.diagonal_pattern()))
                        return false;
                    next.push_back(ng);
                }
            }
        frontier = std::move(next);
    }
    return seen.size() == target;
}

}  // namespace

MonomialGroup build_monomial_group(const std::vector<bin::Dozen>& dozens,
                                   const std::pair<bin::Perm28, bin::Perm28>& perm_gens,
                                   const std::vector<bin::Perm28>& perm_group,
                                   uint64_t closure_budget) {
    MonomialGroup out;
    for (const auto& d : dozens) out.sign_generators.push_back(MonomialOperator::dozen_sign(d.members));
    out.sign_span = bin::dozen_span(dozens);

    // conjugation by any lift sends the sign pattern s to s o perm^{-1}, so
    // the sign subgroup is normalized exactly when the permutations permute
    // the dozens
    for (const auto& g : {perm_gens.first, perm_gens.second})
        if (!perm_preserves_dozens(g, dozens)) return out;  // lift Absent

    // candidate phase assignments, minimal first.  With identity phases the
    // lifts compose exactly as the permutations do, so every relation maps to
    // the identity of the sign subgroup and the diagonal part of the
    // generated group is precisely the sign span; the remaining constraint
    // is the wedge character (permutation parity) of the whole group.
    bool all_even = std::all_of(perm_group.begin(), perm_group.end(),
                                [](const bin::Perm28& p) { return bin::perm_sign(p) > 0; });
    if (all_even) {
        out.lifted = {MonomialOperator::pure_perm(perm_gens.first),
                      MonomialOperator::pure_perm(perm_gens.second)};
        out.lift = LiftStatus::Found;
        return out;
    }

    // odd permutations present: sign patterns cannot repair the wedge
    // character (they have even support), so escalate to quarter-phase
    // corrections of small support inside a dozen and verify full closure
    const uint32_t dz = dozens.front().members;
    std::vector<std::array<uint8_t, 28>> corrections;
    for (int a = 0; a < 28; ++a) {
        if (!(dz & (1u << a))) continue;
        for (int b = a + 1; b < 28; ++b) {
            if (!(dz & (1u << b))) continue;
            std::array<uint8_t, 28> c{};
            c[size_t(a)] = 1;
            c[size_t(b)] = 1;  // i on two coordinates shifts the character by 2
            corrections.push_back(c);
        }
    }
    for (const auto& corr : corrections) {
        std::vector<MonomialOperator> cand;
        for (const auto& g : {perm_gens.first, perm_gens.second}) {
            MonomialOperator m = MonomialOperator::pure_perm(g);
            if (m.wedge_character_exponent() != 0) {
                MonomialOperator fix = MonomialOperator::identity();
                fix.phase = corr;
                m = m.compose(fix);
            }
            if (m.wedge_character_exponent() != 0) break;
            cand.push_back(m);
        }
        if (cand.size() != 2) continue;
        std::vector<MonomialOperator> gens = cand;
        for (const auto& s : out.sign_generators) gens.push_back(s);
        if (closes_into_sign_subgroup(gens, out.sign_span, perm_group.size(), closure_budget)) {
            out.lifted = std::move(cand);
            out.lift = LiftStatus::Found;
            return out;
        }
    }
    return out;  // lift Absent: degraded mode
}

NuVector build_nu() { return NuVector{}; }

bool check_nu_invariance(const MonomialGroup& group) {
    // dozen signs fix a_Delta because every dozen has even size; lifts must
    // have trivial wedge character
    for (const auto& m : group.generators())
        if (m.wedge_character_exponent() != 0) return false;
    return true;
}

}  // namespace rud::mono
