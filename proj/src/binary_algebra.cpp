#include "rud/binary_algebra.hpp"

#include <algorithm>
#include <bit>

namespace rud::bin {

const char* type_name(ElementType t) {
    switch (t) {
        case ElementType::Zero: return "zero";
        case ElementType::Identity: return "identity";
        case ElementType::Involution: return "involution";
        case ElementType::SquareRootOfZero: return "sqrt0";
        case ElementType::Idempotent: return "idempotent";
        case ElementType::CubeRootOfUnity: return "cuberoot";
    }
    return "?";
}

BinaryAlgebra::BinaryAlgebra() {
    const auto& basis = oct::LatticeBasis::instance();
    const auto& table = oct::MultiplicationTable::instance();

    // products of basis vectors reduced mod 2; bilinearity extends to codes
    std::array<std::array<uint8_t, 8>, 8> p{};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            p[i][j] = basis.reduce_mod2(table.multiply(basis.vector(i), basis.vector(j)));
            gram2_[i][j] = uint8_t(((basis.gram()[i][j] % 2) + 2) % 2);
        }

    for (int a = 0; a < 256; ++a)
        for (int b = 0; b < 256; ++b) {
            uint8_t out = 0;
            for (int i = 0; i < 8; ++i) {
                if (!(a & (1 << i))) continue;
                for (int j = 0; j < 8; ++j)
                    if (b & (1 << j)) out ^= p[i][j];
            }
            mul_[a][b] = out;
        }

    identity_ = basis.reduce_mod2(oct::OctonionVector::unit());
}

const BinaryAlgebra& BinaryAlgebra::instance() {
    static const BinaryAlgebra a;
    return a;
}

int BinaryAlgebra::bilinear(uint8_t a, uint8_t b) const {
    int t = 0;
    for (int i = 0; i < 8; ++i) {
        if (!(a & (1 << i))) continue;
        for (int j = 0; j < 8; ++j)
            if (b & (1 << j)) t ^= gram2_[i][j];
    }
    return t;
}

ElementType BinaryAlgebra::classify(uint8_t x) const {
    uint8_t x2 = multiply(x, x);
    if (x == 0) return ElementType::Zero;
    if (x == identity_) return ElementType::Identity;
    if (x2 == identity_) return ElementType::Involution;
    if (x2 == 0) return ElementType::SquareRootOfZero;
    if (x2 == x) return ElementType::Idempotent;
    uint8_t x3 = multiply(x2, x);
    if (x3 != multiply(x, x2)) throw UnclassifiableElement("cube not associative");
    if (x3 == identity_) return ElementType::CubeRootOfUnity;
    throw UnclassifiableElement("element fits no type class");
}

std::array<int, 6> BinaryAlgebra::census() const {
    std::array<int, 6> c{};
    for (int x = 0; x < 256; ++x) ++c[size_t(classify(uint8_t(x)))];
    return c;
}

std::vector<uint8_t> BinaryAlgebra::elements_of(ElementType t) const {
    std::vector<uint8_t> out;
    for (int x = 0; x < 256; ++x)
        if (classify(uint8_t(x)) == t) out.push_back(uint8_t(x));
    return out;
}

namespace {

std::vector<DeltaPair> pair_up(const BinaryAlgebra& alg, ElementType t) {
    std::vector<DeltaPair> pairs;
    uint8_t e = alg.identity_code();
    for (uint8_t x : alg.elements_of(t)) {
        uint8_t y = uint8_t(x ^ e);  // 1 + x
        if (x < y) pairs.push_back({0, x, y});
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const DeltaPair& a, const DeltaPair& b) { return a.canonical < b.canonical; });
    for (size_t i = 0; i < pairs.size(); ++i) pairs[i].id = int(i);
    return pairs;
}

}  // namespace

std::vector<DeltaPair> build_delta(const BinaryAlgebra& alg) {
    auto pairs = pair_up(alg, ElementType::CubeRootOfUnity);
    // 1 + x = x^2 for every cube root
    for (const auto& p : pairs) {
        if (alg.multiply(p.canonical, p.canonical) != p.partner ||
            alg.multiply(p.partner, p.partner) != p.canonical)
            throw UnclassifiableElement("cube-root pair is not {x, x^2}");
    }
    return pairs;
}

std::vector<DeltaPair> build_idempotent_pairs(const BinaryAlgebra& alg) {
    return pair_up(alg, ElementType::Idempotent);
}

std::vector<Dozen> build_dozens(const BinaryAlgebra& alg, const std::vector<DeltaPair>& delta) {
    auto involutions = alg.elements_of(ElementType::Involution);
    // rule 0: canonical member non-orthogonal; rule 1: both members; rule 2:
    // trace form tr(xw) (here: bilinear applied to the product)
    for (int rule = 0; rule < 3; ++rule) {
        std::vector<Dozen> dozens;
        bool ok = true;
        for (uint8_t w : involutions) {
            uint32_t members = 0;
            for (const auto& p : delta) {
                bool hit = false;
                switch (rule) {
                    case 0: hit = alg.bilinear(p.canonical, w) == 1; break;
                    case 1:
                        hit = alg.bilinear(p.canonical, w) == 1 && alg.bilinear(p.partner, w) == 1;
                        break;
                    case 2:
                        hit = alg.bilinear(alg.multiply(p.canonical, w), alg.identity_code()) == 1;
                        break;
                }
                if (hit) members |= 1u << p.id;
            }
            if (std::popcount(members) != 12) { ok = false; break; }
            dozens.push_back({w, members});
        }
        if (!ok) continue;
        std::vector<uint32_t> masks;
        for (const auto& d : dozens) masks.push_back(d.members);
        std::sort(masks.begin(), masks.end());
        if (std::adjacent_find(masks.begin(), masks.end()) != masks.end()) continue;
        return dozens;
    }
    throw DozenSizeMismatch("no orthogonality rule yields 12 pairs per involution");
}

int dozen_rank(const std::vector<Dozen>& dozens) {
    std::vector<uint32_t> rows;
    for (const auto& d : dozens) {
        uint32_t v = d.members;
        for (uint32_t r : rows)
            if ((v ^ r) < v) v ^= r;
        if (v) {
            rows.push_back(v);
            std::sort(rows.rbegin(), rows.rend());
        }
    }
    return int(rows.size());
}

std::vector<uint32_t> dozen_span(const std::vector<Dozen>& dozens) {
    std::vector<uint32_t> span{0};
    for (const auto& d : dozens) {
        if (std::binary_search(span.begin(), span.end(), d.members)) continue;
        std::vector<uint32_t> bigger = span;
        for (uint32_t s : span) bigger.push_back(s ^ d.members);
        std::sort(bigger.begin(), bigger.end());
        span = std::move(bigger);
    }
    return span;
}

bool span_contains(const std::vector<uint32_t>& span_sorted, uint32_t mask) {
    return std::binary_search(span_sorted.begin(), span_sorted.end(), mask);
}

}  // namespace rud::bin
