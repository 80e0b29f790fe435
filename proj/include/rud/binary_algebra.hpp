#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rud/errors.hpp"
#include "rud/octonion.hpp"

namespace rud::bin {

enum class ElementType : uint8_t {
    Zero,
    Identity,
    Involution,
    SquareRootOfZero,
    Idempotent,
    CubeRootOfUnity,
};

const char* type_name(ElementType t);

// The 256-element quotient algebra: codes are lattice coordinates mod 2 in
// the fixed basis.  Multiplication descends from the lattice product.
class BinaryAlgebra {
  public:
    static const BinaryAlgebra& instance();

    uint8_t multiply(uint8_t a, uint8_t b) const { return mul_[a][b]; }
    uint8_t identity_code() const { return identity_; }
    int bilinear(uint8_t a, uint8_t b) const;  // <x,y> mod 2, basis-induced

    ElementType classify(uint8_t x) const;     // throws UnclassifiableElement
    std::array<int, 6> census() const;         // counts in ElementType order

    std::vector<uint8_t> elements_of(ElementType t) const;

  private:
    BinaryAlgebra();
    std::array<std::array<uint8_t, 256>, 256> mul_{};
    std::array<std::array<uint8_t, 8>, 8> gram2_{};
    uint8_t identity_ = 0;
};

// One of the 28 cube-root pairs {x, 1+x}; canonical member has the smaller code.
struct DeltaPair {
    int id = 0;
    uint8_t canonical = 0;
    uint8_t partner = 0;
};

// Pairs ordered by canonical code; exactly 28 of them.
std::vector<DeltaPair> build_delta(const BinaryAlgebra& alg);

// The idempotents pair the same way into 36 classes.
std::vector<DeltaPair> build_idempotent_pairs(const BinaryAlgebra& alg);

struct Dozen {
    uint8_t involution = 0;
    uint32_t members = 0;  // 28-bit mask over DeltaPair ids
};

// One dozen per involution: the pairs whose canonical member is not
// orthogonal to it under the induced bilinear form.  Falls back to the
// pair-level and trace-form rules if the primary form miscounts.
// Throws DozenSizeMismatch if no rule yields 12 members per involution.
std::vector<Dozen> build_dozens(const BinaryAlgebra& alg, const std::vector<DeltaPair>& delta);

// F2-rank of the 63 dozen indicator vectors (expected 7).
int dozen_rank(const std::vector<Dozen>& dozens);

// XOR-closure of the dozen indicators (the sign patterns; expected 128).
std::vector<uint32_t> dozen_span(const std::vector<Dozen>& dozens);

bool span_contains(const std::vector<uint32_t>& span_sorted, uint32_t mask);

}  // namespace rud::bin
