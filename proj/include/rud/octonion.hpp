#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rud/errors.hpp"

namespace rud::oct {

// The frame index set is a copy of the projective line over F_7, serialized
// in the fixed order (inf, 0, 1, 2, 3, 4, 5, 6) -> positions 0..7.
inline constexpr int kFrameSize = 8;
inline constexpr int kInfinityPos = 0;

constexpr int position_of_value(int v) { return v + 1; }  // v in 0..6

using IndexPerm = std::array<uint8_t, 8>;

IndexPerm identity_perm();
IndexPerm translation_perm();  // x -> x + 1, infinity fixed
IndexPerm inversion_perm();    // x -> -1/x, swaps infinity and 0
IndexPerm compose(const IndexPerm& a, const IndexPerm& b);  // a after b

// The full group generated by translation and inversion (order 168), sorted.
const std::vector<IndexPerm>& projective_group();

struct Frac64 {
    int64_t num = 0;
    int64_t den = 1;  // > 0, reduced
    bool is_integer() const { return den == 1; }
    friend bool operator==(const Frac64&, const Frac64&) = default;
};

// Exact element of the rational span of the frame {h_i}.  Coordinates are
// stored as integer numerators over one common positive denominator.
class OctonionVector {
  public:
    OctonionVector() = default;
    OctonionVector(const std::array<int64_t, 8>& num, int64_t den);

    static OctonionVector zero() { return {}; }
    static OctonionVector frame(int pos);          // h_i
    static OctonionVector unit();                  // 1 = (1/2) sum h_i
    static OctonionVector from_doubled(const std::array<int64_t, 8>& d);

    const std::array<int64_t, 8>& numerators() const { return num_; }
    int64_t denominator() const { return den_; }
    Frac64 coordinate(int pos) const;

    OctonionVector operator+(const OctonionVector& o) const;
    OctonionVector operator-(const OctonionVector& o) const;
    OctonionVector negate() const;
    OctonionVector scaled(int64_t num, int64_t den) const;
    OctonionVector permuted(const IndexPerm& g) const;
    bool operator==(const OctonionVector& o) const = default;

    Frac64 inner(const OctonionVector& o) const;   // sum of coordinate products
    bool is_zero() const;

    // Lattice membership: doubled coordinates all even or all odd, with
    // doubled-coordinate sum divisible by 4.
    bool in_lattice() const;
    std::array<int64_t, 8> doubled() const;        // throws NotInLattice if den > 2

  private:
    void normalize();
    std::array<int64_t, 8> num_{};
    int64_t den_ = 1;
};

// The 8x8 table of frame products, closed from the three seed relations
// under the projective index action.
class MultiplicationTable {
  public:
    // Throws InconsistentRelations if the orbit closure derives two different
    // values for the same entry.
    static const MultiplicationTable& instance();
    static MultiplicationTable build();

    const OctonionVector& entry(int i, int j) const { return table_[i][j]; }
    OctonionVector multiply(const OctonionVector& x, const OctonionVector& y) const;
    int off_diagonal_orbit_size() const { return off_diag_orbit_; }

  private:
    MultiplicationTable() = default;
    std::array<std::array<OctonionVector, 8>, 8> table_;
    int off_diag_orbit_ = 0;
};

// Fixed unimodular Z-basis of the lattice; verified at construction
// (Gram determinant 1, even diagonal).  Codes are the basis coordinates
// mod 2, packed least-significant-bit first.
class LatticeBasis {
  public:
    static const LatticeBasis& instance();

    const OctonionVector& vector(int k) const { return basis_[k]; }
    const std::array<std::array<int64_t, 8>, 8>& gram() const { return gram_; }

    uint8_t reduce_mod2(const OctonionVector& x) const;  // throws NotInLattice
    OctonionVector representative(uint8_t code) const;   // sum of basis subset

  private:
    LatticeBasis();
    std::array<OctonionVector, 8> basis_;
    std::array<std::array<int64_t, 8>, 8> gram_{};
    std::array<std::array<int64_t, 8>, 8> adj_{};  // adjugate of doubled basis matrix
    int64_t det_ = 0;
};

OctonionVector multiply(const OctonionVector& x, const OctonionVector& y);
uint8_t reduce_mod2(const OctonionVector& x);

// Square-norm normalized so the algebra unit has norm 1: N(x) = <x,x>/2.
Frac64 cayley_norm(const OctonionVector& x);

}  // namespace rud::oct
