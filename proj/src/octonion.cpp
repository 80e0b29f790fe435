#include "rud/octonion.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace rud::oct {

namespace {

int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

Frac64 make_frac(int64_t n, int64_t d) {
    if (d < 0) { n = -n; d = -d; }
    int64_t g = gcd64(n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n == 0) d = 1;
    return {n, d};
}

int inv_mod7(int x) {
    for (int y = 1; y < 7; ++y)
        if (x * y % 7 == 1) return y;
    return 0;
}

}  // namespace

IndexPerm identity_perm() {
    IndexPerm p{};
    for (int i = 0; i < 8; ++i) p[i] = uint8_t(i);
    return p;
}

IndexPerm translation_perm() {
    IndexPerm p{};
    p[kInfinityPos] = kInfinityPos;
    for (int v = 0; v < 7; ++v) p[position_of_value(v)] = uint8_t(position_of_value((v + 1) % 7));
    return p;
}

IndexPerm inversion_perm() {
    IndexPerm p{};
    p[kInfinityPos] = uint8_t(position_of_value(0));
    p[position_of_value(0)] = kInfinityPos;
    for (int v = 1; v < 7; ++v) p[position_of_value(v)] = uint8_t(position_of_value((7 - inv_mod7(v)) % 7));
    return p;
}

IndexPerm compose(const IndexPerm& a, const IndexPerm& b) {
    IndexPerm c{};
    for (int i = 0; i < 8; ++i) c[i] = a[b[i]];
    return c;
}

const std::vector<IndexPerm>& projective_group() {
    static const std::vector<IndexPerm> group = [] {
        std::set<IndexPerm> seen{identity_perm()};
        std::vector<IndexPerm> frontier{identity_perm()};
        const IndexPerm gens[2] = {translation_perm(), inversion_perm()};
        while (!frontier.empty()) {
            std::vector<IndexPerm> next;
            for (const auto& g : frontier)
                for (const auto& h : gens) {
                    IndexPerm ng = compose(h, g);
                    if (seen.insert(ng).second) next.push_back(ng);
                }
            frontier = std::move(next);
        }
        return std::vector<IndexPerm>(seen.begin(), seen.end());
    }();
    return group;
}

OctonionVector::OctonionVector(const std::array<int64_t, 8>& num, int64_t den)
    : num_(num), den_(den) {
    normalize();
}

void OctonionVector::normalize() {
    if (den_ < 0) {
        den_ = -den_;
        for (auto& n : num_) n = -n;
    }
    int64_t g = den_;
    for (int64_t n : num_) g = gcd64(g, n);
    if (g > 1) {
        den_ /= g;
        for (auto& n : num_) n /= g;
    }
}

OctonionVector OctonionVector::frame(int pos) {
    std::array<int64_t, 8> n{};
    n[pos] = 1;
    return {n, 1};
}

OctonionVector OctonionVector::unit() {
    std::array<int64_t, 8> n;
    n.fill(1);
    return {n, 2};
}

OctonionVector OctonionVector::from_doubled(const std::array<int64_t, 8>& d) {
    return {d, 2};
}

Frac64 OctonionVector::coordinate(int pos) const { return make_frac(num_[pos], den_); }

OctonionVector OctonionVector::operator+(const OctonionVector& o) const {
    std::array<int64_t, 8> n;
    for (int i = 0; i < 8; ++i) n[i] = num_[i] * o.den_ + o.num_[i] * den_;
    return {n, den_ * o.den_};
}

OctonionVector OctonionVector::operator-(const OctonionVector& o) const {
    return *this + o.negate();
}

OctonionVector OctonionVector::negate() const {
    std::array<int64_t, 8> n;
    for (int i = 0; i < 8; ++i) n[i] = -num_[i];
    return {n, den_};
}

OctonionVector OctonionVector::scaled(int64_t num, int64_t den) const {
    std::array<int64_t, 8> n;
    for (int i = 0; i < 8; ++i) n[i] = num_[i] * num;
    return {n, den_ * den};
}

OctonionVector OctonionVector::permuted(const IndexPerm& g) const {
    std::array<int64_t, 8> n{};
    for (int i = 0; i < 8; ++i) n[g[i]] = num_[i];
    return {n, den_};
}

Frac64 OctonionVector::inner(const OctonionVector& o) const {
    int64_t s = 0;
    for (int i = 0; i < 8; ++i) s += num_[i] * o.num_[i];
    return make_frac(s, den_ * o.den_);
}

bool OctonionVector::is_zero() const {
    return std::all_of(num_.begin(), num_.end(), [](int64_t n) { return n == 0; });
}

bool OctonionVector::in_lattice() const {
    if (den_ > 2) return false;
    // doubled coordinates
    int64_t sum = 0;
    int parity = -1;
    for (int i = 0; i < 8; ++i) {
        int64_t d = den_ == 1 ? 2 * num_[i] : num_[i];
        int p = int(((d % 2) + 2) % 2);
        if (parity < 0) parity = p;
        if (p != parity) return false;
        sum += d;
    }
    return ((sum % 4) + 4) % 4 == 0;
}

std::array<int64_t, 8> OctonionVector::doubled() const {
    if (den_ > 2) throw NotInLattice("vector has denominator > 2");
    std::array<int64_t, 8> d;
    for (int i = 0; i < 8; ++i) d[i] = den_ == 1 ? 2 * num_[i] : num_[i];
    return d;
}

namespace {

// seed: 2 h_inf h_0 = 1 - h_3 - h_5 - h_6 and 2 h_0 h_inf = 1 - h_2 - h_1 - h_4
OctonionVector seed_off_diag(std::initializer_list<int> dropped) {
    OctonionVector v = OctonionVector::unit();
    for (int val : dropped) v = v - OctonionVector::frame(position_of_value(val));
    return v.scaled(1, 2);
}

}  // namespace

MultiplicationTable MultiplicationTable::build() {
    MultiplicationTable t;
    std::map<std::pair<int, int>, OctonionVector> entries;
    // 2 h_i^2 = h_i - 1 for every i
    for (int i = 0; i < 8; ++i)
        entries[{i, i}] = (OctonionVector::frame(i) - OctonionVector::unit()).scaled(1, 2);
    entries[{kInfinityPos, position_of_value(0)}] = seed_off_diag({3, 5, 6});
    entries[{position_of_value(0), kInfinityPos}] = seed_off_diag({2, 1, 4});

    const IndexPerm gens[2] = {translation_perm(), inversion_perm()};
    std::vector<std::pair<std::pair<int, int>, OctonionVector>> frontier(entries.begin(), entries.end());
    while (!frontier.empty()) {
        std::vector<std::pair<std::pair<int, int>, OctonionVector>> next;
        for (const auto& [key, val] : frontier) {
            for (const auto& g : gens) {
                std::pair<int, int> nk{g[key.first], g[key.second]};
                OctonionVector nv = val.permuted(g);
                auto it = entries.find(nk);
                if (it == entries.end()) {
                    entries.emplace(nk, nv);
                    next.emplace_back(nk, nv);
                } else if (!(it->second == nv)) {
                    throw InconsistentRelations("orbit closure assigns conflicting products");
                }
            }
        }
        frontier = std::move(next);
    }
    if (entries.size() != 64) throw InconsistentRelations("orbit closure did not fill the table");

    // all 56 off-diagonal ordered pairs lie in the orbit of (inf, 0)
    std::set<std::pair<int, int>> orbit{{kInfinityPos, position_of_value(0)}};
    std::vector<std::pair<int, int>> fr(orbit.begin(), orbit.end());
    while (!fr.empty()) {
        std::vector<std::pair<int, int>> nx;
        for (auto [i, j] : fr)
            for (const auto& g : gens) {
                std::pair<int, int> nk{g[i], g[j]};
                if (orbit.insert(nk).second) nx.push_back(nk);
            }
        fr = std::move(nx);
    }
    t.off_diag_orbit_ = int(orbit.size());

    for (const auto& [key, val] : entries) t.table_[key.first][key.second] = val;
    return t;
}

const MultiplicationTable& MultiplicationTable::instance() {
    static const MultiplicationTable t = build();
    return t;
}

OctonionVector MultiplicationTable::multiply(const OctonionVector& x, const OctonionVector& y) const {
    // bilinear extension; every table entry has denominator dividing 4
    std::array<int64_t, 8> acc{};
    for (int i = 0; i < 8; ++i) {
        if (x.numerators()[i] == 0) continue;
        for (int j = 0; j < 8; ++j) {
            if (y.numerators()[j] == 0) continue;
            int64_t c = x.numerators()[i] * y.numerators()[j];
            const OctonionVector& e = table_[i][j];
            int64_t scale = 4 / e.denominator();
            for (int k = 0; k < 8; ++k) acc[k] += c * e.numerators()[k] * scale;
        }
    }
    return {acc, x.denominator() * y.denominator() * 4};
}

OctonionVector multiply(const OctonionVector& x, const OctonionVector& y) {
    return MultiplicationTable::instance().multiply(x, y);
}

namespace {

int64_t bareiss_det(std::array<std::array<int64_t, 8>, 8> m, int n) {
    int64_t prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) { piv = r; break; }
            if (piv < 0) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

LatticeBasis::LatticeBasis() {
    // first seven vectors: h_inf + h_0, h_0 + h_k for k = 1..6
    basis_[0] = OctonionVector::frame(kInfinityPos) + OctonionVector::frame(position_of_value(0));
    for (int k = 1; k <= 6; ++k)
        basis_[k] = OctonionVector::frame(position_of_value(0)) + OctonionVector::frame(position_of_value(k));
    // eighth: the lexicographically least norm-2 lattice vector completing a
    // unimodular basis: (-h_inf - h_0 - ... - h_4 + h_5 + h_6)/2
    basis_[7] = OctonionVector::from_doubled({-1, -1, -1, -1, -1, -1, 1, 1});

    for (int i = 0; i < 8; ++i) {
        if (!basis_[i].in_lattice()) throw NotInLattice("basis vector outside lattice");
        for (int j = 0; j < 8; ++j) {
            Frac64 g = basis_[i].inner(basis_[j]);
            if (!g.is_integer()) throw NotInLattice("non-integral Gram entry");
            gram_[i][j] = g.num;
        }
        if (gram_[i][i] % 2 != 0) throw NotInLattice("basis diagonal not even");
    }
    if (bareiss_det(gram_, 8) != 1) throw NotInLattice("Gram determinant is not 1");

    // adjugate of the doubled coordinate matrix B (columns = basis vectors)
    std::array<std::array<int64_t, 8>, 8> B{};
    for (int k = 0; k < 8; ++k) {
        auto d = basis_[k].doubled();
        for (int i = 0; i < 8; ++i) B[i][k] = d[i];
    }
    det_ = bareiss_det(B, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            std::array<std::array<int64_t, 8>, 8> minor{};
            int rr = 0;
            for (int r = 0; r < 8; ++r) {
                if (r == j) continue;
                int cc = 0;
                for (int c = 0; c < 8; ++c) {
                    if (c == i) continue;
                    minor[rr][cc++] = B[r][c];
                }
                ++rr;
            }
            int64_t d = bareiss_det(minor, 7);
            adj_[i][j] = ((i + j) % 2 == 0) ? d : -d;
        }
}

const LatticeBasis& LatticeBasis::instance() {
    static const LatticeBasis b;
    return b;
}

uint8_t LatticeBasis::reduce_mod2(const OctonionVector& x) const {
    if (!x.in_lattice()) throw NotInLattice("reduce_mod2 argument outside lattice");
    auto d = x.doubled();
    uint8_t code = 0;
    for (int k = 0; k < 8; ++k) {
        int64_t s = 0;
        for (int i = 0; i < 8; ++i) s += adj_[k][i] * d[i];
        if (s % det_ != 0) throw NotInLattice("non-integral basis coordinates");
        int64_t c = s / det_;
        if (((c % 2) + 2) % 2) code |= uint8_t(1u << k);
    }
    return code;
}

OctonionVector LatticeBasis::representative(uint8_t code) const {
    OctonionVector v = OctonionVector::zero();
    for (int k = 0; k < 8; ++k)
        if (code & (1u << k)) v = v + basis_[k];
    return v;
}

uint8_t reduce_mod2(const OctonionVector& x) { return LatticeBasis::instance().reduce_mod2(x); }

Frac64 cayley_norm(const OctonionVector& x) {
    Frac64 ip = x.inner(x);
    return make_frac(ip.num, ip.den * 2);
}

}  // namespace rud::oct
