#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lgv/rational.hpp"

namespace lgv::abelmono {

// 4x4 integer matrix interpreted as a change of the symplectic basis
// (l1, l2, m1, m2): row i holds the coordinates of the image of the i-th
// basis vector.
struct IntMatrix4 {
    std::array<std::array<long long, 4>, 4> m{};

    static IntMatrix4 identity();
    IntMatrix4 operator*(const IntMatrix4& o) const;
    IntMatrix4 transposed() const;
    IntMatrix4 negated() const;
    long long det() const;
    // Adjugate: adj(R) * R = det(R) * I, all integer.
    IntMatrix4 adjugate() const;
    bool operator==(const IntMatrix4& o) const { return m == o.m; }
    std::string str() const;  // row-major integer array
};

// Intersection form for the (1,2) polarization: [[0,D],[-D,0]], D = diag(1,2).
IntMatrix4 polarization_form();

// R * J_D * R^t == J_D, exactly.
bool is_symplectic(const IntMatrix4& r);

// Six generating basis changes of the 3-torsion monodromy, each an exact
// element of the group preserving the (1,2) intersection form. tau1 = -id,
// tau2/tau3 rotate the symplectic pairs (l1,m1) and (l2,m2), tau4/tau5 are
// the paired transvections l1 -> l1+l2 / m1 -> m1+m2, tau6 mixes the pairs.
std::array<IntMatrix4, 6> tau_generator_table();
// Same table, with each entry checked against is_symplectic (hard failure).
std::array<IntMatrix4, 6> tau_generators();

// Element of (Z/nZ)^4, representing the n-torsion point with coordinates
// (a1,a2,b1,b2)/n in the symplectic basis.
struct TorsionVector {
    long long n = 2;
    std::array<long long, 4> c{};

    TorsionVector() = default;
    TorsionVector(long long modulus, std::array<long long, 4> coords);
    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
    bool operator==(const TorsionVector& o) const { return n == o.n && c == o.c; }
    bool operator<(const TorsionVector& o) const;
    std::string str() const;
};

// Coordinate action of a basis change: w_j = sum_i v_i R_ij mod n.
TorsionVector act(const IntMatrix4& r, const TorsionVector& v);

// Symplectic pairing <v,w> = v J_D w^t mod n; preserved by act for
// form-preserving matrices.
long long pairing_mod(const TorsionVector& v, const TorsionVector& w);

// Inverse of r modulo n via the adjugate; fails when det is not invertible.
IntMatrix4 inverse_mod(const IntMatrix4& r, long long n);

// Breadth-first closure of {v0} under the generators and their inverses.
std::set<TorsionVector> orbit(const TorsionVector& v0,
                              const std::vector<IntMatrix4>& gens);

// Explicit enumeration of the subgroup generated mod n. Optional heavy-weight
// companion to orbit(); throws once the closure exceeds max_elements.
std::set<std::array<long long, 16>> group_closure(const std::vector<IntMatrix4>& gens,
                                                  long long n,
                                                  size_t max_elements = 1000000);

struct TwoTorsionReport {
    std::vector<std::vector<TorsionVector>> orbits;  // partition of the 15 nonzero vectors
    std::vector<size_t> orbit_sizes;                 // ascending
    bool kstar_is_union = false;  // the 3-set <l2/2, m2/2> is a union of orbits
    bool split_is_3_12 = false;
};
// Orbit partition of the nonzero 2-torsion; hard-fails if the kernel 3-set of
// the polarization isogeny is not a union of orbits.
TwoTorsionReport two_torsion_report(const std::vector<IntMatrix4>& gens);

// tau = x + y*i with y > 0, exact.
struct UpperHalfPoint {
    Rational x, y;
    bool operator==(const UpperHalfPoint& o) const { return x == o.x && y == o.y; }
    std::string str() const;  // {"x": "p/q", "y": "r/s"}
};

struct Mat2 {
    long long a = 1, b = 0, c = 0, d = 1;
    long long det() const { return a * d - b * c; }
    Mat2 operator*(const Mat2& o) const;
};

UpperHalfPoint mobius(const Mat2& m, const UpperHalfPoint& tau);

// Canonical form in the fundamental domain |x| <= 1/2, x^2 + y^2 >= 1, with
// boundary ties resolved to x = +1/2 and to x >= 0 on the unit circle. The
// returned transform has determinant 1 and maps the input to the canonical
// point, verified exactly.
struct ReductionResult {
    UpperHalfPoint canonical;
    Mat2 transform;
};
ReductionResult reduce_fundamental(const UpperHalfPoint& tau);

struct GaussianRational {
    Rational re, im;
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    std::string str() const;
};
GaussianRational gadd(const GaussianRational& a, const GaussianRational& b);
GaussianRational gsub(const GaussianRational& a, const GaussianRational& b);
GaussianRational gmul(const GaussianRational& a, const GaussianRational& b);
GaussianRational gdiv(const GaussianRational& a, const GaussianRational& b);

struct GaussianLattice {
    GaussianRational g1, g2;  // R-linearly independent
};

// tau = g1/g2 normalized to the upper half plane.
UpperHalfPoint lattice_to_tau(const GaussianLattice& lat);

// Index-2 overlattice lat + Z*halfperiod (index 1 when halfperiod is already
// in lat), by integer Hermite reduction after clearing denominators.
GaussianLattice quotient_lattice(const GaussianLattice& lat,
                                 const GaussianRational& halfperiod);

struct EllipticQuotient {
    std::string name;
    GaussianLattice lattice;
    UpperHalfPoint canonical;
};
struct EllipticReport {
    std::array<EllipticQuotient, 3> quotients;  // by e1 = i, e2 = 1/2, e3 = 1/2+i
    bool pairwise_distinct = false;
};
// Quotients of C/(2iZ+Z) by its three 2-torsion subgroups; hard-fails if any
// two canonical forms collide.
EllipticReport elliptic_quotients_check();

}  // namespace lgv::abelmono
