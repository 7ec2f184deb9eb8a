#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lgv/rational.hpp"

namespace lgv::nslattice {

struct DivisorClass {
    std::vector<long long> c;

    DivisorClass() = default;
    explicit DivisorClass(std::vector<long long> v) : c(std::move(v)) {}

    size_t size() const { return c.size(); }
    bool operator==(const DivisorClass& o) const { return c == o.c; }

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator*(long long k) const;

    std::string str(const std::vector<std::string>& names) const;
};

enum class Kind { Polarization, ExceptionalTotal, Abstract };

// Integer intersection lattice of a surface with blow-up bookkeeping. The
// basis stores total-transform exceptional classes, so the Gram matrix stays
// diagonal on them; strict transforms are derived views.
struct SurfaceLattice {
    std::vector<std::string> names;
    std::vector<Kind> kinds;
    std::vector<std::vector<long long>> gram;
    DivisorClass canonical;
    long long euler = 0;
    long long chi = 0;
    // exceptional name -> parent exceptional name; absent key = blown up at a
    // generic point.
    std::map<std::string, std::string> parent;

    size_t size() const { return names.size(); }
    int index_of(const std::string& name) const;
    DivisorClass basis_class(const std::string& name) const;
};

struct BlowUpRecord {
    std::string name;
    std::optional<std::string> parent;  // must name an existing exceptional
};

SurfaceLattice make_abelian_12();
SurfaceLattice make_hirzebruch(int e);
SurfaceLattice blow_up(const SurfaceLattice& lat, const BlowUpRecord& rec);

DivisorClass strict_transform(const SurfaceLattice& lat, const std::string& name);
long long intersect(const SurfaceLattice& lat, const DivisorClass& a,
                    const DivisorClass& b);
// p_a = (K.D + D^2)/2 + 1; parity failure signals an impossible class.
long long adjunction_pa(const SurfaceLattice& lat, const DivisorClass& d);

// The ten-times-blown-up abelian surface with its named classes. Exceptional
// classes E0..E3 sit over the base points; G_{jk} (j=1,2; k=1,2,3) over the
// two indeterminacy points on each section E_k.
struct SbarModel {
    SurfaceLattice lat;
    DivisorClass L;
    std::array<DivisorClass, 4> E;       // total transforms E0..E3
    std::array<DivisorClass, 4> Es;      // strict transforms
    std::array<std::array<DivisorClass, 3>, 2> G;  // G[j-1][k-1]
    DivisorClass F;                      // fiber class L - E0 - E1 - E2 - E3
    DivisorClass K;
};
SbarModel build_sbar();

// Linear extension of C0 -> E1s+E2s+E3s, f -> F for classes on F_3.
DivisorClass pullback_from_hirzebruch(const SbarModel& m, const DivisorClass& on_f3);

// K_Sbar - gamma^* K_Y; hard-fails unless it equals
// E0 + 3(E1s+E2s+E3s) + 2 sum G + 5F.
DivisorClass ramification_class(const SbarModel& m);

struct BranchSolution {
    DivisorClass cls;
    long long m = 0;
    std::array<long long, 6> n{};  // n11, n21, n12, n22, n13, n23
};
// Solves the ansatz B = -2R + 10(E1s+E2s+E3s) + mF + sum n_jk G_jk against
// B.F = 10, B.G_jk = 8, B.E_ks = 0. Unique integer solution required.
BranchSolution branch_class_solve(const SbarModel& m);

struct DoubleCoverInvariants {
    long long k2 = 0;
    long long c2 = 0;
    long long chi = 0;
};
// Smooth double cover with branch curve data (pa_B, Bsq); enforces
// integrality and Noether's formula chi = (K^2 + c2)/12.
DoubleCoverInvariants double_cover_invariants(long long base_k2, long long base_c2,
                                              const Rational& base_chi, long long pa_b,
                                              long long b_sq);

struct DerivedNumerics {
    long long tau = 0;           // (K^2 - 2 c2)/3 of the covering surface
    long long pg = 0;            // chi + q - 1 with q = 4
    long long nodal_fibers = 0;  // singular members of the pencil
    long long horikawa_deg = 0;  // degree of coker(Sym^2 f_* w_f -> f_* w_f^2)
    long long slope_k2f = 0;     // relative invariants of the genus-4 quotient
    long long slope_chif = 0;
    Rational slope;
};
DerivedNumerics derived_numerics();

struct FvNumerics {
    long long fv_sq = 0;
    long long k_plus_fv_dot_fv = 0;
    long long k_dot_fv = 0;
    Rational index_bound;
    long long tau = 0;
};
// F_V modeled as six disjoint rational components of self-intersection -3.
FvNumerics fv_numerics();

}  // namespace lgv::nslattice
