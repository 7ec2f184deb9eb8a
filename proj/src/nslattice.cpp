#include "lgv/nslattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace lgv::nslattice {

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    if (c.size() != o.c.size()) throw std::invalid_argument("DivisorClass: size mismatch");
    DivisorClass out(c);
    for (size_t i = 0; i < c.size(); ++i) out.c[i] += o.c[i];
    return out;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
    if (c.size() != o.c.size()) throw std::invalid_argument("DivisorClass: size mismatch");
    DivisorClass out(c);
    for (size_t i = 0; i < c.size(); ++i) out.c[i] -= o.c[i];
    return out;
}

DivisorClass DivisorClass::operator*(long long k) const {
    DivisorClass out(c);
    for (auto& x : out.c) x *= k;
    return out;
}

std::string DivisorClass::str(const std::vector<std::string>& names) const {
    std::string s;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!s.empty()) s += c[i] > 0 ? "+" : "-";
        else if (c[i] < 0) s += "-";
        long long a = c[i] > 0 ? c[i] : -c[i];
        if (a != 1) s += std::to_string(a) + "*";
        s += names[i];
    }
    return s.empty() ? "0" : s;
}

int SurfaceLattice::index_of(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
        throw std::invalid_argument("SurfaceLattice: unknown class " + name);
    return static_cast<int>(it - names.begin());
}

DivisorClass SurfaceLattice::basis_class(const std::string& name) const {
    DivisorClass d(std::vector<long long>(size(), 0));
    d.c[index_of(name)] = 1;
    return d;
}

SurfaceLattice make_abelian_12() {
    SurfaceLattice lat;
    lat.names = {"L"};
    lat.kinds = {Kind::Polarization};
    lat.gram = {{4}};
    lat.canonical = DivisorClass({0});
    lat.euler = 0;
    lat.chi = 0;
    return lat;
}

SurfaceLattice make_hirzebruch(int e) {
    if (e < 0) throw std::invalid_argument("make_hirzebruch: e must be >= 0");
    SurfaceLattice lat;
    lat.names = {"C0", "f"};
    lat.kinds = {Kind::Abstract, Kind::Abstract};
    lat.gram = {{-e, 1}, {1, 0}};
    lat.canonical = DivisorClass({-2, -(e + 2)});
    lat.euler = 4;
    lat.chi = 1;
    return lat;
}

SurfaceLattice blow_up(const SurfaceLattice& lat, const BlowUpRecord& rec) {
    if (std::find(lat.names.begin(), lat.names.end(), rec.name) != lat.names.end())
        throw std::invalid_argument("blow_up: class name already in use: " + rec.name);
    if (rec.parent) {
        int pi = lat.index_of(*rec.parent);  // throws on unknown parent
        if (lat.kinds[pi] != Kind::ExceptionalTotal)
            throw std::invalid_argument("blow_up: parent is not an exceptional class: " +
                                        *rec.parent);
    }

    SurfaceLattice out = lat;
    size_t n = out.size();
    out.names.push_back(rec.name);
    out.kinds.push_back(Kind::ExceptionalTotal);
    for (auto& row : out.gram) row.push_back(0);
    std::vector<long long> row(n + 1, 0);
    row[n] = -1;
    out.gram.push_back(std::move(row));
    out.canonical.c.push_back(1);
    out.euler += 1;
    if (rec.parent) out.parent[rec.name] = *rec.parent;
    return out;
}

DivisorClass strict_transform(const SurfaceLattice& lat, const std::string& name) {
    int idx = lat.index_of(name);
    if (lat.kinds[idx] != Kind::ExceptionalTotal)
        throw std::invalid_argument("strict_transform: not an exceptional class: " + name);
    DivisorClass d = lat.basis_class(name);
    for (const auto& [child, par] : lat.parent)
        if (par == name) d = d - lat.basis_class(child);
    return d;
}

long long intersect(const SurfaceLattice& lat, const DivisorClass& a,
                    const DivisorClass& b) {
    if (a.size() != lat.size() || b.size() != lat.size())
        throw std::invalid_argument("intersect: coordinate length mismatch");
    long long s = 0;
    for (size_t i = 0; i < lat.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < lat.size(); ++j) s += a.c[i] * lat.gram[i][j] * b.c[j];
    }
    return s;
}

long long adjunction_pa(const SurfaceLattice& lat, const DivisorClass& d) {
    long long t = intersect(lat, lat.canonical, d) + intersect(lat, d, d);
    if (t % 2 != 0)
        throw std::domain_error("adjunction_pa: K.D + D^2 is odd; impossible class");
    return t / 2 + 1;
}

SbarModel build_sbar() {
    SurfaceLattice lat = make_abelian_12();
    const char* base[] = {"E0", "E1", "E2", "E3"};
    for (const char* n : base) lat = blow_up(lat, {n, std::nullopt});
    for (int k = 1; k <= 3; ++k)
        for (int j = 1; j <= 2; ++j)
            lat = blow_up(lat, {"G" + std::to_string(j) + std::to_string(k),
                                std::string("E") + std::to_string(k)});

    SbarModel m;
    m.lat = lat;
    m.L = lat.basis_class("L");
    for (int i = 0; i < 4; ++i) {
        m.E[i] = lat.basis_class(base[i]);
        m.Es[i] = strict_transform(lat, base[i]);
    }
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 3; ++k)
            m.G[j][k] = lat.basis_class("G" + std::to_string(j + 1) + std::to_string(k + 1));
    m.F = m.L - m.E[0] - m.E[1] - m.E[2] - m.E[3];
    m.K = lat.canonical;

    if (intersect(lat, m.F, m.F) != 0)
        throw std::logic_error("build_sbar: F^2 != 0");
    for (int k = 0; k < 4; ++k)
        if (intersect(lat, m.F, m.Es[k]) != 1)
            throw std::logic_error("build_sbar: F.E_k != 1");
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 3; ++k)
            if (intersect(lat, m.F, m.G[j][k]) != 0)
                throw std::logic_error("build_sbar: F.G_jk != 0");
    return m;
}

DivisorClass pullback_from_hirzebruch(const SbarModel& m, const DivisorClass& on_f3) {
    if (on_f3.size() != 2)
        throw std::invalid_argument("pullback_from_hirzebruch: expected a {C0,f} class");
    DivisorClass sections = m.Es[1] + m.Es[2] + m.Es[3];
    return sections * on_f3.c[0] + m.F * on_f3.c[1];
}

DivisorClass ramification_class(const SbarModel& m) {
    SurfaceLattice y = make_hirzebruch(3);
    DivisorClass r = m.K - pullback_from_hirzebruch(m, y.canonical);
    DivisorClass stated = m.E[0] + (m.Es[1] + m.Es[2] + m.Es[3]) * 3 + m.F * 5;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 3; ++k) stated = stated + m.G[j][k] * 2;
    if (!(r == stated))
        throw std::logic_error("ramification_class: K - pullback(K_Y) differs from the "
                               "stated class");
    return r;
}

namespace {

// Exact Gauss-Jordan solve of an overdetermined rational system; requires a
// unique solution and full consistency.
std::vector<Rational> solve_unique(std::vector<std::vector<Rational>> a,
                                   std::vector<Rational> rhs) {
    size_t rows = a.size(), cols = a[0].size();
    size_t rank = 0;
    std::vector<size_t> pivot_col;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && a[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[rank], a[piv]);
        std::swap(rhs[rank], rhs[piv]);
        Rational inv = Rational(1) / a[rank][col];
        for (auto& x : a[rank]) x *= inv;
        rhs[rank] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][col].is_zero()) continue;
            Rational f = a[i][col];
            for (size_t j = 0; j < cols; ++j) a[i][j] -= f * a[rank][j];
            rhs[i] -= f * rhs[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    if (rank != cols)
        throw std::logic_error("solve_unique: system does not determine a unique solution");
    for (size_t i = rank; i < rows; ++i)
        if (!rhs[i].is_zero())
            throw std::logic_error("solve_unique: inconsistent system");
    std::vector<Rational> x(cols);
    for (size_t i = 0; i < rank; ++i) x[pivot_col[i]] = rhs[i];
    return x;
}

}  // namespace

BranchSolution branch_class_solve(const SbarModel& m) {
    DivisorClass r = ramification_class(m);
    DivisorClass base = (m.Es[1] + m.Es[2] + m.Es[3]) * 10 - r * 2;

    // Unknowns x = (m, n11, n21, n12, n22, n13, n23).
    std::vector<DivisorClass> gens;
    gens.push_back(m.F);
    for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 2; ++j) gens.push_back(m.G[j][k]);

    std::vector<std::pair<DivisorClass, long long>> constraints;
    constraints.emplace_back(m.F, 10);
    for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 2; ++j) constraints.emplace_back(m.G[j][k], 8);
    for (int k = 1; k <= 3; ++k) constraints.emplace_back(m.Es[k], 0);

    std::vector<std::vector<Rational>> a;
    std::vector<Rational> rhs;
    for (const auto& [target, value] : constraints) {
        std::vector<Rational> row;
        for (const auto& g : gens) row.emplace_back(intersect(m.lat, g, target));
        a.push_back(std::move(row));
        rhs.emplace_back(value - intersect(m.lat, base, target));
    }
    // The fiber constraint is identically satisfied (F and the G_jk pair to
    // zero against F); drop the zero row so the remaining system has full
    // column rank, but keep its consistency requirement.
    if (!(rhs[0] == Rational(0)))
        throw std::logic_error("branch_class_solve: B.F constraint violated by ansatz");
    a.erase(a.begin());
    rhs.erase(rhs.begin());

    std::vector<Rational> x = solve_unique(std::move(a), std::move(rhs));

    BranchSolution sol;
    sol.m = x[0].as_integer();
    DivisorClass b = base + m.F * sol.m;
    for (int i = 0; i < 6; ++i) {
        sol.n[i] = x[i + 1].as_integer();
        b = b + gens[i + 1] * sol.n[i];
    }
    sol.cls = b;

    DivisorClass stated = (m.Es[1] + m.Es[2] + m.Es[3]) * 4 + m.F * 20 - m.E[0] * 2;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 3; ++k) stated = stated - m.G[j][k] * 4;
    if (!(sol.cls == stated))
        throw std::logic_error("branch_class_solve: solved class differs from the stated "
                               "class");
    return sol;
}

DoubleCoverInvariants double_cover_invariants(long long base_k2, long long base_c2,
                                              const Rational& base_chi, long long pa_b,
                                              long long b_sq) {
    Rational two_pa_minus_two(2 * pa_b - 2);
    Rational k2 = Rational(2) * (Rational(base_k2) + two_pa_minus_two) -
                  Rational(3, 2) * Rational(b_sq);
    Rational c2 = Rational(2) * Rational(base_c2) + two_pa_minus_two;
    Rational chi = Rational(2) * base_chi + Rational(pa_b - 1, 2) - Rational(b_sq, 8);

    DoubleCoverInvariants inv;
    inv.k2 = k2.as_integer();
    inv.c2 = c2.as_integer();
    inv.chi = chi.as_integer();
    if (Rational(inv.k2 + inv.c2, 12) != Rational(inv.chi))
        throw std::logic_error("double_cover_invariants: Noether's formula fails");
    return inv;
}

DerivedNumerics derived_numerics() {
    SbarModel m = build_sbar();
    long long k2_sbar = intersect(m.lat, m.K, m.K);
    DivisorClass b = branch_class_solve(m).cls;
    long long pa_b = adjunction_pa(m.lat, b);
    long long b_sq = intersect(m.lat, b, b);
    DoubleCoverInvariants inv = double_cover_invariants(k2_sbar, m.lat.euler,
                                                        Rational(m.lat.chi), pa_b, b_sq);

    DerivedNumerics out;
    Rational tau = Rational(inv.k2 - 2 * inv.c2, 3);
    out.tau = tau.as_integer();
    out.pg = inv.chi + 4 - 1;  // q = 4 enters as a constant

    // The four-point blow-up of the abelian surface, fibered over P^1 with
    // fibers of genus 3: c2 = e(P^1) e(F) + n (e(N) - e(F)) with e(N) = e(F)+1.
    SurfaceLattice tilde = make_abelian_12();
    const char* base[] = {"E0", "E1", "E2", "E3"};
    for (const char* n : base) tilde = blow_up(tilde, {n, std::nullopt});
    DivisorClass f_class = tilde.basis_class("L");
    for (const char* n : base) f_class = f_class - tilde.basis_class(n);
    long long genus_f = adjunction_pa(tilde, f_class);
    long long euler_f = 2 - 2 * genus_f;
    out.nodal_fibers = tilde.euler - 2 * euler_f;

    long long k2_tilde = intersect(tilde, tilde.canonical, tilde.canonical);
    out.horikawa_deg = k2_tilde - 3 * tilde.chi + 10;

    // Slope of the induced stable genus-4 fibration on the quotient surface,
    // from its invariants (K^2, chi) = (66, 27): relative invariants over P^1
    // are K_f^2 = K^2 + 8(g-1) and chi_f = chi + (g-1).
    const long long quot_k2 = 66, quot_chi = 27, g = 4;
    out.slope_k2f = quot_k2 + 8 * (g - 1);
    out.slope_chif = quot_chi + (g - 1);
    out.slope = Rational(out.slope_k2f, out.slope_chif);

    if (out.tau != -2 || out.pg != 28 || out.nodal_fibers != 12 ||
        out.horikawa_deg != 6 || out.slope != Rational(3))
        throw std::logic_error("derived_numerics: derived constants mismatch");
    return out;
}

FvNumerics fv_numerics() {
    // Six disjoint smooth rational components, each a -3-curve.
    const int components = 6;
    const long long self = -3;
    const long long pa = 0;

    FvNumerics out;
    out.fv_sq = components * self;
    out.k_plus_fv_dot_fv = components * (2 * pa - 2);
    out.k_dot_fv = out.k_plus_fv_dot_fv - out.fv_sq;
    out.index_bound = Rational(2 * out.k_dot_fv + out.fv_sq, 3);
    out.tau = derived_numerics().tau;
    if (out.index_bound != Rational(out.tau))
        throw std::logic_error("fv_numerics: index bound does not meet tau");
    return out;
}

}  // namespace lgv::nslattice
