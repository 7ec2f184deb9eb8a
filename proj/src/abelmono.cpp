#include "lgv/abelmono.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace lgv::abelmono {

IntMatrix4 IntMatrix4::identity() {
    IntMatrix4 r;
    for (int i = 0; i < 4; ++i) r.m[i][i] = 1;
    return r;
}

IntMatrix4 IntMatrix4::operator*(const IntMatrix4& o) const {
    IntMatrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            long long s = 0;
            for (int k = 0; k < 4; ++k) s += m[i][k] * o.m[k][j];
            r.m[i][j] = s;
        }
    return r;
}

IntMatrix4 IntMatrix4::transposed() const {
    IntMatrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = m[j][i];
    return r;
}

IntMatrix4 IntMatrix4::negated() const {
    IntMatrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = -m[i][j];
    return r;
}

namespace {

long long det3(const std::array<std::array<long long, 4>, 4>& m, int skip_row,
               int skip_col) {
    long long v[3][3];
    int r = 0;
    for (int i = 0; i < 4; ++i) {
        if (i == skip_row) continue;
        int c = 0;
        for (int j = 0; j < 4; ++j) {
            if (j == skip_col) continue;
            v[r][c++] = m[i][j];
        }
        ++r;
    }
    return v[0][0] * (v[1][1] * v[2][2] - v[1][2] * v[2][1]) -
           v[0][1] * (v[1][0] * v[2][2] - v[1][2] * v[2][0]) +
           v[0][2] * (v[1][0] * v[2][1] - v[1][1] * v[2][0]);
}

}  // namespace

long long IntMatrix4::det() const {
    long long s = 0;
    for (int j = 0; j < 4; ++j) {
        long long cof = det3(m, 0, j);
        s += ((j % 2 == 0) ? 1 : -1) * m[0][j] * cof;
    }
    return s;
}

IntMatrix4 IntMatrix4::adjugate() const {
    IntMatrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            long long cof = det3(m, j, i);  // transposed cofactor
            r.m[i][j] = (((i + j) % 2 == 0) ? 1 : -1) * cof;
        }
    return r;
}

std::string IntMatrix4::str() const {
    std::string s = "[";
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i || j) s += ",";
            s += std::to_string(m[i][j]);
        }
    return s + "]";
}

IntMatrix4 polarization_form() {
    IntMatrix4 j;
    j.m = {{{0, 0, 1, 0}, {0, 0, 0, 2}, {-1, 0, 0, 0}, {0, -2, 0, 0}}};
    return j;
}

bool is_symplectic(const IntMatrix4& r) {
    IntMatrix4 jd = polarization_form();
    return r * jd * r.transposed() == jd;
}

std::array<IntMatrix4, 6> tau_generator_table() {
    std::array<IntMatrix4, 6> t;
    t[0] = IntMatrix4::identity().negated();
    t[1].m = {{{0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}}};
    t[2].m = {{{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}}};
    t[3].m = {{{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, -2, 1}}};
    t[4].m = {{{1, 0, 0, 0}, {-2, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}}};
    t[5].m = {{{3, 0, -1, 0}, {0, 1, 0, 1}, {-2, 0, 1, 0}, {0, 2, 0, 3}}};
    return t;
}

std::array<IntMatrix4, 6> tau_generators() {
    auto t = tau_generator_table();
    for (size_t i = 0; i < t.size(); ++i)
        if (!is_symplectic(t[i]))
            throw std::logic_error("tau_generators: tau" + std::to_string(i + 1) +
                                   " does not preserve the intersection form");
    return t;
}

namespace {

long long mod(long long a, long long n) {
    long long r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace

TorsionVector::TorsionVector(long long modulus, std::array<long long, 4> coords)
    : n(modulus) {
    if (n < 2) throw std::invalid_argument("TorsionVector: modulus must be >= 2");
    for (int i = 0; i < 4; ++i) c[i] = mod(coords[i], n);
}

bool TorsionVector::operator<(const TorsionVector& o) const {
    if (n != o.n) return n < o.n;
    return c < o.c;
}

std::string TorsionVector::str() const {
    std::string s = "(";
    for (int i = 0; i < 4; ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + ")";
}

TorsionVector act(const IntMatrix4& r, const TorsionVector& v) {
    std::array<long long, 4> w{};
    for (int j = 0; j < 4; ++j) {
        long long s = 0;
        for (int i = 0; i < 4; ++i) s += v.c[i] * r.m[i][j];
        w[j] = mod(s, v.n);
    }
    return TorsionVector(v.n, w);
}

long long pairing_mod(const TorsionVector& v, const TorsionVector& w) {
    if (v.n != w.n) throw std::invalid_argument("pairing_mod: modulus mismatch");
    IntMatrix4 jd = polarization_form();
    long long s = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) s += v.c[i] * jd.m[i][j] * w.c[j];
    return mod(s, v.n);
}

IntMatrix4 inverse_mod(const IntMatrix4& r, long long n) {
    long long d = mod(r.det(), n);
    long long dinv = -1;
    for (long long x = 1; x < n; ++x)
        if (mod(d * x, n) == 1) { dinv = x; break; }
    if (dinv < 0)
        throw std::invalid_argument("inverse_mod: determinant not invertible mod " +
                                    std::to_string(n));
    IntMatrix4 adj = r.adjugate();
    IntMatrix4 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out.m[i][j] = mod(adj.m[i][j] * dinv, n);
    return out;
}

std::set<TorsionVector> orbit(const TorsionVector& v0,
                              const std::vector<IntMatrix4>& gens) {
    std::vector<IntMatrix4> step;
    for (const auto& g : gens) {
        step.push_back(g);
        step.push_back(inverse_mod(g, v0.n));
    }
    std::set<TorsionVector> seen{v0};
    std::deque<TorsionVector> frontier{v0};
    while (!frontier.empty()) {
        TorsionVector v = frontier.front();
        frontier.pop_front();
        for (const auto& g : step) {
            TorsionVector w = act(g, v);
            if (seen.insert(w).second) frontier.push_back(w);
        }
    }
    return seen;
}

std::set<std::array<long long, 16>> group_closure(const std::vector<IntMatrix4>& gens,
                                                  long long n, size_t max_elements) {
    if (n < 2) throw std::invalid_argument("group_closure: modulus must be >= 2");
    auto reduce = [n](const IntMatrix4& m) {
        std::array<long long, 16> out{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) out[i * 4 + j] = mod(m.m[i][j], n);
        return out;
    };
    auto unpack = [](const std::array<long long, 16>& a) {
        IntMatrix4 m;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m.m[i][j] = a[i * 4 + j];
        return m;
    };

    std::vector<IntMatrix4> step;
    for (const auto& g : gens) {
        step.push_back(g);
        step.push_back(inverse_mod(g, n));
    }
    std::set<std::array<long long, 16>> seen{reduce(IntMatrix4::identity())};
    std::deque<std::array<long long, 16>> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        IntMatrix4 cur = unpack(frontier.front());
        frontier.pop_front();
        for (const auto& g : step) {
            auto next = reduce(cur * g);
            if (seen.insert(next).second) {
                if (seen.size() > max_elements)
                    throw std::runtime_error("group_closure: element cap exceeded");
                frontier.push_back(next);
            }
        }
    }
    return seen;
}

TwoTorsionReport two_torsion_report(const std::vector<IntMatrix4>& gens) {
    std::set<TorsionVector> remaining;
    for (long long a = 0; a < 2; ++a)
        for (long long b = 0; b < 2; ++b)
            for (long long c = 0; c < 2; ++c)
                for (long long d = 0; d < 2; ++d) {
                    TorsionVector v(2, {a, b, c, d});
                    if (!v.is_zero()) remaining.insert(v);
                }

    TwoTorsionReport rep;
    while (!remaining.empty()) {
        TorsionVector v = *remaining.begin();
        std::set<TorsionVector> o = orbit(v, gens);
        std::vector<TorsionVector> sorted(o.begin(), o.end());
        rep.orbits.push_back(sorted);
        for (const auto& w : sorted) remaining.erase(w);
    }

    // ker lambda_L is generated by l2/2 and m2/2: coordinate positions 2 and 4.
    std::set<TorsionVector> kstar{TorsionVector(2, {0, 1, 0, 0}),
                                  TorsionVector(2, {0, 0, 0, 1}),
                                  TorsionVector(2, {0, 1, 0, 1})};
    rep.kstar_is_union = true;
    for (const auto& o : rep.orbits) {
        size_t inside = 0;
        for (const auto& w : o) inside += kstar.count(w);
        if (inside != 0 && inside != o.size()) rep.kstar_is_union = false;
    }
    if (!rep.kstar_is_union)
        throw std::logic_error("two_torsion_report: ker lambda_L is not a union of orbits");

    for (const auto& o : rep.orbits) rep.orbit_sizes.push_back(o.size());
    std::sort(rep.orbit_sizes.begin(), rep.orbit_sizes.end());
    rep.split_is_3_12 = rep.orbit_sizes == std::vector<size_t>{3, 12};
    return rep;
}

std::string UpperHalfPoint::str() const {
    return "{\"x\": \"" + x.str() + "\", \"y\": \"" + y.str() + "\"}";
}

Mat2 Mat2::operator*(const Mat2& o) const {
    return Mat2{a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
}

UpperHalfPoint mobius(const Mat2& m, const UpperHalfPoint& tau) {
    Rational a(m.a), b(m.b), c(m.c), d(m.d);
    Rational den = (c * tau.x + d) * (c * tau.x + d) + c * c * tau.y * tau.y;
    if (den.is_zero()) throw std::domain_error("mobius: degenerate transform");
    Rational x = ((a * tau.x + b) * (c * tau.x + d) + a * c * tau.y * tau.y) / den;
    Rational y = Rational(m.det()) * tau.y / den;
    return UpperHalfPoint{x, y};
}

namespace {

long long floor_div(long long a, long long b) {  // b > 0
    long long q = a / b, r = a % b;
    return (r != 0 && r < 0) ? q - 1 : q;
}

// Smallest integer k with x - k in (-1/2, 1/2]; the right boundary is kept.
long long shift_amount(const Rational& x) {
    return -floor_div(-(2 * x.num() - x.den()), 2 * x.den());  // ceil((2p-q)/(2q))
}

Rational norm_sq(const UpperHalfPoint& t) { return t.x * t.x + t.y * t.y; }

}  // namespace

ReductionResult reduce_fundamental(const UpperHalfPoint& tau) {
    if (!(tau.y > Rational(0)))
        throw std::invalid_argument("reduce_fundamental: requires y > 0");
    const Mat2 s{0, -1, 1, 0};
    UpperHalfPoint t = tau;
    Mat2 acc;
    const int kMaxIterations = 10000;
    int it = 0;
    for (;; ++it) {
        if (it >= kMaxIterations)
            throw std::runtime_error("reduce_fundamental: iteration cap exceeded");
        long long k = shift_amount(t.x);
        if (k != 0) {
            Mat2 shift{1, -k, 0, 1};
            t = mobius(shift, t);
            acc = shift * acc;
        }
        if (norm_sq(t) < Rational(1)) {
            t = mobius(s, t);
            acc = s * acc;
        } else {
            break;
        }
    }
    if (norm_sq(t) == Rational(1) && t.x < Rational(0)) {
        t = mobius(s, t);
        acc = s * acc;
    }
    if (!(mobius(acc, tau) == t) || acc.det() != 1)
        throw std::logic_error("reduce_fundamental: transform verification failed");
    return ReductionResult{t, acc};
}

GaussianRational gadd(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
}
GaussianRational gsub(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
}
GaussianRational gmul(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
GaussianRational gdiv(const GaussianRational& a, const GaussianRational& b) {
    Rational den = b.re * b.re + b.im * b.im;
    if (den.is_zero()) throw std::domain_error("gdiv: division by zero");
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

std::string GaussianRational::str() const {
    return re.str() + (im < Rational(0) ? "" : "+") + im.str() + "*i";
}

UpperHalfPoint lattice_to_tau(const GaussianLattice& lat) {
    if (lat.g2.is_zero() || lat.g1.is_zero())
        throw std::invalid_argument("lattice_to_tau: zero generator");
    GaussianRational tau = gdiv(lat.g1, lat.g2);
    if (tau.im.is_zero())
        throw std::invalid_argument("lattice_to_tau: generators are R-linearly dependent");
    if (tau.im < Rational(0)) tau = {-tau.re, -tau.im};
    return UpperHalfPoint{tau.re, tau.im};
}

namespace {

// Hermite-style basis of the integer row lattice spanned by up to three rows
// of Z^2; returns two rows (d1, e), (0, d2) with d1, d2 >= 0.
std::array<std::array<long long, 2>, 2> row_hnf(std::vector<std::array<long long, 2>> rows) {
    // Euclid on the first coordinates until at most one row has x != 0.
    for (;;) {
        std::vector<size_t> nz;
        for (size_t i = 0; i < rows.size(); ++i)
            if (rows[i][0] != 0) nz.push_back(i);
        if (nz.size() <= 1) break;
        size_t a = nz[0], b = nz[1];
        if (std::abs(rows[a][0]) < std::abs(rows[b][0])) std::swap(a, b);
        long long q = rows[a][0] / rows[b][0];
        rows[a][0] -= q * rows[b][0];
        rows[a][1] -= q * rows[b][1];
    }
    std::array<long long, 2> r1{0, 0};
    long long d2 = 0;
    for (const auto& r : rows) {
        if (r[0] != 0) r1 = r;
        else d2 = std::gcd(d2, std::abs(r[1]));
    }
    if (r1[0] < 0) { r1[0] = -r1[0]; r1[1] = -r1[1]; }
    if (d2 != 0) r1[1] = ((r1[1] % d2) + d2) % d2;
    return {r1, std::array<long long, 2>{0, d2}};
}

}  // namespace

GaussianLattice quotient_lattice(const GaussianLattice& lat,
                                 const GaussianRational& halfperiod) {
    // Coordinates of 2*halfperiod in the basis (g1, g2), solved exactly.
    Rational det = lat.g1.re * lat.g2.im - lat.g1.im * lat.g2.re;
    if (det.is_zero())
        throw std::invalid_argument("quotient_lattice: degenerate lattice");
    GaussianRational target{halfperiod.re * Rational(2), halfperiod.im * Rational(2)};
    Rational a = (target.re * lat.g2.im - target.im * lat.g2.re) / det;
    Rational b = (lat.g1.re * target.im - lat.g1.im * target.re) / det;
    if (!a.is_integer() || !b.is_integer())
        throw std::invalid_argument(
            "quotient_lattice: halfperiod is not 2-torsion for the lattice");

    // 2*(lat + Z*halfperiod) in (g1,g2)-coordinates is spanned by these rows.
    auto basis = row_hnf({{2, 0}, {0, 2}, {a.as_integer(), b.as_integer()}});
    auto to_point = [&](const std::array<long long, 2>& row) {
        GaussianRational v = gadd(gmul({Rational(row[0]), Rational(0)}, lat.g1),
                                  gmul({Rational(row[1]), Rational(0)}, lat.g2));
        return GaussianRational{v.re / Rational(2), v.im / Rational(2)};
    };
    return GaussianLattice{to_point(basis[0]), to_point(basis[1])};
}

EllipticReport elliptic_quotients_check() {
    GaussianLattice e{{Rational(0), Rational(2)}, {Rational(1), Rational(0)}};  // 2iZ + Z
    std::array<std::pair<std::string, GaussianRational>, 3> halves = {{
        {"e1", {Rational(0), Rational(1)}},
        {"e2", {Rational(1, 2), Rational(0)}},
        {"e3", {Rational(1, 2), Rational(1)}},
    }};

    EllipticReport rep;
    for (int i = 0; i < 3; ++i) {
        GaussianLattice q = quotient_lattice(e, halves[i].second);
        rep.quotients[i] = EllipticQuotient{
            halves[i].first, q, reduce_fundamental(lattice_to_tau(q)).canonical};
    }
    rep.pairwise_distinct = true;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (rep.quotients[i].canonical == rep.quotients[j].canonical)
                rep.pairwise_distinct = false;
    if (!rep.pairwise_distinct)
        throw std::logic_error("elliptic_quotients_check: two quotients share a canonical "
                               "form");
    return rep;
}

}  // namespace lgv::abelmono
