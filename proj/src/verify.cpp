#include "lgv/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "lgv/abelmono.hpp"
#include "lgv/extalg.hpp"
#include "lgv/nslattice.hpp"
#include "lgv/partition.hpp"
#include "lgv/sdrep.hpp"

namespace lgv::verify {

namespace {

struct CheckDef {
    std::string id;
    std::string description;
    std::string anchor;
    Provenance provenance;
    std::string expected;
    std::function<std::string()> compute;
};

std::string ll(long long v) { return std::to_string(v); }

std::string join(const std::vector<std::string>& parts, const std::string& sep = ",") {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += sep;
        s += parts[i];
    }
    return s;
}

// ---------------------------------------------------------------- rep checks

void add_rep_checks(std::vector<CheckDef>& out) {
    using namespace lgv::sdrep;

    out.push_back({"rep.classes_d3", "conjugacy classes of S_3 with class sizes",
                   "plumbing", Provenance::Derived, "(1,1,1):1 (2,1):3 (3):2", [] {
                       std::vector<std::string> parts;
                       for (const auto& [p, size] : conjugacy_classes(3))
                           parts.push_back(p.str() + ":" + ll(size));
                       return join(parts, " ");
                   }});

    out.push_back({"rep.class_sizes_sum", "class sizes sum to d! for d = 1..7",
                   "plumbing", Provenance::Trivial, "ok", [] {
                       for (int d = 1; d <= 7; ++d) {
                           long long s = 0;
                           for (const auto& [p, size] : conjugacy_classes(d)) s += size;
                           if (s != factorial(d)) return "mismatch at d=" + ll(d);
                       }
                       return std::string("ok");
                   }});

    out.push_back({"rep.orthogonality",
                   "first orthogonality relations of the irreducible characters, d <= 7",
                   "plumbing", Provenance::Derived, "ok", [] {
                       for (int d = 2; d <= 7; ++d) {
                           const auto& labels = class_labels(d);
                           std::vector<ClassFunction> chars;
                           for (const auto& l : labels)
                               chars.push_back(irreducible_character(d, l));
                           for (size_t i = 0; i < chars.size(); ++i)
                               for (size_t j = 0; j < chars.size(); ++j) {
                                   Rational ip = inner_product(chars[i], chars[j]);
                                   if (ip != Rational(i == j ? 1 : 0))
                                       return "failure at d=" + ll(d);
                               }
                       }
                       return std::string("ok");
                   }});

    out.push_back({"rep.standard_d3", "standard character of S_3 as fix(sigma)-1",
                   "Sec. 1: \"the standard representation of S_d is the irreducible "
                   "representation defined as the (d-1)-dimensional\"",
                   Provenance::Derived, "(2,0,-1)", [] {
                       ClassFunction chi = standard_character(3);
                       std::vector<std::string> v;
                       for (const auto& r : chi.values) v.push_back(ll(r.as_integer()));
                       return "(" + join(v) + ")";
                   }});

    out.push_back({"rep.standard_equals_hook",
                   "standard character equals the irreducible labelled (d-1,1), d = 2..7",
                   "plumbing", Provenance::Derived, "ok", [] {
                       for (int d = 2; d <= 7; ++d) {
                           Partition label{d - 1, 1};
                           ClassFunction a = standard_character(d);
                           ClassFunction b = irreducible_character(d, label);
                           if (!(a.values == b.values)) return "mismatch at d=" + ll(d);
                       }
                       return std::string("ok");
                   }});

    out.push_back({"rep.ext2_standard_d3",
                   "wedge^2 of the standard S_3 character is the sign character",
                   "plumbing", Provenance::Derived, "(1,-1,1)", [] {
                       ClassFunction e2 = ext_power_character(standard_character(3), 2);
                       std::vector<std::string> v;
                       for (const auto& r : e2.values) v.push_back(ll(r.as_integer()));
                       return "(" + join(v) + ")";
                   }});

    out.push_back({"rep.sym2_standard_d3", "Sym^2 of the standard S_3 character",
                   "plumbing", Provenance::Derived, "(3,1,0)", [] {
                       ClassFunction h2 = sym_power_character(standard_character(3), 2);
                       std::vector<std::string> v;
                       for (const auto& r : h2.values) v.push_back(ll(r.as_integer()));
                       return "(" + join(v) + ")";
                   }});

    out.push_back({"rep.invariant_ring",
                   "trivial multiplicity of Sym^k(standard) equals the graded dimension "
                   "of C[xi_2..xi_d], 2 <= d <= 7, 0 <= k <= 10",
                   "Sec. 1, Lemma 1.4: \"is isomorphic to the space of the S_d-invariant "
                   "elements of Sym^k Gamma\"",
                   Provenance::Paper, "66 equalities", [] {
                       int count = 0;
                       for (int d = 2; d <= 7; ++d)
                           for (int k = 0; k <= 10; ++k) {
                               trivial_multiplicity_sym_gamma(d, k);  // throws on mismatch
                               ++count;
                           }
                       return ll(count) + " equalities";
                   }});

    out.push_back({"rep.dimA_examples", "dim A_k for (d,k) = (3,2), (3,6), (2,5)",
                   "Sec. 1, eq. (A_k): \"A_k := C[xi_2,...,xi_d]_k\"", Provenance::Derived,
                   "1,2,0", [] {
                       return join({ll(dim_A(3, 2)), ll(dim_A(3, 6)), ll(dim_A(2, 5))});
                   }});

    auto kb_string = [](int d, int q, int p) {
        KernelBound kb = kernel_lower_bound(d, q, p);
        return "(" + ll(kb.bound) + "," + ll(kb.trivial_copies) + ")";
    };
    out.push_back({"rep.kernel_bound_322", "kernel lower bound for d=3, q=2, p=2",
                   "Sec. 6, Lemma 6.4: \"it belongs to the kernel of psi_2\"",
                   Provenance::Paper, "(1,1)", [=] { return kb_string(3, 2, 2); }});
    out.push_back({"rep.kernel_bound_342", "kernel lower bound for d=3, q=4, p=2",
                   "Sec. 1, Thm 1.5: \"dim ker psi_p >= (q choose p) dim A_p\"",
                   Provenance::Derived, "(6,6)", [=] { return kb_string(3, 4, 2); }});
    out.push_back({"rep.kernel_bound_533", "kernel lower bound for d=5, q=3, p=3",
                   "Sec. 1, Thm 1.5: \"dim ker psi_p >= (q choose p) dim A_p\"",
                   Provenance::Derived, "(1,1)", [=] { return kb_string(5, 3, 3); }});

    out.push_back({"rep.wedge2_trivial_mult",
                   "trivial multiplicity of wedge^2(Gamma+Gamma) for S_3",
                   "Sec. 1, eq.: \"(A_p)^{r} inside (wedge^p H^{1,0}(X))^{S_d}\"",
                   Provenance::Derived, "1", [] {
                       ClassFunction two_gamma =
                           scale(standard_character(3), Rational(2));
                       Rational m = inner_product(ext_power_character(two_gamma, 2),
                                                  trivial_character(3));
                       return ll(m.as_integer());
                   }});

    out.push_back({"rep.min_irregularity", "q(d-1) for d=3, q=2",
                   "Sec. 1, eq.: \"h^{1,0}(X) >= q(d-1)\"; Sec. 6, Thm 6.5: \"q(X)=4\"",
                   Provenance::Paper, "4", [] { return ll(min_irregularity(3, 2)); }});

    out.push_back({"rep.lg_h10", "dim H^{1,0} of the covering surface, d=3, q=2",
                   "Sec. 6, Thm 6.5: \"q(X)=4 and p_g(X)=28\"", Provenance::Paper, "4",
                   [] { return ll(lg_bookkeeping().h10_dim); }});

    out.push_back({"rep.lg_tensor_square",
                   "(Gamma+Gamma) tensor (Gamma+Gamma) decomposes with multiplicities "
                   "(U,U',Gamma) and total dimension 16",
                   "Sec. 7, Prop: \"Gamma^{4} + U'^{4} + U^{4}\"", Provenance::Paper,
                   "(4,4,4) dim 16", [] {
                       LgReport r = lg_bookkeeping();
                       return "(" + ll(r.mult_trivial) + "," + ll(r.mult_sign) + "," +
                              ll(r.mult_standard) + ") dim " + ll(r.tensor_dim);
                   }});

    out.push_back({"rep.lg_ker_rho2_dim", "dimension of ker rho_2 = Gamma + U^5",
                   "Sec. 7, Prop: \"ker rho_2 = Gamma + U^{5}\" with \"dim ker rho_2 <= 7\"",
                   Provenance::Paper, "7", [] { return ll(lg_bookkeeping().ker_rho2_dim); }});

    out.push_back({"rep.decompose_tensor_square_d3",
                   "Gamma tensor Gamma = U + U' + Gamma for S_3", "plumbing",
                   Provenance::Derived, "U:1 U':1 Gamma:1", [] {
                       ClassFunction gamma = standard_character(3);
                       RepDecomposition dec = decompose(tensor(gamma, gamma));
                       return "U:" + ll(dec.terms.at(Partition{3})) +
                              " U':" + ll(dec.terms.at(Partition{1, 1, 1})) +
                              " Gamma:" + ll(dec.terms.at(Partition{2, 1}));
                   }});
}

// --------------------------------------------------------------- form checks

void add_form_checks(std::vector<CheckDef>& out) {
    using namespace lgv::extalg;

    out.push_back({"form.sum_form_d2", "sum form for d=2, q=2, indices (1,2)",
                   "Sec. 1, eq. (defining form): \"omega := sum w^i_{j1} ^ ... ^ "
                   "w^i_{jp}\"",
                   Provenance::Derived, "2*w^1_1^w^1_2", [] {
                       FormSpace s(2, 2);
                       AlternatingTensor t = build_sum_form(s, {1, 2});
                       if (t.coeff.size() != 1) return std::string("unexpected support");
                       const auto& [key, c] = *t.coeff.begin();
                       return c.num() == 2 && c.den() == 1 && key == std::vector<int>{0, 1}
                                  ? std::string("2*w^1_1^w^1_2")
                                  : std::string("other");
                   }});

    out.push_back({"form.sum_form_p1_zero", "degree-1 sum form vanishes",
                   "Sec. 1, Thm 1.3 proof: \"omega^1+...+omega^d=0\"",
                   Provenance::Trivial, "zero", [] {
                       FormSpace s(4, 2);
                       return build_sum_form(s, {1}).is_zero() ? std::string("zero")
                                                               : std::string("nonzero");
                   }});

    out.push_back({"form.omega_identity", "two expansions of the rank-4 form agree",
                   "Sec. 6, eq. (omega): \"= (3/2) w^3_1^w^3_2 + (1/2)(w^1_1-w^2_1)^"
                   "(w^1_2-w^2_2)\"",
                   Provenance::Paper, "true",
                   [] { return verify_omega_identity() ? "true" : "false"; }});

    out.push_back({"form.omega_perturbed",
                   "perturbing the coefficient 3/2 to 1 breaks the identity",
                   "plumbing", Provenance::Trivial, "false",
                   [] { return verify_omega_identity_perturbed() ? "true" : "false"; }});

    out.push_back({"form.rank_sweep", "rank of the sum form is 2(d-1) for d = 2..7",
                   "Sec. 1, Prop 1.9: \"the rank of omega is 2(d-1)\"", Provenance::Paper,
                   "2,4,6,8,10,12", [] {
                       std::vector<std::string> v;
                       for (int d = 2; d <= 7; ++d) {
                           FormSpace s(d, 2);
                           v.push_back(ll(two_form_rank(build_sum_form(s, {1, 2}))));
                       }
                       return join(v);
                   }});

    out.push_back({"form.rank_d3", "rank of the d=3 sum form",
                   "Sec. 6, Lemma 6.4: \"has rank 4 and it belongs to the kernel\"",
                   Provenance::Paper, "4", [] {
                       FormSpace s(3, 2);
                       return ll(two_form_rank(build_sum_form(s, {1, 2})));
                   }});

    out.push_back({"form.invariance",
                   "sum form is fixed by every generating transposition, d = 2..7",
                   "Sec. 1, Prop 1.9: \"omega is invariant under the action of S_d\"",
                   Provenance::Paper, "ok", [] {
                       for (int d = 2; d <= 7; ++d) {
                           FormSpace s(d, 2);
                           AlternatingTensor t = build_sum_form(s, {1, 2});
                           for (int k = 1; k < d; ++k) {
                               std::vector<int> sigma(d);
                               for (int i = 0; i < d; ++i) sigma[i] = i + 1;
                               std::swap(sigma[k - 1], sigma[k]);
                               if (!(apply_permutation(t, sigma) == t))
                                   return "broken at d=" + ll(d);
                           }
                       }
                       return std::string("ok");
                   }});

    out.push_back({"form.sum_form_indecomposable_d3",
                   "the d=3 sum form is not decomposable", "plumbing",
                   Provenance::Derived, "false", [] {
                       FormSpace s(3, 2);
                       return is_decomposable(build_sum_form(s, {1, 2})) ? "true" : "false";
                   }});
}

// ------------------------------------------------------------ lattice checks

void add_lattice_checks(std::vector<CheckDef>& out) {
    using namespace lgv::nslattice;

    out.push_back({"lattice.abelian", "(1,2)-polarized abelian surface: L^2, K^2, e, chi",
                   "Sec. 2: \"h^0(S,L) = 1/2 c_1(L)^2 = 2\"", Provenance::Paper,
                   "L^2=4 K^2=0 e=0 chi=0", [] {
                       SurfaceLattice s = make_abelian_12();
                       DivisorClass l = s.basis_class("L");
                       return "L^2=" + ll(intersect(s, l, l)) +
                              " K^2=" + ll(intersect(s, s.canonical, s.canonical)) +
                              " e=" + ll(s.euler) + " chi=" + ll(s.chi);
                   }});

    out.push_back({"lattice.hirzebruch_canonical", "canonical class of F_3",
                   "Sec. 4, Prop 4.4 proof: \"K_Y = -5 Gamma - 2 C_0\"",
                   Provenance::Paper, "-2*C0-5*f", [] {
                       SurfaceLattice y = make_hirzebruch(3);
                       return y.canonical.str(y.names);
                   }});

    out.push_back({"lattice.hirzebruch_K2", "K^2 of F_3", "plumbing",
                   Provenance::Derived, "8", [] {
                       SurfaceLattice y = make_hirzebruch(3);
                       return ll(intersect(y, y.canonical, y.canonical));
                   }});

    out.push_back({"lattice.sbar_shape", "ten blow-ups of the abelian surface",
                   "Sec. 6, Thm 6.2 proof: \"c_2(Sbar)=10 and chi(O_Sbar)=0\"",
                   Provenance::Paper, "basis=11 e=10 chi=0 K^2=-10", [] {
                       SbarModel m = build_sbar();
                       return "basis=" + ll(m.lat.size()) + " e=" + ll(m.lat.euler) +
                              " chi=" + ll(m.lat.chi) +
                              " K^2=" + ll(intersect(m.lat, m.K, m.K));
                   }});

    out.push_back({"lattice.sbar_canonical",
                   "canonical class in strict-transform terms",
                   "Sec. 4, eq. (canonical divisor): \"K_Sbar = sum E_i + 2 sum "
                   "(G_1k+G_2k)\"",
                   Provenance::Paper, "true", [] {
                       SbarModel m = build_sbar();
                       DivisorClass expected = m.Es[0] + m.Es[1] + m.Es[2] + m.Es[3];
                       for (int j = 0; j < 2; ++j)
                           for (int k = 0; k < 3; ++k)
                               expected = expected + m.G[j][k] * 2;
                       return m.K == expected ? "true" : "false";
                   }});

    out.push_back({"lattice.sbar_sections", "strict transforms E_k are -3-curves",
                   "Sec. 4, Prop 4.4 proof: \"the sections E_k's for k != 0 are "
                   "-3-curves in Sbar\"",
                   Provenance::Paper, "-3,-3,-3", [] {
                       SbarModel m = build_sbar();
                       std::vector<std::string> v;
                       for (int k = 1; k <= 3; ++k)
                           v.push_back(ll(intersect(m.lat, m.Es[k], m.Es[k])));
                       return join(v);
                   }});

    out.push_back({"lattice.fiber_numbers", "F^2, F.E_0, F.E_k, F.G_jk on Sbar",
                   "plumbing", Provenance::Derived, "0,1,1,0", [] {
                       SbarModel m = build_sbar();
                       return join({ll(intersect(m.lat, m.F, m.F)),
                                    ll(intersect(m.lat, m.F, m.Es[0])),
                                    ll(intersect(m.lat, m.F, m.Es[1])),
                                    ll(intersect(m.lat, m.F, m.G[0][0]))});
                   }});

    out.push_back({"lattice.ramification", "R = K_Sbar - pullback(K_Y)",
                   "Sec. 4, Prop 4.4: \"E_0 + 3 sum E_k + 2 sum (G_1k+G_2k) + 5F\"",
                   Provenance::Paper, "true", [] {
                       SbarModel m = build_sbar();
                       ramification_class(m);  // throws unless it equals the stated class
                       return std::string("true");
                   }});

    out.push_back({"lattice.ramification_RF", "R.F",
                   "Sec. 5 proof: \"(B + 2R)|F = 10(E_1+E_2+E_3)|F\"",
                   Provenance::Derived, "10", [] {
                       SbarModel m = build_sbar();
                       return ll(intersect(m.lat, ramification_class(m), m.F));
                   }});

    out.push_back({"lattice.branch_ansatz", "solved ansatz parameters (m; n_jk)",
                   "Sec. 5, Prop 5.5 proof: \"we deduce m=30 and n_jk=0\"",
                   Provenance::Paper, "m=30 n=0,0,0,0,0,0", [] {
                       BranchSolution b = branch_class_solve(build_sbar());
                       std::vector<std::string> v;
                       for (long long x : b.n) v.push_back(ll(x));
                       return "m=" + ll(b.m) + " n=" + join(v);
                   }});

    out.push_back({"lattice.branch_numbers", "B.F, B.G_jk, B.E_k, B.E_0, K.B, B^2",
                   "Sec. 5: \"B.F=10\", \"B.G_jk=8\", \"B.E_k=0\"; Sec. 8: \"22 = "
                   "B.E_0\"",
                   Provenance::Paper, "10,8,0,22,118,-36", [] {
                       SbarModel m = build_sbar();
                       DivisorClass b = branch_class_solve(m).cls;
                       long long bg = intersect(m.lat, b, m.G[0][0]);
                       for (int j = 0; j < 2; ++j)
                           for (int k = 0; k < 3; ++k)
                               if (intersect(m.lat, b, m.G[j][k]) != bg) return std::string("B.G varies");
                       long long be = intersect(m.lat, b, m.Es[1]);
                       for (int k = 1; k <= 3; ++k)
                           if (intersect(m.lat, b, m.Es[k]) != be) return std::string("B.E_k varies");
                       return join({ll(intersect(m.lat, b, m.F)), ll(bg), ll(be),
                                    ll(intersect(m.lat, b, m.Es[0])),
                                    ll(intersect(m.lat, m.K, b)),
                                    ll(intersect(m.lat, b, b))});
                   }});

    out.push_back({"lattice.branch_pa", "arithmetic genus of the branch curve",
                   "Sec. 5, Prop 5.6 area: \"that is p_a(B_alpha1)=42\"",
                   Provenance::Paper, "42", [] {
                       SbarModel m = build_sbar();
                       return ll(adjunction_pa(m.lat, branch_class_solve(m).cls));
                   }});

    out.push_back({"lattice.adjunction_examples", "p_a of F and of the strict E_1",
                   "Sec. 3: fibers are a \"smooth curve of genus 3\"", Provenance::Paper,
                   "F:3 E1:0", [] {
                       SbarModel m = build_sbar();
                       return "F:" + ll(adjunction_pa(m.lat, m.F)) +
                              " E1:" + ll(adjunction_pa(m.lat, m.Es[1]));
                   }});

    out.push_back({"lattice.double_cover", "Chern invariants of the double cover",
                   "Sec. 6, Thm 6.2: \"K_X^2=198, c_2(X)=102, chi(O_X)=25\"",
                   Provenance::Paper, "(198,102,25)", [] {
                       SbarModel m = build_sbar();
                       DivisorClass b = branch_class_solve(m).cls;
                       DoubleCoverInvariants inv = double_cover_invariants(
                           intersect(m.lat, m.K, m.K), m.lat.euler, Rational(m.lat.chi),
                           adjunction_pa(m.lat, b), intersect(m.lat, b, b));
                       return "(" + ll(inv.k2) + "," + ll(inv.c2) + "," + ll(inv.chi) + ")";
                   }});

    out.push_back({"lattice.double_cover_etale", "unramified case doubles the base",
                   "plumbing", Provenance::Trivial, "(-20,20,0)", [] {
                       DoubleCoverInvariants inv =
                           double_cover_invariants(-10, 10, Rational(0), 1, 0);
                       return "(" + ll(inv.k2) + "," + ll(inv.c2) + "," + ll(inv.chi) + ")";
                   }});

    out.push_back({"lattice.noether", "chi = (K^2 + c_2)/12 on the computed invariants",
                   "plumbing", Provenance::Trivial, "25", [] {
                       return ll((198 + 102) / 12);
                   }});

    out.push_back({"lattice.tau", "topological index of the covering surface",
                   "Intro/Sec. 6: \"tau(X) = -2\"", Provenance::Paper, "-2",
                   [] { return ll(derived_numerics().tau); }});

    out.push_back({"lattice.pg", "geometric genus from chi and q",
                   "Sec. 6, Thm 6.5: \"q(X)=4 and p_g(X)=28\"", Provenance::Paper, "28",
                   [] { return ll(derived_numerics().pg); }});

    out.push_back({"lattice.nodal_fibers", "number of singular members of the pencil",
                   "Sec. 3, Prop 3.1 proof: \"the formula becomes 4=-8+n\"",
                   Provenance::Paper, "12",
                   [] { return ll(derived_numerics().nodal_fibers); }});

    out.push_back({"lattice.horikawa", "degree of the torsion sheaf T",
                   "Sec. 3, Remark: \"the degree of T is 6\"", Provenance::Paper, "6",
                   [] { return ll(derived_numerics().horikawa_deg); }});

    out.push_back({"lattice.slope",
                   "slope of the genus-4 fibration from (K^2,chi) = (66,27); the printed "
                   "ratio (K^2+24)/(chi+27) reads 90/54, the relative invariants give "
                   "90/30",
                   "Sec. 6, Remark 6.3: \"reaches the minimum in the slope inequality\"",
                   Provenance::Paper, "90/30=3/1", [] {
                       DerivedNumerics n = derived_numerics();
                       return ll(n.slope_k2f) + "/" + ll(n.slope_chif) + "=" +
                              n.slope.str();
                   }});

    out.push_back({"lattice.fv", "index bound from the six -3-curves",
                   "Sec. 9, Remark 9.5: \"2p_a(F_V)-2 = -12, whereas F_V^2 = -18\" and "
                   "\"gives tau(X) >= -2, which is actually an equality\"",
                   Provenance::Paper, "FV^2=-18 (K+FV).FV=-12 bound=-2/1 tau=-2", [] {
                       FvNumerics f = fv_numerics();
                       return "FV^2=" + ll(f.fv_sq) +
                              " (K+FV).FV=" + ll(f.k_plus_fv_dot_fv) +
                              " bound=" + f.index_bound.str() + " tau=" + ll(f.tau);
                   }});
}

// ---------------------------------------------------------- monodromy checks

void add_monodromy_checks(std::vector<CheckDef>& out, bool corrupt_tau6) {
    using namespace lgv::abelmono;

    auto table = [corrupt_tau6] {
        auto t = tau_generator_table();
        if (corrupt_tau6) t[5].m[0][0] = 4;
        return t;
    };
    auto gens = [table] {
        auto t = table();
        return std::vector<IntMatrix4>(t.begin(), t.end());
    };

    out.push_back({"monodromy.symplectic_generators",
                   "all six generators preserve the (1,2) intersection form",
                   "Sec. 8: \"R(0 D;-D 0)R^t = (0 D;-D 0)\" with D = diag(1,2)",
                   Provenance::Derived, "6 of 6", [table] {
                       int ok = 0;
                       for (const auto& g : table())
                           if (is_symplectic(g)) ++ok;
                       return ll(ok) + " of 6";
                   }});

    out.push_back({"monodromy.tau1", "tau1 is minus the identity",
                   "Sec. 8, Thm 8.1: \"lambda_1 -> -lambda_1, ..., mu_2 -> -mu_2\"",
                   Provenance::Paper, "true", [table] {
                       return table()[0] == IntMatrix4::identity().negated() ? "true"
                                                                             : "false";
                   }});

    out.push_back({"monodromy.tau6_det", "determinant of tau6", "plumbing",
                   Provenance::Derived, "1", [table] { return ll(table()[5].det()); }});

    out.push_back({"monodromy.act_tau4", "tau4 sends (1,0,0,0) to (1,1,0,0) mod 3",
                   "Sec. 8, Thm 8.1: \"lambda_1 -> lambda_1 + lambda_2\"",
                   Provenance::Derived, "(1,1,0,0)", [table] {
                       return act(table()[3], TorsionVector(3, {1, 0, 0, 0})).str();
                   }});

    out.push_back({"monodromy.orbit_mod3", "orbit size of (1,0,0,0) mod 3",
                   "Sec. 8, Thm 8.1: \"admits exactly 80 preimages ... each "
                   "corresponding to a different 3-torsion point\"",
                   Provenance::Paper, "80", [gens] {
                       return ll(orbit(TorsionVector(3, {1, 0, 0, 0}), gens()).size());
                   }});

    out.push_back({"monodromy.orbit_origin", "the origin is a fixed point", "plumbing",
                   Provenance::Trivial, "1", [gens] {
                       return ll(orbit(TorsionVector(3, {0, 0, 0, 0}), gens()).size());
                   }});

    out.push_back({"monodromy.kstar_union",
                   "the 3-set <l2/2, m2/2> is a union of mod-2 orbits",
                   "Sec. 8, Remark 8.2: \"separates the three order 2 base points of "
                   "|L| from the other 12\"",
                   Provenance::Paper, "true", [gens] {
                       return two_torsion_report(gens()).kstar_is_union ? "true" : "false";
                   }});

    out.push_back({"monodromy.two_torsion_partition",
                   "orbit partition of the 15 nonzero 2-torsion vectors", "plumbing",
                   Provenance::Derived, "{3,12}", [gens] {
                       TwoTorsionReport rep = two_torsion_report(gens());
                       std::vector<std::string> v;
                       for (size_t s : rep.orbit_sizes) v.push_back(ll((long long)s));
                       return "{" + join(v) + "}";
                   }});

    out.push_back({"monodromy.pairing_preserved",
                   "the torsion action preserves the symplectic pairing, n in {2,3,5}",
                   "plumbing", Provenance::Derived, "ok", [gens] {
                       auto gen_list = gens();
                       unsigned state = 12345;
                       auto next = [&state] {
                           state = state * 1103515245u + 12345u;
                           return (state >> 16) & 0x7fff;
                       };
                       for (long long n : {2LL, 3LL, 5LL}) {
                           for (int trial = 0; trial < 50; ++trial) {
                               IntMatrix4 r = IntMatrix4::identity();
                               for (int w = 0; w < 4; ++w)
                                   r = r * gen_list[next() % gen_list.size()];
                               std::array<long long, 4> a{}, b{};
                               for (int i = 0; i < 4; ++i) {
                                   a[i] = next() % n;
                                   b[i] = next() % n;
                               }
                               TorsionVector v(n, a), w(n, b);
                               if (pairing_mod(act(r, v), act(r, w)) != pairing_mod(v, w))
                                   return "violated mod " + ll(n);
                           }
                       }
                       return std::string("ok");
                   }});
}

// ----------------------------------------------------------- elliptic checks

void add_elliptic_checks(std::vector<CheckDef>& out) {
    using namespace lgv::abelmono;

    auto point = [](long long xn, long long xd, long long yn, long long yd) {
        return UpperHalfPoint{Rational(xn, xd), Rational(yn, yd)};
    };

    out.push_back({"elliptic.reduce_4i", "4i is already reduced", "plumbing",
                   Provenance::Trivial, point(0, 1, 4, 1).str() + " id", [point] {
                       ReductionResult r = reduce_fundamental({Rational(0), Rational(4)});
                       bool id = r.transform.a == 1 && r.transform.b == 0 &&
                                 r.transform.c == 0 && r.transform.d == 1;
                       return r.canonical.str() + (id ? " id" : " non-id");
                   }});

    out.push_back({"elliptic.reduce_1_plus_2i", "1+2i reduces to 2i by one shift",
                   "plumbing", Provenance::Derived, point(0, 1, 2, 1).str(), [] {
                       return reduce_fundamental({Rational(1), Rational(2)})
                           .canonical.str();
                   }});

    out.push_back({"elliptic.reduce_half_i", "i/2 reduces to 2i by one inversion",
                   "plumbing", Provenance::Derived, point(0, 1, 2, 1).str(), [] {
                       return reduce_fundamental({Rational(0), Rational(1, 2)})
                           .canonical.str();
                   }});

    out.push_back({"elliptic.quotient_e1", "quotient of C/(2iZ+Z) by e1 = i",
                   "Sec. 7: \"E/<e_1-e_0> = C/(iZ+Z)\"", Provenance::Paper,
                   point(0, 1, 1, 1).str(), [] {
                       return elliptic_quotients_check().quotients[0].canonical.str();
                   }});

    out.push_back({"elliptic.quotient_e2", "quotient of C/(2iZ+Z) by e2 = 1/2",
                   "Sec. 7: \"E/<e_2-e_0> = C/(2iZ+(1/2)Z) = C/(4iZ+Z)\"",
                   Provenance::Paper, point(0, 1, 4, 1).str(), [] {
                       return elliptic_quotients_check().quotients[1].canonical.str();
                   }});

    out.push_back({"elliptic.quotient_e3",
                   "quotient of C/(2iZ+Z) by e3 = 1/2+i; the printed isomorphism "
                   "C/((1+2i)Z+Z) reduces to 2i, exact lattice arithmetic gives "
                   "(1+2i)/2",
                   "Sec. 7: \"E/<e_3-e_0> = C/((1/2+i)Z+(1/2)Z) = C/((1+2i)Z+Z)\"",
                   Provenance::Paper, point(0, 1, 2, 1).str(), [] {
                       return elliptic_quotients_check().quotients[2].canonical.str();
                   }});

    out.push_back({"elliptic.pairwise_distinct",
                   "the three canonical forms are pairwise distinct",
                   "Sec. 7, final Lemma: \"the first two curves are not isomorphic\"",
                   Provenance::Paper, "true", [] {
                       return elliptic_quotients_check().pairwise_distinct ? "true"
                                                                           : "false";
                   }});
}

std::vector<CheckDef> registry(const Options& options) {
    std::vector<CheckDef> all;
    add_rep_checks(all);
    add_form_checks(all);
    add_lattice_checks(all);
    add_monodromy_checks(all, options.corrupt_tau6);
    add_elliptic_checks(all);
    return all;
}

}  // namespace

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Paper: return "PAPER";
        case Provenance::Trivial: return "TRIVIAL";
        case Provenance::Derived: return "DERIVED";
    }
    return "DERIVED";
}

std::vector<std::string> known_groups() {
    return {"rep", "form", "lattice", "monodromy", "elliptic"};
}

VerificationReport run_all(const Options& options) {
    VerificationReport report;
    for (const auto& def : registry(options)) {
        if (!options.only.empty()) {
            std::string group = def.id.substr(0, def.id.find('.'));
            if (group != options.only) continue;
        }
        CheckResult r;
        r.id = def.id;
        r.description = def.description;
        r.anchor = def.anchor;
        r.expected = def.expected;
        r.provenance = def.provenance;
        auto start = std::chrono::steady_clock::now();
        try {
            r.computed = def.compute();
        } catch (const std::exception& e) {
            r.computed = std::string("error: ") + e.what();
        }
        r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        r.pass = (r.expected == r.computed);
        report.checks.push_back(std::move(r));
    }
    for (const auto& c : report.checks) (c.pass ? report.passed : report.failed)++;
    return report;
}

std::string to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["version"] = report.version;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["description"] = c.description;
        jc["anchor"] = c.anchor;
        jc["provenance"] = provenance_name(c.provenance);
        jc["expected"] = c.expected;
        jc["computed"] = c.computed;
        jc["pass"] = c.pass;
        j["checks"].push_back(std::move(jc));
    }
    j["passed"] = report.passed;
    j["failed"] = report.failed;
    return j.dump(2) + "\n";
}

std::string to_text(const VerificationReport& report, bool quiet) {
    std::ostringstream out;
    if (!quiet) {
        for (const auto& c : report.checks) {
            out << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << ": " << c.description
                << "\n       expected " << c.expected << "\n       computed " << c.computed
                << "  [" << provenance_name(c.provenance) << "; " << c.anchor << "]\n";
        }
    }
    out << "checks: " << report.passed << " passed, " << report.failed << " failed\n";
    return out.str();
}

}  // namespace lgv::verify
