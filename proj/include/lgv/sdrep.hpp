#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lgv/partition.hpp"
#include "lgv/rational.hpp"

namespace lgv::sdrep {

// Degrees are capped: partitions and class counts stay tiny and every
// operation runs in milliseconds.
inline constexpr int kMaxDegree = 10;

// Exact class function on the conjugacy classes of S_d. Values are stored in
// the canonical class order of partitions_of(d); exactly one value per class.
struct ClassFunction {
    int d = 0;
    std::vector<Rational> values;

    const Rational& at(const Partition& cycle_type) const;
    // Value at the identity class (1,...,1).
    Rational dimension() const;
};

struct RepDecomposition {
    int d = 0;
    std::map<Partition, long long> terms;  // irrep label -> multiplicity >= 0

    long long dimension() const;
};

std::vector<std::pair<Partition, long long>> conjugacy_classes(int d);
const std::vector<Partition>& class_labels(int d);

// Murnaghan-Nakayama recursion; values are exact integers.
ClassFunction irreducible_character(int d, const Partition& label);

ClassFunction trivial_character(int d);
ClassFunction sign_character(int d);
// fix(sigma) - 1 on each class; equals the irreducible labelled (d-1,1).
ClassFunction standard_character(int d);

ClassFunction add(const ClassFunction& a, const ClassFunction& b);
ClassFunction scale(const ClassFunction& a, const Rational& c);
// Character of the tensor product (pointwise product).
ClassFunction tensor(const ClassFunction& a, const ClassFunction& b);

// Newton-type recursions over the power maps chi(g^k).
ClassFunction ext_power_character(const ClassFunction& chi, int p);
ClassFunction sym_power_character(const ClassFunction& chi, int k);

Rational inner_product(const ClassFunction& a, const ClassFunction& b);

// Rejects inputs whose multiplicities are not non-negative integers.
RepDecomposition decompose(const ClassFunction& chi);
ClassFunction character_of(const RepDecomposition& dec);

// Graded dimension of C[xi_2,...,xi_d] in degree k: multisets from {2..d}
// summing to k.
long long dim_A(int d, int k);

// Multiplicity of the trivial irrep in Sym^k of the standard representation;
// hard-fails unless it equals dim_A(d,k).
long long trivial_multiplicity_sym_gamma(int d, int k);

struct KernelBound {
    long long bound = 0;          // C(q,p)
    long long trivial_copies = 0; // C(q,p) * dim_A(d,p)
};
// Lower bound for dim ker psi_p, with a character-level consistency check on
// the trivial multiplicity of Wedge^p(Gamma^q).
KernelBound kernel_lower_bound(int d, int q, int p);

long long min_irregularity(int d, int q);

struct LgReport {
    long long h10_dim = 0;        // dim(Gamma + Gamma) for d = 3
    long long mult_trivial = 0;   // multiplicities in (G+G) tensor (G+G)
    long long mult_sign = 0;
    long long mult_standard = 0;
    long long tensor_dim = 0;
    long long ker_rho2_dim = 0;   // dim of Gamma + U^5
};
LgReport lg_bookkeeping();

}  // namespace lgv::sdrep
