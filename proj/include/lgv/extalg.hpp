#pragma once

#include <map>
#include <string>
#include <vector>

#include "lgv/rational.hpp"

namespace lgv::extalg {

// Span of the pullback one-forms w^i_j, 1 <= i <= d-1, 1 <= j <= q, subject
// to the relation sum_{i=1..d} w^i_j = 0. The index i = d is always the
// eliminated one: w^d_j stands for -w^1_j - ... - w^{d-1}_j.
struct FormSpace {
    int d = 0;  // degree of the covering
    int q = 0;  // number of independent one-forms downstairs

    FormSpace(int d_, int q_);

    int dim() const { return q * (d - 1); }
    // 0-based position of w^i_j in the canonical basis, i in 1..d-1.
    int index(int i, int j) const;
    std::string basis_name(int idx) const;

    bool operator==(const FormSpace& o) const { return d == o.d && q == o.q; }
};

// One-form as exact coordinates over the canonical basis.
using OneForm = std::vector<Rational>;

OneForm zero_form(const FormSpace& s);
// The form w^i_j for i in 1..d; i = d expands through the defining relation.
OneForm pullback_form(const FormSpace& s, int i, int j);
OneForm add(const OneForm& a, const OneForm& b);
OneForm sub(const OneForm& a, const OneForm& b);

// Degree-p antisymmetric tensor with exact rational coefficients, stored on
// strictly increasing basis-index tuples. Zero coefficients are never kept.
struct AlternatingTensor {
    FormSpace space;
    int degree = 0;
    std::map<std::vector<int>, Rational> coeff;

    explicit AlternatingTensor(FormSpace s, int deg) : space(s), degree(deg) {}

    bool is_zero() const { return coeff.empty(); }
    bool operator==(const AlternatingTensor& o) const {
        return space == o.space && degree == o.degree && coeff == o.coeff;
    }
};

AlternatingTensor zero_tensor(const FormSpace& s, int degree);
AlternatingTensor add(const AlternatingTensor& a, const AlternatingTensor& b);
AlternatingTensor scale(const AlternatingTensor& a, const Rational& c);
// Wedge product of one-forms, with sign normalization at insertion.
AlternatingTensor wedge(const FormSpace& s, const std::vector<OneForm>& forms);

// sum_{i=1..d} w^i_{j1} ^ ... ^ w^i_{jp} over distinct indices j1..jp.
AlternatingTensor build_sum_form(const FormSpace& s, const std::vector<int>& indices);

// Relabels upper indices by sigma (1-based images of 1..d), re-expanding the
// eliminated index. Linear and degree-preserving.
AlternatingTensor apply_permutation(const AlternatingTensor& t,
                                    const std::vector<int>& sigma);

// Rank of the antisymmetric coefficient matrix of a degree-2 tensor, by
// fraction-free (Bareiss) elimination after clearing denominators.
int two_form_rank(const AlternatingTensor& t);

bool is_decomposable(const AlternatingTensor& t);

// Exact check of the d=3, q=2 identity
//   w^1_1^w^1_2 + w^2_1^w^2_2 + w^3_1^w^3_2
//     = (3/2) w^3_1^w^3_2 + (1/2)(w^1_1-w^2_1)^(w^1_2-w^2_2).
bool verify_omega_identity();
// Same right-hand side with 3/2 replaced by 1; must come out false.
bool verify_omega_identity_perturbed();

}  // namespace lgv::extalg
