#include "lgv/extalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lgv::extalg {

FormSpace::FormSpace(int d_, int q_) : d(d_), q(q_) {
    if (d < 2 || q < 1) throw std::invalid_argument("FormSpace: requires d >= 2, q >= 1");
}

int FormSpace::index(int i, int j) const {
    if (i < 1 || i > d - 1 || j < 1 || j > q)
        throw std::out_of_range("FormSpace::index: basis symbol out of range");
    return (j - 1) * (d - 1) + (i - 1);
}

std::string FormSpace::basis_name(int idx) const {
    int j = idx / (d - 1) + 1;
    int i = idx % (d - 1) + 1;
    return "w^" + std::to_string(i) + "_" + std::to_string(j);
}

OneForm zero_form(const FormSpace& s) { return OneForm(s.dim(), Rational(0)); }

OneForm pullback_form(const FormSpace& s, int i, int j) {
    if (i < 1 || i > s.d || j < 1 || j > s.q)
        throw std::out_of_range("pullback_form: index out of range");
    OneForm f = zero_form(s);
    if (i < s.d) {
        f[s.index(i, j)] = Rational(1);
    } else {
        for (int k = 1; k <= s.d - 1; ++k) f[s.index(k, j)] = Rational(-1);
    }
    return f;
}

OneForm add(const OneForm& a, const OneForm& b) {
    OneForm out = a;
    for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

OneForm sub(const OneForm& a, const OneForm& b) {
    OneForm out = a;
    for (size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

AlternatingTensor zero_tensor(const FormSpace& s, int degree) {
    return AlternatingTensor(s, degree);
}

namespace {

void accumulate(AlternatingTensor& t, const std::vector<int>& key, const Rational& c) {
    if (c.is_zero()) return;
    auto it = t.coeff.find(key);
    if (it == t.coeff.end()) {
        t.coeff.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t.coeff.erase(it);
    }
}

}  // namespace

AlternatingTensor add(const AlternatingTensor& a, const AlternatingTensor& b) {
    if (!(a.space == b.space) || a.degree != b.degree)
        throw std::invalid_argument("add: tensor shape mismatch");
    AlternatingTensor out = a;
    for (const auto& [key, c] : b.coeff) accumulate(out, key, c);
    return out;
}

AlternatingTensor scale(const AlternatingTensor& a, const Rational& c) {
    AlternatingTensor out(a.space, a.degree);
    if (c.is_zero()) return out;
    for (const auto& [key, v] : a.coeff) out.coeff.emplace(key, v * c);
    return out;
}

AlternatingTensor wedge(const FormSpace& s, const std::vector<OneForm>& forms) {
    int p = static_cast<int>(forms.size());
    if (p > s.dim()) return zero_tensor(s, p);
    AlternatingTensor acc(s, 0);
    acc.coeff.emplace(std::vector<int>{}, Rational(1));
    for (int step = 0; step < p; ++step) {
        const OneForm& f = forms[step];
        AlternatingTensor next(s, step + 1);
        for (const auto& [key, c] : acc.coeff) {
            for (int idx = 0; idx < s.dim(); ++idx) {
                if (f[idx].is_zero()) continue;
                auto pos = std::lower_bound(key.begin(), key.end(), idx);
                if (pos != key.end() && *pos == idx) continue;  // repeated factor
                std::vector<int> nk = key;
                size_t at = pos - key.begin();
                nk.insert(nk.begin() + at, idx);
                // Appending on the right then bubbling left to position `at`
                // costs key.size()-at transpositions.
                Rational term = c * f[idx];
                if ((key.size() - at) % 2 == 1) term = -term;
                accumulate(next, nk, term);
            }
        }
        acc = std::move(next);
    }
    return acc;
}

AlternatingTensor build_sum_form(const FormSpace& s, const std::vector<int>& indices) {
    std::set<int> distinct(indices.begin(), indices.end());
    if (distinct.size() != indices.size())
        throw std::invalid_argument("build_sum_form: repeated lower indices");
    if (static_cast<int>(indices.size()) > s.q)
        throw std::invalid_argument("build_sum_form: more indices than forms downstairs");
    for (int j : indices)
        if (j < 1 || j > s.q)
            throw std::out_of_range("build_sum_form: lower index out of range");

    AlternatingTensor total = zero_tensor(s, static_cast<int>(indices.size()));
    for (int i = 1; i <= s.d; ++i) {
        std::vector<OneForm> forms;
        forms.reserve(indices.size());
        for (int j : indices) forms.push_back(pullback_form(s, i, j));
        total = add(total, wedge(s, forms));
    }
    return total;
}

AlternatingTensor apply_permutation(const AlternatingTensor& t,
                                    const std::vector<int>& sigma) {
    const FormSpace& s = t.space;
    if (static_cast<int>(sigma.size()) != s.d)
        throw std::invalid_argument("apply_permutation: permutation size mismatch");
    std::vector<bool> seen(s.d + 1, false);
    for (int v : sigma) {
        if (v < 1 || v > s.d || seen[v])
            throw std::invalid_argument("apply_permutation: not a permutation of 1..d");
        seen[v] = true;
    }

    AlternatingTensor out = zero_tensor(s, t.degree);
    for (const auto& [key, c] : t.coeff) {
        std::vector<OneForm> images;
        images.reserve(key.size());
        for (int idx : key) {
            int j = idx / (s.d - 1) + 1;
            int i = idx % (s.d - 1) + 1;
            images.push_back(pullback_form(s, sigma[i - 1], j));
        }
        out = add(out, scale(wedge(s, images), c));
    }
    return out;
}

namespace {

// Rank of an integer matrix by Bareiss fraction-free elimination. Entries are
// bounded by minors of the input, safely inside __int128 at these sizes.
int integer_rank(std::vector<std::vector<__int128>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    __int128 prev = 1;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (size_t i = rank + 1; i < rows; ++i) {
            for (size_t j = col + 1; j < cols; ++j)
                m[i][j] = (m[i][j] * m[rank][col] - m[i][col] * m[rank][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

__int128 lcm128(__int128 a, __int128 b) {
    __int128 x = a, y = b;
    while (y != 0) { __int128 t = x % y; x = y; y = t; }
    return a / x * b;
}

}  // namespace

int two_form_rank(const AlternatingTensor& t) {
    if (t.degree != 2) throw std::invalid_argument("two_form_rank: degree must be 2");
    int n = t.space.dim();
    __int128 denlcm = 1;
    for (const auto& [key, c] : t.coeff) denlcm = lcm128(denlcm, c.den());
    std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n, 0));
    for (const auto& [key, c] : t.coeff) {
        __int128 v = (__int128)c.num() * (denlcm / c.den());
        m[key[0]][key[1]] = v;
        m[key[1]][key[0]] = -v;
    }
    return integer_rank(std::move(m));
}

bool is_decomposable(const AlternatingTensor& t) { return two_form_rank(t) <= 2; }

namespace {

AlternatingTensor omega_rhs(const Rational& leading) {
    FormSpace s(3, 2);
    AlternatingTensor first =
        scale(wedge(s, {pullback_form(s, 3, 1), pullback_form(s, 3, 2)}), leading);
    OneForm nu1 = sub(pullback_form(s, 1, 1), pullback_form(s, 2, 1));
    OneForm nu2 = sub(pullback_form(s, 1, 2), pullback_form(s, 2, 2));
    AlternatingTensor second = scale(wedge(s, {nu1, nu2}), Rational(1, 2));
    return add(first, second);
}

}  // namespace

bool verify_omega_identity() {
    FormSpace s(3, 2);
    return build_sum_form(s, {1, 2}) == omega_rhs(Rational(3, 2));
}

bool verify_omega_identity_perturbed() {
    FormSpace s(3, 2);
    return build_sum_form(s, {1, 2}) == omega_rhs(Rational(1));
}

}  // namespace lgv::extalg
