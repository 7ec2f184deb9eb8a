#include "lgv/sdrep.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace lgv::sdrep {

namespace {

void check_degree(int d) {
    if (d < 1 || d > kMaxDegree)
        throw std::invalid_argument("sdrep: degree out of supported range 1.." +
                                    std::to_string(kMaxDegree));
}

int label_index(int d, const Partition& p) {
    const auto& labels = class_labels(d);
    auto it = std::lower_bound(labels.begin(), labels.end(), p);
    if (it == labels.end() || !(*it == p))
        throw std::invalid_argument("sdrep: not a partition of " + std::to_string(d) +
                                    ": " + p.str());
    return static_cast<int>(it - labels.begin());
}

// First-column hook lengths ("beta numbers") of a partition, strictly
// decreasing. Removing a border strip of size k corresponds to lowering one
// beta by k onto an unoccupied value; the strip height is the number of
// occupied values crossed.
std::vector<int> beta_numbers(const std::vector<int>& lambda) {
    int l = static_cast<int>(lambda.size());
    std::vector<int> betas(l);
    for (int i = 0; i < l; ++i) betas[i] = lambda[i] + (l - 1 - i);
    return betas;
}

std::vector<int> partition_from_betas(std::vector<int> betas) {
    std::sort(betas.rbegin(), betas.rend());
    int l = static_cast<int>(betas.size());
    std::vector<int> parts;
    for (int i = 0; i < l; ++i) {
        int p = betas[i] - (l - 1 - i);
        if (p > 0) parts.push_back(p);
    }
    return parts;
}

long long mn_value(const std::vector<int>& lambda, const std::vector<int>& rho) {
    if (rho.empty()) return lambda.empty() ? 1 : 0;

    using Key = std::pair<std::vector<int>, std::vector<int>>;
    thread_local std::map<Key, long long> memo;
    Key key{lambda, rho};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int k = rho.front();
    std::vector<int> rest(rho.begin() + 1, rho.end());
    std::vector<int> betas = beta_numbers(lambda);

    long long total = 0;
    for (size_t i = 0; i < betas.size(); ++i) {
        int target = betas[i] - k;
        if (target < 0) continue;
        if (std::find(betas.begin(), betas.end(), target) != betas.end()) continue;
        int height = 0;
        for (int b : betas)
            if (b > target && b < betas[i]) ++height;
        std::vector<int> next = betas;
        next[i] = target;
        long long sub = mn_value(partition_from_betas(std::move(next)), rest);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

ClassFunction from_integer_values(int d, std::vector<long long> vals) {
    ClassFunction chi;
    chi.d = d;
    chi.values.reserve(vals.size());
    for (long long v : vals) chi.values.emplace_back(v);
    return chi;
}

}  // namespace

const Rational& ClassFunction::at(const Partition& cycle_type) const {
    return values[label_index(d, cycle_type)];
}

Rational ClassFunction::dimension() const {
    // Identity class (1,...,1) is first in the canonical order.
    return values.front();
}

long long RepDecomposition::dimension() const {
    long long dim = 0;
    for (const auto& [label, mult] : terms) dim += mult * hook_length_dimension(label);
    return dim;
}

const std::vector<Partition>& class_labels(int d) {
    check_degree(d);
    static std::vector<Partition> cache[kMaxDegree + 1];
    static std::once_flag once[kMaxDegree + 1];
    std::call_once(once[d], [d] { cache[d] = partitions_of(d); });
    return cache[d];
}

std::vector<std::pair<Partition, long long>> conjugacy_classes(int d) {
    std::vector<std::pair<Partition, long long>> out;
    for (const auto& p : class_labels(d)) out.emplace_back(p, conjugacy_class_size(p));
    return out;
}

ClassFunction irreducible_character(int d, const Partition& label) {
    check_degree(d);
    if (label.weight() != d)
        throw std::invalid_argument("irreducible_character: label " + label.str() +
                                    " is not a partition of " + std::to_string(d));
    std::vector<long long> vals;
    for (const auto& cls : class_labels(d))
        vals.push_back(mn_value(label.parts, cls.parts));
    return from_integer_values(d, std::move(vals));
}

ClassFunction trivial_character(int d) {
    check_degree(d);
    return from_integer_values(d, std::vector<long long>(class_labels(d).size(), 1));
}

ClassFunction sign_character(int d) {
    check_degree(d);
    std::vector<long long> vals;
    for (const auto& cls : class_labels(d)) {
        int transpositions = cls.weight() - static_cast<int>(cls.length());
        vals.push_back(transpositions % 2 == 0 ? 1 : -1);
    }
    return from_integer_values(d, std::move(vals));
}

ClassFunction standard_character(int d) {
    if (d < 2) throw std::invalid_argument("standard_character: requires d >= 2");
    check_degree(d);
    std::vector<long long> vals;
    for (const auto& cls : class_labels(d)) vals.push_back(cls.fixed_points() - 1);
    return from_integer_values(d, std::move(vals));
}

ClassFunction add(const ClassFunction& a, const ClassFunction& b) {
    if (a.d != b.d) throw std::invalid_argument("add: degree mismatch");
    ClassFunction out{a.d, a.values};
    for (size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
    return out;
}

ClassFunction scale(const ClassFunction& a, const Rational& c) {
    ClassFunction out{a.d, a.values};
    for (auto& v : out.values) v *= c;
    return out;
}

ClassFunction tensor(const ClassFunction& a, const ClassFunction& b) {
    if (a.d != b.d) throw std::invalid_argument("tensor: degree mismatch");
    ClassFunction out{a.d, a.values};
    for (size_t i = 0; i < out.values.size(); ++i) out.values[i] *= b.values[i];
    return out;
}

namespace {

// Shared Newton recursion: exterior powers carry the alternating sign,
// symmetric powers do not.
ClassFunction power_recursion(const ClassFunction& chi, int order, bool alternating) {
    if (order < 0) throw std::invalid_argument("power character: negative order");
    const auto& labels = class_labels(chi.d);
    ClassFunction out;
    out.d = chi.d;
    out.values.resize(labels.size());
    for (size_t ci = 0; ci < labels.size(); ++ci) {
        std::vector<Rational> power_values(order + 1);  // chi(g^k)
        for (int k = 1; k <= order; ++k)
            power_values[k] = chi.at(power_cycle_type(labels[ci], k));
        std::vector<Rational> acc(order + 1);
        acc[0] = Rational(1);
        for (int j = 1; j <= order; ++j) {
            Rational s(0);
            for (int k = 1; k <= j; ++k) {
                Rational term = power_values[k] * acc[j - k];
                if (alternating && k % 2 == 0) term = -term;
                s += term;
            }
            acc[j] = s / Rational(j);
        }
        out.values[ci] = acc[order];
    }
    return out;
}

}  // namespace

ClassFunction ext_power_character(const ClassFunction& chi, int p) {
    return power_recursion(chi, p, /*alternating=*/true);
}

ClassFunction sym_power_character(const ClassFunction& chi, int k) {
    return power_recursion(chi, k, /*alternating=*/false);
}

Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
    if (a.d != b.d) throw std::invalid_argument("inner_product: degree mismatch");
    Rational sum(0);
    const auto& labels = class_labels(a.d);
    for (size_t i = 0; i < labels.size(); ++i)
        sum += Rational(conjugacy_class_size(labels[i])) * a.values[i] * b.values[i];
    return sum / Rational(factorial(a.d));
}

RepDecomposition decompose(const ClassFunction& chi) {
    RepDecomposition dec;
    dec.d = chi.d;
    for (const auto& label : class_labels(chi.d)) {
        Rational m = inner_product(chi, irreducible_character(chi.d, label));
        if (!m.is_integer() || m.num() < 0) {
            std::ostringstream oss;
            oss << "decompose: input is not a character, multiplicity of "
                << label.str() << " is " << m.str();
            throw std::domain_error(oss.str());
        }
        if (m.num() != 0) dec.terms[label] = m.num();
    }
    if (Rational(dec.dimension()) != chi.dimension())
        throw std::logic_error("decompose: dimension mismatch after decomposition");
    return dec;
}

ClassFunction character_of(const RepDecomposition& dec) {
    ClassFunction out;
    out.d = dec.d;
    out.values.assign(class_labels(dec.d).size(), Rational(0));
    for (const auto& [label, mult] : dec.terms) {
        ClassFunction chi = irreducible_character(dec.d, label);
        for (size_t i = 0; i < out.values.size(); ++i)
            out.values[i] += Rational(mult) * chi.values[i];
    }
    return out;
}

long long dim_A(int d, int k) {
    if (d < 2) throw std::invalid_argument("dim_A: requires d >= 2");
    if (k < 0) throw std::invalid_argument("dim_A: requires k >= 0");
    std::vector<long long> ways(k + 1, 0);
    ways[0] = 1;
    for (int part = 2; part <= d; ++part)
        for (int s = part; s <= k; ++s) ways[s] += ways[s - part];
    return ways[k];
}

long long trivial_multiplicity_sym_gamma(int d, int k) {
    check_degree(d);
    ClassFunction sym = sym_power_character(standard_character(d), k);
    Rational m = inner_product(sym, trivial_character(d));
    long long mult = m.as_integer();
    long long expected = dim_A(d, k);
    if (mult != expected)
        throw std::logic_error(
            "trivial_multiplicity_sym_gamma: invariant-ring dimension mismatch at d=" +
            std::to_string(d) + " k=" + std::to_string(k) + ": characters give " +
            std::to_string(mult) + ", partition count gives " + std::to_string(expected));
    return mult;
}

KernelBound kernel_lower_bound(int d, int q, int p) {
    if (q < 2 || p < 2 || p > q)
        throw std::invalid_argument("kernel_lower_bound: requires 2 <= p <= q");
    KernelBound kb;
    kb.bound = binomial(q, p);
    kb.trivial_copies = kb.bound * dim_A(d, p);

    ClassFunction gamma_q = scale(standard_character(d), Rational(q));
    ClassFunction wedge = ext_power_character(gamma_q, p);
    long long mult = inner_product(wedge, trivial_character(d)).as_integer();
    if (mult < kb.trivial_copies)
        throw std::logic_error(
            "kernel_lower_bound: trivial multiplicity of Wedge^p(Gamma^q) is " +
            std::to_string(mult) + " < " + std::to_string(kb.trivial_copies));
    return kb;
}

long long min_irregularity(int d, int q) {
    if (d < 2 || q < 0) throw std::invalid_argument("min_irregularity: bad arguments");
    return static_cast<long long>(q) * (d - 1);
}

LgReport lg_bookkeeping() {
    const int d = 3;
    ClassFunction gamma = standard_character(d);
    ClassFunction h10 = add(gamma, gamma);

    LgReport rep;
    rep.h10_dim = h10.dimension().as_integer();

    RepDecomposition dec = decompose(tensor(h10, h10));
    const Partition trivial{3}, sign{1, 1, 1}, standard{2, 1};
    auto mult_of = [&](const Partition& p) {
        auto it = dec.terms.find(p);
        return it == dec.terms.end() ? 0LL : it->second;
    };
    rep.mult_trivial = mult_of(trivial);
    rep.mult_sign = mult_of(sign);
    rep.mult_standard = mult_of(standard);
    rep.tensor_dim = dec.dimension();
    if (rep.h10_dim != 4 || rep.mult_trivial != 4 || rep.mult_sign != 4 ||
        rep.mult_standard != 4 || rep.tensor_dim != 16)
        throw std::logic_error("lg_bookkeeping: tensor square decomposition mismatch");

    // ker rho_2 = Gamma + U^5: one standard summand plus five trivial ones.
    rep.ker_rho2_dim = hook_length_dimension(standard) + 5 * hook_length_dimension(trivial);
    return rep;
}

}  // namespace lgv::sdrep
