#pragma once

#include <string>
#include <vector>

#include "lgv/rational.hpp"

namespace lgv {

// Integer partition with weakly decreasing positive parts. Labels both the
// conjugacy classes and the irreducible representations of S_d.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> p) : parts(p) { validate(); }
    explicit Partition(std::vector<int> p) : parts(std::move(p)) { validate(); }

    int weight() const {
        int w = 0;
        for (int p : parts) w += p;
        return w;
    }

    size_t length() const { return parts.size(); }
    bool empty() const { return parts.empty(); }

    // Number of parts equal to one, i.e. fixed points of a permutation of
    // this cycle type.
    int fixed_points() const {
        int n = 0;
        for (int p : parts)
            if (p == 1) ++n;
        return n;
    }

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator!=(const Partition& o) const { return parts != o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s + ")";
    }

    void validate() const;
};

// All partitions of d in the fixed iteration order used everywhere in this
// library: ascending lexicographic on the part vectors, so (1,...,1) comes
// first and (d) last.
std::vector<Partition> partitions_of(int d);

// Size of the conjugacy class of S_d with this cycle type, d!/z where z is
// the centralizer order prod_k k^{m_k} m_k!.
long long conjugacy_class_size(const Partition& cycle_type);

// Dimension of the irreducible S_d representation labelled by this partition,
// by the hook length formula. Independent of the character recursion.
long long hook_length_dimension(const Partition& label);

// Cycle type of g^k for g of the given cycle type: a cycle of length l
// splits into gcd(l,k) cycles of length l/gcd(l,k).
Partition power_cycle_type(const Partition& cycle_type, int k);

}  // namespace lgv
