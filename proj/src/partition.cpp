#include "lgv/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace lgv {

void Partition::validate() const {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

std::vector<Partition> partitions_of(int d) {
    if (d < 0) throw std::invalid_argument("partitions_of: negative weight");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Parts generated largest-first so each prefix stays weakly decreasing.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, d == 0 ? 1 : d);
    std::sort(out.begin(), out.end());
    return out;
}

long long conjugacy_class_size(const Partition& cycle_type) {
    std::map<int, int> mult;
    for (int p : cycle_type.parts) mult[p]++;
    long long z = 1;
    for (auto [k, m] : mult) {
        for (int i = 0; i < m; ++i) z *= k;
        z *= factorial(m);
    }
    return factorial(cycle_type.weight()) / z;
}

long long hook_length_dimension(const Partition& label) {
    const auto& p = label.parts;
    std::vector<int> conj(p.empty() ? 0 : p[0], 0);
    for (int row : p)
        for (int j = 0; j < row; ++j) conj[j]++;
    long long hooks = 1;
    for (size_t i = 0; i < p.size(); ++i) {
        for (int j = 0; j < p[i]; ++j) {
            long long arm = p[i] - j - 1;
            long long leg = conj[j] - static_cast<long long>(i) - 1;
            hooks *= arm + leg + 1;
        }
    }
    return factorial(label.weight()) / hooks;
}

Partition power_cycle_type(const Partition& cycle_type, int k) {
    if (k <= 0) throw std::invalid_argument("power_cycle_type: k must be positive");
    std::vector<int> parts;
    for (int l : cycle_type.parts) {
        int g = std::gcd(l, k);
        for (int i = 0; i < g; ++i) parts.push_back(l / g);
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

}  // namespace lgv
