#include "gha/core/koszul.hpp"

#include "gha/core/rational.hpp"

#include <algorithm>
#include <numeric>

namespace gha {

int koszul_sign(const Perm& p, const std::vector<int>& degrees) {
    if (p.size() != degrees.size()) throw InputError("koszul_sign: length mismatch");
    std::vector<bool> seen(p.size(), false);
    for (int x : p) {
        if (x < 0 || x >= static_cast<int>(p.size()) || seen[x])
            throw InputError("koszul_sign: not a permutation");
        seen[x] = true;
    }
    long parity = 0;
    for (size_t a = 0; a < p.size(); ++a)
        for (size_t b = a + 1; b < p.size(); ++b)
            if (p[a] > p[b]) parity += static_cast<long>(degrees[p[a]] & 1) * (degrees[p[b]] & 1);
    return sign_of_parity(parity);
}

std::vector<Perm> shuffles(const std::vector<int>& block_sizes) {
    int n = 0;
    std::vector<int> labels;
    for (size_t b = 0; b < block_sizes.size(); ++b) {
        if (block_sizes[b] < 0) throw InputError("shuffles: negative block size");
        n += block_sizes[b];
        labels.insert(labels.end(), block_sizes[b], static_cast<int>(b));
    }
    std::vector<Perm> out;
    // labels[i] = block receiving original element i
    do {
        Perm p;
        p.reserve(n);
        for (size_t b = 0; b < block_sizes.size(); ++b)
            for (int i = 0; i < n; ++i)
                if (labels[i] == static_cast<int>(b)) p.push_back(i);
        out.push_back(std::move(p));
    } while (std::next_permutation(labels.begin(), labels.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> compositions(int n) {
    std::vector<std::vector<int>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    for (int first = 1; first <= n; ++first)
        for (auto rest : compositions(n - first)) {
            rest.insert(rest.begin(), first);
            out.push_back(std::move(rest));
        }
    return out;
}

Perm compose_perm(const Perm& outer, const Perm& inner) {
    Perm r(outer.size());
    for (size_t i = 0; i < outer.size(); ++i) r[i] = inner[outer[i]];
    return r;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace gha
