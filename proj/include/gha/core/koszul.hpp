#pragma once

#include <vector>

namespace gha {

using Perm = std::vector<int>;

// Sign e with v_{p[0]} ... v_{p[n-1]} = e * v_0 ... v_{n-1} in a graded-commutative setting.
int koszul_sign(const Perm& p, const std::vector<int>& degrees);

// All permutations that keep the order inside each consecutive block,
// written as p[position] = original index.
std::vector<Perm> shuffles(const std::vector<int>& block_sizes);

// Ordered compositions of n into parts >= 1.
std::vector<std::vector<int>> compositions(int n);

Perm compose_perm(const Perm& outer, const Perm& inner);

long long binomial(int n, int k);

}  // namespace gha
