#pragma once

#include "gha/core/graded.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace gha {

struct Generator {
    std::string name;
    int degree = 1;
    int weight = 0;  // counts toward the truncation; even generators need weight > 0
};

// Free graded-commutative algebra on finitely many generators modulo all
// monomials of total weight > max_weight. Basis elements are ordered monomials
// g_0^{e_0} ... g_{n-1}^{e_{n-1}} with e_i <= 1 for odd generators.
class GCAlgebra {
public:
    GCAlgebra(std::vector<Generator> gens, int max_weight);

    const SpacePtr& space() const { return space_; }
    int dim() const { return space_->dim(); }
    int degree(int i) const { return space_->degree(i); }
    int num_generators() const { return static_cast<int>(gens_.size()); }
    const Generator& generator(int g) const { return gens_[g]; }
    int max_weight() const { return max_weight_; }

    const std::vector<int>& exponents(int i) const { return exps_[i]; }
    int weight(int i) const { return weights_[i]; }
    // -1 when the monomial is killed by the truncation or by an odd square
    int index_of(const std::vector<int>& exps) const;
    int unit() const { return unit_; }
    SVec one() const { return SVec{{unit_, Q(1)}}; }
    int gen_index(int g) const;
    SVec gen(int g) const;

    // (index, sign); index -1 means the product vanishes
    std::pair<int, int> mul_basis(int i, int j) const {
        size_t k = static_cast<size_t>(i) * dim() + j;
        return {mul_idx_[k], mul_sign_[k]};
    }
    SVec mul(const SVec& x, const SVec& y) const;

    // Derivation of the given degree with prescribed values on generators.
    GradedMap derivation(const std::vector<SVec>& images, int degree) const;
    GradedMap left_mult(const SVec& a, int degree) const;
    // Degree-0 algebra map into `target` with prescribed generator images.
    GradedMap homomorphism(const GCAlgebra& target, const std::vector<SVec>& images) const;

private:
    static std::uint64_t key(const std::vector<int>& exps);

    std::vector<Generator> gens_;
    int max_weight_;
    SpacePtr space_;
    std::vector<std::vector<int>> exps_;
    std::vector<int> weights_;
    std::unordered_map<std::uint64_t, int> lookup_;
    std::vector<int> mul_idx_;
    std::vector<signed char> mul_sign_;
    int unit_ = 0;
};

using AlgPtr = std::shared_ptr<const GCAlgebra>;

// A commutative algebra together with a differential and, optionally, a
// g-action by contractions i_a (degree -1) and Lie derivatives L_a (degree 0).
// Generator images are kept so maps can be checked on generators.
struct GDGAlgebra {
    AlgPtr alg;
    GradedMap d;
    std::vector<GradedMap> contraction;
    std::vector<GradedMap> lie_derivative;
    std::vector<SVec> d_gen;
    std::vector<std::vector<SVec>> contraction_gen, lie_gen;
};

using GDGPtr = std::shared_ptr<const GDGAlgebra>;

// Builds d, i_a, L_a from generator images.
GDGAlgebra make_gdg(AlgPtr alg, std::vector<SVec> d_gen, std::vector<std::vector<SVec>> contraction_gen,
                    std::vector<std::vector<SVec>> lie_gen);

struct CartanReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// d^2 = 0, [d,i_a] = L_a, [d,L_a] = 0, [L_a,L_b] = L_[a,b], [L_a,i_b] = i_[a,b], [i_a,i_b] = 0,
// with structure constants supplied as f(c, a, b).
template <class F>
CartanReport cartan_identities(const GDGAlgebra& A, int n, F f);

// d, i_a and L_a are derivations of the product (checked on all basis pairs
// whose product survives the truncation).
std::vector<std::string> derivation_failures(const GDGAlgebra& A);

}  // namespace gha

#include "gha/dgla/gc_algebra_impl.hpp"
