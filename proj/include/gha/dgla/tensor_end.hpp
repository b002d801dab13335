#pragma once

#include "gha/dgla/gc_algebra.hpp"

#include <array>
#include <map>
#include <optional>

namespace gha {

// Element of A ⊗ Hom(V, W) stored as coefficients of a ⊗ E_{rc}, where a is a
// basis monomial of A and E_{rc} sends the c-th basis vector of V to the r-th of W.
class TensorElem {
public:
    using Key = std::array<int, 3>;  // (a, r, c)

    TensorElem() = default;
    TensorElem(AlgPtr A, SpacePtr src, SpacePtr tgt);

    static TensorElem of(AlgPtr A, const SVec& a, const GradedMap& f);  // a ⊗ f
    static TensorElem identity(AlgPtr A, SpacePtr V);                   // 1 ⊗ id

    const AlgPtr& algebra() const { return A_; }
    const SpacePtr& source() const { return src_; }
    const SpacePtr& target() const { return tgt_; }
    const std::map<Key, Q>& terms() const { return terms_; }

    void add(int a, int r, int c, const Q& v);
    void add(const Key& k, const Q& v) { add(k[0], k[1], k[2], v); }
    Q at(int a, int r, int c) const;
    bool is_zero() const { return terms_.empty(); }

    int hom_degree(int r, int c) const { return tgt_->degree(r) - src_->degree(c); }
    int term_degree(const Key& k) const { return A_->degree(k[0]) + hom_degree(k[1], k[2]); }
    // nullopt for zero; throws InputError if inhomogeneous
    std::optional<int> degree() const;

    TensorElem operator+(const TensorElem& o) const;
    TensorElem operator-(const TensorElem& o) const;
    TensorElem scaled(const Q& s) const;
    bool operator==(const TensorElem& o) const { return terms_ == o.terms_; }
    bool operator!=(const TensorElem& o) const { return !(*this == o); }

    // Part whose A-factor has degree p, and the full decomposition.
    TensorElem partial(int p) const;
    std::map<int, TensorElem> by_partial_degree() const;
    // Hom coefficient of a given A-monomial.
    GradedMap coefficient(int a, int degree) const;

    // (P ⊗ 1) for a linear map P on the A factor, possibly into another algebra.
    TensorElem apply_algebra(const GradedMap& P, AlgPtr target) const;
    TensorElem apply_algebra(const GradedMap& P) const { return apply_algebra(P, A_); }

    // Flat coordinates: index (a * dim W + r) * dim V + c.
    int flat_index(int a, int r, int c) const { return (a * tgt_->dim() + r) * src_->dim() + c; }
    Key unflatten(int i) const;
    int flat_dim() const { return A_->dim() * tgt_->dim() * src_->dim(); }
    SVec flatten() const;
    static TensorElem unflatten(AlgPtr A, SpacePtr src, SpacePtr tgt, const SVec& v);

private:
    AlgPtr A_;
    SpacePtr src_, tgt_;
    std::map<Key, Q> terms_;
};

// x ∘ y with (a ⊗ f)(b ⊗ g) = (-1)^{|f||b|} ab ⊗ fg.
TensorElem compose(const TensorElem& x, const TensorElem& y);

// d(a ⊗ f) = dA a ⊗ f + (-1)^{|a|} a ⊗ (dW f - (-1)^{|f|} f dV).
TensorElem tensor_d(const TensorElem& x, const GradedMap& dA, const GradedMap& dV, const GradedMap& dW);

// dx + x∘x, which equals dx + ½[x,x] for x of degree 1.
TensorElem mc_residual(const TensorElem& x, const GradedMap& dA, const GradedMap& dV);

// Residual split by A-degree, one entry per partial degree that occurs.
std::map<int, TensorElem> mc_residual_components(const TensorElem& x, const GradedMap& dA, const GradedMap& dV);

}  // namespace gha
