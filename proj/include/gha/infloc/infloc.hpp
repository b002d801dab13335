#pragma once

#include "gha/core/complex.hpp"
#include "gha/dgla/tensor_end.hpp"
#include "gha/weil/weil.hpp"

#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace gha {

struct ObjectReport {
    bool mc_ok = false;
    bool basic_ok = false;
    std::vector<std::string> failures;
    TensorElem mc_residual;
    bool ok() const { return mc_ok && basic_ok; }
};

// A finite cochain complex V with a degree-1 element α of Wg(s) ⊗ End(V).
// L holds the V-side Lie derivatives read off from the t-linear part of α.
struct BasicObject {
    std::string name;
    WeilAlgebra W;
    CochainComplex V;
    TensorElem alpha;
    std::vector<GradedMap> L;
    ObjectReport report;

    const SpacePtr& space() const { return V.space; }
    int dim() const { return V.space->dim(); }
};

// Coefficient of t^x in α, one map per basis element x.
std::vector<GradedMap> extract_lie_derivatives(const WeilAlgebra& W, const SpacePtr& V, const TensorElem& alpha);

// Basicness failures of α over an arbitrary g-DG algebra A with V-side operators L:
// (i_x ⊗ 1)α = 1 ⊗ L_x and -(L_x ⊗ 1)α + [α, 1 ⊗ L_x] = 0.
std::vector<std::string> basicness_failures(const GDGAlgebra& A, const TensorElem& alpha,
                                            const std::vector<GradedMap>& L);

ObjectReport check_object(const WeilAlgebra& W, const CochainComplex& V, const TensorElem& alpha);

// Throws InputError listing the residuals when α is not an MC element or not basic.
BasicObject make_object(const WeilAlgebra& W, const CochainComplex& V, const TensorElem& alpha,
                        std::string name = "");

// One-dimensional complex in the given degree with α = 0.
BasicObject trivial_object(const WeilAlgebra& W, int degree = 0);

// V = CE(g), α = t^a ⊗ L_a - w^a ⊗ i_a. Requires s >= 2.
BasicObject gauss_manin(const LieAlgebra& g, int s);
BasicObject gauss_manin(const WeilAlgebra& W);

// --- morphisms ---------------------------------------------------------------

TensorElem zero_morphism(const BasicObject& src, const BasicObject& tgt);
TensorElem identity_morphism(const BasicObject& V);

// ∂φ = D'∘φ - (-1)^k φ∘D over a coefficient algebra with differential dA.
TensorElem twisted_differential(const GradedMap& dA, const CochainComplex& V, const TensorElem& alphaV,
                                const CochainComplex& Vp, const TensorElem& alphaVp, const TensorElem& phi);

TensorElem hom_differential(const BasicObject& src, const BasicObject& tgt, const TensorElem& phi);

// i_x ⊗ 1 and L_x ⊗ 1 + [1 ⊗ L, ·] on a morphism.
std::vector<std::string> morphism_basic_failures(const BasicObject& src, const BasicObject& tgt,
                                                 const TensorElem& phi);
bool is_basic(const BasicObject& src, const BasicObject& tgt, const TensorElem& phi);

// ψ ∘ φ; throws InputError unless φ lands where ψ starts.
TensorElem compose_morphisms(const TensorElem& psi, const TensorElem& phi);

// Basis of basic morphisms of total degree k, each homogeneous in Weil degree.
std::vector<TensorElem> basic_morphisms(const BasicObject& src, const BasicObject& tgt, int k);

TensorElem random_basic_morphism(const BasicObject& src, const BasicObject& tgt, int k, std::mt19937_64& rng);

// Degrees on which the truncated Hom complex has the cohomology of the untruncated one.
std::pair<int, int> safe_window(const BasicObject& src, const BasicObject& tgt);

struct BasicHomComplex {
    BasicObject source, target;
    int lo = 0, hi = 0;                 // reported window
    std::vector<TensorElem> basis;      // degrees lo-1 .. hi+1
    std::vector<int> weil_degree;       // per basis element
    Subcomplex sub;
    bool square_zero = false;
    bool basic_closed = false;          // ∂ of every basis element stays basic
    std::map<int, int> cohomology;      // degrees lo..hi only
};

BasicHomComplex hom_complex(const BasicObject& src, const BasicObject& tgt);
BasicHomComplex hom_complex(const BasicObject& src, const BasicObject& tgt, int lo, int hi);

// Basis of ∂-closed elements of degree k (k inside the computed range lo-1..hi).
std::vector<TensorElem> hom_cocycles(const BasicHomComplex& hc, int k);

// Filtration by Weil degree.
SpectralPages hom_spectral(const BasicHomComplex& hc, int r_max);

// --- extensions -----------------------------------------------------------------

// Transport of x ∈ Wg ⊗ Hom(V, R) to Wg ⊗ Hom(V, R[1-l]) as a chain isomorphism:
// a ⊗ f ↦ (-1)^{(1-l)|f|} a ⊗ f, then embedded into End(V ⊕ R[1-l]).
TensorElem line_to_extension(const TensorElem& x, int l, const SpacePtr& ext_space);

// V ⋊_γ R for a closed basic γ ∈ Hom(V, trivial) of degree l.
BasicObject extension(const BasicObject& V, const TensorElem& gamma, int l);

struct GaugeCheck {
    BasicObject from, to;   // extensions by γ and γ + ∂η
    TensorElem map, inverse;
    bool intertwines = false;  // D_{γ+∂η} ∘ (id - η) = (id - η) ∘ D_γ
    bool inverse_ok = false;
    bool basic = false;
};

// η of degree l-1 in Hom(V, trivial).
GaugeCheck extension_gauge_check(const BasicObject& V, const TensorElem& gamma, const TensorElem& eta, int l);

// --- Chern-Weil functor ------------------------------------------------------------

struct CWObject {
    GDGPtr A;
    CochainComplex V;
    TensorElem alpha;
    std::vector<GradedMap> L;
    bool mc_ok = false;
    bool basic_ok = false;
    std::vector<std::string> failures;
};

struct ChernWeilFunctor {
    CharacteristicMap c;
    CWObject on_object(const BasicObject& V) const;
    TensorElem on_morphism(const TensorElem& phi) const;
    TensorElem differential(const CWObject& src, const CWObject& tgt, const TensorElem& phi) const;
};

// Throws InputError for an invalid connection.
ChernWeilFunctor cw_functor(const AlgebraicConnection& theta, int s);

}  // namespace gha
