#pragma once

#include "gha/core/complex.hpp"
#include "gha/dgla/gc_algebra.hpp"
#include "gha/dgla/lie.hpp"

#include <string>
#include <vector>

namespace gha {

// Λ g* with generators e1..en in degree 1.
struct CEAlgebra {
    LieAlgebra g;
    GDGPtr A;
    SVec e(int a) const { return A->alg->gen(a); }
};

// Λ g* ⊗ S g* modulo polynomials of w-weight > s; generators t1..tn (degree 1)
// followed by w1..wn (degree 2, weight 1). Every operator preserves the
// discarded ideal, so all identities hold exactly on the quotient.
struct WeilAlgebra {
    LieAlgebra g;
    int s = 0;
    GDGPtr A;
    int n() const { return g.dim(); }
    SVec t(int a) const { return A->alg->gen(a); }
    SVec w(int a) const { return A->alg->gen(n() + a); }
};

CEAlgebra ce_algebra(const LieAlgebra& g);
WeilAlgebra weil_algebra(const LieAlgebra& g, int s);

// Cartan identities of a g-DG algebra with the structure constants of g.
CartanReport cartan_report(const GDGAlgebra& A, const LieAlgebra& g);

// θ(e^a) ∈ A^1 for each basis index a.
struct AlgebraicConnection {
    LieAlgebra g;
    GDGPtr target;
    std::vector<SVec> theta;
};

AlgebraicConnection universal_connection(const WeilAlgebra& W);
AlgebraicConnection canonical_connection(const CEAlgebra& ce);

struct ConnectionReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// i_x θ(ξ) = <ξ,x> and L_x θ(ξ) = θ(ad*_x ξ) on all basis pairs.
ConnectionReport connection_check(const AlgebraicConnection& theta);

struct CharacteristicMap {
    WeilAlgebra W;
    GDGPtr target;
    std::vector<SVec> gen_images;  // t1..tn, w1..wn
    GradedMap map;                 // W.A->alg -> target->alg
    SVec apply(const SVec& x) const { return map.apply(x); }
};

// Throws InputError for an invalid connection.
CharacteristicMap characteristic_hom(const AlgebraicConnection& theta, int s);

// Commutation with d, i_x, L_x on every basis monomial whose image is not
// cut off by truncation (weight ≤ s-1 for d), plus multiplicativity.
std::vector<std::string> characteristic_failures(const CharacteristicMap& c);

// Common kernel of all i_a and L_a in degree k.
std::vector<SVec> basic_subspace(const GDGAlgebra& A, int k);

// Basic elements of degrees lo..hi as a subcomplex.
Subcomplex basic_complex(const GDGAlgebra& A, int lo, int hi);

// S^{≤k} g* with generators w1..wn (degree 2) and the coadjoint action.
struct SymmetricAlgebra {
    LieAlgebra g;
    GDGPtr A;  // d = 0, no contractions
};
SymmetricAlgebra symmetric_algebra(const LieAlgebra& g, int k);

// Basis of (S^k g*)_inv inside symmetric_algebra(g, k).
std::vector<SVec> invariant_polynomials(const SymmetricAlgebra& S, int k);

// Image of a polynomial in S(g*) under w^a -> w^a.
SVec polynomial_in_weil(const SymmetricAlgebra& S, const WeilAlgebra& W, const SVec& p);

struct ChernWeilResult {
    SVec element;  // in the target algebra
    int degree = 0;
    bool closed = false;
    bool basic = false;
    int cohomology_dim = 0;       // dim H^degree(A_bas)
    std::vector<Q> class_coords;  // w.r.t. the representatives of basic cohomology
};

// c_θ(p) with the Weil algebra truncated at the weight bound of S. Throws
// InputError if p is not an invariant homogeneous polynomial or θ is not a connection.
ChernWeilResult chern_weil(const AlgebraicConnection& theta, const SymmetricAlgebra& S, const SVec& p);

}  // namespace gha
