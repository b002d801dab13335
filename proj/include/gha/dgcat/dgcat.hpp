#pragma once

#include "gha/core/complex.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace gha {

// Finite DG category given by tables. Composition is stored on basis pairs.
struct DGCategory {
    std::string name;
    std::vector<std::string> objects;
    std::vector<std::vector<CochainComplex>> hom;  // hom[a][b] = Hom(a, b)
    // comp[{a,b,c}][{g,f}] = g ∘ f for basis g ∈ Hom(b,c), f ∈ Hom(a,b); zero entries omitted
    std::map<std::array<int, 3>, std::map<std::pair<int, int>, SVec>> comp;
    std::vector<SVec> identity;
    // When built from complexes: the complex realizing each object.
    std::vector<CochainComplex> realized;

    int size() const { return static_cast<int>(objects.size()); }
    const SpacePtr& space(int a, int b) const { return hom[a][b].space; }
    int degree(int a, int b, int f) const { return hom[a][b].space->degree(f); }
    SVec compose(int a, int b, int c, const SVec& g, const SVec& f) const;
    SVec d(int a, int b, const SVec& f) const;
};

using DGCatPtr = std::shared_ptr<const DGCategory>;

// d² = 0, degrees, Leibniz, associativity, units.
std::vector<std::string> dg_category_failures(const DGCategory& C);

// Full DG subcategory of complexes on the given objects, with elementary-matrix bases.
DGCatPtr complexes_category(const std::vector<CochainComplex>& objects, const std::vector<std::string>& names,
                            std::string name = "complexes");
// One object whose endomorphisms are span{id}.
DGCatPtr unit_category();
// Two objects X, Y with Hom(X,Y) = M, Hom(Y,X) = 0 and scalar endomorphisms.
DGCatPtr arrow_category(const CochainComplex& M, std::string name = "arrow");

DGCatPtr random_complexes_category(std::mt19937_64& rng, int objects = 2, int max_dim = 2);
CochainComplex random_small_complex(std::mt19937_64& rng, int max_dim, const std::string& tag);

// ---- Hochschild chains --------------------------------------------------------

// f_{n-1} ⊗ ... ⊗ f_0 with f_i ∈ Hom(A_i, A_{i+1}); letters[i] is the basis index of f_i.
struct Word {
    std::vector<int> objects;  // A_0 .. A_n
    std::vector<int> letters;  // f_0 .. f_{n-1}
    int length() const { return static_cast<int>(letters.size()); }
    auto operator<=>(const Word&) const = default;
};

using Chain = std::map<Word, Q>;

std::string word_label(const DGCategory& C, const Word& w);
// Throws InputError unless the word is composable in C.
void check_word(const DGCategory& C, const Word& w);
std::vector<Word> basis_words(const DGCategory& C, int n);
std::vector<int> word_degrees(const DGCategory& C, const Word& w);
// Multilinear expansion of a word whose letters are vectors.
Chain expand(const std::vector<int>& objects, const std::vector<SVec>& letters);
Chain word_chain(const Word& w);

// Consistent: b_2 carries the extra factor (-1)^{|f_{i+1}|} (composition of suspended
// morphisms), which makes b square to zero, and the natural-transformation relation
// reads ... = λ(b w) + d λ_n(w). AsPrinted: b_2 without that factor and - d λ_n(w).
enum class Signs { Consistent, AsPrinted };

namespace signs {
// Exponents as functions of the Hom degrees of f_0 .. f_{n-1}; all return ±1.
int b1(const std::vector<int>& degrees, int i);
int b2(const std::vector<int>& degrees, int i, Signs convention);
// Sign of the λ_{n-1} ∘ F term in the natural-transformation relation.
int nat(const std::vector<int>& degrees);
}  // namespace signs

Chain hochschild_b1(const DGCategory& C, const Chain& x);
Chain hochschild_b2(const DGCategory& C, const Chain& x, Signs convention = Signs::Consistent);
Chain hochschild_b(const DGCategory& C, const Chain& x, Signs convention = Signs::Consistent);

// ---- A∞ functors -----------------------------------------------------------------

struct AInftyFunctor {
    DGCatPtr source, target;
    std::vector<int> on_objects;
    int nmax = 1;
    // F_n on basis words, n = 1..nmax; missing entries are zero.
    std::map<Word, SVec> comp;

    SVec apply(const Word& w) const;
    SVec apply(const Chain& x) const;  // all words must have the same length and endpoints
    SVec apply_one(int a, int b, const SVec& f) const;  // F_1 on a vector of Hom(a, b)
};

struct CoherenceResult {
    bool ok = true;
    int n = -1;
    std::string where;
};

// F_1 given per pair of objects as maps Hom_C(a,b) -> Hom_D(F a, F b).
AInftyFunctor dg_functor(const DGCatPtr& C, const DGCatPtr& D, const std::vector<int>& on_objects,
                         const std::vector<std::vector<GradedMap>>& F1, int nmax = 3);
AInftyFunctor identity_functor(const DGCatPtr& C, int nmax = 3);
bool is_dg_functor(const AInftyFunctor& F);
// Typing of the object map and components.
std::vector<std::string> functor_failures(const AInftyFunctor& F);
// F_1(id) = id and F_n = 0 on words containing an identity at any position.
std::vector<std::string> functor_unit_failures(const AInftyFunctor& F);
CoherenceResult ainfty_functor_check(const AInftyFunctor& F, int nmax, Signs convention = Signs::Consistent);
// H ∘ F, summing H_k over all splittings of a word into k consecutive blocks.
AInftyFunctor compose_functors(const AInftyFunctor& H, const AInftyFunctor& F);

// Realized categories: tensoring every object with W. The target holds one object
// V_a ⊗ W_k for each object a of C and each k; functor k lands in block k.
DGCatPtr tensor_target(const DGCategory& C, const std::vector<CochainComplex>& Ws);
AInftyFunctor tensor_functor(const DGCatPtr& C, const DGCatPtr& target, const std::vector<CochainComplex>& Ws, int k,
                             int nmax = 3);

// ---- A∞ natural transformations ----------------------------------------------------

struct AInftyNat {
    AInftyFunctor F, G;  // λ: F ⇒ G
    int nmax = 1;
    std::vector<SVec> zero;        // λ_0(A) ∈ Hom^0(F A, G A)
    std::map<Word, SVec> comp;     // λ_n on basis words, n = 1..nmax

    SVec at(const Word& w) const;  // λ_n(w); for n = 0 use at_object
    SVec at_object(int a) const { return zero.at(a); }
    SVec apply(const Chain& x) const;
};

std::vector<std::string> nat_failures(const AInftyNat& L);
// The relation for n = 1..nmax, plus closedness of λ_0. Throws InputError unless F and G are DG functors.
CoherenceResult ainfty_nat_check(const AInftyNat& L, int nmax, Signs convention = Signs::Consistent);
AInftyNat identity_nat(const AInftyFunctor& F, int nmax = 3);
// (μ ∘ λ)_n = Σ_i μ_i ∘ λ_{n-i}; throws InputError unless λ ends where μ starts.
AInftyNat compose_nats(const AInftyNat& mu, const AInftyNat& lambda);
// (H ∘ λ)_n = Σ_{k=2}^{n+2} Σ_{i+j=k} H_{k-1} ∘ (G^{⊗(i-1)} ⊗ λ_{n+2-k} ⊗ F^{⊗(j-1)}).
AInftyNat whisker(const AInftyFunctor& H, const AInftyNat& lambda);
bool operator==(const AInftyNat& a, const AInftyNat& b);

// Two-sided inverse of x ∈ Hom^0(a, b), if any.
std::optional<SVec> inverse_morphism(const DGCategory& C, int a, int b, const SVec& x);
bool is_nat_iso(const AInftyNat& L);

// Random element of the solution space of the relations up to nmax.
AInftyNat random_nat(const AInftyFunctor& F, const AInftyFunctor& G, int nmax, std::mt19937_64& rng,
                     Signs convention = Signs::Consistent);

}  // namespace gha
