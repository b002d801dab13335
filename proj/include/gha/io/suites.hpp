#pragma once

#include "gha/io/report.hpp"

#include <cstdint>

namespace gha {

// Lie algebra validity, DGLA checks on g and Tg, CE and Weil Cartan identities,
// the α_CE object and its basicness.
Report verify_suite(const LieAlgebra& g, int s);

// dim (S^k g*)_inv against dim (Wg)_bas in degree 2k, for k = 0..kmax.
Report invariants_suite(const LieAlgebra& g, int kmax);

Report chern_weil_suite(const AlgebraicConnection& theta, const Json& polynomial);

Report rep_verify_suite(const SimplicialSet& K, const RepUpToHomotopy& R, int trials = 8, std::uint64_t seed = 1);

Report spectral_suite(const FilteredComplex& fc, int pages);
// {kind: hom, lie, s, source, target} with objects trivial or gauss_manin.
Report spectral_input_suite(const Json& input, int pages);

Report mc_check_suite(const DGLieAlgebra& L, const SVec& x);
Report ce_object_suite(const LieAlgebra& g, int s);

Report gauss_manin_suite(const LieAlgebra& g, int s);

Report ainfty_suite(const DGCatPtr& C, int max_length, int trials = 4, std::uint64_t seed = 1);

}  // namespace gha
