#include "gha/core/complex.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace gha {

CochainComplex::CochainComplex(SpacePtr s, GradedMap diff) : space(std::move(s)), d(std::move(diff)) {
    if (d.degree() != 1) throw InputError("differential must have degree 1");
    if (d.source()->dim() != space->dim() || d.target()->dim() != space->dim())
        throw InputError("differential does not act on the complex");
}

namespace {

// Kernel of d restricted to the columns `cols`, keeping only target rows accepted by `row_ok`.
template <class RowPred>
std::vector<SVec> restricted_kernel(const GradedMap& d, const std::vector<int>& cols, RowPred row_ok) {
    std::map<int, SVec> rows;
    for (int j = 0; j < static_cast<int>(cols.size()); ++j)
        for (const auto& [t, v] : d.column(cols[j]))
            if (row_ok(t)) rows[t].emplace(j, v);
    std::vector<SVec> row_list;
    row_list.reserve(rows.size());
    for (auto& kv : rows) row_list.push_back(std::move(kv.second));
    std::vector<SVec> local = nullspace(row_list, static_cast<int>(cols.size()));
    std::vector<SVec> out;
    out.reserve(local.size());
    for (const auto& k : local) {
        SVec g;
        for (const auto& [j, v] : k) g.emplace(cols[j], v);
        out.push_back(std::move(g));
    }
    return out;
}

std::set<int> degree_set(const GradedSpace& s) {
    std::set<int> ds(s.degrees().begin(), s.degrees().end());
    return ds;
}

}  // namespace

Cohomology cohomology(const CochainComplex& c) {
    if (!c.square_zero()) throw StructuralError("cohomology: d∘d != 0");
    Cohomology h;
    const GradedSpace& s = *c.space;
    for (int k : degree_set(s)) {
        std::vector<int> idx = s.indices_of_degree(k);
        std::vector<SVec> ker = restricted_kernel(c.d, idx, [](int) { return true; });
        Echelon image;
        for (int i : s.indices_of_degree(k - 1)) image.add(c.d.column(i));
        Echelon combined = image;
        std::vector<SVec> reps;
        for (const auto& z : ker) {
            SVec r = image.reduce(z);
            if (combined.add(r)) reps.push_back(std::move(r));
        }
        h.dims[k] = static_cast<int>(reps.size());
        h.representatives[k] = std::move(reps);
    }
    return h;
}

std::vector<Q> class_coordinates(const CochainComplex& c, const Cohomology& h, int degree,
                                 const SVec& z) {
    if (!c.d.apply(z).empty()) throw InputError("class_coordinates: not a cocycle");
    std::vector<SVec> cols;
    auto it = h.representatives.find(degree);
    size_t nreps = (it == h.representatives.end()) ? 0 : it->second.size();
    if (nreps) cols = it->second;
    for (int i : c.space->indices_of_degree(degree - 1)) cols.push_back(c.d.column(i));
    auto x = solve(cols, z, c.space->dim());
    if (!x) throw StructuralError("class_coordinates: cocycle outside span of representatives");
    std::vector<Q> out(nreps);
    for (size_t i = 0; i < nreps; ++i) out[i] = entry(*x, static_cast<int>(i));
    return out;
}

SpectralPages spectral_pages(const FilteredComplex& fc, int r_max) {
    const CochainComplex& c = fc.complex;
    const GradedSpace& s = *c.space;
    if (static_cast<int>(fc.level.size()) != s.dim())
        throw InputError("spectral_pages: filtration size mismatch");
    for (int j = 0; j < s.dim(); ++j)
        for (const auto& [t, v] : c.d.column(j))
            if (fc.level[t] < fc.level[j])
                throw StructuralError("spectral_pages: differential lowers filtration level");

    SpectralPages out;
    Cohomology h = cohomology(c);
    out.total = h.dims;
    if (s.dim() == 0) {
        out.pages.resize(r_max + 1);
        out.ranks.resize(r_max + 1);
        return out;
    }
    int pmin = *std::min_element(fc.level.begin(), fc.level.end());
    int pmax = *std::max_element(fc.level.begin(), fc.level.end());
    std::set<int> degs = degree_set(s);

    std::map<std::tuple<int, int, int>, std::vector<SVec>> zcache;
    // Z_r^{p,n} = {x in F^p C^n : dx in F^{p+r}}
    auto Z = [&](int r, int p, int n) -> const std::vector<SVec>& {
        int colp = std::clamp(p, pmin, pmax + 1);
        int bound = std::clamp(p + r, colp, pmax + 1);
        auto key = std::make_tuple(colp, bound, n);
        auto it = zcache.find(key);
        if (it != zcache.end()) return it->second;
        std::vector<int> cols;
        for (int i : s.indices_of_degree(n))
            if (fc.level[i] >= colp) cols.push_back(i);
        std::vector<SVec> z;
        if (bound <= colp) {
            for (int i : cols) z.push_back(SVec{{i, Q(1)}});
        } else {
            z = restricted_kernel(c.d, cols, [&](int t) { return fc.level[t] < bound; });
        }
        return zcache.emplace(key, std::move(z)).first->second;
    };
    auto dZ = [&](int r, int p, int n) {
        std::vector<SVec> out;
        for (const auto& v : Z(r, p, n)) out.push_back(c.d.apply(v));
        return out;
    };
    auto dim_sum = [](std::initializer_list<const std::vector<SVec>*> parts) {
        Echelon e;
        for (auto* part : parts)
            for (const auto& v : *part)
                if (!v.empty()) e.add(v);
        return e.rank();
    };

    for (int r = 0; r <= r_max; ++r) {
        std::map<std::pair<int, int>, int> page, ranks;
        for (int n : degs)
            for (int p = pmin; p <= pmax; ++p) {
                const auto& zr = Z(r, p, n);
                const auto& zlow = Z(r - 1, p + 1, n);
                auto bnd = dZ(r - 1, p - r + 1, n - 1);
                int denom = dim_sum({&zlow, &bnd});
                int e = static_cast<int>(zr.size()) - denom;
                const auto& znext = Z(r + 1, p, n);
                int ker = dim_sum({&znext, &zlow, &bnd}) - denom;
                if (e != 0) page[{p, n - p}] = e;
                if (e - ker != 0) ranks[{p, n - p}] = e - ker;
            }
        out.pages.push_back(std::move(page));
        out.ranks.push_back(std::move(ranks));
    }
    return out;
}

Subcomplex restrict_to_span(const GradedMap& d, const std::vector<SVec>& basis,
                            const std::vector<int>& degrees) {
    Subcomplex sc;
    auto space = std::make_shared<GradedSpace>();
    for (size_t k = 0; k < basis.size(); ++k) space->add("b" + std::to_string(k), degrees[k]);
    for (const auto& b : basis)
        if (b.empty()) throw InputError("restrict_to_span: zero basis vector");
    SpanCoordinates coord(basis);
    GradedMap nd(space, space, 1);
    for (size_t k = 0; k < basis.size(); ++k) {
        auto c = coord.coords(d.apply(basis[k]));
        if (!c) {
            sc.closed = false;
            continue;
        }
        nd.column(static_cast<int>(k)) = std::move(*c);
    }
    sc.complex = CochainComplex(space, nd);
    sc.basis = basis;
    sc.coords = std::move(coord);
    return sc;
}

}  // namespace gha
