#include "gha/infloc/infloc.hpp"

#include "gha/core/matrix.hpp"

#include <algorithm>
#include <set>

namespace gha {

namespace {

TensorElem id_on(const AlgPtr& A, const GradedMap& f) { return TensorElem::of(A, A->one(), f); }

// Same coefficients, reinterpreted between spaces with matching leading indices.
TensorElem reembed(const TensorElem& x, const SpacePtr& src, const SpacePtr& tgt, int row_offset = 0) {
    TensorElem out(x.algebra(), src, tgt);
    for (const auto& [k, v] : x.terms()) out.add(k[0], k[1] + row_offset, k[2], v);
    return out;
}

std::string join(const std::vector<std::string>& xs, size_t limit) {
    std::string s;
    for (size_t i = 0; i < xs.size() && i < limit; ++i) s += (i ? "; " : "") + xs[i];
    if (xs.size() > limit) s += "; ...";
    return s;
}

void require_same_weil(const BasicObject& a, const BasicObject& b) {
    if (a.W.A != b.W.A) throw InputError("objects live over different Weil algebras");
}

}  // namespace

std::vector<GradedMap> extract_lie_derivatives(const WeilAlgebra& W, const SpacePtr& V, const TensorElem& alpha) {
    std::vector<GradedMap> L;
    for (int x = 0; x < W.n(); ++x) {
        int idx = W.A->alg->gen_index(x);
        GradedMap f(V, V, 0);
        for (const auto& [k, v] : alpha.terms())
            if (k[0] == idx) f.set(k[1], k[2], v);
        L.push_back(std::move(f));
    }
    return L;
}

std::vector<std::string> basicness_failures(const GDGAlgebra& A, const TensorElem& alpha,
                                            const std::vector<GradedMap>& L) {
    std::vector<std::string> out;
    const AlgPtr& R = A.alg;
    int n = static_cast<int>(A.contraction.size());
    if (static_cast<int>(L.size()) != n) throw InputError("basicness: wrong number of Lie derivatives");
    for (int x = 0; x < n; ++x) {
        TensorElem lhs = alpha.apply_algebra(A.contraction[x]);
        TensorElem one_L = reembed(id_on(R, L[x]), alpha.source(), alpha.target());
        if (lhs != one_L) out.push_back("[alpha, i_" + std::to_string(x + 1) + "] != 1 (x) L_" + std::to_string(x + 1));
        TensorElem inv = compose(alpha, one_L) - compose(one_L, alpha) - alpha.apply_algebra(A.lie_derivative[x]);
        if (!inv.is_zero())
            out.push_back("[alpha, L_" + std::to_string(x + 1) + " (x) 1 + 1 (x) L_" + std::to_string(x + 1) + "] != 0");
    }
    return out;
}

ObjectReport check_object(const WeilAlgebra& W, const CochainComplex& V, const TensorElem& alpha) {
    ObjectReport r;
    if (!V.square_zero()) r.failures.push_back("delta_V^2 != 0");
    r.mc_residual = mc_residual(alpha, W.A->d, V.d);
    r.mc_ok = r.mc_residual.is_zero() && V.square_zero();
    for (const auto& [p, comp] : r.mc_residual.by_partial_degree())
        r.failures.push_back("MC residual nonzero in Weil degree " + std::to_string(p) + " (" +
                             std::to_string(comp.terms().size()) + " terms)");
    auto L = extract_lie_derivatives(W, V.space, alpha);
    auto bf = basicness_failures(*W.A, alpha, L);
    r.basic_ok = bf.empty();
    r.failures.insert(r.failures.end(), bf.begin(), bf.end());
    return r;
}

BasicObject make_object(const WeilAlgebra& W, const CochainComplex& V, const TensorElem& alpha, std::string name) {
    if (alpha.algebra() != W.A->alg) throw InputError("make_object: alpha is not over this Weil algebra");
    if (alpha.source()->dim() != V.space->dim() || alpha.target()->dim() != V.space->dim())
        throw InputError("make_object: alpha does not act on V");
    auto deg = alpha.degree();
    if (deg && *deg != 1) throw InputError("make_object: alpha must have degree 1");
    BasicObject o;
    o.name = std::move(name);
    o.W = W;
    o.V = V;
    o.alpha = reembed(alpha, V.space, V.space);
    o.L = extract_lie_derivatives(W, V.space, o.alpha);
    o.report = check_object(W, V, o.alpha);
    if (!o.report.ok()) throw InputError("make_object: " + join(o.report.failures, 6));
    return o;
}

BasicObject trivial_object(const WeilAlgebra& W, int degree) {
    auto sp = std::make_shared<GradedSpace>();
    sp->add("1", degree);
    CochainComplex V(sp, GradedMap(sp, sp, 1));
    return make_object(W, V, TensorElem(W.A->alg, sp, sp), "trivial");
}

BasicObject gauss_manin(const WeilAlgebra& W) {
    if (W.s < 2) throw InputError("gauss_manin: truncation must be at least 2");
    CEAlgebra ce = ce_algebra(W.g);
    CochainComplex V(ce.A->alg->space(), ce.A->d);
    const AlgPtr& R = W.A->alg;
    TensorElem alpha(R, V.space, V.space);
    for (int a = 0; a < W.n(); ++a) {
        alpha = alpha + TensorElem::of(R, W.t(a), ce.A->lie_derivative[a]);
        alpha = alpha - TensorElem::of(R, W.w(a), ce.A->contraction[a]);
    }
    return make_object(W, V, alpha, "gauss_manin(" + W.g.name() + ")");
}

BasicObject gauss_manin(const LieAlgebra& g, int s) {
    if (s < 2) throw InputError("gauss_manin: truncation must be at least 2");
    return gauss_manin(weil_algebra(g, s));
}

TensorElem zero_morphism(const BasicObject& src, const BasicObject& tgt) {
    require_same_weil(src, tgt);
    return TensorElem(src.W.A->alg, src.space(), tgt.space());
}

TensorElem identity_morphism(const BasicObject& V) { return TensorElem::identity(V.W.A->alg, V.space()); }

TensorElem twisted_differential(const GradedMap& dA, const CochainComplex& V, const TensorElem& alphaV,
                                const CochainComplex& Vp, const TensorElem& alphaVp, const TensorElem& phi) {
    auto deg = phi.degree();
    if (!deg) return phi;
    TensorElem out = tensor_d(phi, dA, V.d, Vp.d);
    out = out + reembed(compose(alphaVp, phi), phi.source(), phi.target());
    TensorElem right = reembed(compose(phi, alphaV), phi.source(), phi.target());
    return (*deg % 2 == 0) ? out - right : out + right;
}

TensorElem hom_differential(const BasicObject& src, const BasicObject& tgt, const TensorElem& phi) {
    require_same_weil(src, tgt);
    return twisted_differential(src.W.A->d, src.V, src.alpha, tgt.V, tgt.alpha, phi);
}

std::vector<std::string> morphism_basic_failures(const BasicObject& src, const BasicObject& tgt,
                                                 const TensorElem& phi) {
    require_same_weil(src, tgt);
    std::vector<std::string> out;
    const GDGAlgebra& A = *src.W.A;
    const AlgPtr& R = A.alg;
    for (int x = 0; x < src.W.n(); ++x) {
        if (!phi.apply_algebra(A.contraction[x]).is_zero()) out.push_back("i_" + std::to_string(x + 1));
        TensorElem lt = phi.apply_algebra(A.lie_derivative[x]);
        lt = lt + reembed(compose(id_on(R, tgt.L[x]), phi), phi.source(), phi.target());
        lt = lt - reembed(compose(phi, id_on(R, src.L[x])), phi.source(), phi.target());
        if (!lt.is_zero()) out.push_back("L_" + std::to_string(x + 1));
    }
    return out;
}

bool is_basic(const BasicObject& src, const BasicObject& tgt, const TensorElem& phi) {
    return morphism_basic_failures(src, tgt, phi).empty();
}

TensorElem compose_morphisms(const TensorElem& psi, const TensorElem& phi) {
    if (psi.source()->dim() != phi.target()->dim() || psi.source()->degrees() != phi.target()->degrees())
        throw InputError("compose: morphisms are not composable");
    return compose(psi, phi);
}

std::vector<TensorElem> basic_morphisms(const BasicObject& src, const BasicObject& tgt, int k) {
    require_same_weil(src, tgt);
    const GDGAlgebra& A = *src.W.A;
    const GCAlgebra& R = *A.alg;
    const int n = src.W.n();
    TensorElem proto(A.alg, src.space(), tgt.space());
    const long long F = proto.flat_dim();

    std::map<std::pair<int, int>, std::vector<int>> groups;  // (odd count, weight) -> monomials
    for (int i = 0; i < R.dim(); ++i) {
        int odd = 0;
        const auto& e = R.exponents(i);
        for (int g = 0; g < R.num_generators(); ++g)
            if (R.generator(g).degree % 2 != 0) odd += e[g];
        groups[{odd, R.weight(i)}].push_back(i);
    }
    std::map<int, std::vector<std::pair<int, int>>> pairs;
    for (int r = 0; r < tgt.dim(); ++r)
        for (int c = 0; c < src.dim(); ++c) pairs[proto.hom_degree(r, c)].emplace_back(r, c);

    std::vector<std::vector<SVec>> src_rows;
    for (const auto& L : src.L) src_rows.push_back(L.rows());

    std::vector<TensorElem> out;
    for (const auto& [key, monos] : groups) {
        int wdeg = key.first + 2 * key.second;
        auto pit = pairs.find(k - wdeg);
        if (pit == pairs.end()) continue;
        std::vector<TensorElem::Key> unknowns;
        for (int a : monos)
            for (auto [r, c] : pit->second) unknowns.push_back({a, r, c});
        std::map<long long, SVec> rows;
        auto put = [&](int op, int a, int r, int c, int j, const Q& v) {
            add_entry(rows[op * F + proto.flat_index(a, r, c)], j, v);
        };
        for (int j = 0; j < static_cast<int>(unknowns.size()); ++j) {
            auto [a, r, c] = unknowns[j];
            for (int x = 0; x < n; ++x) {
                for (const auto& [b, v] : A.contraction[x].column(a)) put(x, b, r, c, j, v);
                for (const auto& [b, v] : A.lie_derivative[x].column(a)) put(n + x, b, r, c, j, v);
                for (const auto& [rp, v] : tgt.L[x].column(r)) put(n + x, a, rp, c, j, v);
                for (const auto& [cp, v] : src_rows[x][c]) put(n + x, a, r, cp, j, -v);
            }
        }
        std::vector<SVec> row_list;
        row_list.reserve(rows.size());
        for (auto& kv : rows)
            if (!kv.second.empty()) row_list.push_back(std::move(kv.second));
        for (const auto& kv : nullspace(row_list, static_cast<int>(unknowns.size()))) {
            TensorElem phi = proto;
            for (const auto& [j, v] : kv) phi.add(unknowns[j], v);
            out.push_back(std::move(phi));
        }
    }
    return out;
}

TensorElem random_basic_morphism(const BasicObject& src, const BasicObject& tgt, int k, std::mt19937_64& rng) {
    TensorElem phi = zero_morphism(src, tgt);
    for (const auto& b : basic_morphisms(src, tgt, k)) phi = phi + b.scaled(random_small_rational(rng));
    return phi;
}

std::pair<int, int> safe_window(const BasicObject& src, const BasicObject& tgt) {
    int qmin = 0;
    bool first = true;
    for (int r = 0; r < tgt.dim(); ++r)
        for (int c = 0; c < src.dim(); ++c) {
            int q = tgt.space()->degree(r) - src.space()->degree(c);
            if (first || q < qmin) qmin = q;
            first = false;
        }
    return {qmin, 2 * src.W.s + qmin};
}

BasicHomComplex hom_complex(const BasicObject& src, const BasicObject& tgt) {
    auto [lo, hi] = safe_window(src, tgt);
    return hom_complex(src, tgt, lo, hi);
}

BasicHomComplex hom_complex(const BasicObject& src, const BasicObject& tgt, int lo, int hi) {
    auto win = safe_window(src, tgt);
    if (lo < win.first || hi > win.second)
        throw InputError("hom_complex: window [" + std::to_string(lo) + "," + std::to_string(hi) +
                         "] leaves the safe range [" + std::to_string(win.first) + "," +
                         std::to_string(win.second) + "]");
    BasicHomComplex hc;
    hc.source = src;
    hc.target = tgt;
    hc.lo = lo;
    hc.hi = hi;
    const GCAlgebra& R = *src.W.A->alg;
    std::vector<int> degs;
    std::vector<SVec> flat;
    for (int k = lo - 1; k <= hi + 1; ++k)
        for (auto& phi : basic_morphisms(src, tgt, k)) {
            hc.weil_degree.push_back(R.degree(phi.terms().begin()->first[0]));
            degs.push_back(k);
            flat.push_back(phi.flatten());
            hc.basis.push_back(std::move(phi));
        }

    auto space = std::make_shared<GradedSpace>();
    for (size_t i = 0; i < hc.basis.size(); ++i) space->add("b" + std::to_string(i), degs[i]);
    SpanCoordinates coords(flat);
    GradedMap d(space, space, 1);
    hc.square_zero = true;
    hc.basic_closed = true;
    for (size_t i = 0; i < hc.basis.size(); ++i) {
        TensorElem dphi = hom_differential(src, tgt, hc.basis[i]);
        if (!hom_differential(src, tgt, dphi).is_zero()) hc.square_zero = false;
        if (!is_basic(src, tgt, dphi)) hc.basic_closed = false;
        if (degs[i] == hi + 1) continue;
        auto c = coords.coords(dphi.flatten());
        if (!c) {
            hc.basic_closed = false;
            continue;
        }
        d.column(static_cast<int>(i)) = std::move(*c);
    }
    hc.sub.complex = CochainComplex(space, d);
    hc.sub.basis = std::move(flat);
    hc.sub.coords = std::move(coords);
    hc.sub.closed = hc.basic_closed;
    if (!hc.square_zero) throw StructuralError("hom_complex: differential does not square to zero");
    Cohomology h = cohomology(hc.sub.complex);
    for (int k = lo; k <= hi; ++k) hc.cohomology[k] = h.dim(k);
    return hc;
}

std::vector<TensorElem> hom_cocycles(const BasicHomComplex& hc, int k) {
    if (k < hc.lo - 1 || k > hc.hi) throw InputError("hom_cocycles: degree outside the computed range");
    const GradedSpace& sp = *hc.sub.complex.space;
    std::vector<int> cols = sp.indices_of_degree(k);
    std::map<int, SVec> rows;
    for (int j = 0; j < static_cast<int>(cols.size()); ++j)
        for (const auto& [t, v] : hc.sub.complex.d.column(cols[j])) rows[t].emplace(j, v);
    std::vector<SVec> row_list;
    for (auto& kv : rows) row_list.push_back(std::move(kv.second));
    std::vector<TensorElem> out;
    for (const auto& z : nullspace(row_list, static_cast<int>(cols.size()))) {
        TensorElem phi = zero_morphism(hc.source, hc.target);
        for (const auto& [j, v] : z) phi = phi + hc.basis[cols[j]].scaled(v);
        out.push_back(std::move(phi));
    }
    return out;
}

SpectralPages hom_spectral(const BasicHomComplex& hc, int r_max) {
    FilteredComplex fc{hc.sub.complex, hc.weil_degree};
    return spectral_pages(fc, r_max);
}

TensorElem line_to_extension(const TensorElem& x, int l, const SpacePtr& ext) {
    int vdim = x.source()->dim();
    if (x.target()->dim() != 1 || ext->dim() != vdim + 1)
        throw InputError("line_to_extension: expected a map into a line");
    TensorElem out(x.algebra(), ext, ext);
    for (const auto& [k, v] : x.terms()) {
        int f = x.hom_degree(k[1], k[2]);
        out.add(k[0], vdim, k[2], sign_of_parity(static_cast<long>(1 - l) * f) * v);
    }
    return out;
}

namespace {

CochainComplex extended_complex(const BasicObject& V, int l) {
    auto sp = std::make_shared<GradedSpace>();
    for (int i = 0; i < V.dim(); ++i) sp->add(V.space()->label(i), V.space()->degree(i));
    std::string lab = "line";
    while (sp->has(lab)) lab += "'";
    sp->add(lab, 1 - l);
    GradedMap d(sp, sp, 1);
    for (int j = 0; j < V.dim(); ++j) d.column(j) = V.V.d.column(j);
    return CochainComplex(sp, d);
}

void check_line_morphism(const BasicObject& V, const TensorElem& x, const char* what) {
    if (x.algebra() != V.W.A->alg || x.source()->dim() != V.dim() || x.target()->dim() != 1 ||
        x.target()->degree(0) != 0)
        throw InputError(std::string("extension: ") + what + " must lie in Hom(V, trivial)");
}

}  // namespace

BasicObject extension(const BasicObject& V, const TensorElem& gamma, int l) {
    check_line_morphism(V, gamma, "gamma");
    auto deg = gamma.degree();
    if (deg && *deg != l) throw InputError("extension: gamma has the wrong degree");
    BasicObject triv = trivial_object(V.W);
    TensorElem g = reembed(gamma, V.space(), triv.space());
    if (!hom_differential(V, triv, g).is_zero()) throw InputError("extension: gamma is not closed");
    if (!is_basic(V, triv, g)) throw InputError("extension: gamma is not basic");
    CochainComplex E = extended_complex(V, l);
    TensorElem alpha = reembed(V.alpha, E.space, E.space) + line_to_extension(gamma, l, E.space);
    return make_object(V.W, E, alpha, V.name + " ext");
}

GaugeCheck extension_gauge_check(const BasicObject& V, const TensorElem& gamma, const TensorElem& eta, int l) {
    check_line_morphism(V, eta, "eta");
    auto deg = eta.degree();
    if (deg && *deg != l - 1) throw InputError("extension: eta must have degree l-1");
    BasicObject triv = trivial_object(V.W);
    TensorElem e = reembed(eta, V.space(), triv.space());
    TensorElem d_eta = hom_differential(V, triv, e);
    GaugeCheck gc;
    gc.from = extension(V, gamma, l);
    gc.to = extension(V, reembed(gamma, V.space(), triv.space()) + d_eta, l);
    TensorElem shifted = reembed(line_to_extension(e, l, gc.to.space()), gc.from.space(), gc.to.space());
    TensorElem id(V.W.A->alg, gc.from.space(), gc.to.space());
    for (int i = 0; i < gc.from.dim(); ++i) id.add(V.W.A->alg->unit(), i, i, Q(1));
    gc.map = id - shifted;
    gc.inverse = reembed(id + shifted, gc.to.space(), gc.from.space());
    gc.intertwines = hom_differential(gc.from, gc.to, gc.map).is_zero();
    TensorElem id_from = identity_morphism(gc.from), id_to = identity_morphism(gc.to);
    gc.inverse_ok = reembed(compose(gc.inverse, gc.map), gc.from.space(), gc.from.space()) == id_from &&
                    reembed(compose(gc.map, gc.inverse), gc.to.space(), gc.to.space()) == id_to;
    gc.basic = is_basic(gc.from, gc.to, gc.map);
    return gc;
}

CWObject ChernWeilFunctor::on_object(const BasicObject& V) const {
    if (V.W.s != c.W.s || V.W.n() != c.W.n() || V.alpha.algebra()->dim() != c.map.source()->dim())
        throw InputError("cw_functor: object and connection use different Weil algebras");
    CWObject o;
    o.A = c.target;
    o.V = V.V;
    o.alpha = V.alpha.apply_algebra(c.map, c.target->alg);
    o.L = V.L;
    o.mc_ok = mc_residual(o.alpha, c.target->d, V.V.d).is_zero();
    if (!o.mc_ok) o.failures.push_back("MC residual nonzero");
    auto bf = basicness_failures(*c.target, o.alpha, o.L);
    o.basic_ok = bf.empty();
    o.failures.insert(o.failures.end(), bf.begin(), bf.end());
    return o;
}

TensorElem ChernWeilFunctor::on_morphism(const TensorElem& phi) const {
    if (phi.algebra()->dim() != c.map.source()->dim())
        throw InputError("cw_functor: morphism over a different Weil algebra");
    return phi.apply_algebra(c.map, c.target->alg);
}

TensorElem ChernWeilFunctor::differential(const CWObject& src, const CWObject& tgt, const TensorElem& phi) const {
    return twisted_differential(c.target->d, src.V, src.alpha, tgt.V, tgt.alpha, phi);
}

ChernWeilFunctor cw_functor(const AlgebraicConnection& theta, int s) {
    ChernWeilFunctor F{characteristic_hom(theta, s)};
    return F;
}

}  // namespace gha
