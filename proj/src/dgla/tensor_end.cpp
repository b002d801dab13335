#include "gha/dgla/tensor_end.hpp"

namespace gha {

TensorElem::TensorElem(AlgPtr A, SpacePtr src, SpacePtr tgt)
    : A_(std::move(A)), src_(std::move(src)), tgt_(std::move(tgt)) {}

TensorElem TensorElem::of(AlgPtr A, const SVec& a, const GradedMap& f) {
    TensorElem x(A, f.source(), f.target());
    for (const auto& [i, av] : a)
        for (int c = 0; c < f.source()->dim(); ++c)
            for (const auto& [r, fv] : f.column(c)) x.add(i, r, c, av * fv);
    return x;
}

TensorElem TensorElem::identity(AlgPtr A, SpacePtr V) {
    return of(A, A->one(), GradedMap::identity(V));
}

void TensorElem::add(int a, int r, int c, const Q& v) {
    if (v == 0) return;
    Key k{a, r, c};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, v);
        return;
    }
    it->second += v;
    if (it->second == 0) terms_.erase(it);
}

Q TensorElem::at(int a, int r, int c) const {
    auto it = terms_.find(Key{a, r, c});
    return it == terms_.end() ? Q(0) : it->second;
}

std::optional<int> TensorElem::degree() const {
    if (terms_.empty()) return std::nullopt;
    int k = term_degree(terms_.begin()->first);
    for (const auto& kv : terms_)
        if (term_degree(kv.first) != k) throw InputError("tensor element is not homogeneous");
    return k;
}

TensorElem TensorElem::operator+(const TensorElem& o) const {
    TensorElem x = *this;
    for (const auto& [k, v] : o.terms_) x.add(k, v);
    return x;
}

TensorElem TensorElem::operator-(const TensorElem& o) const {
    TensorElem x = *this;
    for (const auto& [k, v] : o.terms_) x.add(k, -v);
    return x;
}

TensorElem TensorElem::scaled(const Q& s) const {
    TensorElem x(A_, src_, tgt_);
    if (s == 0) return x;
    for (const auto& [k, v] : terms_) x.terms_.emplace(k, v * s);
    return x;
}

TensorElem TensorElem::partial(int p) const {
    TensorElem x(A_, src_, tgt_);
    for (const auto& [k, v] : terms_)
        if (A_->degree(k[0]) == p) x.terms_.emplace(k, v);
    return x;
}

std::map<int, TensorElem> TensorElem::by_partial_degree() const {
    std::map<int, TensorElem> out;
    for (const auto& [k, v] : terms_) {
        int p = A_->degree(k[0]);
        auto it = out.find(p);
        if (it == out.end()) it = out.emplace(p, TensorElem(A_, src_, tgt_)).first;
        it->second.add(k, v);
    }
    return out;
}

GradedMap TensorElem::coefficient(int a, int degree) const {
    GradedMap f(src_, tgt_, degree);
    for (const auto& [k, v] : terms_)
        if (k[0] == a) f.set(k[1], k[2], v);
    return f;
}

TensorElem TensorElem::apply_algebra(const GradedMap& P, AlgPtr target) const {
    TensorElem x(target, src_, tgt_);
    for (const auto& [k, v] : terms_)
        for (const auto& [b, pv] : P.column(k[0])) x.add(b, k[1], k[2], v * pv);
    return x;
}

TensorElem::Key TensorElem::unflatten(int i) const {
    int n = src_->dim(), m = tgt_->dim();
    return Key{i / (m * n), (i / n) % m, i % n};
}

SVec TensorElem::flatten() const {
    SVec v;
    for (const auto& [k, q] : terms_) v.emplace(flat_index(k[0], k[1], k[2]), q);
    return v;
}

TensorElem TensorElem::unflatten(AlgPtr A, SpacePtr src, SpacePtr tgt, const SVec& v) {
    TensorElem x(std::move(A), std::move(src), std::move(tgt));
    for (const auto& [i, q] : v) x.add(x.unflatten(i), q);
    return x;
}

TensorElem compose(const TensorElem& x, const TensorElem& y) {
    if (x.algebra() != y.algebra()) throw InputError("compose: different coefficient algebras");
    if (x.source()->dim() != y.target()->dim()) throw InputError("compose: spaces do not match");
    const GCAlgebra& R = *x.algebra();
    TensorElem out(x.algebra(), y.source(), x.target());
    // index y's terms by row
    std::map<int, std::vector<std::pair<TensorElem::Key, Q>>> by_row;
    for (const auto& kv : y.terms()) by_row[kv.first[1]].push_back(kv);
    for (const auto& [kx, vx] : x.terms()) {
        auto it = by_row.find(kx[2]);
        if (it == by_row.end()) continue;
        int fdeg = x.hom_degree(kx[1], kx[2]);
        for (const auto& [ky, vy] : it->second) {
            auto [ab, s] = R.mul_basis(kx[0], ky[0]);
            if (ab < 0) continue;
            int sg = s * sign_of_parity(static_cast<long>(fdeg) * R.degree(ky[0]));
            out.add(ab, kx[1], ky[2], sg * vx * vy);
        }
    }
    return out;
}

TensorElem tensor_d(const TensorElem& x, const GradedMap& dA, const GradedMap& dV, const GradedMap& dW) {
    const GCAlgebra& R = *x.algebra();
    TensorElem out(x.algebra(), x.source(), x.target());
    for (const auto& [k, v] : x.terms()) {
        int a = k[0], r = k[1], c = k[2];
        for (const auto& [b, dv] : dA.column(a)) out.add(b, r, c, v * dv);
        int sa = sign_of_parity(R.degree(a));
        int f = x.hom_degree(r, c);
        for (const auto& [t, dv] : dW.column(r)) out.add(a, t, c, sa * v * dv);
        // (E_rc dV) = Σ_j dV(c, j) E_rj
        for (int j = 0; j < x.source()->dim(); ++j) {
            Q e = dV.at(c, j);
            if (e != 0) out.add(a, r, j, -sa * sign_of_parity(f) * v * e);
        }
    }
    return out;
}

TensorElem mc_residual(const TensorElem& x, const GradedMap& dA, const GradedMap& dV) {
    auto deg = x.degree();
    if (deg && *deg != 1) throw InputError("mc_residual: element must have degree 1");
    return tensor_d(x, dA, dV, dV) + compose(x, x);
}

std::map<int, TensorElem> mc_residual_components(const TensorElem& x, const GradedMap& dA, const GradedMap& dV) {
    return mc_residual(x, dA, dV).by_partial_degree();
}

}  // namespace gha
