#include "gha/dgla/gc_algebra.hpp"

#include <algorithm>
#include <functional>

namespace gha {

std::uint64_t GCAlgebra::key(const std::vector<int>& exps) {
    std::uint64_t k = 0;
    for (int e : exps) k = (k << 5) | static_cast<std::uint64_t>(e);
    return k;
}

GCAlgebra::GCAlgebra(std::vector<Generator> gens, int max_weight)
    : gens_(std::move(gens)), max_weight_(max_weight) {
    int n = num_generators();
    if (n > 12) throw InputError("GCAlgebra: at most 12 generators");
    for (const auto& g : gens_) {
        if (g.degree % 2 == 0 && g.weight <= 0)
            throw InputError("GCAlgebra: even generator " + g.name + " needs positive weight");
        if (g.weight < 0) throw InputError("GCAlgebra: negative weight");
    }

    std::vector<int> cur(n, 0);
    std::vector<std::vector<int>> all;
    std::function<void(int, int)> rec = [&](int g, int w) {
        if (g == n) {
            all.push_back(cur);
            return;
        }
        int cap = (gens_[g].degree % 2 != 0) ? 1 : 31;
        for (int e = 0; e <= cap; ++e) {
            int nw = w + e * gens_[g].weight;
            if (nw > max_weight_) break;
            cur[g] = e;
            rec(g + 1, nw);
        }
        cur[g] = 0;
    };
    rec(0, 0);

    auto deg_of = [&](const std::vector<int>& e) {
        int d = 0;
        for (int g = 0; g < n; ++g) d += e[g] * gens_[g].degree;
        return d;
    };
    std::stable_sort(all.begin(), all.end(), [&](const auto& a, const auto& b) {
        int da = deg_of(a), db = deg_of(b);
        if (da != db) return da < db;
        return a > b;
    });

    auto sp = std::make_shared<GradedSpace>();
    for (const auto& e : all) {
        std::string label;
        int w = 0;
        for (int g = 0; g < n; ++g) {
            w += e[g] * gens_[g].weight;
            if (e[g] == 0) continue;
            if (!label.empty()) label += "*";
            label += gens_[g].name;
            if (e[g] > 1) label += "^" + std::to_string(e[g]);
        }
        if (label.empty()) label = "1";
        lookup_.emplace(key(e), sp->dim());
        sp->add(label, deg_of(e));
        exps_.push_back(e);
        weights_.push_back(w);
    }
    space_ = sp;
    unit_ = index_of(std::vector<int>(n, 0));

    int D = dim();
    mul_idx_.assign(static_cast<size_t>(D) * D, -1);
    mul_sign_.assign(static_cast<size_t>(D) * D, 0);
    std::vector<int> sum(n);
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j) {
            if (weights_[i] + weights_[j] > max_weight_) continue;
            const auto& a = exps_[i];
            const auto& b = exps_[j];
            bool dead = false;
            int inversions = 0;
            for (int g = 0; g < n; ++g) {
                sum[g] = a[g] + b[g];
                if (gens_[g].degree % 2 != 0) {
                    if (sum[g] > 1) dead = true;
                    // odd letters of b pass odd letters of a with larger index
                    if (b[g])
                        for (int h = g + 1; h < n; ++h)
                            if (a[h] && gens_[h].degree % 2 != 0) ++inversions;
                }
            }
            if (dead) continue;
            size_t k = static_cast<size_t>(i) * D + j;
            mul_idx_[k] = index_of(sum);
            mul_sign_[k] = (inversions % 2) ? -1 : 1;
        }
}

int GCAlgebra::index_of(const std::vector<int>& exps) const {
    for (int g = 0; g < num_generators(); ++g)
        if (exps[g] < 0 || (exps[g] > 1 && gens_[g].degree % 2 != 0)) return -1;
    auto it = lookup_.find(key(exps));
    return it == lookup_.end() ? -1 : it->second;
}

int GCAlgebra::gen_index(int g) const {
    std::vector<int> e(num_generators(), 0);
    e[g] = 1;
    return index_of(e);
}

SVec GCAlgebra::gen(int g) const {
    int i = gen_index(g);
    return i < 0 ? SVec{} : SVec{{i, Q(1)}};
}

SVec GCAlgebra::mul(const SVec& x, const SVec& y) const {
    SVec out;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) {
            auto [k, s] = mul_basis(i, j);
            if (k < 0) continue;
            add_entry(out, k, s > 0 ? Q(a * b) : Q(-a * b));
        }
    return out;
}

GradedMap GCAlgebra::derivation(const std::vector<SVec>& images, int degree) const {
    int n = num_generators();
    if (static_cast<int>(images.size()) != n) throw InputError("derivation: one image per generator");
    GradedMap m(space_, space_, degree);
    for (int i = 0; i < dim(); ++i) {
        const auto& e = exps_[i];
        int prefix_deg = 0;
        for (int g = 0; g < n; ++g) {
            if (e[g] > 0) {
                std::vector<int> left(n, 0), right(n, 0);
                for (int h = 0; h < g; ++h) left[h] = e[h];
                left[g] = e[g] - 1;
                for (int h = g + 1; h < n; ++h) right[h] = e[h];
                int li = index_of(left), ri = index_of(right);
                SVec term = mul(mul(SVec{{li, Q(e[g])}}, images[g]), SVec{{ri, Q(1)}});
                if ((static_cast<long>(degree) * prefix_deg) % 2 != 0) term = scaled(term, -1);
                axpy(m.column(i), 1, term);
            }
            prefix_deg += e[g] * gens_[g].degree;
        }
    }
    return m;
}

GradedMap GCAlgebra::left_mult(const SVec& a, int degree) const {
    GradedMap m(space_, space_, degree);
    for (int i = 0; i < dim(); ++i) m.column(i) = mul(a, SVec{{i, Q(1)}});
    return m;
}

GradedMap GCAlgebra::homomorphism(const GCAlgebra& target, const std::vector<SVec>& images) const {
    int n = num_generators();
    if (static_cast<int>(images.size()) != n) throw InputError("homomorphism: one image per generator");
    GradedMap m(space_, target.space(), 0);
    for (int i = 0; i < dim(); ++i) {
        SVec v = target.one();
        for (int g = 0; g < n; ++g)
            for (int k = 0; k < exps_[i][g]; ++k) v = target.mul(v, images[g]);
        m.column(i) = v;
    }
    return m;
}

GDGAlgebra make_gdg(AlgPtr alg, std::vector<SVec> d_gen, std::vector<std::vector<SVec>> contraction_gen,
                    std::vector<std::vector<SVec>> lie_gen) {
    GDGAlgebra A;
    A.d = alg->derivation(d_gen, 1);
    for (const auto& imgs : contraction_gen) A.contraction.push_back(alg->derivation(imgs, -1));
    for (const auto& imgs : lie_gen) A.lie_derivative.push_back(alg->derivation(imgs, 0));
    A.alg = std::move(alg);
    A.d_gen = std::move(d_gen);
    A.contraction_gen = std::move(contraction_gen);
    A.lie_gen = std::move(lie_gen);
    return A;
}

std::vector<std::string> derivation_failures(const GDGAlgebra& A) {
    std::vector<std::string> out;
    const GCAlgebra& R = *A.alg;
    auto check = [&](const GradedMap& op, const std::string& name) {
        for (int i = 0; i < R.dim(); ++i)
            for (int j = 0; j < R.dim(); ++j) {
                auto [k, s] = R.mul_basis(i, j);
                if (k < 0) continue;
                SVec lhs = op.apply(SVec{{k, Q(s)}});
                SVec rhs = R.mul(op.column(i), SVec{{j, Q(1)}});
                SVec r2 = R.mul(SVec{{i, Q(1)}}, op.column(j));
                if ((static_cast<long>(op.degree()) * R.degree(i)) % 2 != 0) r2 = scaled(r2, -1);
                axpy(rhs, 1, r2);
                if (lhs != rhs) {
                    out.push_back(name + " not a derivation on " + R.space()->label(i) + "," +
                                  R.space()->label(j));
                    return;
                }
            }
    };
    check(A.d, "d");
    for (size_t a = 0; a < A.contraction.size(); ++a) check(A.contraction[a], "i_" + std::to_string(a));
    for (size_t a = 0; a < A.lie_derivative.size(); ++a) check(A.lie_derivative[a], "L_" + std::to_string(a));
    return out;
}

}  // namespace gha
