#include "gha/linfty/linfty.hpp"

#include "gha/core/koszul.hpp"

#include <algorithm>
#include <functional>

namespace gha {

void add_word(WordVec& v, const SymWord& w, const Q& c) {
    if (c == 0) return;
    auto it = v.find(w);
    if (it == v.end()) {
        v.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second == 0) v.erase(it);
}

SymCoalgebra::SymCoalgebra(SpacePtr L, int max_length) : L_(std::move(L)), W_(max_length) {
    if (W_ < 0) throw InputError("SymCoalgebra: negative word length");
    for (int i = 0; i < L_->dim(); ++i) deg_.push_back(L_->degree(i) - 1);
    int n = num_letters();
    SymWord cur;
    std::function<void(int)> rec = [&](int start) {
        basis_.push_back(cur);
        if (static_cast<int>(cur.size()) == W_) return;
        for (int i = start; i < n; ++i) {
            if (!cur.empty() && cur.back() == i && deg_[i] % 2 != 0) continue;
            cur.push_back(i);
            rec(i);
            cur.pop_back();
        }
    };
    rec(0);
    std::stable_sort(basis_.begin(), basis_.end(),
                     [](const SymWord& a, const SymWord& b) { return a.size() < b.size(); });
}

int SymCoalgebra::word_degree(const SymWord& w) const {
    int d = 0;
    for (int i : w) d += deg_[i];
    return d;
}

std::string SymCoalgebra::label(const SymWord& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) s += ".";
        s += "v(" + L_->label(w[k]) + ")";
    }
    return s;
}

std::pair<SymWord, int> SymCoalgebra::canonical(const std::vector<int>& seq) const {
    SymWord w = seq;
    int sign = 1;
    for (size_t i = 1; i < w.size(); ++i)
        for (size_t j = i; j > 0 && w[j - 1] > w[j]; --j) {
            if (deg_[w[j - 1]] % 2 != 0 && deg_[w[j]] % 2 != 0) sign = -sign;
            std::swap(w[j - 1], w[j]);
        }
    for (size_t i = 1; i < w.size(); ++i)
        if (w[i] == w[i - 1] && deg_[w[i]] % 2 != 0) return {w, 0};
    return {w, sign};
}

std::vector<SymCoalgebra::Split> SymCoalgebra::coproduct(const SymWord& w) const {
    int n = static_cast<int>(w.size());
    std::vector<int> degs(n);
    for (int k = 0; k < n; ++k) degs[k] = deg_[w[k]];
    std::map<std::pair<SymWord, SymWord>, Q> acc;
    for (int i = 0; i <= n; ++i)
        for (const auto& p : shuffles({i, n - i})) {
            SymWord front, back;
            for (int k = 0; k < i; ++k) front.push_back(w[p[k]]);
            for (int k = i; k < n; ++k) back.push_back(w[p[k]]);
            acc[{front, back}] += koszul_sign(p, degs);
        }
    std::vector<Split> out;
    for (auto& [fb, c] : acc)
        if (c != 0) out.push_back({fb.first, fb.second, c});
    return out;
}

WordVec SymCoalgebra::product(const WordVec& x, const WordVec& y) const {
    WordVec out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) {
            std::vector<int> seq = a;
            seq.insert(seq.end(), b.begin(), b.end());
            auto [w, s] = canonical(seq);
            if (s != 0) add_word(out, w, s * ca * cb);
        }
    return out;
}

WordVec coderivation(const DGLieAlgebra& L, const SymCoalgebra& C, const SymWord& w) {
    int n = static_cast<int>(w.size());
    std::vector<int> degs(n);
    for (int k = 0; k < n; ++k) degs[k] = C.letter_degree(w[k]);
    WordVec out;
    auto emit = [&](const SVec& head, const std::vector<int>& rest, const Q& coef) {
        for (const auto& [l, c] : head) {
            std::vector<int> seq{l};
            seq.insert(seq.end(), rest.begin(), rest.end());
            auto [cw, s] = C.canonical(seq);
            if (s != 0) add_word(out, cw, s * coef * c);
        }
    };
    for (int i = 0; i < n; ++i) {
        const SVec& dx = L.d.column(w[i]);
        if (dx.empty()) continue;
        Perm p{i};
        std::vector<int> rest;
        for (int k = 0; k < n; ++k)
            if (k != i) {
                p.push_back(k);
                rest.push_back(w[k]);
            }
        emit(dx, rest, koszul_sign(p, degs));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            SVec br = L.bracket_basis(w[i], w[j]);
            if (br.empty()) continue;
            Perm p{i, j};
            std::vector<int> rest;
            for (int k = 0; k < n; ++k)
                if (k != i && k != j) {
                    p.push_back(k);
                    rest.push_back(w[k]);
                }
            emit(br, rest, koszul_sign(p, degs) * sign_of_parity(degs[i]));
        }
    return out;
}

WordVec coderivation(const DGLieAlgebra& L, const SymCoalgebra& C, const WordVec& x) {
    WordVec out;
    for (const auto& [w, c] : x)
        for (const auto& [v, d] : coderivation(L, C, w)) add_word(out, v, c * d);
    return out;
}

WordVec coalgebra_lift(const Components& phi, const SymCoalgebra& src, const SymCoalgebra& tgt, const SymWord& w) {
    int n = static_cast<int>(w.size());
    WordVec out;
    if (n == 0) {
        out.emplace(SymWord{}, Q(1));
        return out;
    }
    std::vector<int> degs(n);
    for (int k = 0; k < n; ++k) degs[k] = src.letter_degree(w[k]);
    Q fact = 1;
    for (const auto& comp : compositions(n)) {
        int p = static_cast<int>(comp.size());
        fact = 1;
        for (int k = 2; k <= p; ++k) fact *= k;
        for (const auto& sigma : shuffles(comp)) {
            WordVec prod{{SymWord{}, Q(koszul_sign(sigma, degs)) / fact}};
            int pos = 0;
            for (int b = 0; b < p && !prod.empty(); ++b) {
                SymWord block;
                for (int k = 0; k < comp[b]; ++k) block.push_back(w[sigma[pos + k]]);
                pos += comp[b];
                auto it = phi.find(block);
                if (it == phi.end()) {
                    prod.clear();
                    break;
                }
                WordVec img;
                for (const auto& [l, c] : it->second) img.emplace(SymWord{l}, c);
                prod = tgt.product(prod, img);
            }
            for (const auto& [v, c] : prod) add_word(out, v, c);
        }
    }
    return out;
}

WordVec coalgebra_lift(const Components& phi, const SymCoalgebra& src, const SymCoalgebra& tgt, const WordVec& x) {
    WordVec out;
    for (const auto& [w, c] : x)
        for (const auto& [v, d] : coalgebra_lift(phi, src, tgt, w)) add_word(out, v, c * d);
    return out;
}

LInftyReport linfty_check(const LInftyMorphism& f) {
    LInftyReport r;
    SymCoalgebra C(f.source.space, f.max_length), Cp(f.target.space, f.max_length);
    for (const auto& [w, img] : f.phi) {
        if (w.empty() || static_cast<int>(w.size()) > f.max_length)
            throw InputError("linfty_check: component outside word lengths 1.." + std::to_string(f.max_length));
        for (const auto& kv : img)
            if (Cp.letter_degree(kv.first) != C.word_degree(w)) {
                r.ok = false;
                r.failing_word = "degree " + C.label(w);
                return r;
            }
    }
    for (const auto& w : C.basis()) {
        if (w.empty()) continue;
        WordVec lhs = coalgebra_lift(f.phi, C, Cp, coderivation(f.source, C, w));
        WordVec rhs = coderivation(f.target, Cp, coalgebra_lift(f.phi, C, Cp, w));
        if (lhs != rhs) {
            r.ok = false;
            r.failing_word = C.label(w);
            return r;
        }
    }
    return r;
}

LInftyMorphism strict_morphism(const DGLieAlgebra& L, const DGLieAlgebra& Lp, const std::vector<SVec>& images,
                               int max_length) {
    if (static_cast<int>(images.size()) != L.dim()) throw InputError("strict_morphism: one image per basis vector");
    LInftyMorphism f{L, Lp, max_length, {}};
    for (int i = 0; i < L.dim(); ++i)
        if (!images[i].empty()) f.phi[SymWord{i}] = images[i];
    return f;
}

namespace {

// Value of the product of dual letters gs (in order) on the word w.
Q eval_dual_product(const SymCoalgebra& C, const std::vector<int>& gs, const SymWord& w) {
    if (gs.empty()) return w.empty() ? Q(1) : Q(0);
    if (gs.size() != w.size()) return 0;
    int last = gs.back();
    std::vector<int> init(gs.begin(), gs.end() - 1);
    Q out = 0;
    for (const auto& s : C.coproduct(w)) {
        if (s.back.size() != 1 || s.back[0] != last) continue;
        // functional of degree -|v_last| passes the front word
        int sg = sign_of_parity(static_cast<long>(C.letter_degree(last)) * C.word_degree(s.front));
        out += s.coef * sg * eval_dual_product(C, init, s.front);
    }
    return out;
}

}  // namespace

CEOfDGLA ce_of_dgla(const DGLieAlgebra& L, int max_length) {
    CEOfDGLA ce;
    ce.L = L;
    ce.C = SymCoalgebra(L.space, max_length);
    int n = L.dim();
    std::vector<Generator> gens;
    for (int i = 0; i < n; ++i) gens.push_back({"c(" + L.space->label(i) + ")", 1 - L.space->degree(i), 1});
    auto alg = std::make_shared<GCAlgebra>(gens, max_length);
    ce.word_of.resize(alg->dim());
    ce.pairing.resize(alg->dim());
    for (int m = 0; m < alg->dim(); ++m) {
        SymWord w;
        for (int g = 0; g < n; ++g)
            for (int k = 0; k < alg->exponents(m)[g]; ++k) w.push_back(g);
        ce.word_of[m] = w;
        ce.pairing[m] = eval_dual_product(ce.C, w, w);
        if (ce.pairing[m] == 0) throw StructuralError("ce_of_dgla: degenerate pairing on " + ce.C.label(w));
        ce.monomial_of[w] = m;
    }
    std::vector<SVec> d(n);
    for (const auto& w : ce.C.basis()) {
        if (w.empty() || w.size() > 2) continue;
        int m = ce.monomial_of.at(w);
        for (const auto& [v, c] : coderivation(L, ce.C, w)) {
            if (v.size() != 1) continue;
            int g = v[0];
            int sg = sign_of_parity(1 - L.space->degree(g));
            add_entry(d[g], m, sg * c / ce.pairing[m]);
        }
    }
    ce.A = std::make_shared<GDGAlgebra>(make_gdg(alg, d, {}, {}));
    return ce;
}

LInftyMorphism mc_to_linfty(const CEOfDGLA& ce, const DGLieAlgebra& Lp, const SVec& alpha) {
    int nl = Lp.dim();
    const GCAlgebra& R = *ce.A->alg;
    LInftyMorphism f{ce.L, Lp, ce.C.max_length(), {}};
    for (const auto& [idx, v] : alpha) {
        int m = idx / nl, y = idx % nl;
        if (m >= R.dim()) throw InputError("mc_to_linfty: index out of range");
        if (R.degree(m) + Lp.space->degree(y) != 1) throw InputError("mc_to_linfty: element is not of degree 1");
        if (ce.word_of[m].empty()) throw InputError("mc_to_linfty: component on the empty word");
        add_entry(f.phi[ce.word_of[m]], y, v * ce.pairing[m]);
    }
    for (auto it = f.phi.begin(); it != f.phi.end();)
        it = it->second.empty() ? f.phi.erase(it) : std::next(it);
    return f;
}

SVec linfty_to_mc(const CEOfDGLA& ce, const LInftyMorphism& f) {
    int nl = f.target.dim();
    SVec alpha;
    for (const auto& [w, img] : f.phi) {
        auto it = ce.monomial_of.find(w);
        if (it == ce.monomial_of.end() || w.empty()) throw InputError("linfty_to_mc: word outside the truncation");
        int m = it->second;
        for (const auto& [y, v] : img) {
            if (ce.C.word_degree(w) != f.target.space->degree(y) - 1)
                throw InputError("linfty_to_mc: component is not of degree 0");
            add_entry(alpha, m * nl + y, v / ce.pairing[m]);
        }
    }
    return alpha;
}

}  // namespace gha
