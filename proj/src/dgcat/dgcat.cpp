#include "gha/dgcat/dgcat.hpp"

#include "gha/core/linalg.hpp"
#include "gha/core/matrix.hpp"

#include <functional>

namespace gha {

namespace {

int parity_sign(int e) { return (e % 2 == 0) ? 1 : -1; }

SVec unit(int k) { return SVec{{k, Q(1)}}; }

void add_chain(Chain& x, const Word& w, const Q& c) {
    if (c == 0) return;
    auto [it, fresh] = x.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) x.erase(it);
    }
}

void add_chain(Chain& x, const Chain& y, const Q& c) {
    for (const auto& [w, v] : y) add_chain(x, w, c * v);
}

Word sub_word(const Word& w, int from, int to) {  // letters f_from .. f_{to-1}
    Word out;
    out.objects.assign(w.objects.begin() + from, w.objects.begin() + to + 1);
    out.letters.assign(w.letters.begin() + from, w.letters.begin() + to);
    return out;
}

int total_degree(const std::vector<int>& degs) {
    int s = 0;
    for (int d : degs) s += d;
    return s;
}

bool functors_equal(const AInftyFunctor& a, const AInftyFunctor& b) {
    if (a.source != b.source || a.target != b.target || a.on_objects != b.on_objects) return false;
    auto strip = [](const std::map<Word, SVec>& m) {
        std::map<Word, SVec> o;
        for (const auto& [w, v] : m)
            if (!v.empty()) o.emplace(w, v);
        return o;
    };
    return strip(a.comp) == strip(b.comp);
}

std::string pair_name(const DGCategory& C, int a, int b) { return C.objects[a] + "->" + C.objects[b]; }

}  // namespace

// ---- DGCategory -------------------------------------------------------------------

SVec DGCategory::compose(int a, int b, int c, const SVec& g, const SVec& f) const {
    SVec out;
    auto it = comp.find({a, b, c});
    if (it == comp.end()) return out;
    for (const auto& [gi, gv] : g)
        for (const auto& [fi, fv] : f) {
            auto jt = it->second.find({gi, fi});
            if (jt != it->second.end()) axpy(out, gv * fv, jt->second);
        }
    return out;
}

SVec DGCategory::d(int a, int b, const SVec& f) const { return hom[a][b].d.apply(f); }

std::vector<std::string> dg_category_failures(const DGCategory& C) {
    std::vector<std::string> out;
    const int n = C.size();
    auto fail = [&](const std::string& s) {
        if (out.size() < 20) out.push_back(s);
    };
    if (static_cast<int>(C.hom.size()) != n || static_cast<int>(C.identity.size()) != n) {
        out.push_back("tables do not match the object count");
        return out;
    }
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(C.hom[a].size()) != n) {
            out.push_back("hom table row " + std::to_string(a) + " has the wrong length");
            return out;
        }
        for (int b = 0; b < n; ++b) {
            const auto& h = C.hom[a][b];
            if (h.d.degree() != 1 || !h.d.degree_consistent()) fail("differential of " + pair_name(C, a, b) + " is not of degree 1");
            if (!h.square_zero()) fail("d^2 != 0 on " + pair_name(C, a, b));
        }
    }
    for (const auto& [key, table] : C.comp) {
        auto [a, b, c] = key;
        for (const auto& [gf, v] : table)
            for (const auto& [t, x] : v)
                if (C.degree(a, c, t) != C.degree(b, c, gf.first) + C.degree(a, b, gf.second))
                    fail("composition " + C.objects[a] + "->" + C.objects[b] + "->" + C.objects[c] + " is not additive in degree");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int g = 0; g < C.space(b, c)->dim(); ++g)
                    for (int f = 0; f < C.space(a, b)->dim(); ++f) {
                        SVec lhs = C.d(a, c, C.compose(a, b, c, unit(g), unit(f)));
                        SVec rhs = C.compose(a, b, c, C.d(b, c, unit(g)), unit(f));
                        axpy(rhs, Q(parity_sign(C.degree(b, c, g))), C.compose(a, b, c, unit(g), C.d(a, b, unit(f))));
                        if (lhs != rhs) fail("Leibniz rule fails on " + C.objects[a] + "->" + C.objects[b] + "->" + C.objects[c]);
                    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int e = 0; e < n; ++e)
                    for (int h = 0; h < C.space(c, e)->dim(); ++h)
                        for (int g = 0; g < C.space(b, c)->dim(); ++g)
                            for (int f = 0; f < C.space(a, b)->dim(); ++f) {
                                SVec l = C.compose(a, c, e, unit(h), C.compose(a, b, c, unit(g), unit(f)));
                                SVec r = C.compose(a, b, e, C.compose(b, c, e, unit(h), unit(g)), unit(f));
                                if (l != r) fail("composition is not associative");
                            }
    for (int a = 0; a < n; ++a) {
        const SVec& id = C.identity[a];
        for (const auto& [t, v] : id)
            if (C.degree(a, a, t) != 0) fail("identity of " + C.objects[a] + " is not of degree 0");
        if (!C.d(a, a, id).empty()) fail("identity of " + C.objects[a] + " is not closed");
        for (int b = 0; b < n; ++b) {
            for (int f = 0; f < C.space(a, b)->dim(); ++f)
                if (C.compose(a, a, b, unit(f), id) != unit(f)) fail("right unit fails for " + pair_name(C, a, b));
            for (int f = 0; f < C.space(b, a)->dim(); ++f)
                if (C.compose(b, a, a, id, unit(f)) != unit(f)) fail("left unit fails for " + pair_name(C, b, a));
        }
    }
    return out;
}

DGCatPtr complexes_category(const std::vector<CochainComplex>& objs, const std::vector<std::string>& names,
                            std::string name) {
    if (objs.size() != names.size()) throw InputError("complexes_category: one name per object required");
    auto C = std::make_shared<DGCategory>();
    C->name = std::move(name);
    C->objects = names;
    C->realized = objs;
    const int n = static_cast<int>(objs.size());
    C->hom.assign(n, std::vector<CochainComplex>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const auto& Va = *objs[a].space;
            const auto& Vb = *objs[b].space;
            auto sp = std::make_shared<GradedSpace>();
            for (int t = 0; t < Vb.dim(); ++t)
                for (int s = 0; s < Va.dim(); ++s)
                    sp->add(names[a] + "->" + names[b] + ":" + Vb.label(t) + "<" + Va.label(s), Vb.degree(t) - Va.degree(s));
            GradedMap d(sp, sp, 1);
            for (int t = 0; t < Vb.dim(); ++t)
                for (int s = 0; s < Va.dim(); ++s) {
                    int col = t * Va.dim() + s;
                    for (const auto& [t2, v] : objs[b].d.column(t)) d.add_to(t2 * Va.dim() + s, col, v);
                    int sg = parity_sign(Vb.degree(t) - Va.degree(s));
                    // E_{t,s} ∘ d_a sends r to d_a[s,r] t
                    for (int r = 0; r < Va.dim(); ++r) {
                        Q v = objs[a].d.at(s, r);
                        if (v != 0) d.add_to(t * Va.dim() + r, col, -sg * v);
                    }
                }
            C->hom[a][b] = CochainComplex(sp, d);
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const int da = objs[a].space->dim(), db = objs[b].space->dim(), dc = objs[c].space->dim();
                auto& table = C->comp[{a, b, c}];
                for (int t = 0; t < dc; ++t)
                    for (int s = 0; s < db; ++s)
                        for (int r = 0; r < da; ++r) table[{t * db + s, s * da + r}] = unit(t * da + r);
            }
    for (int a = 0; a < n; ++a) {
        SVec id;
        const int da = objs[a].space->dim();
        for (int s = 0; s < da; ++s) id[s * da + s] = Q(1);
        C->identity.push_back(id);
    }
    return C;
}

DGCatPtr unit_category() {
    auto sp = std::make_shared<GradedSpace>();
    sp->add("*", 0);
    return complexes_category({CochainComplex(sp, GradedMap(sp, sp, 1))}, {"pt"}, "unit");
}

DGCatPtr arrow_category(const CochainComplex& M, std::string name) {
    auto C = std::make_shared<DGCategory>();
    C->name = std::move(name);
    C->objects = {"X", "Y"};
    auto scalar = [](const std::string& label) {
        auto sp = std::make_shared<GradedSpace>();
        sp->add(label, 0);
        return CochainComplex(sp, GradedMap(sp, sp, 1));
    };
    auto empty = std::make_shared<GradedSpace>();
    C->hom = {{scalar("id_X"), M}, {CochainComplex(empty, GradedMap(empty, empty, 1)), scalar("id_Y")}};
    C->identity = {unit(0), unit(0)};
    C->comp[{0, 0, 0}][{0, 0}] = unit(0);
    C->comp[{1, 1, 1}][{0, 0}] = unit(0);
    for (int m = 0; m < M.space->dim(); ++m) {
        C->comp[{0, 0, 1}][{m, 0}] = unit(m);
        C->comp[{0, 1, 1}][{0, m}] = unit(m);
    }
    return C;
}

CochainComplex random_small_complex(std::mt19937_64& rng, int max_dim, const std::string& tag) {
    auto sp = std::make_shared<GradedSpace>();
    int dim = 1 + static_cast<int>(rng() % max_dim);
    int base = static_cast<int>(rng() % 3) - 1;
    for (int i = 0; i < dim; ++i) sp->add(tag + std::to_string(i), base + static_cast<int>(rng() % 2));
    GradedMap d(sp, sp, 1);
    for (int s = 0; s < dim; ++s)
        for (int t = 0; t < dim; ++t)
            if (sp->degree(t) == sp->degree(s) + 1 && rng() % 4 != 0) d.set(t, s, random_small_rational(rng));
    return CochainComplex(sp, d);  // two adjacent degrees, so d^2 = 0
}

DGCatPtr random_complexes_category(std::mt19937_64& rng, int objects, int max_dim) {
    std::vector<CochainComplex> objs;
    std::vector<std::string> names;
    for (int a = 0; a < objects; ++a) {
        names.push_back(std::string(1, static_cast<char>('A' + a)));
        objs.push_back(random_small_complex(rng, max_dim, names.back()));
    }
    return complexes_category(objs, names, "random");
}

// ---- words and the Hochschild differential ----------------------------------------------

std::string word_label(const DGCategory& C, const Word& w) {
    std::string s;
    for (int i = w.length() - 1; i >= 0; --i) {
        s += C.space(w.objects[i], w.objects[i + 1])->label(w.letters[i]);
        if (i > 0) s += " ⊗ ";
    }
    return s.empty() ? "[" + C.objects.at(w.objects.at(0)) + "]" : s;
}

void check_word(const DGCategory& C, const Word& w) {
    if (w.objects.size() != w.letters.size() + 1) throw InputError("word: object chain has the wrong length");
    for (int a : w.objects)
        if (a < 0 || a >= C.size()) throw InputError("word: unknown object");
    for (int i = 0; i < w.length(); ++i)
        if (w.letters[i] < 0 || w.letters[i] >= C.space(w.objects[i], w.objects[i + 1])->dim())
            throw InputError("word: letter " + std::to_string(i) + " is not a morphism " +
                             pair_name(C, w.objects[i], w.objects[i + 1]));
}

std::vector<Word> basis_words(const DGCategory& C, int n) {
    std::vector<Word> out;
    Word cur;
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        int a = cur.objects.back();
        for (int b = 0; b < C.size(); ++b)
            for (int f = 0; f < C.space(a, b)->dim(); ++f) {
                cur.objects.push_back(b);
                cur.letters.push_back(f);
                rec(i + 1);
                cur.objects.pop_back();
                cur.letters.pop_back();
            }
    };
    for (int a = 0; a < C.size(); ++a) {
        cur = Word{{a}, {}};
        rec(0);
    }
    return out;
}

std::vector<int> word_degrees(const DGCategory& C, const Word& w) {
    std::vector<int> out;
    for (int i = 0; i < w.length(); ++i) out.push_back(C.degree(w.objects[i], w.objects[i + 1], w.letters[i]));
    return out;
}

Chain expand(const std::vector<int>& objects, const std::vector<SVec>& letters) {
    Chain out;
    Word cur{objects, std::vector<int>(letters.size())};
    std::function<void(size_t, const Q&)> rec = [&](size_t i, const Q& c) {
        if (i == letters.size()) {
            add_chain(out, cur, c);
            return;
        }
        for (const auto& [k, v] : letters[i]) {
            cur.letters[i] = k;
            rec(i + 1, c * v);
        }
    };
    rec(0, Q(1));
    return out;
}

Chain word_chain(const Word& w) { return Chain{{w, Q(1)}}; }

namespace signs {

int b1(const std::vector<int>& degrees, int i) {
    const int n = static_cast<int>(degrees.size());
    int e = n - i - 1;
    for (int j = i + 1; j < n; ++j) e += degrees[j];
    return parity_sign(e);
}

int b2(const std::vector<int>& degrees, int i, Signs convention) {
    const int n = static_cast<int>(degrees.size());
    int e = n - i;
    for (int j = i + 2; j < n; ++j) e += degrees[j];
    if (convention == Signs::Consistent) e += degrees[i + 1];
    return parity_sign(e);
}

int nat(const std::vector<int>& degrees) {
    const int n = static_cast<int>(degrees.size());
    int e = 1 - n;
    for (int i = 1; i < n; ++i) e += degrees[i];
    return parity_sign(e);
}

}  // namespace signs

Chain hochschild_b1(const DGCategory& C, const Chain& x) {
    Chain out;
    for (const auto& [w, c] : x) {
        check_word(C, w);
        auto degs = word_degrees(C, w);
        for (int i = 0; i < w.length(); ++i) {
            std::vector<SVec> letters;
            for (int j = 0; j < w.length(); ++j)
                letters.push_back(j == i ? C.d(w.objects[j], w.objects[j + 1], unit(w.letters[j])) : unit(w.letters[j]));
            add_chain(out, expand(w.objects, letters), c * signs::b1(degs, i));
        }
    }
    return out;
}

Chain hochschild_b2(const DGCategory& C, const Chain& x, Signs convention) {
    Chain out;
    for (const auto& [w, c] : x) {
        check_word(C, w);
        auto degs = word_degrees(C, w);
        for (int i = 0; i + 1 < w.length(); ++i) {
            std::vector<int> objs;
            std::vector<SVec> letters;
            for (int j = 0; j <= w.length(); ++j)
                if (j != i + 1) objs.push_back(w.objects[j]);
            for (int j = 0; j < w.length(); ++j) {
                if (j == i + 1) continue;
                if (j == i)
                    letters.push_back(C.compose(w.objects[i], w.objects[i + 1], w.objects[i + 2], unit(w.letters[i + 1]),
                                                unit(w.letters[i])));
                else
                    letters.push_back(unit(w.letters[j]));
            }
            add_chain(out, expand(objs, letters), c * signs::b2(degs, i, convention));
        }
    }
    return out;
}

Chain hochschild_b(const DGCategory& C, const Chain& x, Signs convention) {
    Chain out = hochschild_b1(C, x);
    add_chain(out, hochschild_b2(C, x, convention), Q(1));
    return out;
}

// ---- A∞ functors ---------------------------------------------------------------------

SVec AInftyFunctor::apply(const Word& w) const {
    if (w.length() == 0) throw InputError("functor components start at n = 1");
    auto it = comp.find(w);
    return it == comp.end() ? SVec{} : it->second;
}

SVec AInftyFunctor::apply(const Chain& x) const {
    SVec out;
    for (const auto& [w, c] : x) axpy(out, c, apply(w));
    return out;
}

SVec AInftyFunctor::apply_one(int a, int b, const SVec& f) const {
    SVec out;
    for (const auto& [k, v] : f) axpy(out, v, apply(Word{{a, b}, {k}}));
    return out;
}

AInftyFunctor dg_functor(const DGCatPtr& C, const DGCatPtr& D, const std::vector<int>& on_objects,
                         const std::vector<std::vector<GradedMap>>& F1, int nmax) {
    if (static_cast<int>(on_objects.size()) != C->size()) throw InputError("dg_functor: object map has the wrong size");
    for (int x : on_objects)
        if (x < 0 || x >= D->size()) throw InputError("dg_functor: object image out of range");
    AInftyFunctor F{C, D, on_objects, nmax, {}};
    for (int a = 0; a < C->size(); ++a)
        for (int b = 0; b < C->size(); ++b) {
            const GradedMap& m = F1.at(a).at(b);
            if (m.source()->dim() != C->space(a, b)->dim() ||
                m.target()->dim() != D->space(on_objects[a], on_objects[b])->dim())
                throw InputError("dg_functor: F_1 on " + pair_name(*C, a, b) + " has the wrong shape");
            for (int k = 0; k < C->space(a, b)->dim(); ++k)
                if (!m.column(k).empty()) F.comp[Word{{a, b}, {k}}] = m.column(k);
        }
    return F;
}

AInftyFunctor identity_functor(const DGCatPtr& C, int nmax) {
    AInftyFunctor F{C, C, {}, nmax, {}};
    for (int a = 0; a < C->size(); ++a) F.on_objects.push_back(a);
    for (const auto& w : basis_words(*C, 1)) F.comp[w] = unit(w.letters[0]);
    return F;
}

bool is_dg_functor(const AInftyFunctor& F) {
    for (const auto& [w, v] : F.comp)
        if (w.length() >= 2 && !v.empty()) return false;
    return true;
}

std::vector<std::string> functor_failures(const AInftyFunctor& F) {
    std::vector<std::string> out;
    const DGCategory& C = *F.source;
    const DGCategory& D = *F.target;
    if (static_cast<int>(F.on_objects.size()) != C.size()) return {"object map has the wrong size"};
    for (int x : F.on_objects)
        if (x < 0 || x >= D.size()) return {"object image out of range"};
    for (const auto& [w, v] : F.comp) {
        try {
            check_word(C, w);
        } catch (const InputError& e) {
            out.push_back(e.what());
            continue;
        }
        if (w.length() == 0 || w.length() > F.nmax) {
            out.push_back("component outside 1..nmax");
            continue;
        }
        int a = F.on_objects[w.objects.front()], b = F.on_objects[w.objects.back()];
        int deg = total_degree(word_degrees(C, w)) + 1 - w.length();
        for (const auto& [t, x] : v)
            if (t < 0 || t >= D.space(a, b)->dim() || D.degree(a, b, t) != deg) {
                out.push_back("F_" + std::to_string(w.length()) + " has the wrong degree on " + word_label(C, w));
                break;
            }
    }
    return out;
}

std::vector<std::string> functor_unit_failures(const AInftyFunctor& F) {
    std::vector<std::string> out;
    const DGCategory& C = *F.source;
    const DGCategory& D = *F.target;
    for (int a = 0; a < C.size(); ++a)
        if (F.apply_one(a, a, C.identity[a]) != D.identity[F.on_objects[a]])
            out.push_back("F_1(id) != id at " + C.objects[a]);
    for (int n = 2; n <= F.nmax; ++n)
        for (const auto& w : basis_words(C, n - 1))
            for (int i = 0; i <= w.length(); ++i) {
                std::vector<int> objs = w.objects;
                objs.insert(objs.begin() + i, w.objects[i]);
                std::vector<SVec> letters;
                for (int k : w.letters) letters.push_back(unit(k));
                letters.insert(letters.begin() + i, C.identity[w.objects[i]]);
                if (!F.apply(expand(objs, letters)).empty()) {
                    out.push_back("F_" + std::to_string(n) + " does not vanish on a word containing an identity");
                    break;
                }
            }
    return out;
}

CoherenceResult ainfty_functor_check(const AInftyFunctor& F, int nmax, Signs convention) {
    const DGCategory& C = *F.source;
    const DGCategory& D = *F.target;
    auto fails = functor_failures(F);
    if (!fails.empty()) throw InputError("ainfty_functor_check: " + fails.front());
    for (int n = 1; n <= nmax; ++n)
        for (const auto& w : basis_words(C, n)) {
            auto degs = word_degrees(C, w);
            int a0 = F.on_objects[w.objects.front()], an = F.on_objects[w.objects.back()];
            SVec lhs = D.d(a0, an, F.apply(w));
            for (int i = 1; i < n; ++i) {
                Word left = sub_word(w, n - i, n), right = sub_word(w, 0, n - i);
                SVec x = F.apply(left), y = F.apply(right);
                std::vector<int> pair_degs = {total_degree(word_degrees(C, right)) + 1 - (n - i),
                                              total_degree(word_degrees(C, left)) + 1 - i};
                int mid = F.on_objects[w.objects[n - i]];
                axpy(lhs, Q(signs::b2(pair_degs, 0, convention)), D.compose(a0, mid, an, x, y));
            }
            SVec rhs = F.apply(hochschild_b1(C, word_chain(w)));
            if (n >= 2) axpy(rhs, Q(1), F.apply(hochschild_b2(C, word_chain(w), convention)));
            if (lhs != rhs) return {false, n, word_label(C, w)};
        }
    return {};
}

AInftyFunctor compose_functors(const AInftyFunctor& H, const AInftyFunctor& F) {
    if (F.target != H.source) throw InputError("compose_functors: functors are not composable");
    const DGCategory& C = *F.source;
    AInftyFunctor out{F.source, H.target, {}, std::min(F.nmax, H.nmax), {}};
    for (int a : F.on_objects) out.on_objects.push_back(H.on_objects[a]);
    for (int n = 1; n <= out.nmax; ++n)
        for (const auto& w : basis_words(C, n)) {
            SVec total;
            // cut positions 0 = c_0 < c_1 < ... < c_k = n, one bit per inner position
            for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
                std::vector<int> cuts = {0};
                for (int p = 1; p < n; ++p)
                    if (mask & (1 << (p - 1))) cuts.push_back(p);
                cuts.push_back(n);
                const int k = static_cast<int>(cuts.size()) - 1;
                if (k > H.nmax) continue;
                std::vector<int> objs;
                std::vector<SVec> letters;
                for (int c : cuts) objs.push_back(F.on_objects[w.objects[c]]);
                bool zero = false;
                for (int b = 0; b < k && !zero; ++b) {
                    letters.push_back(F.apply(sub_word(w, cuts[b], cuts[b + 1])));
                    zero = letters.back().empty();
                }
                if (!zero) axpy(total, Q(1), H.apply(expand(objs, letters)));
            }
            if (!total.empty()) out.comp[w] = total;
        }
    return out;
}

namespace {

CochainComplex tensor_complex(const CochainComplex& V, const CochainComplex& W) {
    auto sp = std::make_shared<GradedSpace>();
    const int dv = V.space->dim(), dw = W.space->dim();
    for (int s = 0; s < dv; ++s)
        for (int w = 0; w < dw; ++w)
            sp->add(V.space->label(s) + "⊗" + W.space->label(w), V.space->degree(s) + W.space->degree(w));
    GradedMap d(sp, sp, 1);
    for (int s = 0; s < dv; ++s)
        for (int w = 0; w < dw; ++w) {
            for (const auto& [t, v] : V.d.column(s)) d.add_to(t * dw + w, s * dw + w, v);
            Q sg(parity_sign(V.space->degree(s)));
            for (const auto& [t, v] : W.d.column(w)) d.add_to(s * dw + t, s * dw + w, sg * v);
        }
    return CochainComplex(sp, d);
}

}  // namespace

DGCatPtr tensor_target(const DGCategory& C, const std::vector<CochainComplex>& Ws) {
    if (C.realized.size() != static_cast<size_t>(C.size()))
        throw InputError("tensor_target: the category is not realized by complexes");
    std::vector<CochainComplex> objs;
    std::vector<std::string> names;
    for (size_t k = 0; k < Ws.size(); ++k)
        for (int a = 0; a < C.size(); ++a) {
            objs.push_back(tensor_complex(C.realized[a], Ws[k]));
            names.push_back(C.objects[a] + "⊗W" + std::to_string(k));
        }
    return complexes_category(objs, names, C.name + "⊗W");
}

AInftyFunctor tensor_functor(const DGCatPtr& C, const DGCatPtr& target, const std::vector<CochainComplex>& Ws, int k,
                             int nmax) {
    const int n = C->size();
    if (target->size() != n * static_cast<int>(Ws.size()) || C->realized.size() != static_cast<size_t>(n))
        throw InputError("tensor_functor: target does not match the tensor construction");
    const int dw = Ws.at(k).space->dim();
    AInftyFunctor F{C, target, {}, nmax, {}};
    for (int a = 0; a < n; ++a) F.on_objects.push_back(k * n + a);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int da = C->realized[a].space->dim(), db = C->realized[b].space->dim();
            for (int t = 0; t < db; ++t)
                for (int s = 0; s < da; ++s) {
                    SVec img;
                    for (int w = 0; w < dw; ++w) img[(t * dw + w) * (da * dw) + (s * dw + w)] = Q(1);
                    F.comp[Word{{a, b}, {t * da + s}}] = img;
                }
        }
    return F;
}

// ---- A∞ natural transformations -------------------------------------------------------

SVec AInftyNat::at(const Word& w) const {
    if (w.length() == 0) return at_object(w.objects.at(0));
    auto it = comp.find(w);
    return it == comp.end() ? SVec{} : it->second;
}

SVec AInftyNat::apply(const Chain& x) const {
    SVec out;
    for (const auto& [w, c] : x) axpy(out, c, at(w));
    return out;
}

std::vector<std::string> nat_failures(const AInftyNat& L) {
    std::vector<std::string> out;
    if (L.F.source != L.G.source || L.F.target != L.G.target) return {"functors have different source or target"};
    const DGCategory& C = *L.F.source;
    const DGCategory& D = *L.F.target;
    if (static_cast<int>(L.zero.size()) != C.size()) return {"one λ_0 component per object required"};
    for (int a = 0; a < C.size(); ++a) {
        int fa = L.F.on_objects[a], ga = L.G.on_objects[a];
        for (const auto& [t, v] : L.zero[a])
            if (t < 0 || t >= D.space(fa, ga)->dim() || D.degree(fa, ga, t) != 0)
                out.push_back("λ_0(" + C.objects[a] + ") is not of degree 0");
    }
    for (const auto& [w, v] : L.comp) {
        try {
            check_word(C, w);
        } catch (const InputError& e) {
            out.push_back(e.what());
            continue;
        }
        int a = L.F.on_objects[w.objects.front()], b = L.G.on_objects[w.objects.back()];
        int deg = total_degree(word_degrees(C, w)) - w.length();
        for (const auto& [t, x] : v)
            if (t < 0 || t >= D.space(a, b)->dim() || D.degree(a, b, t) != deg) {
                out.push_back("λ_" + std::to_string(w.length()) + " has the wrong degree on " + word_label(C, w));
                break;
            }
    }
    return out;
}

CoherenceResult ainfty_nat_check(const AInftyNat& L, int nmax, Signs convention) {
    if (!is_dg_functor(L.F) || !is_dg_functor(L.G)) throw InputError("ainfty_nat_check: F and G must be DG functors");
    auto fails = nat_failures(L);
    if (!fails.empty()) throw InputError("ainfty_nat_check: " + fails.front());
    const DGCategory& C = *L.F.source;
    const DGCategory& D = *L.F.target;
    const auto& Fo = L.F.on_objects;
    const auto& Go = L.G.on_objects;
    for (int a = 0; a < C.size(); ++a)
        if (!D.d(Fo[a], Go[a], L.zero[a]).empty()) return {false, 0, C.objects[a]};
    for (int n = 1; n <= nmax; ++n)
        for (const auto& w : basis_words(C, n)) {
            const auto& A = w.objects;
            SVec g = L.G.apply(sub_word(w, n - 1, n));
            SVec res = D.compose(Fo[A[0]], Go[A[n - 1]], Go[A[n]], g, L.at(sub_word(w, 0, n - 1)));
            SVec f = L.F.apply(sub_word(w, 0, 1));
            axpy(res, Q(-signs::nat(word_degrees(C, w))),
                 D.compose(Fo[A[0]], Fo[A[1]], Go[A[n]], L.at(sub_word(w, 1, n)), f));
            axpy(res, Q(-1), L.apply(hochschild_b(C, word_chain(w), convention)));
            axpy(res, Q(convention == Signs::Consistent ? -1 : 1), D.d(Fo[A[0]], Go[A[n]], L.at(w)));
            if (!res.empty()) return {false, n, word_label(C, w)};
        }
    return {};
}

AInftyNat identity_nat(const AInftyFunctor& F, int nmax) {
    AInftyNat L{F, F, nmax, {}, {}};
    for (int x : F.on_objects) L.zero.push_back(F.target->identity[x]);
    return L;
}

AInftyNat compose_nats(const AInftyNat& mu, const AInftyNat& lambda) {
    if (!functors_equal(lambda.G, mu.F)) throw InputError("compose_nats: transformations are not composable");
    const DGCategory& C = *lambda.F.source;
    const DGCategory& D = *lambda.F.target;
    const auto& Fo = lambda.F.on_objects;
    const auto& Go = lambda.G.on_objects;
    const auto& Ho = mu.G.on_objects;
    AInftyNat out{lambda.F, mu.G, std::min(mu.nmax, lambda.nmax), {}, {}};
    for (int a = 0; a < C.size(); ++a) out.zero.push_back(D.compose(Fo[a], Go[a], Ho[a], mu.zero[a], lambda.zero[a]));
    for (int n = 1; n <= out.nmax; ++n)
        for (const auto& w : basis_words(C, n)) {
            SVec total;
            for (int i = 0; i <= n; ++i) {
                Word left = sub_word(w, n - i, n), right = sub_word(w, 0, n - i);
                axpy(total, Q(1),
                     D.compose(Fo[w.objects[0]], Go[w.objects[n - i]], Ho[w.objects[n]], mu.at(left), lambda.at(right)));
            }
            if (!total.empty()) out.comp[w] = total;
        }
    return out;
}

AInftyNat whisker(const AInftyFunctor& H, const AInftyNat& lambda) {
    if (H.source != lambda.F.target) throw InputError("whisker: H does not start where λ lands");
    const DGCategory& C = *lambda.F.source;
    const auto& F = lambda.F;
    const auto& G = lambda.G;
    AInftyNat out{compose_functors(H, F), compose_functors(H, G), lambda.nmax, {}, {}};
    // n = 0 is the k = 2 term H_1(λ_0)
    for (int a = 0; a < C.size(); ++a) out.zero.push_back(H.apply_one(F.on_objects[a], G.on_objects[a], lambda.zero[a]));
    for (int n = 1; n <= out.nmax; ++n)
        for (const auto& w : basis_words(C, n)) {
            const auto& A = w.objects;
            SVec total;
            for (int k = 2; k <= n + 2; ++k) {
                if (k - 1 > H.nmax) continue;
                for (int i = 1; i < k; ++i) {
                    const int j = k - i;
                    const int lo = j - 1, hi = n - i + 1;  // λ acts on letters f_lo .. f_{hi-1}
                    if (lo > hi) continue;
                    std::vector<int> objs;
                    std::vector<SVec> letters;
                    for (int t = 0; t <= lo; ++t) objs.push_back(F.on_objects[A[t]]);
                    for (int t = hi; t <= n; ++t) objs.push_back(G.on_objects[A[t]]);
                    for (int t = 0; t < lo; ++t) letters.push_back(F.apply_one(A[t], A[t + 1], unit(w.letters[t])));
                    letters.push_back(lambda.at(sub_word(w, lo, hi)));
                    for (int t = hi; t < n; ++t) letters.push_back(G.apply_one(A[t], A[t + 1], unit(w.letters[t])));
                    axpy(total, Q(1), H.apply(expand(objs, letters)));
                }
            }
            if (!total.empty()) out.comp[w] = total;
        }
    return out;
}

bool operator==(const AInftyNat& a, const AInftyNat& b) {
    if (!functors_equal(a.F, b.F) || !functors_equal(a.G, b.G) || a.zero != b.zero) return false;
    auto strip = [](const std::map<Word, SVec>& m) {
        std::map<Word, SVec> o;
        for (const auto& [w, v] : m)
            if (!v.empty()) o.emplace(w, v);
        return o;
    };
    return strip(a.comp) == strip(b.comp);
}

std::optional<SVec> inverse_morphism(const DGCategory& C, int a, int b, const SVec& x) {
    const int nb = C.space(b, b)->dim();
    const int rows = nb + C.space(a, a)->dim();
    std::vector<int> unknowns;
    std::vector<SVec> cols;
    for (int k = 0; k < C.space(b, a)->dim(); ++k) {
        if (C.degree(b, a, k) != 0) continue;
        SVec col = C.compose(b, a, b, x, unit(k));
        for (const auto& [t, v] : C.compose(a, b, a, unit(k), x)) col[nb + t] = v;
        unknowns.push_back(k);
        cols.push_back(col);
    }
    SVec rhs = C.identity[b];
    for (const auto& [t, v] : C.identity[a]) rhs[nb + t] = v;
    auto sol = solve(cols, rhs, rows);
    if (!sol) return std::nullopt;
    SVec y;
    for (const auto& [j, v] : *sol) add_entry(y, unknowns[j], v);
    return y;
}

bool is_nat_iso(const AInftyNat& L) {
    for (int a = 0; a < L.F.source->size(); ++a)
        if (!inverse_morphism(*L.F.target, L.F.on_objects[a], L.G.on_objects[a], L.zero[a])) return false;
    return true;
}

AInftyNat random_nat(const AInftyFunctor& F, const AInftyFunctor& G, int nmax, std::mt19937_64& rng,
                     Signs convention) {
    if (F.source != G.source || F.target != G.target) throw InputError("random_nat: functors differ in source or target");
    if (!is_dg_functor(F) || !is_dg_functor(G)) throw InputError("random_nat: F and G must be DG functors");
    const DGCategory& C = *F.source;
    const DGCategory& D = *F.target;
    const auto& Fo = F.on_objects;
    const auto& Go = G.on_objects;

    // unknowns: one per admissible basis coordinate of λ_0(A) and of λ_n(w)
    std::map<Word, std::vector<std::pair<int, int>>> slots;  // word -> (unknown, coordinate)
    int nunk = 0;
    auto make_slots = [&](const Word& w, int deg) {
        int a = Fo[w.objects.front()], b = Go[w.objects.back()];
        auto& s = slots[w];
        for (int t = 0; t < D.space(a, b)->dim(); ++t)
            if (D.degree(a, b, t) == deg) s.emplace_back(nunk++, t);
    };
    for (int a = 0; a < C.size(); ++a) make_slots(Word{{a}, {}}, 0);
    for (int n = 1; n <= nmax; ++n)
        for (const auto& w : basis_words(C, n)) make_slots(w, total_degree(word_degrees(C, w)) - n);

    std::vector<SVec> rows;
    auto flush = [&](std::map<int, SVec>& eq) {
        for (auto& [r, row] : eq)
            if (!row.empty()) rows.push_back(std::move(row));
        eq.clear();
    };
    std::map<int, SVec> eq;  // coordinate of the residual -> linear form in the unknowns
    auto add_term = [&](const SVec& value, int u, const Q& c) {
        for (const auto& [r, v] : value) add_entry(eq[r], u, c * v);
    };
    for (int a = 0; a < C.size(); ++a) {
        for (auto [u, t] : slots[Word{{a}, {}}]) add_term(D.d(Fo[a], Go[a], unit(t)), u, Q(1));
        flush(eq);
    }
    for (int n = 1; n <= nmax; ++n)
        for (const auto& w : basis_words(C, n)) {
            const auto& A = w.objects;
            SVec g = G.apply(sub_word(w, n - 1, n));
            for (auto [u, t] : slots[sub_word(w, 0, n - 1)])
                add_term(D.compose(Fo[A[0]], Go[A[n - 1]], Go[A[n]], g, unit(t)), u, Q(1));
            SVec f = F.apply(sub_word(w, 0, 1));
            Q s(-signs::nat(word_degrees(C, w)));
            for (auto [u, t] : slots[sub_word(w, 1, n)])
                add_term(D.compose(Fo[A[0]], Fo[A[1]], Go[A[n]], unit(t), f), u, s);
            for (const auto& [w2, c] : hochschild_b(C, word_chain(w), convention))
                for (auto [u, t] : slots[w2]) add_entry(eq[t], u, -c);
            Q sd(convention == Signs::Consistent ? -1 : 1);
            for (auto [u, t] : slots[w]) add_term(D.d(Fo[A[0]], Go[A[n]], unit(t)), u, sd);
            flush(eq);
        }

    SVec x;
    for (const auto& k : nullspace(rows, nunk)) axpy(x, random_small_rational(rng), k);
    AInftyNat L{F, G, nmax, std::vector<SVec>(C.size()), {}};
    for (const auto& [w, s] : slots) {
        SVec v;
        for (auto [u, t] : s) add_entry(v, t, entry(x, u));
        if (w.length() == 0)
            L.zero[w.objects[0]] = v;
        else if (!v.empty())
            L.comp[w] = v;
    }
    return L;
}

}  // namespace gha
