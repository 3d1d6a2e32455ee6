#include "homcat/fincat.hpp"

#include "homcat/caps.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace homcat {

Caps& caps() {
    static Caps c;
    return c;
}

namespace {
constexpr size_t NONE = std::numeric_limits<size_t>::max();
}

FiniteCategory FiniteCategory::validate(std::vector<std::string> objects, std::vector<Mor> morphisms,
                                        std::vector<size_t> identity_of,
                                        const std::vector<std::array<size_t, 3>>& compose_triples) {
    FiniteCategory c;
    c.objects_ = std::move(objects);
    c.mors_ = std::move(morphisms);
    c.id_ = std::move(identity_of);
    size_t no = c.objects_.size(), nm = c.mors_.size();
    if (nm > caps().max_morphisms)
        throw CapExceeded("category has " + std::to_string(nm) + " morphisms, cap is " +
                          std::to_string(caps().max_morphisms));
    if (c.id_.size() != no) throw TypeMismatch("one identity morphism required per object");
    for (size_t m = 0; m < nm; ++m)
        if (c.mors_[m].src >= no || c.mors_[m].dst >= no)
            throw UnknownObject("morphism '" + c.mors_[m].name + "' has an unknown endpoint");
    for (size_t o = 0; o < no; ++o) {
        size_t e = c.id_[o];
        if (e >= nm || c.mors_[e].src != o || c.mors_[e].dst != o)
            throw IdentityViolation("identity of object '" + c.objects_[o] + "' is not an endomorphism of it");
    }

    c.comp_.assign(nm * nm, NONE);
    for (const auto& t : compose_triples) {
        auto [g, f, gf] = t;
        if (g >= nm || f >= nm || gf >= nm) throw TypeMismatch("compose table refers to unknown morphisms");
        if (!c.composable(g, f))
            throw TypeMismatch("compose table lists non-composable pair (" + c.mors_[g].name + ", " +
                               c.mors_[f].name + ")");
        if (c.mors_[gf].src != c.mors_[f].src || c.mors_[gf].dst != c.mors_[g].dst)
            throw TypeMismatch("composite of (" + c.mors_[g].name + ", " + c.mors_[f].name +
                               ") has wrong endpoints");
        c.comp_[g * nm + f] = gf;
    }
    for (size_t g = 0; g < nm; ++g)
        for (size_t f = 0; f < nm; ++f)
            if (c.composable(g, f) && c.comp_[g * nm + f] == NONE)
                throw TypeMismatch("composable pair (" + c.mors_[g].name + ", " + c.mors_[f].name +
                                   ") missing from the compose table");

    // identity laws
    for (size_t f = 0; f < nm; ++f) {
        if (c.comp_[f * nm + c.id_[c.mors_[f].src]] != f)
            throw IdentityViolation("f ∘ id != f for morphism '" + c.mors_[f].name + "'");
        if (c.comp_[c.id_[c.mors_[f].dst] * nm + f] != f)
            throw IdentityViolation("id ∘ f != f for morphism '" + c.mors_[f].name + "'");
    }
    // associativity on every composable triple
    for (size_t h = 0; h < nm; ++h)
        for (size_t g = 0; g < nm; ++g) {
            if (!c.composable(h, g)) continue;
            size_t hg = c.comp_[h * nm + g];
            for (size_t f = 0; f < nm; ++f) {
                if (!c.composable(g, f)) continue;
                size_t gf = c.comp_[g * nm + f];
                if (c.comp_[h * nm + gf] != c.comp_[hg * nm + f])
                    throw AssocViolation("(h∘g)∘f != h∘(g∘f) for (f,g,h) = ('" + c.mors_[f].name + "', '" +
                                         c.mors_[g].name + "', '" + c.mors_[h].name + "')");
            }
        }
    return c;
}

size_t FiniteCategory::compose(size_t g, size_t f) const {
    if (!composable(g, f))
        throw TypeMismatch("compose(" + mors_[g].name + ", " + mors_[f].name + "): not composable");
    return comp_[g * mors_.size() + f];
}

std::optional<size_t> FiniteCategory::object_index(const std::string& name) const {
    for (size_t o = 0; o < objects_.size(); ++o)
        if (objects_[o] == name) return o;
    return std::nullopt;
}

std::optional<size_t> FiniteCategory::morphism_index(const std::string& name) const {
    for (size_t m = 0; m < mors_.size(); ++m)
        if (mors_[m].name == name) return m;
    return std::nullopt;
}

std::vector<Chain> chains(const FiniteCategory& I, size_t p) {
    std::vector<Chain> out;
    if (p == 0) {
        for (size_t o = 0; o < I.num_objects(); ++o)
            out.push_back(Chain{{}, I.identity(o), o, o});
        return out;
    }
    // lexicographic odometer over (α_1, ..., α_p), src(α_j) = dst(α_{j+1})
    std::vector<size_t> cur;
    auto rec = [&](auto&& self, size_t depth) -> void {
        if (depth == p) {
            size_t comp = cur[0];
            for (size_t j = 1; j < p; ++j) comp = I.compose(comp, cur[j]);
            out.push_back(Chain{cur, comp, I.src(cur[p - 1]), I.dst(cur[0])});
            return;
        }
        for (size_t m = 0; m < I.num_morphisms(); ++m) {
            if (depth > 0 && I.dst(m) != I.src(cur[depth - 1])) continue;
            cur.push_back(m);
            self(self, depth + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::optional<size_t> initial_object(const FiniteCategory& I) {
    for (size_t x = 0; x < I.num_objects(); ++x) {
        bool ok = true;
        for (size_t o = 0; o < I.num_objects() && ok; ++o) {
            size_t count = 0;
            for (size_t m = 0; m < I.num_morphisms(); ++m)
                if (I.src(m) == x && I.dst(m) == o) ++count;
            ok = count == 1;
        }
        if (ok) return x;
    }
    return std::nullopt;
}

FactorizationCategory factorization_category(const FiniteCategory& base) {
    FactorizationCategory F;
    size_t nm = base.num_morphisms();
    std::vector<std::string> objects;
    for (size_t f = 0; f < nm; ++f) objects.push_back(base.morphism_name(f));

    std::vector<FiniteCategory::Mor> mors;
    struct Pair {
        size_t f, g, a, b;
    };
    std::vector<Pair> pairs;
    for (size_t f = 0; f < nm; ++f)
        for (size_t a = 0; a < nm; ++a) {
            if (base.src(a) != base.dst(f)) continue;
            for (size_t b = 0; b < nm; ++b) {
                if (base.dst(b) != base.src(f)) continue;
                size_t g = base.compose(base.compose(a, f), b);
                pairs.push_back({f, g, a, b});
            }
        }
    // deterministic order: by (f, g, a, b)
    std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
        return std::tie(x.f, x.g, x.a, x.b) < std::tie(y.f, y.g, y.a, y.b);
    });
    std::vector<size_t> identity_of(nm, NONE);
    for (size_t k = 0; k < pairs.size(); ++k) {
        const Pair& pr = pairs[k];
        mors.push_back({"(" + base.morphism_name(pr.a) + "," + base.morphism_name(pr.b) + "):" +
                            base.morphism_name(pr.f) + "->" + base.morphism_name(pr.g),
                        pr.f, pr.g});
        F.alpha.push_back(pr.a);
        F.beta.push_back(pr.b);
        if (pr.f == pr.g && pr.a == base.identity(base.dst(pr.f)) && pr.b == base.identity(base.src(pr.f)))
            identity_of[pr.f] = k;
    }

    auto find_pair = [&](size_t f, size_t a, size_t b) -> size_t {
        size_t g = base.compose(base.compose(a, f), b);
        for (size_t k = 0; k < pairs.size(); ++k)
            if (pairs[k].f == f && pairs[k].g == g && pairs[k].a == a && pairs[k].b == b) return k;
        throw TypeMismatch("factorization category: pair lookup failed");
    };

    std::vector<std::array<size_t, 3>> triples;
    for (size_t k2 = 0; k2 < pairs.size(); ++k2)
        for (size_t k1 = 0; k1 < pairs.size(); ++k1) {
            if (pairs[k1].g != pairs[k2].f) continue; // k2 ∘ k1 : f -> g'
            size_t a = base.compose(pairs[k2].a, pairs[k1].a);
            size_t b = base.compose(pairs[k1].b, pairs[k2].b);
            triples.push_back({k2, k1, find_pair(pairs[k1].f, a, b)});
        }
    F.cat = FiniteCategory::validate(std::move(objects), std::move(mors), std::move(identity_of), triples);
    return F;
}

UnderCategory under_category(const FiniteCategory& I, size_t y) {
    if (y >= I.num_objects()) throw UnknownObject("under_category: unknown object index " + std::to_string(y));
    UnderCategory U;
    std::vector<std::string> objects;
    for (size_t f = 0; f < I.num_morphisms(); ++f)
        if (I.src(f) == y) {
            U.object_mor.push_back(f);
            objects.push_back(I.morphism_name(f));
        }
    auto obj_of = [&](size_t f) -> size_t {
        for (size_t k = 0; k < U.object_mor.size(); ++k)
            if (U.object_mor[k] == f) return k;
        throw TypeMismatch("under_category: object lookup failed");
    };

    struct Tri {
        size_t fo, go, gamma;
    };
    std::vector<Tri> tris;
    std::vector<FiniteCategory::Mor> mors;
    std::vector<size_t> identity_of(U.object_mor.size(), NONE);
    for (size_t fo = 0; fo < U.object_mor.size(); ++fo) {
        size_t f = U.object_mor[fo];
        for (size_t gmm = 0; gmm < I.num_morphisms(); ++gmm) {
            if (I.src(gmm) != I.dst(f)) continue;
            size_t fprime = I.compose(gmm, f);
            size_t go = obj_of(fprime);
            tris.push_back({fo, go, gmm});
            mors.push_back({I.morphism_name(gmm) + ":" + I.morphism_name(f) + "->" + I.morphism_name(fprime),
                            fo, go});
            if (gmm == I.identity(I.dst(f))) identity_of[fo] = tris.size() - 1;
        }
    }
    auto find_tri = [&](size_t fo, size_t gamma) -> size_t {
        for (size_t k = 0; k < tris.size(); ++k)
            if (tris[k].fo == fo && tris[k].gamma == gamma) return k;
        throw TypeMismatch("under_category: triangle lookup failed");
    };
    std::vector<std::array<size_t, 3>> triples;
    for (size_t k2 = 0; k2 < tris.size(); ++k2)
        for (size_t k1 = 0; k1 < tris.size(); ++k1) {
            if (tris[k1].go != tris[k2].fo) continue;
            triples.push_back({k2, k1, find_tri(tris[k1].fo, I.compose(tris[k2].gamma, tris[k1].gamma))});
        }
    for (const auto& t : tris) U.triangle.push_back(t.gamma);
    U.cat = FiniteCategory::validate(std::move(objects), std::move(mors), std::move(identity_of), triples);
    return U;
}

CatFunctor CatFunctor::validate(const FiniteCategory& src, const FiniteCategory& dst,
                                std::vector<size_t> omap, std::vector<size_t> mmap) {
    CatFunctor F;
    F.src = &src;
    F.dst = &dst;
    F.omap = std::move(omap);
    F.mmap = std::move(mmap);
    if (F.omap.size() != src.num_objects() || F.mmap.size() != src.num_morphisms())
        throw TypeMismatch("functor: map sizes do not match the source category");
    for (size_t m = 0; m < src.num_morphisms(); ++m) {
        size_t fm = F.mmap[m];
        if (dst.src(fm) != F.omap[src.src(m)] || dst.dst(fm) != F.omap[src.dst(m)])
            throw TypeMismatch("functor: endpoints not preserved at morphism '" + src.morphism_name(m) + "'");
    }
    for (size_t o = 0; o < src.num_objects(); ++o)
        if (F.mmap[src.identity(o)] != dst.identity(F.omap[o]))
            throw IdentityViolation("functor: identity of object '" + src.object_name(o) + "' not preserved");
    for (size_t g = 0; g < src.num_morphisms(); ++g)
        for (size_t f = 0; f < src.num_morphisms(); ++f)
            if (src.composable(g, f) &&
                F.mmap[src.compose(g, f)] != dst.compose(F.mmap[g], F.mmap[f]))
                throw TypeMismatch("functor: composition not preserved at ('" + src.morphism_name(g) +
                                   "', '" + src.morphism_name(f) + "')");
    return F;
}

} // namespace homcat
