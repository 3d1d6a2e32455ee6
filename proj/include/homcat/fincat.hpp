#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "homcat/error.hpp"

namespace homcat {

// Finite category with an explicit, exhaustively validated composition table.
// Objects and morphisms are referred to by dense indices; names are kept for
// messages and file round-trips.
class FiniteCategory {
public:
    struct Mor {
        std::string name;
        size_t src, dst;
    };

    // raw tables -> validated category; compose lists triples (g, f, g∘f)
    // over every composable pair (missing or extra pairs are errors)
    static FiniteCategory validate(std::vector<std::string> objects, std::vector<Mor> morphisms,
                                   std::vector<size_t> identity_of,
                                   const std::vector<std::array<size_t, 3>>& compose_triples);

    size_t num_objects() const { return objects_.size(); }
    size_t num_morphisms() const { return mors_.size(); }
    const std::string& object_name(size_t o) const { return objects_[o]; }
    const std::string& morphism_name(size_t m) const { return mors_[m].name; }
    size_t src(size_t m) const { return mors_[m].src; }
    size_t dst(size_t m) const { return mors_[m].dst; }
    size_t identity(size_t o) const { return id_[o]; }
    bool is_identity(size_t m) const { return id_[mors_[m].src] == m && mors_[m].src == mors_[m].dst; }

    bool composable(size_t g, size_t f) const { return dst(f) == src(g); }
    size_t compose(size_t g, size_t f) const; // g∘f, TypeMismatch if not composable

    std::optional<size_t> object_index(const std::string& name) const;
    std::optional<size_t> morphism_index(const std::string& name) const;

private:
    std::vector<std::string> objects_;
    std::vector<Mor> mors_;
    std::vector<size_t> id_;
    std::vector<size_t> comp_; // dense table, SIZE_MAX where not composable
};

// Composable chain (α_1, ..., α_p) in the coboundary labeling:
// α_j : i_j -> i_{j-1}, so src(α_j) = dst(α_{j+1}); the composite is
// α_1 ∘ ... ∘ α_p : i_p -> i_0. arrows[j-1] holds α_j. α_1 acts on the
// target side (pushforward), α_p on the source side (pullback); everything
// in the cochain machinery relies on this one accessor order. A 0-chain is
// an object carried as its identity composite.
struct Chain {
    std::vector<size_t> arrows;
    size_t composite;
    size_t src_obj, dst_obj;

    bool operator==(const Chain& o) const { return arrows == o.arrows && src_obj == o.src_obj; }
};

// All composable p-tuples (identities included), lexicographic in
// (α_1, ..., α_p) by morphism index. p = 0 yields one chain per object.
std::vector<Chain> chains(const FiniteCategory& I, size_t p);

std::optional<size_t> initial_object(const FiniteCategory& I);

// Category of factorizations: objects are the morphisms f of the base,
// morphisms f -> g are pairs (α, β) with α∘f∘β = g, composed by
// (α',β')(α,β) = (α'α, ββ').
struct FactorizationCategory {
    FiniteCategory cat;        // object k of cat = morphism k of base
    std::vector<size_t> alpha; // per cat-morphism: the α of its pair
    std::vector<size_t> beta;  // per cat-morphism: the β of its pair
};
FactorizationCategory factorization_category(const FiniteCategory& base);

// Under-category y/I: objects are morphisms out of y; a morphism
// (f: y->i) -> (f': y->i') is a triangle γ: i -> i' with γ∘f = f'.
struct UnderCategory {
    FiniteCategory cat;
    std::vector<size_t> object_mor; // per cat-object: the base morphism out of y
    std::vector<size_t> triangle;   // per cat-morphism: the base γ
};
UnderCategory under_category(const FiniteCategory& I, size_t y);

// Functor between finite categories; construction checks endpoints,
// identities and composition exhaustively.
struct CatFunctor {
    const FiniteCategory* src = nullptr;
    const FiniteCategory* dst = nullptr;
    std::vector<size_t> omap;
    std::vector<size_t> mmap;

    static CatFunctor validate(const FiniteCategory& src, const FiniteCategory& dst,
                               std::vector<size_t> omap, std::vector<size_t> mmap);
};

} // namespace homcat
