#pragma once

#include "homcat/complex.hpp"
#include "homcat/matrix.hpp"

namespace homcat {

// Finite group with an explicit multiplication table, axioms checked
// exhaustively at load.
class FiniteGroup {
public:
    static FiniteGroup validate(std::vector<std::string> names,
                                std::vector<std::vector<size_t>> table, size_t unit);

    size_t order() const { return names_.size(); }
    size_t unit() const { return unit_; }
    size_t mul(size_t a, size_t b) const { return table_[a][b]; }
    size_t inv(size_t a) const { return inv_[a]; }
    const std::string& name(size_t g) const { return names_[g]; }
    std::optional<size_t> index(const std::string& name) const;

    bool operator==(const FiniteGroup& o) const {
        return names_ == o.names_ && table_ == o.table_ && unit_ == o.unit_;
    }

private:
    std::vector<std::string> names_;
    std::vector<std::vector<size_t>> table_;
    std::vector<size_t> inv_;
    size_t unit_ = 0;
};

namespace grp {
FiniteGroup cyclic(size_t k);
FiniteGroup klein4();
FiniteGroup trivial();
} // namespace grp

// Coefficient space of a G-module: an F_p vector space (torsion empty) or a
// finitely generated abelian presentation over Z, one modulus per generator
// (0 = free, t >= 2 = Z/t).
struct ModuleSpace {
    Ring ring = Ring::Fp(2);
    size_t dim = 0;
    std::vector<mpz_class> torsion;

    bool presented() const { return !torsion.empty(); }
};

// G-module: action[g] an invertible matrix per group element, multiplicative
// and unit-preserving (checked exhaustively, modulo relations if presented).
class GModule {
public:
    static GModule validate(FiniteGroup group, ModuleSpace space, std::vector<Matrix> action);

    const FiniteGroup& group() const { return group_; }
    const ModuleSpace& space() const { return space_; }
    const Matrix& action(size_t g) const { return action_[g]; }

    static GModule trivial(const FiniteGroup& G, Ring ring, size_t dim);

private:
    FiniteGroup group_;
    ModuleSpace space_;
    std::vector<Matrix> action_;
};

// group homomorphism, multiplicativity checked exhaustively
struct GroupHom {
    FiniteGroup src, dst;
    std::vector<size_t> map;

    static GroupHom validate(FiniteGroup src, FiniteGroup dst, std::vector<size_t> map);
    static GroupHom identity(const FiniteGroup& G);
    size_t operator()(size_t g) const { return map[g]; }
};

GroupHom compose(const GroupHom& psi, const GroupHom& phi); // psi ∘ phi

// all homomorphisms src -> dst by exhaustive search (desk scale; TooLarge
// beyond the enumeration cap)
std::vector<GroupHom> all_homs(const FiniteGroup& src, const FiniteGroup& dst);

// base change along phi: same space, g acts as phi(g) did
GModule restrict_module(const GroupHom& phi, const GModule& M);

// Unnormalized bar cochains C^q = maps(G^q, M) for q = 0..q_max with the
// standard differential: action on the front, face merges with alternating
// signs, drop at the back. Tuple blocks are ordered lexicographically.
CochainComplex bar_complex(const FiniteGroup& G, const GModule& M, size_t q_max);

// columns span Z^1(G, M) = {d : d(gh) = g d(h) + d(g)}; field modules only
Matrix derivations(const FiniteGroup& G, const GModule& M);

// H^q(G, M) for q = 0..q_max (bar complex built one degree higher)
std::vector<FgAbelianGroup> group_cohomology(const FiniteGroup& G, const GModule& M, size_t q_max);

// dimension of the fixed subspace M^G by direct solve (field modules)
size_t fixed_subspace_dim(const GModule& M);

} // namespace homcat
