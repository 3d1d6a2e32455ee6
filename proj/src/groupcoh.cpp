#include "homcat/groupcoh.hpp"

#include "homcat/caps.hpp"
#include "homcat/linalg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace homcat {

FiniteGroup FiniteGroup::validate(std::vector<std::string> names,
                                  std::vector<std::vector<size_t>> table, size_t unit) {
    FiniteGroup G;
    G.names_ = std::move(names);
    G.table_ = std::move(table);
    G.unit_ = unit;
    size_t n = G.names_.size();
    if (G.table_.size() != n) throw TypeMismatch("group table row count mismatch");
    for (const auto& row : G.table_) {
        if (row.size() != n) throw TypeMismatch("group table column count mismatch");
        for (size_t v : row)
            if (v >= n) throw TypeMismatch("group table entry out of range");
    }
    if (unit >= n) throw TypeMismatch("group unit out of range");
    for (size_t a = 0; a < n; ++a) {
        if (G.table_[unit][a] != a || G.table_[a][unit] != a)
            throw IdentityViolation("group unit law fails at element '" + G.names_[a] + "'");
    }
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c)
                if (G.table_[G.table_[a][b]][c] != G.table_[a][G.table_[b][c]])
                    throw AssocViolation("group associativity fails at ('" + G.names_[a] + "','" +
                                         G.names_[b] + "','" + G.names_[c] + "')");
    G.inv_.assign(n, n);
    for (size_t a = 0; a < n; ++a) {
        for (size_t b = 0; b < n; ++b)
            if (G.table_[a][b] == unit && G.table_[b][a] == unit) G.inv_[a] = b;
        if (G.inv_[a] == n) throw TypeMismatch("group element '" + G.names_[a] + "' has no inverse");
    }
    return G;
}

std::optional<size_t> FiniteGroup::index(const std::string& name) const {
    for (size_t g = 0; g < names_.size(); ++g)
        if (names_[g] == name) return g;
    return std::nullopt;
}

namespace grp {

FiniteGroup cyclic(size_t k) {
    std::vector<std::string> names;
    std::vector<std::vector<size_t>> table(k, std::vector<size_t>(k));
    for (size_t i = 0; i < k; ++i) {
        names.push_back(i == 0 ? "e" : "t" + std::to_string(i));
        for (size_t j = 0; j < k; ++j) table[i][j] = (i + j) % k;
    }
    return FiniteGroup::validate(std::move(names), std::move(table), 0);
}

FiniteGroup klein4() {
    // {e, a, b, ab} with every element an involution
    std::vector<std::vector<size_t>> t = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    return FiniteGroup::validate({"e", "a", "b", "ab"}, std::move(t), 0);
}

FiniteGroup trivial() { return FiniteGroup::validate({"e"}, {{0}}, 0); }

} // namespace grp

namespace {

bool equal_mod(const Matrix& A, const Matrix& B, const std::vector<mpz_class>& tor) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) return false;
    if (tor.empty()) return A == B;
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < A.cols(); ++j) {
            mpz_class d = A.get(i, j).z() - B.get(i, j).z();
            if (tor[i] == 0 ? d != 0 : d % tor[i] != 0) return false;
        }
    return true;
}

} // namespace

GModule GModule::validate(FiniteGroup group, ModuleSpace space, std::vector<Matrix> action) {
    GModule M;
    M.group_ = std::move(group);
    M.space_ = std::move(space);
    M.action_ = std::move(action);
    const FiniteGroup& G = M.group_;
    const ModuleSpace& S = M.space_;
    if (S.presented()) {
        if (S.ring.kind != RingKind::Integers)
            throw TypeMismatch("presented module spaces live over Z");
        if (S.torsion.size() != S.dim) throw TypeMismatch("module torsion length mismatch");
    } else if (!S.ring.is_field()) {
        throw TypeMismatch("free module spaces over Z need explicit torsion (use 0 for free generators)");
    }
    if (M.action_.size() != G.order()) throw TypeMismatch("one action matrix per group element required");
    for (size_t g = 0; g < G.order(); ++g) {
        const Matrix& A = M.action_[g];
        if (A.rows() != S.dim || A.cols() != S.dim || A.ring() != S.ring)
            throw TypeMismatch("action matrix shape mismatch at '" + G.name(g) + "'");
        if (S.presented()) {
            // generator orders must be respected: t_k * A e_k = 0 mod relations
            for (size_t k = 0; k < S.dim; ++k)
                for (size_t i = 0; i < S.dim; ++i) {
                    mpz_class v = S.torsion[k] * A.get(i, k).z();
                    if (S.torsion[i] == 0 ? v != 0 : v % S.torsion[i] != 0)
                        throw ModuleAxiomFailure("action of '" + G.name(g) +
                                                 "' is not defined on the presented module");
                }
        }
    }
    if (!equal_mod(M.action_[G.unit()], Matrix::identity(S.ring, S.dim), S.torsion))
        throw ModuleAxiomFailure("unit must act as the identity");
    for (size_t g = 0; g < G.order(); ++g)
        for (size_t h = 0; h < G.order(); ++h)
            if (!equal_mod(M.action_[G.mul(g, h)], M.action_[g] * M.action_[h], S.torsion))
                throw ModuleAxiomFailure("action is not multiplicative at ('" + G.name(g) + "','" +
                                         G.name(h) + "')");
    return M;
}

GModule GModule::trivial(const FiniteGroup& G, Ring ring, size_t dim) {
    ModuleSpace S{ring, dim, {}};
    if (!ring.is_field()) S.torsion.assign(dim, 0);
    std::vector<Matrix> act(G.order(), Matrix::identity(ring, dim));
    return GModule::validate(G, S, std::move(act));
}

GroupHom GroupHom::validate(FiniteGroup src, FiniteGroup dst, std::vector<size_t> map) {
    GroupHom h{std::move(src), std::move(dst), std::move(map)};
    if (h.map.size() != h.src.order()) throw TypeMismatch("homomorphism map size mismatch");
    for (size_t v : h.map)
        if (v >= h.dst.order()) throw TypeMismatch("homomorphism maps outside the target group");
    for (size_t a = 0; a < h.src.order(); ++a)
        for (size_t b = 0; b < h.src.order(); ++b)
            if (h.map[h.src.mul(a, b)] != h.dst.mul(h.map[a], h.map[b]))
                throw TypeMismatch("map is not a homomorphism at ('" + h.src.name(a) + "','" +
                                   h.src.name(b) + "')");
    if (h.map[h.src.unit()] != h.dst.unit()) throw TypeMismatch("homomorphism does not preserve the unit");
    return h;
}

GroupHom GroupHom::identity(const FiniteGroup& G) {
    std::vector<size_t> m(G.order());
    for (size_t g = 0; g < G.order(); ++g) m[g] = g;
    return GroupHom{G, G, std::move(m)};
}

GroupHom compose(const GroupHom& psi, const GroupHom& phi) {
    if (!(phi.dst == psi.src)) throw TypeMismatch("homomorphisms not composable");
    std::vector<size_t> m(phi.src.order());
    for (size_t g = 0; g < m.size(); ++g) m[g] = psi.map[phi.map[g]];
    return GroupHom{phi.src, psi.dst, std::move(m)};
}

std::vector<GroupHom> all_homs(const FiniteGroup& src, const FiniteGroup& dst) {
    double total = 1;
    for (size_t g = 0; g < src.order(); ++g) total *= double(dst.order());
    if (total > double(caps().max_enumeration))
        throw TooLarge("hom enumeration |dst|^|src| exceeds the cap of " +
                       std::to_string(caps().max_enumeration));
    std::vector<GroupHom> out;
    std::vector<size_t> map(src.order(), 0);
    for (;;) {
        bool ok = map[src.unit()] == dst.unit();
        for (size_t a = 0; a < src.order() && ok; ++a)
            for (size_t b = 0; b < src.order() && ok; ++b)
                ok = map[src.mul(a, b)] == dst.mul(map[a], map[b]);
        if (ok) out.push_back(GroupHom{src, dst, map});
        size_t k = 0;
        while (k < map.size() && ++map[k] == dst.order()) map[k++] = 0;
        if (k == map.size()) break;
    }
    return out;
}

GModule restrict_module(const GroupHom& phi, const GModule& M) {
    if (!(M.group() == phi.dst)) throw TypeMismatch("restrict_module: module is not over the hom target");
    std::vector<Matrix> act;
    for (size_t g = 0; g < phi.src.order(); ++g) act.push_back(M.action(phi(g)));
    return GModule::validate(phi.src, M.space(), std::move(act));
}

namespace {

size_t pow_size(size_t base, size_t e) {
    size_t v = 1;
    for (size_t i = 0; i < e; ++i) {
        if (v > (size_t(1) << 40) / std::max<size_t>(base, 1))
            throw CapExceeded("bar complex dimension overflow");
        v *= base;
    }
    return v;
}

} // namespace

CochainComplex bar_complex(const FiniteGroup& G, const GModule& M, size_t q_max) {
    if (!(M.group() == G)) throw TypeMismatch("bar_complex: module is over a different group");
    if (G.order() > caps().max_group_order)
        throw CapExceeded("group order " + std::to_string(G.order()) + " exceeds the cap of " +
                          std::to_string(caps().max_group_order));
    size_t n = G.order(), m = M.space().dim;
    {
        size_t top = pow_size(n, q_max) * std::max<size_t>(m, 1);
        size_t prev = q_max ? pow_size(n, q_max - 1) * std::max<size_t>(m, 1) : 0;
        if (top > 200000 || (prev && top > 0 && top * prev > 80000000))
            throw CapExceeded("bar complex too large: C^" + std::to_string(q_max) + " has dimension " +
                              std::to_string(top));
    }

    CochainComplex C;
    C.ring = M.space().ring;
    bool presented = M.space().presented();
    for (size_t q = 0; q <= q_max; ++q) {
        size_t tuples = pow_size(n, q);
        C.dims.push_back(tuples * m);
        if (presented) {
            std::vector<mpz_class> tor;
            tor.reserve(tuples * m);
            for (size_t t = 0; t < tuples; ++t)
                for (const auto& v : M.space().torsion) tor.push_back(v);
            C.torsion.push_back(std::move(tor));
        }
    }

    // tuple index: g_1 most significant
    for (size_t q = 0; q + 1 <= q_max; ++q) {
        size_t rows_tuples = pow_size(n, q + 1);
        Matrix d(C.ring, C.dims[q + 1], C.dims[q]);
        long rt = long(rows_tuples);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (long ti = 0; ti < rt; ++ti) {
            // decode (g_1, ..., g_{q+1})
            std::vector<size_t> g(q + 1);
            size_t rest = size_t(ti);
            for (size_t i = q + 1; i-- > 0;) {
                g[i] = rest % n;
                rest /= n;
            }
            size_t row = size_t(ti) * m;
            auto tuple_index = [&](const std::vector<size_t>& t) {
                size_t ix = 0;
                for (size_t v : t) ix = ix * n + v;
                return ix;
            };
            // front action by g_1
            {
                std::vector<size_t> t(g.begin() + 1, g.end());
                d.add_block(row, tuple_index(t) * m, M.action(g[0]), 1);
            }
            // merges
            for (size_t i = 1; i <= q; ++i) {
                std::vector<size_t> t;
                for (size_t k = 0; k < q + 1; ++k) {
                    if (k == i - 1) {
                        t.push_back(G.mul(g[i - 1], g[i]));
                        ++k;
                    } else {
                        t.push_back(g[k]);
                    }
                }
                d.add_block(row, tuple_index(t) * m, Matrix::identity(C.ring, m), (i % 2 == 0) ? 1 : -1);
            }
            // drop the back
            {
                std::vector<size_t> t(g.begin(), g.end() - 1);
                d.add_block(row, tuple_index(t) * m, Matrix::identity(C.ring, m),
                            ((q + 1) % 2 == 0) ? 1 : -1);
            }
        }
        C.diff.push_back(std::move(d));
    }
    C.validate();
    return C;
}

Matrix derivations(const FiniteGroup& G, const GModule& M) {
    if (!M.space().ring.is_field()) throw NotAField("derivations solves over the coefficient field");
    size_t n = G.order(), m = M.space().dim;
    Matrix sys(M.space().ring, n * n * m, n * m);
    for (size_t g = 0; g < n; ++g)
        for (size_t h = 0; h < n; ++h) {
            size_t row = (g * n + h) * m;
            sys.add_block(row, G.mul(g, h) * m, Matrix::identity(M.space().ring, m), 1);
            sys.add_block(row, h * m, M.action(g), -1);
            sys.add_block(row, g * m, Matrix::identity(M.space().ring, m), -1);
        }
    return kernel_basis(sys);
}

std::vector<FgAbelianGroup> group_cohomology(const FiniteGroup& G, const GModule& M, size_t q_max) {
    CochainComplex C = bar_complex(G, M, q_max + 1);
    auto h = complex_cohomology(C);
    h.resize(q_max + 1);
    return h;
}

size_t fixed_subspace_dim(const GModule& M) {
    if (!M.space().ring.is_field()) throw NotAField("fixed_subspace_dim over a field module");
    size_t m = M.space().dim;
    const FiniteGroup& G = M.group();
    Matrix sys(M.space().ring, G.order() * m, m);
    for (size_t g = 0; g < G.order(); ++g) {
        sys.add_block(g * m, 0, M.action(g), 1);
        sys.add_block(g * m, 0, Matrix::identity(M.space().ring, m), -1);
    }
    return kernel_basis(sys).cols();
}

} // namespace homcat
