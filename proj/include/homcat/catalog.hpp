#pragma once

#include "homcat/fincat.hpp"

namespace homcat::cat {

FiniteCategory terminal();
FiniteCategory arrow();                // 0 -> 1 plus identities
FiniteCategory discrete(size_t n);
// one object, morphisms = monoid elements; table[i][j] = index of i*j
FiniteCategory monoid(const std::vector<std::string>& names,
                      const std::vector<std::vector<size_t>>& table, size_t unit);
FiniteCategory cyclic_group(size_t k); // one-object category of C_k
FiniteCategory total_order(size_t n);  // objects o0 <= o1 <= ... <= o_{n-1}

} // namespace homcat::cat
