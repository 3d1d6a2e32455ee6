#include "homcat/catalog.hpp"

#include <array>

namespace homcat::cat {

FiniteCategory terminal() {
    return FiniteCategory::validate({"*"}, {{"id", 0, 0}}, {0}, {{0, 0, 0}});
}

FiniteCategory arrow() {
    std::vector<FiniteCategory::Mor> mors = {{"id0", 0, 0}, {"id1", 1, 1}, {"a", 0, 1}};
    std::vector<std::array<size_t, 3>> comp = {{0, 0, 0}, {1, 1, 1}, {2, 0, 2}, {1, 2, 2}};
    return FiniteCategory::validate({"0", "1"}, std::move(mors), {0, 1}, comp);
}

FiniteCategory discrete(size_t n) {
    std::vector<std::string> objects;
    std::vector<FiniteCategory::Mor> mors;
    std::vector<size_t> ids;
    std::vector<std::array<size_t, 3>> comp;
    for (size_t o = 0; o < n; ++o) {
        objects.push_back("o" + std::to_string(o));
        mors.push_back({"id" + std::to_string(o), o, o});
        ids.push_back(o);
        comp.push_back({o, o, o});
    }
    return FiniteCategory::validate(std::move(objects), std::move(mors), std::move(ids), comp);
}

FiniteCategory monoid(const std::vector<std::string>& names,
                      const std::vector<std::vector<size_t>>& table, size_t unit) {
    std::vector<FiniteCategory::Mor> mors;
    for (const auto& n : names) mors.push_back({n, 0, 0});
    std::vector<std::array<size_t, 3>> comp;
    for (size_t g = 0; g < names.size(); ++g)
        for (size_t f = 0; f < names.size(); ++f) comp.push_back({g, f, table[g][f]});
    return FiniteCategory::validate({"*"}, std::move(mors), {unit}, comp);
}

FiniteCategory cyclic_group(size_t k) {
    std::vector<std::string> names;
    std::vector<std::vector<size_t>> table(k, std::vector<size_t>(k));
    for (size_t i = 0; i < k; ++i) {
        names.push_back(i == 0 ? "e" : "t" + std::to_string(i));
        for (size_t j = 0; j < k; ++j) table[i][j] = (i + j) % k;
    }
    return monoid(names, table, 0);
}

FiniteCategory total_order(size_t n) {
    std::vector<std::string> objects;
    for (size_t o = 0; o < n; ++o) objects.push_back("o" + std::to_string(o));
    std::vector<FiniteCategory::Mor> mors;
    std::vector<size_t> ids(n);
    // one morphism m_{i,j} per pair i <= j
    std::vector<std::vector<size_t>> idx(n, std::vector<size_t>(n, size_t(-1)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            idx[i][j] = mors.size();
            mors.push_back({"m" + std::to_string(i) + std::to_string(j), i, j});
            if (i == j) ids[i] = idx[i][j];
        }
    std::vector<std::array<size_t, 3>> comp;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j)
            for (size_t k = j; k < n; ++k) comp.push_back({idx[j][k], idx[i][j], idx[i][k]});
    return FiniteCategory::validate(std::move(objects), std::move(mors), std::move(ids), comp);
}

} // namespace homcat::cat
