#pragma once

#include <cstddef>

namespace homcat {

// Desk-scale guard rails. Exceeding a cap raises CapExceeded (or TooLarge for
// enumeration searches); the CLI can loosen them with --caps.
struct Caps {
    size_t max_morphisms = 64;        // finite category size
    size_t max_group_order = 8;       // bar complexes stay |G|^q <= 4096 with q <= 4
    size_t max_bar_degree = 4;
    size_t max_enumeration = 1000000; // brute-force searches (psi sections etc.)
    size_t max_poly_degree = 6;       // symbolic psi-ring degree cap
    size_t max_bicomplex_cells = 4096;
};

Caps& caps(); // process-wide, mutable

} // namespace homcat
