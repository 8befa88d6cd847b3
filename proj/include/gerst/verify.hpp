#pragma once

#include "gerst/bracket.hpp"

#include <string>
#include <vector>

namespace gerst {

struct Check {
    std::string name;
    bool passed = true;
    long cases = 0;
    std::string failure;  // first failing case

    void record(bool ok, const std::string& what);
};

// Identity suites on the small complexes.
Check check_d_squared(const SmallComplex::Ptr& cx, int max_degree);
Check check_contracting_homotopy(const SmallComplex::Ptr& cx, int max_degree);
Check check_phi_identity(const SmallComplex::Ptr& cx, int max_degree);
Check check_diagonal_chain_map(const SmallComplex::Ptr& cx, int max_degree);
/// F on the Taft tensor square equals F on the transported element, and psi commutes with d.
Check check_transport(int p, int max_degree, unsigned seed);
/// Counit, coassociativity and antipode axioms of T_p on basis monomials.
Check check_hopf_axioms(int p);

// Seeded property suites.
Check check_phi_antisymmetry(const SmallComplex::Ptr& cx, unsigned seed, int trials);
Check check_bar_antisymmetry(const SmallComplex::Ptr& cx, unsigned seed, int trials);
Check check_bar_jacobi(const SmallComplex::Ptr& cx, unsigned seed, int trials);
Check check_derivation_identity(const SmallComplex::Ptr& cx, unsigned seed, int trials);

/* One entry of a closed-form bracket table: the engine's bracket of two basis
 * cochains next to the closed form, both reduced modulo coboundaries. */
struct TableEntry {
    std::string family;  // "1,1", "1,2", "2,2"
    int i = 0, j = 0;
    SmallCochain f, g, value, expected;
    CohomClass cls, expected_cls;
    bool cocycle_inputs = false;
    bool matches = false;
};

/// [x^i xi_1^*, x^j xi_1^*], [x^i xi_1^*, x^j xi_2^*], [x^i xi_2^*, x^j xi_2^*] against the closed forms.
std::vector<TableEntry> small_a_table(int p);
/// [f_{xg^i}, f_{xg^j}], [f_{xg^i}, f_{g^j}], [f_{g^i}, f_{g^j}] against the closed forms.
std::vector<TableEntry> taft_table(int p);

}  // namespace gerst
