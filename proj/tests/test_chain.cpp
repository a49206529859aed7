#include <doctest.h>

#include "oracles.hpp"

#include "dp1/chain_lattice.hpp"

using namespace dp1;

TEST_CASE("chain lattice construction") {
    ChainLattice L0 = build_chain_lattice(0);
    CHECK(L0.form == std::vector<std::vector<long long>>{{-1, 1}, {1, -1}});

    ChainLattice L1 = build_chain_lattice(1);
    CHECK(L1.form == std::vector<std::vector<long long>>{
                         {-1, 1, 0}, {1, -2, 1}, {0, 1, -1}});

    CHECK_THROWS_AS(build_chain_lattice(-1), std::domain_error);

    // n = 3: the determinant of the banded matrix, against a cofactor oracle
    ChainLattice L3 = build_chain_lattice(3);
    long long det = lattice_determinant(L3);
    CHECK(det == oracles::cofactor_determinant(L3.form));
    CHECK(det == 0);  // the fiber class spans the kernel
}

TEST_CASE("canonical identities for small n") {
    for (int n : {0, 1, 2, 3, 5, 16}) {
        ChainIdentityReport r = verify_canonical_identities(n);
        CAPTURE(n);
        CHECK(r.all_pass());
        CHECK(r.fiber_multiple == n + 1);
        CHECK(r.determinant == oracles::cofactor_determinant(build_chain_lattice(n).form));
    }
}

TEST_CASE("mutated lattice is caught") {
    ChainLattice L = build_chain_lattice(3);
    L.form[1][1] = -3;  // E_1^2 = -3 instead of -2
    ChainIdentityReport r = verify_canonical_identities(L);
    CHECK(!r.fiber_orthogonal);
    CHECK(!r.all_pass());
}

TEST_CASE("kernel has rank exactly one for all n up to 64") {
    for (int n = 0; n <= 64; ++n) {
        CHECK(lattice_kernel_dimension(build_chain_lattice(n)) == 1);
    }
}
