#include <catch2/catch.hpp>

#include "spawit/weyl.hpp"

using namespace spawit;

namespace {
const cplx kOmega = root_of_unity_power(1, 3);
const cplx kOmegaConj = root_of_unity_power(2, 3);
}  // namespace

TEST_CASE("weyl operator special cases") {
    CHECK(weyl_operator({0, 0}).max_abs_diff(ComplexMatrix::identity(3)) == 0.0);

    const ComplexMatrix w10 = weyl_operator({1, 0});
    CHECK(std::abs(w10(0, 0) - cplx(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(w10(1, 1) - kOmega) < 1e-15);
    CHECK(std::abs(w10(2, 2) - kOmegaConj) < 1e-15);
    CHECK(std::abs(w10(0, 1)) == 0.0);

    // W_11: |0> -> omega^2 |2>, |1> -> |0>, |2> -> omega |1>
    const ComplexMatrix w11 = weyl_operator({1, 1});
    CHECK(std::abs(w11(2, 0) - kOmegaConj) < 1e-15);
    CHECK(std::abs(w11(0, 1) - cplx(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(w11(1, 2) - kOmega) < 1e-15);
}

TEST_CASE("weyl operators are unitary for all nine indices") {
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
            const ComplexMatrix w = weyl_operator({k, l});
            CHECK((w.adjoint() * w).max_abs_diff(ComplexMatrix::identity(3)) <= 1e-13);
        }
}

TEST_CASE("weyl index validation") {
    CHECK_THROWS_AS(weyl_operator({3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(weyl_operator({0, -1}), std::invalid_argument);
    CHECK_THROWS_AS(weyl_operator({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("bell vectors match their listed amplitudes") {
    const double s = 1.0 / std::sqrt(3.0);

    const BellVector o10 = bell_vector({1, 0});  // (|00> + w|11> + w*|22>)/sqrt3
    CHECK(std::abs(o10.amplitudes[0] - s) < 1e-15);
    CHECK(std::abs(o10.amplitudes[4] - s * kOmega) < 1e-15);
    CHECK(std::abs(o10.amplitudes[8] - s * kOmegaConj) < 1e-15);

    const BellVector o20 = bell_vector({2, 0});  // (|00> + w*|11> + w|22>)/sqrt3
    CHECK(std::abs(o20.amplitudes[0] - s) < 1e-15);
    CHECK(std::abs(o20.amplitudes[4] - s * kOmegaConj) < 1e-15);
    CHECK(std::abs(o20.amplitudes[8] - s * kOmega) < 1e-15);

    const BellVector o11 = bell_vector({1, 1});  // (w*|02> + |10> + w|21>)/sqrt3
    CHECK(std::abs(o11.amplitudes[2] - s * kOmegaConj) < 1e-15);
    CHECK(std::abs(o11.amplitudes[3] - s) < 1e-15);
    CHECK(std::abs(o11.amplitudes[7] - s * kOmega) < 1e-15);
    CHECK(vec_norm(o11.amplitudes) == Approx(1.0).margin(1e-13));
}

TEST_CASE("bell vectors agree with the tensor-operator route") {
    std::vector<cplx> omega00(9, cplx(0.0, 0.0));
    for (int i = 0; i < 3; ++i) omega00[i * 3 + i] = 1.0 / std::sqrt(3.0);
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
            const std::vector<cplx> via_tensor =
                tensor(ComplexMatrix::identity(3), weyl_operator({k, l})).apply(omega00);
            const BellVector direct = bell_vector({k, l});
            for (int i = 0; i < 9; ++i)
                CHECK(std::abs(via_tensor[i] - direct.amplitudes[i]) < 1e-14);
        }
}

TEST_CASE("bell basis is orthonormal and complete") {
    std::vector<BellVector> basis;
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) basis.push_back(bell_vector({k, l}));

    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const cplx ip = vec_dot(basis[i].amplitudes, basis[j].amplitudes);
            CHECK(std::abs(ip - (i == j ? cplx(1.0, 0.0) : cplx(0.0, 0.0))) <= 1e-13);
        }

    ComplexMatrix sum(9, 9);
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) sum += bell_projector({k, l});
    CHECK(sum.max_abs_diff(ComplexMatrix::identity(9)) <= 1e-13);
}

TEST_CASE("bell projectors are rank-1 Hermitian idempotents") {
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
            const ComplexMatrix p = bell_projector({k, l});
            CHECK(p.trace().real() == Approx(1.0).margin(1e-13));
            CHECK(std::abs(p.trace().imag()) < 1e-14);
            CHECK(p.is_hermitian(1e-13));
            CHECK((p * p).max_abs_diff(p) <= 1e-12);
        }

    // P_00 fixes its own vector
    const BellVector o00 = bell_vector({0, 0});
    const std::vector<cplx> fixed = bell_projector({0, 0}).apply(o00.amplitudes);
    for (int i = 0; i < 9; ++i) CHECK(std::abs(fixed[i] - o00.amplitudes[i]) < 1e-14);

    // orthogonal projectors have zero overlap
    CHECK(std::abs((bell_projector({1, 0}) * bell_projector({2, 0})).trace()) <= 1e-14);
}

TEST_CASE("weyl construction generalizes to d = 2") {
    const ComplexMatrix x = weyl_operator({0, 1, 2});
    CHECK(std::abs(x(1, 0) - cplx(1.0, 0.0)) < 1e-15);  // shift
    CHECK(std::abs(x(0, 1) - cplx(1.0, 0.0)) < 1e-15);
    const ComplexMatrix z = weyl_operator({1, 0, 2});
    CHECK(std::abs(z(0, 0) - cplx(1.0, 0.0)) < 1e-15);  // clock
    CHECK(std::abs(z(1, 1) - cplx(-1.0, 0.0)) < 1e-12);
    const BellVector phi = bell_vector({0, 0, 2});
    CHECK(std::abs(phi.amplitudes[0] - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(phi.amplitudes[3] - 1.0 / std::sqrt(2.0)) < 1e-15);
}
