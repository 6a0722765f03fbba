#include <doctest.h>

#include <cmath>

#include "rlsyn/bounds.hpp"

using namespace rlsyn::bounds;

TEST_CASE("fully on-demand conjunction provider costs") {
    CHECK(q_conj0(8) == 7.0);
    CHECK(l_conj0(8, 4) == 56.0);
    CHECK(d_conj0(8, 4) == 24.0);
}

TEST_CASE("budgeted conjunction bounds, exact at powers of two") {
    const BoundReport l = l_conj(8, 32, 4);
    CHECK(l.value == 288.0);
    CHECK(l.valid);

    const BoundReport d = d_conj(8, 32, 4);
    CHECK(d.value == 72.0);
    CHECK(d.valid);

    CHECK(q_conj(8, 32) == 39.0);
    CHECK_FALSE(l_conj(8, 16, 4).valid); // q = 2n sits outside the domain
    CHECK(l_conj(8, 17, 4).valid);
}

TEST_CASE("linear-form bounds are the factor-2 analogues") {
    CHECK(l_xor(8, 32, 4).value == 576.0);
    CHECK(d_xor(8, 32, 4).value == 144.0);
    CHECK(q_xor(8, 32) == 39.0);
}

TEST_CASE("storage threshold series") {
    CHECK(delta_threshold(8, 0) == 96.0);
    CHECK(delta_threshold(8, 1) == 192.0);
    CHECK(delta_threshold(8, 2) == 1536.0);
    CHECK(storage_levels_bound(8, 200) == 1);
    CHECK(storage_levels_bound(8, 50) == -1);
    CHECK(storage_levels_bound(8, 96) == 0);
}

TEST_CASE("on-demand factor") {
    const BoundReport f32 = ondemand_factor(8, 32);
    CHECK(f32.value == 64.0);
    CHECK(f32.valid);
    CHECK_FALSE(ondemand_factor(8, 16).valid);
}

TEST_CASE("whole-transformation bounds at the pinned point") {
    const BoundReport l = l_shannon_upper(8, 160);
    CHECK(l.value == 8448.0);
    CHECK(l.valid);

    const BoundReport d = d_shannon_upper(8, 160);
    CHECK(d.value == 2304.0);
    CHECK(d.valid);
}

TEST_CASE("validity flips exactly at q = 2n and q = 8n") {
    CHECK_FALSE(l_conj(8, 16, 1).valid);
    CHECK(l_conj(8, 16.5, 1).valid);
    CHECK_FALSE(d_conj(8, 16, 1).valid);

    CHECK_FALSE(l_shannon_upper(8, 64).valid);
    CHECK(l_shannon_upper(8, 64.5).valid);
    CHECK_FALSE(d_shannon_upper(8, 64).valid);
    CHECK(d_shannon_upper(8, 65).valid);
}

TEST_CASE("out-of-domain values degrade to infinity, never crash") {
    CHECK(std::isinf(l_shannon_upper(4, 20).value));
    CHECK(std::isinf(l_conj(8, 8, 1).value));
}
