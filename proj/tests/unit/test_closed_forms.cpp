#include "flowvol/closed_forms.hpp"

#include "flowvol/lidskii.hpp"

#include <doctest.h>

using namespace flowvol;

TEST_SUITE("closed-forms") {
  TEST_CASE("Catalan numbers") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(3) == 5);
    CHECK(catalan(5) == 42);
  }

  TEST_CASE("Ehrhart-like closed forms") {
    CHECK(ehrhart_ps_closed(2, 1) == 1);
    CHECK(ehrhart_ps_closed(3, 2) == 7);
    CHECK(ehrhart_ps_closed(3, 1) == 2);
    CHECK(ehrhart_car_closed(3, 1) == 2);
    CHECK(ehrhart_car_closed(3, 2) == 7);
    CHECK(ehrhart_car_closed(4, 1) == 7);
    CHECK_THROWS_AS(ehrhart_ps_closed(1, 1), std::invalid_argument);
  }

  TEST_CASE("labeled path counts") {
    CHECK(ld_count_closed(3, 3, {0, 1, 1, 1}) == 16);
    CHECK(ld_count_closed(2, 1, {0, 2}) == 2);
    CHECK(ld_count_closed(0, 2, {0, 0, 0}) == 1);
    CHECK(ld_count_by_zeros(1, 2, 0) == 2);
    CHECK(ld_count_by_zeros(2, 2, 0) == 7);
    for (int n = 0; n <= 6; ++n) {
      CHECK(ld_count_by_zeros(n, 2, n) == catalan(n));
    }
    CHECK(dld_count_closed(3, 1) == 7);
    CHECK(dld_count_closed(2, 1) == 2);
    CHECK(dld_count_via_sum(2, 1) == 7);
    CHECK(dld_count_via_sum(1, 1) == 2);
    CHECK(dld_count_via_sum(0, 3) == 1);
    CHECK(dld_count_via_sum(2, 3) == dld_count_closed(3, 3));
    CHECK(prefix_count_closed(2, 1, 1, {1, 0}) == 2);
    CHECK(prefix_count_closed(4, 4, 2, {0, 0, 0}) == 1);
    CHECK(prefix_count_closed(3, 1, 2, {1, 1, 0}) == 8);
    CHECK_THROWS(ld_count_closed(2, 1, {1, 0}));
  }

  TEST_CASE("coefficient B") {
    CHECK(coeff_B(3, 2, 2) == 1);
    CHECK(coeff_B(4, 1, 1) == 16);
    CHECK(coeff_B(5, 2, 5) == 1);
    for (int n = 1; n <= 7; ++n) {
      for (int k = 1; k <= n; ++k) {
        for (int m = k; m <= n; ++m) {
          CHECK(coeff_B(n, k, m) == coeff_B_sum(n, k, m));
        }
      }
    }
  }

  TEST_CASE("coefficient A_{k,m}") {
    CHECK(coeff_A_km(2, 3, {1, 1}) == 7);
    CHECK(coeff_A_km(2, 1, {1, 1}) == 0);
    // The defining sum at (1,1,1), m = 3 is 16; the stated three-variable
    // formula gives 18, the corrected one 16.
    CHECK(coeff_A_km(3, 3, {1, 1, 1}) == 16);
    CHECK(coeff_A3_printed(3, 1, 1, 1) == 18);
    CHECK(coeff_A3_corrected(3, 1, 1, 1) == 16);
    for (int m = 0; m <= 8; ++m) {
      for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
          CHECK(coeff_A_km(2, m, {a, b}) == coeff_A2_closed(m, a, b));
          for (int c = 1; c <= 3; ++c) {
            CHECK(coeff_A_km(3, m, {a, b, c}) == coeff_A3_corrected(m, a, b, c));
          }
        }
      }
    }
  }

  TEST_CASE("coefficient A(p,q,r)") {
    CHECK(coeff_A_pqr(3, 1, 1, 1) == 1);
    CHECK(coeff_A_pqr(4, 2, 1, 1) == 5);
    CHECK(coeff_A_pqr(4, 1, 2, 1) == 2);
    for (int n = 3; n <= 6; ++n) {
      for (int p = 1; p <= n - 2; ++p) {
        for (int q = 1; p + q <= n - 1; ++q) {
          const int r = n - p - q;
          CHECK(coeff_A_pqr(n, p, q, r) == coeff_A_pqr_kostant(n, p, q, r));
          CHECK(coeff_A_pqr(n, p, q, r) == coeff_A_pqr_dyck(n, p, q, r));
        }
      }
    }
    // r = 0 has only the defining sums
    CHECK(coeff_A_pqr_kostant(4, 2, 2, 0) == coeff_A_pqr_dyck(4, 2, 2, 0));
    CHECK_THROWS_AS(coeff_A_pqr(4, 2, 2, 0), std::invalid_argument);
  }

  TEST_CASE("volume identities: spot values") {
    VolumeParams p;
    p.n = 4;
    CHECK(ps_volume_closed("EQ2", p) == 16);
    CHECK(ps_volume_closed("EQ1", p) == 16);
    p.n = 2;
    p.a = 2;
    p.b = 5;
    p.c = 9;
    CHECK(ps_volume_closed("P53", p) == 24);
    VolumeParams q;
    q.n = 2;
    q.c = 5;
    CHECK(car_volume_closed("P58", q) == 3);
    q.n = 4;
    CHECK(car_volume_closed("EQ6", q) == 32);
    CHECK_THROWS_AS(ps_volume_closed("EQ99", q), std::invalid_argument);
    CHECK_THROWS_AS(car_volume_closed("EQ1", q), std::invalid_argument);
  }

  TEST_CASE("EQ6 at b = 0 collapses") {
    for (int n = 3; n <= 6; ++n) {
      VolumeParams p;
      p.n = n;
      p.a = 2;
      p.b = 0;
      CHECK(car_volume_closed("EQ6", p) == catalan(n - 2) * ipow(Integer(2), 2 * n - 4));
    }
  }

  TEST_CASE("identities against the Lidskii volume") {
    for (int n = 3; n <= 6; ++n) {
      for (int a = 1; a <= 3; ++a) {
        VolumeParams p;
        p.n = n;
        p.a = a;
        p.b = 2;
        p.c = 3;
        p.d = 1;
        for (const char *id : {"EQ1", "EQ2", "EQ3-ALT", "EQ7", "EQ8", "P53", "P55"}) {
          const VolumeInstance inst = ps_volume_instance(id, p);
          CAPTURE(id);
          CHECK(volume(inst.graph, inst.flow) == ps_volume_closed(id, p));
        }
        for (const char *id : {"EQ5-CORR", "EQ6", "EQCONJ-CORR", "P58"}) {
          const VolumeInstance inst = car_volume_instance(id, p);
          CAPTURE(id);
          CHECK(volume(inst.graph, inst.flow) == car_volume_closed(id, p));
        }
      }
    }
  }

  TEST_CASE("stated forms that disagree with the volume") {
    VolumeParams p;
    p.n = 5;
    p.a = 2;
    const auto eq5 = car_volume_instance("EQ5", p);
    CHECK(volume(eq5.graph, eq5.flow) != car_volume_closed("EQ5", p));
    const auto conj = car_volume_instance("EQCONJ", p);
    CHECK(volume(conj.graph, conj.flow) != car_volume_closed("EQCONJ", p));
    p.a = 1;
    p.b = 2;
    const auto eq3 = ps_volume_instance("EQ3", p);
    CHECK(volume(eq3.graph, eq3.flow) != ps_volume_closed("EQ3", p));
  }
}
