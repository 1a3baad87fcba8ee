#pragma once

// Closed-form product formulas and the defining sums they are checked
// against.

#include "flowvol/graph.hpp"
#include "flowvol/integer.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace flowvol {

Integer catalan(std::int64_t j);

/// E_{PS_{n+1}}(k) = C((k+1)n-2, n) / (kn-1).
Integer ehrhart_ps_closed(int n, int k);
/// E_{Car_{n+1}}(k) = C(kn+2n-5, n-1) C(n+k-3, k-1) / (kn+n-3).
Integer ehrhart_car_closed(int n, int k);

/// |LD_n(k; a_0..a_k)| = prod ((n+1, a_i)) / (n+1).
Integer ld_count_closed(int n, int k, const std::vector<int> &composition);
/// |LD_n(k, d)| = ((n+1, d)) ((k(n+1), n-d)) / (n+1).
Integer ld_count_by_zeros(int n, int k, int d);
/// |DLD_{n-1}(k)|.
Integer dld_count_closed(int n, int k);
/// |DLD_n(k)| as sum_d |LD_n(k, d)| ((k, n+d)).
Integer dld_count_via_sum(int n, int k);
/// |Dyck_{n,i}(k; a_0..a_k)| = (i+1) prod ((n+1, a_j)) / (n+1).
Integer prefix_count_closed(int n, int i, int k,
                            const std::vector<int> &composition);

/// B_{n,k,m} = (m-k+1)(n-k+1)^{n-m-1}, and 1 when m = n.
Integer coeff_B(int n, int k, int m);
/// B_{n,k,m} as its multinomial sum over dominating compositions.
Integer coeff_B_sum(int n, int k, int m);

/// A_{k,m}(a_1..a_k): sum over s of m dominating (1^k) of
/// multinomial(m; s) prod a_i^{s_i}.
Integer coeff_A_km(int k, int m, const std::vector<Integer> &values);
/// (a+b)^m - b^m for m >= 2, else 0.
Integer coeff_A2_closed(int m, const Integer &a, const Integer &b);
/// (a+b+c)^m - (b+c)^m - a c^{m-1}, the stated form; disagrees with the sum.
Integer coeff_A3_printed(int m, const Integer &a, const Integer &b,
                         const Integer &c);
/// (a+b+c)^m - (b+c)^m - m a c^{m-1} for m >= 3, else 0.
Integer coeff_A3_corrected(int m, const Integer &a, const Integer &b,
                           const Integer &c);

/// A(p,q,r) closed form; needs p, q, r >= 1 and n = p+q+r.
Integer coeff_A_pqr(int n, int p, int q, int r);
/// A(p,q,r) through Kostant values of the restricted caracol graph.
Integer coeff_A_pqr_kostant(int n, int p, int q, int r);
/// A(p,q,r) through counts of run-constrained Dyck paths.
Integer coeff_A_pqr_dyck(int n, int p, int q, int r);

/// Parameters of a volume identity. n is the identity's own n; m is only
/// read by the EQ3 family.
struct VolumeParams {
  int n = 0;
  int m = 1;
  Integer a = 1;
  Integer b = 1;
  Integer c = 1;
  Integer d = 1;
};

/// Graph and net flow whose volume an identity claims to evaluate.
struct VolumeInstance {
  DirectedStepGraph graph;
  NetFlow flow;
};

/// Pitman-Stanley ids: EQ1 EQ2 EQ3 EQ3-ALT EQ7 EQ8 P53 P55.
const std::vector<std::string> &ps_volume_ids();
/// Caracol ids: EQ5 EQ5-CORR EQ6 EQCONJ EQCONJ-CORR P58.
const std::vector<std::string> &car_volume_ids();

/// Smallest n for which the identity is defined (EQ3 also needs n >= m+2).
int volume_min_n(std::string_view id);

/// Right-hand side of the identity, evaluated as written. Throws
/// std::invalid_argument on an unknown id or out-of-range n.
Integer ps_volume_closed(std::string_view id, const VolumeParams &p);
Integer car_volume_closed(std::string_view id, const VolumeParams &p);

VolumeInstance ps_volume_instance(std::string_view id, const VolumeParams &p);
VolumeInstance car_volume_instance(std::string_view id, const VolumeParams &p);

} // namespace flowvol
