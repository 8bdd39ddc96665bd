#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace rx3 {

using BigInt = boost::multiprecision::cpp_int;

/// Forbidden-triple parameters: star K_{1,r}, hairy clique K_s^h, path P_l.
struct BoundParams {
  int r = 3;
  int s = 3;
  int l = 5;

  /// Throws InputError unless r >= 3, s >= 3 and l >= 5.
  void validate() const;
};

/// binomial(a+b-2, a-1): the Erdos-Szekeres upper bound on R(a,b).
BigInt ramsey_upper(int a, int b);

/// Strict upper bound on the independence number of the i-th distance
/// sphere around any vertex of a connected (K_{1,r}, K_s^h)-free graph:
///   alpha0(r,s,1) = r
///   alpha0(r,s,i) = (r-2) * ramsey_upper(s(2r-3), alpha0(r,s,i-1))
/// Values are memoized; safe to call concurrently.
BigInt alpha0_bound(int r, int s, int i);

/// Sum over i = 2..l-2 of ramsey_upper(s(2r-3), alpha0(r,s,i-1)).
BigInt ramsey_layer_sum(const BoundParams& p);

/// (r-2)(ramsey_layer_sum + 1) + 2(l-1): the additive constant over sdiam3
/// for connected (K_{1,r}, K_s^h, P_l)-free graphs.
BigInt steiner_rainbow_constant(const BoundParams& p);

/// r + (r-2) * ramsey_layer_sum + 2(l-2): the intermediate bound that the
/// final constant relaxes. Reported, not asserted.
BigInt steiner_rainbow_intermediate(const BoundParams& p);

}  // namespace rx3
