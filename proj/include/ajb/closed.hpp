#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ajb/diagram.hpp"
#include "ajb/kauffman.hpp"
#include "ajb/laurent.hpp"

namespace ajb {

/// Closed forms exist for 2 and 3 colors only; 1-colored diagrams reduce to
/// the classical bracket and anything above 3 needs the recursive engine.
struct UnsupportedColorCount : std::invalid_argument {
  explicit UnsupportedColorCount(int colors, int expected)
      : std::invalid_argument("closed form needs a diagram with " + std::to_string(expected) +
                              " colors, got " + std::to_string(colors)) {}
};

/// H_k = A^k + (-1)^{k+1} A^{-k}; equivalently A^k - (-A)^{-k}. H_0 = 0.
inline TiedLaurent h_poly(int k) {
  TiedLaurent p = TiedLaurent::a_power(k);
  p += TiedLaurent::monomial(k % 2 == 0 ? -1 : 1, -k);
  return p;
}

/// S_{a,b,c,d} = H_{a+d} H_{b+c} + (-1)^{a+b-1} A^{-a-b} H_c H_d.
inline TiedLaurent s_coeff(int a, int b, int c, int d) {
  TiedLaurent s = h_poly(a + d) * h_poly(b + c);
  const int sign = (a + b) % 2 == 0 ? -1 : 1;
  s += TiedLaurent::monomial(sign, -a - b) * h_poly(c) * h_poly(d);
  return s;
}

namespace detail {

/// Calls fn(assignment, k_sigma) for every map ids -> {0,1}.
template <class Fn>
void for_each_assignment(const std::vector<int>& ids, Fn&& fn) {
  const int n = static_cast<int>(ids.size());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    StateAssignment sigma;
    for (int i = 0; i < n; ++i) sigma[ids[i]] = (mask >> i) & 1;
    fn(sigma, n - 2 * std::popcount(mask));
  }
}

}  // namespace detail

/// 2-tied state sum:
///   (-1)^x <D_1><D_2> c  +  sum over sigma in {0,1}^X of H_{k_sigma} <D_sigma>
/// with X the dichromatic illegal crossings and D_1, D_2 the color
/// subdiagrams.
inline TiedLaurent aj2_closed(const TiedDiagram& d) {
  if (d.color_count() != 2) throw UnsupportedColorCount(d.color_count(), 2);
  const CrossingCensus census = d.classify();
  const std::vector<int> x_ids = census.x_ids();

  const TiedLaurent b1 = kauffman_bracket(d.subdiagram({1}).diagram);
  const TiedLaurent b2 = kauffman_bracket(d.subdiagram({2}).diagram);
  TiedLaurent total =
      TiedLaurent::monomial(x_ids.size() % 2 == 0 ? 1 : -1) * b1 * b2 * TiedLaurent::variable_c();

  detail::for_each_assignment(x_ids, [&](const StateAssignment& sigma, int k) {
    total += h_poly(k) * kauffman_bracket(d.apply_assignment(sigma));
  });
  return total;
}

/// Contributions of the seven leaf families of the canonical 3-tied tree,
/// with the monochromatic families Gamma_5..Gamma_7 collapsed into one
/// term since their leaves coincide.
struct GammaBreakdown {
  TiedLaurent gamma1;
  TiedLaurent gamma2;
  TiedLaurent gamma3;
  TiedLaurent gamma4;
  TiedLaurent m_contribution;
  TiedLaurent total;
};

/// 3-tied state sum. The trichromatic term uses the three color
/// subdiagrams; each dichromatic term reduces to the 2-tied sum on the
/// subdiagram without one color; the monochromatic term sums
/// S_{k_sigma,k_tau,k_mu,k_phi} <D_{sigma u tau u mu u phi}> over the root
/// sets X_{1,2}, X_{1,3}, X_{2,3} and Y_{2,3} (the Y_{2,3} crossings are
/// the ones that turn illegal after a {1,3} merge).
inline GammaBreakdown aj3_closed(const TiedDiagram& d) {
  if (d.color_count() != 3) throw UnsupportedColorCount(d.color_count(), 3);
  const CrossingCensus census = d.classify();
  const int x12 = census.x(1, 2), x13 = census.x(1, 3), x23 = census.x(2, 3);
  const int x = x12 + x13 + x23;
  auto parity_sign = [](int n) { return TiedLaurent::monomial(n % 2 == 0 ? 1 : -1); };
  const TiedLaurent c = TiedLaurent::variable_c();

  const TiedLaurent b1 = kauffman_bracket(d.subdiagram({1}).diagram);
  const TiedLaurent b2 = kauffman_bracket(d.subdiagram({2}).diagram);
  const TiedLaurent b3 = kauffman_bracket(d.subdiagram({3}).diagram);

  GammaBreakdown out;
  out.gamma1 = parity_sign(x) * c.pow(2) * b1 * b2 * b3;

  // One dichromatic family: drop one color, then run the 2-tied sum part
  // over the X set of the restriction.
  auto dichromatic_term = [&](int dropped, const TiedLaurent& dropped_bracket, int sign_count) {
    std::set<int> keep{1, 2, 3};
    keep.erase(dropped);
    const TiedDiagram rest = d.subdiagram(keep).diagram;
    const std::vector<int> rest_x = rest.classify().x_ids();
    TiedLaurent sum;
    detail::for_each_assignment(rest_x, [&](const StateAssignment& sigma, int k) {
      sum += h_poly(k) * kauffman_bracket(rest.apply_assignment(sigma));
    });
    return parity_sign(sign_count) * c * dropped_bracket * sum;
  };
  out.gamma2 = dichromatic_term(3, b3, x13 + x23);
  out.gamma3 = dichromatic_term(2, b2, x12 + x23);
  out.gamma4 = dichromatic_term(1, b1, x12 + x13);

  const std::vector<int> s_ids = census.x_ids(1, 2);
  const std::vector<int> t_ids = census.x_ids(1, 3);
  const std::vector<int> u_ids = census.x_ids(2, 3);
  const std::vector<int> f_ids = census.y_ids(2, 3);
  detail::for_each_assignment(s_ids, [&](const StateAssignment& sigma, int ks) {
    detail::for_each_assignment(t_ids, [&](const StateAssignment& tau, int kt) {
      detail::for_each_assignment(u_ids, [&](const StateAssignment& mu, int ku) {
        detail::for_each_assignment(f_ids, [&](const StateAssignment& phi, int kf) {
          StateAssignment all = sigma;
          all.insert(tau.begin(), tau.end());
          all.insert(mu.begin(), mu.end());
          all.insert(phi.begin(), phi.end());
          out.m_contribution +=
              s_coeff(ks, kt, ku, kf) * kauffman_bracket(d.apply_assignment(all));
        });
      });
    });
  });

  out.total = out.gamma1 + out.gamma2 + out.gamma3 + out.gamma4 + out.m_contribution;
  return out;
}

/// Leaf and state counts of any resolution tree of a 2-tied diagram:
/// 2^z + x 2^m leaves, 2^z dichromatic states, and 2^m monochromatic
/// states when x > 0 (none otherwise).
struct TwoTiedCounts {
  BigInt leaves;
  BigInt dichromatic_states;
  BigInt monochromatic_states;
};

inline TwoTiedCounts count_2tied(const CrossingCensus& census) {
  if (census.color_count != 2)
    throw UnsupportedColorCount(census.color_count, 2);
  const int x = census.x(), z = census.z(), m = census.m();
  auto pow2 = [](int n) { return BigInt(1) << n; };
  TwoTiedCounts counts;
  counts.leaves = pow2(z) + BigInt(x) * pow2(m);
  counts.dichromatic_states = pow2(z);
  counts.monochromatic_states = x > 0 ? pow2(m) : BigInt(0);
  return counts;
}

/// Per-family leaf/state counts of the canonical 3-tied tree, plus the
/// aggregate state counts by color multiplicity. Empty families report
/// zero states.
struct FamilyCount {
  BigInt leaves;
  BigInt states;
};

struct ThreeTiedCounts {
  std::map<int, FamilyCount> families;  // keys 1..7
  BigInt trichromatic_states;
  BigInt dichromatic_states;
  BigInt monochromatic_states;
};

inline ThreeTiedCounts count_3tied_families(const CrossingCensus& census) {
  if (census.color_count != 3)
    throw UnsupportedColorCount(census.color_count, 3);
  const int x12 = census.x(1, 2), x13 = census.x(1, 3), x23 = census.x(2, 3);
  const int y12 = census.y(1, 2), y13 = census.y(1, 3), y23 = census.y(2, 3);
  const int z = census.z(), m = census.m();
  auto pow2 = [](int n) { return BigInt(1) << n; };
  auto family = [&](BigInt multiplicity, int state_exp) {
    FamilyCount f;
    f.leaves = multiplicity * pow2(state_exp);
    f.states = multiplicity > 0 ? pow2(state_exp) : BigInt(0);
    return f;
  };

  ThreeTiedCounts counts;
  counts.families[1] = FamilyCount{pow2(z), pow2(z)};
  counts.families[2] = family(x12, x12 + y12 + z);
  counts.families[3] = family(x13, x13 + y13 + z);
  counts.families[4] = family(x23, x23 + y23 + z);
  counts.families[5] = family(BigInt(x12) * x13, m);
  counts.families[6] = family(BigInt(x12) * x23, m);
  counts.families[7] = family(BigInt(x13) * y23, m);

  counts.trichromatic_states = pow2(z);
  auto alpha = [](int xij) { return xij > 0 ? 1 : 0; };
  counts.dichromatic_states = (BigInt(alpha(x12)) * pow2(x12 + y12) +
                               BigInt(alpha(x13)) * pow2(x13 + y13) +
                               BigInt(alpha(x23)) * pow2(x23 + y23)) *
                              pow2(z);
  const bool any_mono =
      counts.families[5].leaves > 0 || counts.families[6].leaves > 0 ||
      counts.families[7].leaves > 0;
  counts.monochromatic_states = any_mono ? pow2(m) : BigInt(0);
  return counts;
}

/// All 2^x pairs (sigma, D_sigma) with sigma over the dichromatic illegal
/// crossings of a 2-tied diagram. D_sigma is monochromatic unless X is
/// empty, in which case the one pair is ({}, d).
inline std::vector<std::pair<StateAssignment, TiedDiagram>> pseudo_states(const TiedDiagram& d) {
  if (d.color_count() != 2) throw UnsupportedColorCount(d.color_count(), 2);
  const std::vector<int> x_ids = d.classify().x_ids();
  std::vector<std::pair<StateAssignment, TiedDiagram>> out;
  detail::for_each_assignment(x_ids, [&](const StateAssignment& sigma, int) {
    out.emplace_back(sigma, d.apply_assignment(sigma));
  });
  return out;
}

}  // namespace ajb
