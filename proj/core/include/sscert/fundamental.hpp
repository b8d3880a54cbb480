#pragma once
// The approximate fundamental system.  The growing branch is built as
// (slow free solution) x (Chebyshev corrector A in the far-field chart
// zA = (s-4)/(s+4)), with A's 60 coefficients obtained by exact rational
// collocation of the conjugated equation at 59 frozen nodes plus one
// normalization row, then rounded to 48-bit dyadics with the leading
// coefficient re-adjusted so the origin slope keeps its seeded value
// exactly.  The bounded branch is (1 + 2/y^2) x (Chebyshev polynomial B in
// z = (y-2)/(y+2)) whose two tail coefficients are solved in closed form
// from the flatness conditions B'(+-1) = 0.

#include <vector>

#include "sscert/dawson.hpp"
#include "sscert/profile.hpp"
#include "sscert/tables.hpp"

namespace sscert {

struct FundamentalSystem {
  // Growing branch.
  Rat seed_slope;              // exact alternating sum of the seeded table
  std::vector<Rat> w0_refined; // 60 Chebyshev coefficients of A in zA
  Poly a_z;                    // A as a polynomial in zA, degree 59
  FactoredRatFn a_s;           // A(s)
  FactoredRatFn a_s_d;         // dA/ds
  FactoredRatFn m_s;           // M(s) = 3 (Ntil/s) A(s):  w0~ = e^{s/4} y M
  FactoredRatFn m_d, m_dd;     // M', M''
  FactoredRatFn dm_s;          // DM = M + 2 s M' + (s/2) M:  w0~' = e^{s/4} DM

  // Bounded branch.
  Rat d36, d37;                // solved tail coefficients
  std::vector<Rat> w1_full;    // 38 Chebyshev coefficients of B
  Poly b_z, b_z_d, b_z_dd;     // B and z-derivatives, chart z = (y-2)/(y+2)
};

// The 59 frozen collocation nodes (exact dyadics with denominator 4096,
// descending, antisymmetric, middle node 0).
const std::vector<Rat>& collocation_nodes();

FundamentalSystem build_fundamental(const SeedTables& tables,
                                    const DawsonCore& dawson,
                                    const ProfileCore& profile);

}  // namespace sscert
