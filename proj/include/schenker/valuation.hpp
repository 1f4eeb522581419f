#pragma once

#include <cstdint>
#include <vector>

#include "schenker/arith.hpp"
#include "schenker/natural.hpp"

namespace schenker {

// Default number of prime-power levels probed by vp_general before it
// settles for a lower bound.
inline constexpr unsigned default_valuation_cap = 30;

// v_2(a_n) in closed form: 1 for odd n, n - s_2(n) for even n.
Natural v2_closed_form(const Natural& n);

// v_p(a_n) for p | n; equals v_p(n!) = (n - s_p(n)) / (p - 1).  Throws
// NotMultiple when p does not divide n.
Natural vp_multiple(std::uint64_t p, const Natural& n);

// v_p(a_n) for arbitrary n >= 1.  Uses the closed forms where they apply and
// otherwise probes p, p^2, ... up to p^cap, returning AtLeast(cap) when every
// probed level divides a_n.
ValuationResult vp_general(std::uint64_t p, const Natural& n,
                           unsigned cap = default_valuation_cap);

// v_37(a_n) in closed form: (n - s_37(n))/36 when 37 | n, 1 when
// n ≡ 25 (mod 37), 0 otherwise.
Natural v37_closed_form(const Natural& n);

// The residues r in {1, ..., p-1} with p | a_r.  Requires p prime.
std::vector<std::uint64_t> root_residues(std::uint64_t p);

} // namespace schenker
