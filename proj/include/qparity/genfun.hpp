#pragma once

#include <cstddef>

#include "qparity/series.hpp"

namespace qparity {

/* Generating function of p_{t,t}(n):
 *     1/(q;q)_inf * sum_{n>=0} (-1)^n q^{t n(n+1)/2}
 * Valid for every t >= 1. */
TruncatedSeries ptt_series(std::size_t t, std::size_t order);

/* p_{t,t}(n) mod 2 from the product (q^t;q^t)^3 / (q;q), which is what the
 * alternating sum becomes over Z/2. Odd t only; throws std::invalid_argument
 * otherwise. */
TruncatedSeries ptt_mod2_series(std::size_t t, std::size_t order);

/// t-core generating function (q^t;q^t)^t / (q;q), t >= 2.
TruncatedSeries acore_series(std::size_t t, std::size_t order, Domain domain = Domain::Integers);

/* Checks, through the given order of the dissected series,
 *
 *   sum p_{t,t}(2t n + r) q^n  ==  (q;q)^{-(t-3)/2} * sum a_t(2t n + r) q^n   (mod 2)
 *
 * for one residue 0 <= r < 2t. Odd t >= 3 only. */
bool dissection_identity_check(std::size_t t, std::size_t residue, std::size_t order);

}  // namespace qparity
