#pragma once

#include "matdec/core.hpp"

namespace matdec {

// U_{r,n}: X independent iff |X| <= r.  Ground ids are 1..n.
inline MatroidOracle uniform_oracle(int r, int n) {
    if (r < 0 || n < 0 || r > n) throw std::domain_error("need 0 <= r <= n");
    return {iota_ground(n, 1), [r](subset_t X) { return popcount(X) <= r; }};
}

}  // namespace matdec
