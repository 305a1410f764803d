#include "g2/kummer.hpp"

namespace g2 {

// Duplication forms: delta_i has bidegree (12 + i, 4) in (coefficients, coordinates).
const std::vector<DeltaTerm>& delta_terms() {
    static const std::vector<DeltaTerm> table = {
        // delta_1
        {1, 4, {2, 0, 0, 1, 4, 0, 0, 0}},
        {1, 8, {0, 0, 2, 0, 3, 1, 0, 0}},
        {1, -32, {0, 1, 0, 1, 3, 1, 0, 0}},
        {1, -8, {1, 0, 0, 1, 2, 2, 0, 0}},
        {1, 4, {0, 0, 0, 1, 0, 4, 0, 0}},
        {1, -16, {1, 0, 0, 1, 3, 0, 1, 0}},
        {1, -4, {1, 0, 1, 0, 2, 1, 1, 0}},
        {1, -16, {0, 0, 0, 1, 1, 2, 1, 0}},
        {1, 4, {0, 0, 1, 0, 0, 3, 1, 0}},
        {1, 16, {0, 0, 0, 1, 2, 0, 2, 0}},
        {1, -8, {0, 0, 1, 0, 1, 1, 2, 0}},
        {1, 4, {0, 1, 0, 0, 0, 2, 2, 0}},
        {1, 4, {1, 0, 0, 0, 0, 1, 3, 0}},
        {1, 4, {1, 0, 1, 0, 3, 0, 0, 1}},
        {1, -32, {0, 0, 0, 1, 2, 1, 0, 1}},
        {1, -4, {0, 0, 1, 0, 1, 2, 0, 1}},
        {1, -8, {0, 0, 1, 0, 2, 0, 1, 1}},
        {1, -8, {0, 1, 0, 0, 1, 1, 1, 1}},
        {1, -4, {1, 0, 0, 0, 1, 0, 2, 1}},
        {1, 8, {0, 0, 0, 0, 0, 0, 3, 1}},
        {1, 4, {0, 1, 0, 0, 2, 0, 0, 2}},
        {1, -4, {0, 0, 0, 0, 0, 1, 1, 2}},
        {1, 4, {0, 0, 0, 0, 1, 0, 0, 3}},
        // delta_2
        {2, 1, {1, 0, 2, 0, 4, 0, 0, 0}},
        {2, -4, {1, 1, 0, 1, 4, 0, 0, 0}},
        {2, 16, {0, 0, 0, 2, 4, 0, 0, 0}},
        {2, -4, {2, 0, 0, 1, 3, 1, 0, 0}},
        {2, 16, {0, 0, 1, 1, 3, 1, 0, 0}},
        {2, 4, {0, 0, 2, 0, 2, 2, 0, 0}},
        {2, -4, {1, 0, 0, 1, 1, 3, 0, 0}},
        {2, -6, {2, 0, 1, 0, 3, 0, 1, 0}},
        {2, 16, {0, 0, 2, 0, 3, 0, 1, 0}},
        {2, -32, {0, 1, 0, 1, 3, 0, 1, 0}},
        {2, 16, {0, 1, 1, 0, 2, 1, 1, 0}},
        {2, -20, {1, 0, 0, 1, 2, 1, 1, 0}},
        {2, -8, {1, 0, 1, 0, 1, 2, 1, 0}},
        {2, 8, {0, 0, 0, 1, 0, 3, 1, 0}},
        {2, 5, {3, 0, 0, 0, 2, 0, 2, 0}},
        {2, 16, {0, 2, 0, 0, 2, 0, 2, 0}},
        {2, -14, {1, 0, 1, 0, 2, 0, 2, 0}},
        {2, -12, {1, 1, 0, 0, 1, 1, 2, 0}},
        {2, 32, {0, 0, 0, 1, 1, 1, 2, 0}},
        {2, 4, {0, 0, 1, 0, 0, 2, 2, 0}},
        {2, -6, {2, 0, 0, 0, 1, 0, 3, 0}},
        {2, 16, {0, 0, 1, 0, 1, 0, 3, 0}},
        {2, 1, {1, 0, 0, 0, 0, 0, 4, 0}},
        {2, 4, {1, 0, 0, 1, 3, 0, 0, 1}},
        {2, 2, {1, 0, 1, 0, 2, 1, 0, 1}},
        {2, 8, {0, 0, 0, 1, 1, 2, 0, 1}},
        {2, 4, {0, 0, 1, 0, 0, 3, 0, 1}},
        {2, -12, {1, 1, 0, 0, 2, 0, 1, 1}},
        {2, -16, {0, 0, 0, 1, 2, 0, 1, 1}},
        {2, -10, {2, 0, 0, 0, 1, 1, 1, 1}},
        {2, 16, {0, 0, 1, 0, 1, 1, 1, 1}},
        {2, 8, {0, 1, 0, 0, 0, 2, 1, 1}},
        {2, 16, {0, 1, 0, 0, 1, 0, 2, 1}},
        {2, 2, {1, 0, 0, 0, 0, 1, 2, 1}},
        {2, 4, {0, 0, 1, 0, 2, 0, 0, 2}},
        {2, 8, {0, 1, 0, 0, 1, 1, 0, 2}},
        {2, 5, {1, 0, 0, 0, 0, 2, 0, 2}},
        {2, -8, {1, 0, 0, 0, 1, 0, 1, 2}},
        {2, 4, {0, 0, 0, 0, 0, 0, 2, 2}},
        {2, 4, {0, 0, 0, 0, 0, 1, 0, 3}},
        // delta_3
        {3, 4, {0, 1, 2, 0, 4, 0, 0, 0}},
        {3, -16, {0, 2, 0, 1, 4, 0, 0, 0}},
        {3, 8, {1, 0, 1, 1, 4, 0, 0, 0}},
        {3, 4, {1, 0, 2, 0, 3, 1, 0, 0}},
        {3, -16, {1, 1, 0, 1, 3, 1, 0, 0}},
        {3, -32, {0, 0, 0, 2, 3, 1, 0, 0}},
        {3, -8, {0, 0, 1, 1, 2, 2, 0, 0}},
        {3, 4, {0, 0, 2, 0, 1, 3, 0, 0}},
        {3, -16, {0, 1, 0, 1, 1, 3, 0, 0}},
        {3, -8, {2, 0, 0, 1, 3, 0, 1, 0}},
        {3, -16, {0, 0, 1, 1, 3, 0, 1, 0}},
        {3, -8, {0, 0, 2, 0, 2, 1, 1, 0}},
        {3, -24, {1, 0, 0, 1, 1, 2, 1, 0}},
        {3, -8, {0, 1, 1, 0, 2, 0, 2, 0}},
        {3, 24, {1, 0, 0, 1, 2, 0, 2, 0}},
        {3, -4, {1, 0, 1, 0, 1, 1, 2, 0}},
        {3, 12, {0, 0, 0, 1, 0, 2, 2, 0}},
        {3, -16, {0, 0, 0, 1, 1, 0, 3, 0}},
        {3, 8, {0, 0, 1, 0, 0, 1, 3, 0}},
        {3, 4, {0, 1, 0, 0, 0, 0, 4, 0}},
        {3, 8, {0, 0, 2, 0, 3, 0, 0, 1}},
        {3, -32, {0, 1, 0, 1, 3, 0, 0, 1}},
        {3, -24, {1, 0, 0, 1, 2, 1, 0, 1}},
        {3, -8, {0, 0, 0, 1, 0, 3, 0, 1}},
        {3, -4, {1, 0, 1, 0, 2, 0, 1, 1}},
        {3, -24, {0, 0, 0, 1, 1, 1, 1, 1}},
        {3, -4, {0, 0, 1, 0, 0, 2, 1, 1}},
        {3, -8, {0, 0, 1, 0, 1, 0, 2, 1}},
        {3, 4, {1, 0, 0, 0, 0, 0, 3, 1}},
        {3, -12, {0, 0, 0, 1, 2, 0, 0, 2}},
        {3, -4, {0, 0, 1, 0, 1, 1, 0, 2}},
        {3, 4, {0, 0, 0, 0, 0, 0, 1, 3}},
        // delta_4
        {4, 1, {2, 0, 2, 0, 4, 0, 0, 0}},
        {4, -2, {0, 0, 3, 0, 4, 0, 0, 0}},
        {4, -4, {2, 1, 0, 1, 4, 0, 0, 0}},
        {4, 8, {0, 1, 1, 1, 4, 0, 0, 0}},
        {4, -16, {1, 0, 0, 2, 4, 0, 0, 0}},
        {4, -8, {0, 1, 2, 0, 3, 1, 0, 0}},
        {4, 32, {0, 2, 0, 1, 3, 1, 0, 0}},
        {4, -16, {1, 0, 1, 1, 3, 1, 0, 0}},
        {4, -2, {1, 0, 2, 0, 2, 2, 0, 0}},
        {4, 8, {1, 1, 0, 1, 2, 2, 0, 0}},
        {4, 16, {0, 0, 0, 2, 2, 2, 0, 0}},
        {4, 1, {0, 0, 2, 0, 0, 4, 0, 0}},
        {4, -4, {0, 1, 0, 1, 0, 4, 0, 0}},
        {4, -4, {1, 0, 2, 0, 3, 0, 1, 0}},
        {4, 16, {1, 1, 0, 1, 3, 0, 1, 0}},
        {4, 32, {0, 0, 0, 2, 3, 0, 1, 0}},
        {4, 8, {2, 0, 0, 1, 2, 1, 1, 0}},
        {4, 16, {0, 0, 1, 1, 2, 1, 1, 0}},
        {4, -8, {1, 0, 0, 1, 0, 3, 1, 0}},
        {4, 12, {0, 0, 2, 0, 2, 0, 2, 0}},
        {4, -32, {0, 1, 0, 1, 2, 0, 2, 0}},
        {4, -8, {1, 0, 0, 1, 1, 1, 2, 0}},
        {4, -2, {1, 0, 1, 0, 0, 2, 2, 0}},
        {4, -4, {1, 0, 1, 0, 1, 0, 3, 0}},
        {4, -8, {0, 0, 0, 1, 0, 1, 3, 0}},
        {4, 1, {2, 0, 0, 0, 0, 0, 4, 0}},
        {4, -2, {0, 0, 1, 0, 0, 0, 4, 0}},
        {4, -8, {2, 0, 0, 1, 3, 0, 0, 1}},
        {4, -12, {0, 0, 2, 0, 2, 1, 0, 1}},
        {4, 48, {0, 1, 0, 1, 2, 1, 0, 1}},
        {4, 8, {1, 0, 0, 1, 1, 2, 0, 1}},
        {4, 16, {1, 0, 0, 1, 2, 0, 1, 1}},
        {4, 4, {1, 0, 1, 0, 1, 1, 1, 1}},
        {4, -16, {0, 0, 0, 1, 0, 2, 1, 1}},
        {4, -8, {0, 0, 0, 1, 1, 0, 2, 1}},
        {4, -12, {0, 0, 1, 0, 0, 1, 2, 1}},
        {4, -8, {0, 1, 0, 0, 0, 0, 3, 1}},
        {4, -2, {1, 0, 1, 0, 2, 0, 0, 2}},
        {4, 8, {0, 0, 0, 1, 1, 1, 0, 2}},
        {4, -2, {1, 0, 0, 0, 0, 0, 2, 2}},
        {4, 1, {0, 0, 0, 0, 0, 0, 0, 4}},
    };
    return table;
}

}  // namespace g2
