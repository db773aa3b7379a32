// Embedded realization tables: verified seed corpus covering the small
// ground sets the constructive engine leans on.

#include <cstddef>

namespace zsp {
namespace embedded {

struct RawTable {
    const char* key;
    const char* text;
};

const char* const kTable0 = R"ZSPRAW((0, 0, 1), (1, 0, 0), (3, 0, 1)
(0, 1, 0), (1, 0, 1), (3, 1, 1)
(2, 1, 0), (3, 0, 0), (3, 1, 0)
(0, 1, 1), (2, 0, 0), (2, 1, 1)
(1, 1, 0), (1, 1, 1), (2, 0, 1)
A partition for sets of sizes:  5*3  0*4  0*5

(0, 0, 1), (0, 1, 0), (0, 1, 1)
(1, 0, 0), (1, 0, 1), (1, 1, 0), (1, 1, 1)
(2, 0, 0), (2, 0, 1), (2, 1, 0), (2, 1, 1)
(3, 0, 0), (3, 0, 1), (3, 1, 0), (3, 1, 1)
A partition for sets of sizes:  1*3  3*4  0*5

(0, 0, 1), (0, 1, 0), (0, 1, 1)
(1, 0, 0), (1, 0, 1), (2, 0, 1)
(1, 1, 1), (2, 0, 0), (2, 1, 0), (3, 0, 1)
(1, 1, 0), (2, 1, 1), (3, 0, 0), (3, 1, 0), (3, 1, 1)
A partition for sets of sizes:  2*3  1*4  1*5

(0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 0, 0), (3, 0, 0)
(1, 1, 0), (1, 1, 1), (2, 0, 0), (2, 1, 0), (2, 1, 1)
(1, 0, 1), (2, 0, 1), (3, 0, 1), (3, 1, 0), (3, 1, 1)
A partition for sets of sizes:  0*3  0*4  3*5
)ZSPRAW";

const char* const kTable1 = R"ZSPRAW((0, 0, 0, 1), (0, 0, 1, 0), (0, 0, 1, 1)
(0, 1, 0, 0), (1, 0, 0, 0), (3, 1, 0, 0)
(0, 1, 1, 1), (1, 0, 0, 1), (3, 1, 1, 0)
(1, 0, 1, 0), (1, 0, 1, 1), (2, 0, 0, 1)
(1, 1, 0, 1), (1, 1, 1, 0), (2, 0, 1, 1)
(2, 0, 1, 0), (3, 0, 0, 0), (3, 0, 1, 0)
(2, 1, 0, 0), (3, 0, 1, 1), (3, 1, 1, 1)
(0, 1, 1, 0), (2, 0, 0, 0), (2, 1, 1, 0)
(0, 1, 0, 1), (1, 1, 0, 0), (3, 0, 0, 1)
(1, 1, 1, 1), (2, 1, 0, 1), (2, 1, 1, 1), (3, 1, 0, 1)
A partition for sets of sizes:  9*3  1*4  0*5

(0, 0, 0, 1), (0, 0, 1, 0), (0, 0, 1, 1)
(0, 1, 0, 0), (1, 0, 0, 0), (3, 1, 0, 0)
(0, 1, 1, 1), (1, 0, 0, 1), (3, 1, 1, 0)
(1, 0, 1, 0), (1, 0, 1, 1), (2, 0, 0, 1)
(1, 1, 0, 1), (1, 1, 1, 0), (2, 0, 1, 1)
(2, 0, 0, 0), (2, 0, 1, 0), (2, 1, 0, 0), (2, 1, 1, 0)
(1, 1, 0, 0), (1, 1, 1, 1), (3, 0, 0, 0), (3, 0, 1, 1)
(0, 1, 1, 0), (2, 1, 0, 1), (3, 0, 0, 1), (3, 0, 1, 0)
(0, 1, 0, 1), (2, 1, 1, 1), (3, 1, 0, 1), (3, 1, 1, 1)
A partition for sets of sizes:  5*3  4*4  0*5

(0, 0, 0, 1), (0, 0, 1, 0), (0, 0, 1, 1)
(0, 1, 0, 0), (0, 1, 0, 1), (0, 1, 1, 0), (0, 1, 1, 1)
(1, 0, 0, 0), (1, 0, 0, 1), (1, 0, 1, 0), (1, 0, 1, 1)
(1, 1, 0, 0), (1, 1, 0, 1), (1, 1, 1, 0), (1, 1, 1, 1)
(2, 0, 0, 0), (2, 0, 0, 1), (2, 0, 1, 0), (2, 0, 1, 1)
(2, 1, 0, 0), (2, 1, 0, 1), (2, 1, 1, 0), (2, 1, 1, 1)
(3, 0, 0, 0), (3, 0, 0, 1), (3, 0, 1, 0), (3, 0, 1, 1)
(3, 1, 0, 0), (3, 1, 0, 1), (3, 1, 1, 0), (3, 1, 1, 1)
A partition for sets of sizes:  1*3  7*4  0*5

(0, 0, 0, 1), (0, 0, 1, 0), (0, 0, 1, 1)
(0, 1, 0, 0), (1, 0, 0, 0), (3, 1, 0, 0)
(0, 1, 1, 1), (1, 0, 0, 1), (3, 1, 1, 0)
(1, 0, 1, 0), (1, 0, 1, 1), (2, 0, 0, 1)
(1, 1, 0, 1), (1, 1, 1, 0), (2, 0, 1, 1)
(2, 0, 1, 0), (3, 0, 0, 0), (3, 0, 1, 0)
(1, 1, 1, 1), (2, 1, 0, 0), (2, 1, 1, 0), (3, 1, 0, 1)
(1, 1, 0, 0), (2, 0, 0, 0), (2, 1, 1, 1), (3, 0, 1, 1)
(0, 1, 0, 1), (0, 1, 1, 0), (2, 1, 0, 1), (3, 0, 0, 1), (3, 1, 1, 1)
A partition for sets of sizes:  6*3  2*4  1*5

(0, 0, 0, 1), (0, 0, 1, 0), (0, 0, 1, 1)
(0, 1, 0, 0), (1, 0, 0, 0), (3, 1, 0, 0)
(0, 1, 1, 1), (1, 0, 0, 1), (1, 0, 1, 0), (2, 1, 0, 0)
(1, 0, 1, 1), (1, 1, 0, 0), (3, 0, 0, 0), (3, 1, 1, 1)
(1, 1, 1, 1), (2, 0, 0, 0), (2, 0, 0, 1), (3, 1, 1, 0)
(0, 1, 0, 1), (2, 0, 1, 1), (3, 0, 1, 1), (3, 1, 0, 1)
(1, 1, 0, 1), (2, 0, 1, 0), (2, 1, 0, 1), (3, 0, 1, 0)
(0, 1, 1, 0), (1, 1, 1, 0), (2, 1, 1, 0), (2, 1, 1, 1), (3, 0, 0, 1)
A partition for sets of sizes:  2*3  5*4  1*5

(0, 0, 0, 1), (0, 0, 1, 0), (0, 0, 1, 1)
(0, 1, 0, 0), (1, 0, 0, 0), (3, 1, 0, 0)
(0, 1, 1, 1), (1, 0, 0, 1), (3, 1, 1, 0)
(1, 0, 1, 0), (1, 0, 1, 1), (2, 0, 0, 1)
(1, 1, 0, 1), (1, 1, 1, 0), (2, 0, 1, 1)
(2, 0, 1, 0), (3, 0, 0, 0), (3, 0, 1, 0)
(2, 1, 0, 0), (3, 0, 0, 1), (3, 1, 0, 1)
(1, 1, 0, 0), (1, 1, 1, 1), (2, 0, 0, 0), (2, 1, 0, 1), (2, 1, 1, 0)
(0, 1, 0, 1), (0, 1, 1, 0), (2, 1, 1, 1), (3, 0, 1, 1), (3, 1, 1, 1)
A partition for sets of sizes:  7*3  0*4  2*5

(0, 0, 0, 1), (0, 0, 1, 0), (0, 0, 1, 1)
(0, 1, 0, 0), (1, 0, 0, 0), (3, 1, 0, 0)
(0, 1, 1, 1), (1, 0, 0, 1), (3, 1, 1, 0)
(1, 0, 1, 0), (1, 0, 1, 1), (1, 1, 0, 0), (1, 1, 0, 1)
(1, 1, 1, 0), (1, 1, 1, 1), (3, 0, 0, 0), (3, 0, 0, 1)
(2, 0, 1, 0), (2, 0, 1, 1), (2, 1, 0, 0), (2, 1, 0, 1)
(2, 0, 0, 0), (2, 1, 1, 0), (2, 1, 1, 1), (3, 0, 1, 0), (3, 0, 1, 1)
(0, 1, 0, 1), (0, 1, 1, 0), (2, 0, 0, 1), (3, 1, 0, 1), (3, 1, 1, 1)
A partition for sets of sizes:  3*3  3*4  2*5

(0, 0, 0, 1), (0, 0, 1, 0), (0, 0, 1, 1)
(0, 1, 0, 0), (1, 0, 0, 0), (3, 1, 0, 0)
(0, 1, 1, 1), (1, 0, 0, 1), (3, 1, 1, 0)
(1, 0, 1, 0), (1, 0, 1, 1), (2, 0, 0, 1)
(1, 1, 0, 1), (1, 1, 1, 0), (3, 0, 0, 0), (3, 0, 1, 1)
(1, 1, 0, 0), (2, 0, 1, 0), (3, 0, 0, 1), (3, 0, 1, 0), (3, 1, 0, 1)
(0, 1, 1, 0), (1, 1, 1, 1), (2, 0, 1, 1), (2, 1, 0, 1), (3, 1, 1, 1)
(0, 1, 0, 1), (2, 0, 0, 0), (2, 1, 0, 0), (2, 1, 1, 0), (2, 1, 1, 1)
A partition for sets of sizes:  4*3  1*4  3*5

(0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (0, 1, 1, 1)
(0, 1, 0, 1), (0, 1, 1, 0), (1, 0, 0, 0), (3, 0, 1, 1)
(1, 0, 0, 1), (1, 0, 1, 0), (1, 1, 0, 0), (1, 1, 1, 1)
(1, 1, 0, 1), (1, 1, 1, 0), (3, 0, 0, 1), (3, 0, 1, 0)
(2, 0, 0, 1), (2, 0, 1, 0), (2, 1, 0, 0), (3, 0, 0, 0), (3, 1, 1, 1)
(2, 0, 1, 1), (2, 1, 1, 0), (2, 1, 1, 1), (3, 1, 0, 0), (3, 1, 1, 0)
(0, 0, 1, 1), (1, 0, 1, 1), (2, 0, 0, 0), (2, 1, 0, 1), (3, 1, 0, 1)
A partition for sets of sizes:  0*3  4*4  3*5

(0, 0, 0, 1), (0, 0, 1, 0), (0, 0, 1, 1)
(0, 1, 0, 0), (0, 1, 0, 1), (0, 1, 1, 0), (0, 1, 1, 1)
(1, 0, 0, 0), (1, 0, 0, 1), (1, 0, 1, 0), (1, 0, 1, 1)
(1, 1, 0, 0), (1, 1, 0, 1), (1, 1, 1, 0), (2, 0, 0, 0), (3, 1, 1, 1)
(2, 0, 0, 1), (2, 0, 1, 0), (2, 1, 0, 0), (3, 0, 0, 1), (3, 1, 1, 0)
(2, 0, 1, 1), (2, 1, 1, 0), (2, 1, 1, 1), (3, 0, 0, 0), (3, 0, 1, 0)
(1, 1, 1, 1), (2, 1, 0, 1), (3, 0, 1, 1), (3, 1, 0, 0), (3, 1, 0, 1)
A partition for sets of sizes:  1*3  2*4  4*5

(0, 0, 0, 1), (0, 0, 1, 0), (0, 0, 1, 1)
(0, 1, 0, 0), (1, 0, 0, 0), (3, 1, 0, 0)
(0, 1, 1, 1), (1, 0, 0, 1), (1, 0, 1, 0), (1, 0, 1, 1), (1, 1, 1, 1)
(1, 1, 0, 0), (1, 1, 0, 1), (1, 1, 1, 0), (2, 0, 0, 0), (3, 1, 1, 1)
(2, 0, 0, 1), (2, 0, 1, 0), (2, 1, 0, 0), (3, 0, 0, 1), (3, 1, 1, 0)
(2, 0, 1, 1), (2, 1, 1, 0), (2, 1, 1, 1), (3, 0, 0, 0), (3, 0, 1, 0)
(0, 1, 0, 1), (0, 1, 1, 0), (2, 1, 0, 1), (3, 0, 1, 1), (3, 1, 0, 1)
A partition for sets of sizes:  2*3  0*4  5*5
)ZSPRAW";

const char* const kTable2 = R"ZSPRAW((0, 0, 1), (0, 1, 0), (0, 3, 1)
(0, 2, 0), (1, 0, 0), (3, 2, 0)
(0, 1, 1), (1, 0, 1), (3, 3, 0)
(1, 1, 0), (1, 1, 1), (2, 2, 1)
(1, 2, 1), (1, 3, 0), (2, 3, 1)
(2, 0, 0), (3, 1, 1), (3, 3, 1)
(2, 1, 1), (3, 1, 0), (3, 2, 1)
(2, 0, 1), (3, 0, 0), (3, 0, 1)
(0, 3, 0), (2, 2, 0), (2, 3, 0)
(0, 2, 1), (1, 2, 0), (1, 3, 1), (2, 1, 0)
A partition for sets of sizes:  9*3  1*4  0*5

(0, 0, 1), (0, 1, 0), (0, 3, 1)
(0, 2, 0), (1, 0, 0), (3, 2, 0)
(0, 1, 1), (1, 0, 1), (3, 3, 0)
(1, 1, 0), (1, 1, 1), (2, 2, 1)
(1, 2, 1), (1, 3, 0), (2, 3, 1)
(2, 0, 0), (2, 0, 1), (2, 1, 1), (2, 3, 0)
(1, 2, 0), (1, 3, 1), (3, 0, 0), (3, 3, 1)
(0, 3, 0), (2, 2, 0), (3, 1, 1), (3, 2, 1)
(0, 2, 1), (2, 1, 0), (3, 0, 1), (3, 1, 0)
A partition for sets of sizes:  5*3  4*4  0*5

(0, 0, 1), (0, 1, 0), (0, 3, 1)
(0, 2, 0), (0, 2, 1), (1, 0, 0), (3, 0, 1)
(0, 3, 0), (1, 0, 1), (1, 1, 0), (2, 0, 1)
(1, 2, 0), (1, 2, 1), (3, 1, 0), (3, 3, 1)
(2, 0, 0), (2, 1, 0), (2, 1, 1), (2, 2, 1)
(1, 1, 1), (2, 2, 0), (2, 3, 1), (3, 2, 0)
(0, 1, 1), (2, 3, 0), (3, 1, 1), (3, 3, 0)
(1, 3, 0), (1, 3, 1), (3, 0, 0), (3, 2, 1)
A partition for sets of sizes:  1*3  7*4  0*5

(0, 0, 1), (0, 1, 0), (0, 3, 1)
(0, 2, 0), (1, 0, 0), (3, 2, 0)
(0, 1, 1), (1, 0, 1), (3, 3, 0)
(1, 1, 0), (1, 1, 1), (2, 2, 1)
(1, 2, 1), (1, 3, 0), (2, 3, 1)
(2, 0, 0), (3, 1, 1), (3, 3, 1)
(1, 2, 0), (2, 2, 0), (2, 3, 0), (3, 1, 0)
(1, 3, 1), (2, 0, 1), (2, 1, 1), (3, 0, 1)
(0, 2, 1), (0, 3, 0), (2, 1, 0), (3, 0, 0), (3, 2, 1)
A partition for sets of sizes:  6*3  2*4  1*5

(0, 0, 1), (0, 1, 0), (0, 3, 1)
(0, 2, 0), (1, 0, 0), (3, 2, 0)
(0, 1, 1), (0, 2, 1), (1, 0, 1), (3, 1, 1)
(1, 1, 1), (1, 2, 0), (1, 2, 1), (1, 3, 0)
(1, 3, 1), (2, 0, 0), (2, 0, 1), (3, 1, 0)
(2, 1, 1), (2, 2, 0), (2, 2, 1), (2, 3, 0)
(3, 0, 0), (3, 2, 1), (3, 3, 0), (3, 3, 1)
(0, 3, 0), (1, 1, 0), (2, 1, 0), (2, 3, 1), (3, 0, 1)
A partition for sets of sizes:  2*3  5*4  1*5

(0, 0, 1), (0, 1, 0), (0, 3, 1)
(0, 2, 0), (1, 0, 0), (3, 2, 0)
(0, 1, 1), (1, 0, 1), (3, 3, 0)
(1, 1, 0), (1, 1, 1), (2, 2, 1)
(1, 2, 1), (1, 3, 0), (2, 3, 1)
(2, 0, 0), (3, 1, 1), (3, 3, 1)
(2, 1, 1), (3, 1, 0), (3, 2, 1)
(2, 0, 1), (2, 1, 0), (2, 3, 0), (3, 0, 0), (3, 0, 1)
(0, 2, 1), (0, 3, 0), (1, 2, 0), (1, 3, 1), (2, 2, 0)
A partition for sets of sizes:  7*3  0*4  2*5

(0, 0, 1), (0, 1, 0), (0, 3, 1)
(0, 2, 0), (1, 0, 0), (3, 2, 0)
(0, 1, 1), (1, 0, 1), (3, 3, 0)
(1, 1, 0), (1, 1, 1), (1, 3, 0), (1, 3, 1)
(1, 2, 0), (1, 2, 1), (3, 0, 0), (3, 0, 1)
(2, 1, 0), (2, 1, 1), (2, 3, 0), (2, 3, 1)
(2, 0, 0), (2, 2, 0), (2, 2, 1), (3, 1, 0), (3, 3, 1)
(0, 2, 1), (0, 3, 0), (2, 0, 1), (3, 1, 1), (3, 2, 1)
A partition for sets of sizes:  3*3  3*4  2*5

(0, 0, 1), (0, 1, 0), (0, 3, 1)
(0, 2, 0), (1, 0, 0), (3, 2, 0)
(0, 1, 1), (1, 0, 1), (3, 3, 0)
(1, 1, 0), (1, 1, 1), (2, 2, 1)
(1, 2, 1), (1, 3, 0), (3, 0, 0), (3, 3, 1)
(2, 0, 1), (2, 1, 0), (2, 1, 1), (3, 0, 1), (3, 2, 1)
(0, 3, 0), (1, 3, 1), (2, 2, 0), (2, 3, 1), (3, 1, 0)
(0, 2, 1), (1, 2, 0), (2, 0, 0), (2, 3, 0), (3, 1, 1)
A partition for sets of sizes:  4*3  1*4  3*5

(0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 2, 0)
(0, 2, 1), (0, 3, 0), (1, 0, 0), (3, 3, 1)
(1, 0, 1), (1, 1, 0), (1, 1, 1), (1, 2, 0)
(1, 2, 1), (1, 3, 0), (3, 0, 1), (3, 3, 0)
(2, 0, 1), (2, 1, 0), (2, 1, 1), (3, 0, 0), (3, 2, 0)
(2, 0, 0), (2, 2, 0), (2, 3, 1), (3, 1, 0), (3, 2, 1)
(0, 3, 1), (1, 3, 1), (2, 2, 1), (2, 3, 0), (3, 1, 1)
A partition for sets of sizes:  0*3  4*4  3*5

(0, 0, 1), (0, 1, 0), (0, 3, 1)
(0, 2, 0), (0, 2, 1), (1, 0, 0), (3, 0, 1)
(0, 3, 0), (1, 0, 1), (1, 1, 0), (2, 0, 1)
(1, 2, 0), (1, 2, 1), (1, 3, 0), (2, 0, 0), (3, 1, 1)
(1, 1, 1), (2, 1, 0), (3, 0, 0), (3, 3, 0), (3, 3, 1)
(2, 1, 1), (2, 2, 0), (2, 2, 1), (3, 1, 0), (3, 2, 0)
(0, 1, 1), (1, 3, 1), (2, 3, 0), (2, 3, 1), (3, 2, 1)
A partition for sets of sizes:  1*3  2*4  4*5

(0, 0, 1), (0, 1, 0), (0, 3, 1)
(0, 2, 0), (1, 0, 0), (3, 2, 0)
(0, 1, 1), (0, 2, 1), (1, 0, 1), (1, 1, 0), (2, 0, 1)
(1, 2, 0), (1, 2, 1), (1, 3, 0), (2, 0, 0), (3, 1, 1)
(1, 1, 1), (2, 1, 0), (3, 0, 0), (3, 3, 0), (3, 3, 1)
(2, 1, 1), (2, 2, 0), (2, 3, 1), (3, 0, 1), (3, 2, 1)
(0, 3, 0), (1, 3, 1), (2, 2, 1), (2, 3, 0), (3, 1, 0)
A partition for sets of sizes:  2*3  0*4  5*5
)ZSPRAW";

const char* const kTable3 = R"ZSPRAW((0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (1, 0, 0), (3, 3, 1)
(0, 2, 2), (0, 3, 0), (0, 3, 2)
(0, 1, 2), (1, 0, 2), (3, 3, 0)
(0, 2, 0), (1, 0, 1), (3, 2, 3)
(1, 0, 3), (1, 1, 0), (2, 3, 1)
(1, 1, 2), (1, 1, 3), (2, 2, 3)
(1, 2, 1), (1, 2, 2), (2, 0, 1)
(1, 3, 0), (1, 3, 2), (2, 2, 2)
(2, 0, 0), (3, 0, 1), (3, 0, 3)
(2, 0, 2), (3, 0, 0), (3, 0, 2)
(2, 1, 1), (3, 1, 1), (3, 2, 2)
(2, 2, 1), (3, 1, 0), (3, 1, 3)
(1, 2, 0), (1, 3, 1), (2, 3, 3)
(2, 3, 2), (3, 2, 0), (3, 3, 2)
(2, 3, 0), (3, 2, 1), (3, 3, 3)
(1, 1, 1), (1, 2, 3), (2, 1, 0)
(0, 2, 3), (2, 1, 2), (2, 1, 3)
(0, 0, 3), (1, 3, 3), (3, 1, 2)
(0, 2, 1), (2, 0, 3), (2, 2, 0)
A partition for sets of sizes: 21*3  0*4  0*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (1, 0, 0), (3, 3, 1)
(0, 2, 2), (0, 3, 0), (0, 3, 2)
(0, 1, 2), (1, 0, 2), (3, 3, 0)
(0, 2, 0), (1, 0, 1), (3, 2, 3)
(1, 0, 3), (1, 1, 0), (2, 3, 1)
(1, 1, 2), (1, 1, 3), (2, 2, 3)
(1, 2, 1), (1, 2, 2), (2, 0, 1)
(1, 3, 0), (1, 3, 2), (2, 2, 2)
(2, 0, 0), (3, 0, 1), (3, 0, 3)
(2, 0, 2), (3, 0, 0), (3, 0, 2)
(2, 1, 1), (3, 1, 1), (3, 2, 2)
(2, 2, 1), (3, 1, 0), (3, 1, 3)
(1, 2, 0), (1, 3, 1), (2, 3, 3)
(2, 3, 2), (3, 2, 0), (3, 3, 2)
(1, 1, 1), (1, 2, 3), (2, 1, 0)
(0, 0, 3), (0, 2, 3), (1, 3, 3), (3, 3, 3)
(0, 2, 1), (2, 3, 0), (3, 1, 2), (3, 2, 1)
(2, 0, 3), (2, 1, 2), (2, 1, 3), (2, 2, 0)
A partition for sets of sizes: 17*3  3*4  0*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (1, 0, 0), (3, 3, 1)
(0, 2, 2), (0, 3, 0), (0, 3, 2)
(0, 1, 2), (1, 0, 2), (3, 3, 0)
(0, 2, 0), (1, 0, 1), (3, 2, 3)
(1, 0, 3), (1, 1, 0), (2, 3, 1)
(1, 1, 2), (1, 1, 3), (2, 2, 3)
(1, 2, 1), (1, 2, 2), (2, 0, 1)
(1, 3, 0), (1, 3, 2), (2, 2, 2)
(2, 0, 0), (3, 0, 1), (3, 0, 3)
(2, 0, 2), (3, 0, 0), (3, 0, 2)
(2, 1, 1), (3, 1, 1), (3, 2, 2)
(1, 3, 1), (2, 2, 0), (2, 2, 1), (3, 1, 2)
(1, 1, 1), (2, 3, 0), (2, 3, 3), (3, 1, 0)
(1, 3, 3), (2, 0, 3), (2, 3, 2), (3, 2, 0)
(1, 2, 0), (1, 2, 3), (3, 1, 3), (3, 3, 2)
(0, 0, 3), (0, 2, 3), (2, 1, 0), (2, 1, 2)
(0, 2, 1), (2, 1, 3), (3, 2, 1), (3, 3, 3)
A partition for sets of sizes: 13*3  6*4  0*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (1, 0, 0), (3, 3, 1)
(0, 2, 2), (0, 3, 0), (0, 3, 2)
(0, 1, 2), (1, 0, 2), (3, 3, 0)
(0, 2, 0), (1, 0, 1), (3, 2, 3)
(1, 0, 3), (1, 1, 0), (2, 3, 1)
(1, 1, 2), (1, 1, 3), (2, 2, 3)
(1, 2, 1), (1, 2, 2), (2, 0, 1)
(1, 3, 0), (1, 3, 1), (3, 0, 1), (3, 2, 2)
(2, 0, 0), (2, 0, 2), (2, 1, 0), (2, 3, 2)
(1, 2, 3), (2, 1, 1), (2, 1, 2), (3, 0, 2)
(1, 2, 0), (2, 2, 1), (2, 2, 2), (3, 2, 1)
(1, 1, 1), (2, 3, 0), (2, 3, 3), (3, 1, 0)
(3, 0, 0), (3, 0, 3), (3, 1, 2), (3, 3, 3)
(0, 2, 3), (2, 1, 3), (3, 2, 0), (3, 3, 2)
(0, 0, 3), (1, 3, 2), (1, 3, 3), (2, 2, 0)
(0, 2, 1), (2, 0, 3), (3, 1, 1), (3, 1, 3)
A partition for sets of sizes: 9*3  9*4  0*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (1, 0, 0), (3, 3, 1)
(0, 2, 2), (0, 3, 0), (0, 3, 2)
(0, 1, 2), (1, 0, 2), (3, 3, 0)
(0, 2, 0), (1, 0, 1), (1, 0, 3), (2, 2, 0)
(1, 1, 0), (1, 1, 1), (1, 3, 0), (1, 3, 3)
(1, 2, 0), (1, 2, 1), (3, 0, 0), (3, 0, 3)
(1, 1, 2), (1, 3, 1), (3, 1, 2), (3, 3, 3)
(2, 0, 0), (2, 0, 1), (2, 1, 0), (2, 3, 3)
(2, 0, 2), (2, 1, 1), (2, 1, 2), (2, 2, 3)
(0, 2, 3), (2, 2, 1), (3, 2, 1), (3, 2, 3)
(2, 0, 3), (2, 2, 2), (2, 3, 1), (2, 3, 2)
(1, 2, 2), (1, 2, 3), (3, 0, 1), (3, 0, 2)
(3, 1, 0), (3, 2, 0), (3, 2, 2), (3, 3, 2)
(1, 3, 2), (2, 1, 3), (2, 3, 0), (3, 1, 3)
(0, 0, 3), (0, 2, 1), (1, 1, 3), (3, 1, 1)
A partition for sets of sizes: 5*3  12*4  0*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 1, 2), (0, 2, 3)
(0, 2, 0), (0, 2, 1), (1, 0, 0), (3, 0, 3)
(0, 3, 0), (0, 3, 1), (1, 0, 1), (3, 2, 2)
(0, 2, 2), (0, 3, 2), (1, 0, 2), (3, 3, 2)
(1, 1, 0), (1, 1, 1), (1, 3, 0), (1, 3, 3)
(1, 2, 0), (1, 2, 1), (3, 0, 1), (3, 0, 2)
(1, 1, 2), (1, 3, 1), (3, 1, 0), (3, 3, 1)
(2, 0, 0), (2, 0, 1), (2, 1, 0), (2, 3, 3)
(2, 0, 2), (2, 1, 1), (2, 1, 2), (2, 2, 3)
(2, 1, 3), (2, 2, 1), (2, 2, 2), (2, 3, 2)
(2, 0, 3), (2, 2, 0), (2, 3, 0), (2, 3, 1)
(3, 0, 0), (3, 1, 1), (3, 1, 2), (3, 2, 1)
(1, 2, 2), (1, 2, 3), (3, 1, 3), (3, 3, 0)
(0, 0, 3), (0, 1, 3), (1, 1, 3), (3, 2, 3)
(1, 0, 3), (1, 3, 2), (3, 2, 0), (3, 3, 3)
A partition for sets of sizes: 1*3  15*4  0*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (1, 0, 0), (3, 3, 1)
(0, 2, 2), (0, 3, 0), (0, 3, 2)
(0, 1, 2), (1, 0, 2), (3, 3, 0)
(0, 2, 0), (1, 0, 1), (3, 2, 3)
(1, 0, 3), (1, 1, 0), (2, 3, 1)
(1, 1, 2), (1, 1, 3), (2, 2, 3)
(1, 2, 1), (1, 2, 2), (2, 0, 1)
(1, 3, 0), (1, 3, 2), (2, 2, 2)
(2, 0, 0), (3, 0, 1), (3, 0, 3)
(2, 0, 2), (3, 0, 0), (3, 0, 2)
(2, 1, 1), (3, 1, 1), (3, 2, 2)
(2, 2, 1), (3, 1, 0), (3, 1, 3)
(1, 2, 0), (1, 3, 1), (2, 3, 3)
(2, 3, 2), (3, 2, 0), (3, 3, 2)
(2, 3, 0), (3, 2, 1), (3, 3, 3)
(1, 1, 1), (1, 2, 3), (2, 1, 0)
(2, 0, 3), (2, 1, 2), (2, 1, 3), (2, 2, 0)
(0, 0, 3), (0, 2, 1), (0, 2, 3), (1, 3, 3), (3, 1, 2)
A partition for sets of sizes: 18*3  1*4  1*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (1, 0, 0), (3, 3, 1)
(0, 2, 2), (0, 3, 0), (0, 3, 2)
(0, 1, 2), (1, 0, 2), (3, 3, 0)
(0, 2, 0), (1, 0, 1), (3, 2, 3)
(1, 0, 3), (1, 1, 0), (2, 3, 1)
(1, 1, 2), (1, 1, 3), (2, 2, 3)
(1, 2, 1), (1, 2, 2), (2, 0, 1)
(1, 3, 0), (1, 3, 2), (2, 2, 2)
(2, 0, 0), (3, 0, 1), (3, 0, 3)
(2, 0, 2), (3, 0, 0), (3, 0, 2)
(2, 1, 1), (3, 1, 1), (3, 2, 2)
(2, 2, 1), (3, 1, 0), (3, 1, 3)
(1, 2, 0), (2, 0, 3), (2, 3, 2), (3, 3, 3)
(1, 3, 3), (2, 3, 0), (2, 3, 3), (3, 3, 2)
(1, 3, 1), (2, 1, 2), (2, 2, 0), (3, 2, 1)
(0, 0, 3), (2, 1, 3), (3, 1, 2), (3, 2, 0)
(0, 2, 1), (0, 2, 3), (1, 1, 1), (1, 2, 3), (2, 1, 0)
A partition for sets of sizes: 14*3  4*4  1*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (1, 0, 0), (3, 3, 1)
(0, 2, 2), (0, 3, 0), (0, 3, 2)
(0, 1, 2), (1, 0, 2), (3, 3, 0)
(0, 2, 0), (1, 0, 1), (3, 2, 3)
(1, 0, 3), (1, 1, 0), (2, 3, 1)
(1, 1, 2), (1, 1, 3), (2, 2, 3)
(1, 2, 1), (1, 2, 2), (2, 0, 1)
(1, 3, 0), (1, 3, 2), (2, 2, 2)
(1, 3, 3), (2, 0, 0), (2, 0, 2), (3, 1, 3)
(2, 0, 3), (2, 1, 0), (2, 1, 1), (2, 2, 0)
(2, 1, 2), (2, 1, 3), (2, 3, 0), (2, 3, 3)
(1, 2, 0), (2, 2, 1), (2, 3, 2), (3, 1, 1)
(3, 0, 0), (3, 0, 1), (3, 1, 0), (3, 3, 3)
(1, 1, 1), (1, 3, 1), (3, 2, 0), (3, 2, 2)
(0, 0, 3), (0, 2, 3), (1, 2, 3), (3, 0, 3)
(0, 2, 1), (3, 0, 2), (3, 1, 2), (3, 2, 1), (3, 3, 2)
A partition for sets of sizes: 10*3  7*4  1*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (1, 0, 0), (3, 3, 1)
(0, 2, 2), (0, 3, 0), (0, 3, 2)
(0, 1, 2), (1, 0, 2), (3, 3, 0)
(0, 2, 0), (1, 0, 1), (3, 2, 3)
(1, 0, 3), (1, 1, 0), (1, 1, 1), (1, 2, 0)
(1, 1, 3), (1, 2, 1), (1, 2, 2), (1, 3, 2)
(1, 2, 3), (1, 3, 0), (3, 0, 2), (3, 3, 3)
(1, 3, 3), (2, 0, 0), (2, 0, 1), (3, 1, 0)
(2, 0, 3), (2, 1, 0), (2, 1, 1), (2, 2, 0)
(2, 1, 3), (2, 2, 1), (2, 2, 2), (2, 3, 2)
(3, 0, 0), (3, 0, 1), (3, 1, 1), (3, 3, 2)
(1, 3, 1), (2, 2, 3), (2, 3, 1), (3, 0, 3)
(0, 2, 3), (2, 3, 0), (3, 1, 3), (3, 2, 2)
(0, 0, 3), (0, 2, 1), (1, 1, 2), (3, 1, 2)
(2, 0, 2), (2, 1, 2), (2, 3, 3), (3, 2, 0), (3, 2, 1)
A partition for sets of sizes: 6*3  10*4  1*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (0, 2, 0), (0, 2, 1), (0, 3, 0)
(0, 2, 3), (0, 3, 2), (1, 0, 0), (3, 3, 3)
(0, 0, 3), (0, 1, 2), (1, 0, 1), (3, 3, 2)
(1, 0, 3), (1, 1, 0), (1, 1, 1), (1, 2, 0)
(1, 1, 3), (1, 2, 1), (1, 2, 2), (1, 3, 2)
(1, 2, 3), (1, 3, 0), (3, 0, 0), (3, 3, 1)
(1, 3, 3), (2, 0, 0), (2, 0, 1), (3, 1, 0)
(2, 0, 3), (2, 1, 0), (2, 1, 1), (2, 2, 0)
(2, 1, 3), (2, 2, 1), (2, 2, 2), (2, 3, 2)
(1, 3, 1), (2, 3, 0), (2, 3, 3), (3, 3, 0)
(3, 0, 1), (3, 0, 2), (3, 2, 0), (3, 2, 1)
(3, 0, 3), (3, 1, 1), (3, 1, 2), (3, 2, 2)
(1, 0, 2), (2, 0, 2), (2, 3, 1), (3, 1, 3)
(0, 2, 2), (1, 1, 2), (2, 1, 2), (2, 2, 3), (3, 2, 3)
A partition for sets of sizes: 2*3  13*4  1*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (1, 0, 0), (3, 3, 1)
(0, 2, 2), (0, 3, 0), (0, 3, 2)
(0, 1, 2), (1, 0, 2), (3, 3, 0)
(0, 2, 0), (1, 0, 1), (3, 2, 3)
(1, 0, 3), (1, 1, 0), (2, 3, 1)
(1, 1, 2), (1, 1, 3), (2, 2, 3)
(1, 2, 1), (1, 2, 2), (2, 0, 1)
(1, 3, 0), (1, 3, 2), (2, 2, 2)
(2, 0, 0), (3, 0, 1), (3, 0, 3)
(2, 0, 2), (3, 0, 0), (3, 0, 2)
(2, 1, 1), (3, 1, 1), (3, 2, 2)
(2, 2, 1), (3, 1, 0), (3, 1, 3)
(1, 2, 0), (1, 3, 1), (2, 3, 3)
(1, 1, 1), (2, 0, 3), (2, 1, 0), (3, 2, 0)
(1, 2, 3), (2, 1, 2), (2, 2, 0), (3, 3, 3)
(1, 3, 3), (2, 3, 0), (3, 1, 2), (3, 2, 1), (3, 3, 2)
(0, 0, 3), (0, 2, 1), (0, 2, 3), (2, 1, 3), (2, 3, 2)
A partition for sets of sizes: 15*3  2*4  2*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (1, 0, 0), (3, 3, 1)
(0, 2, 2), (0, 3, 0), (0, 3, 2)
(0, 1, 2), (1, 0, 2), (3, 3, 0)
(0, 2, 0), (1, 0, 1), (3, 2, 3)
(1, 0, 3), (1, 1, 0), (2, 3, 1)
(1, 1, 2), (1, 1, 3), (2, 2, 3)
(1, 2, 1), (1, 2, 2), (2, 0, 1)
(1, 3, 0), (1, 3, 2), (2, 2, 2)
(2, 0, 0), (3, 0, 1), (3, 0, 3)
(2, 0, 2), (2, 0, 3), (2, 1, 0), (2, 3, 3)
(2, 1, 3), (2, 2, 0), (2, 2, 1), (2, 3, 0)
(1, 3, 1), (2, 1, 2), (2, 3, 2), (3, 1, 3)
(1, 2, 0), (1, 3, 3), (3, 0, 2), (3, 3, 3)
(3, 0, 0), (3, 1, 0), (3, 1, 2), (3, 2, 2)
(0, 2, 3), (1, 1, 1), (1, 2, 3), (3, 1, 1), (3, 2, 0)
(0, 0, 3), (0, 2, 1), (2, 1, 1), (3, 2, 1), (3, 3, 2)
A partition for sets of sizes: 11*3  5*4  2*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (1, 0, 0), (3, 3, 1)
(0, 2, 2), (0, 3, 0), (0, 3, 2)
(0, 1, 2), (1, 0, 2), (3, 3, 0)
(0, 2, 0), (1, 0, 1), (3, 2, 3)
(1, 0, 3), (1, 1, 0), (2, 3, 1)
(1, 1, 2), (1, 1, 3), (1, 3, 0), (1, 3, 3)
(1, 2, 2), (1, 2, 3), (3, 0, 0), (3, 0, 3)
(1, 3, 2), (2, 0, 0), (2, 0, 1), (3, 1, 1)
(2, 0, 2), (2, 0, 3), (2, 1, 0), (2, 3, 3)
(2, 1, 2), (2, 2, 0), (2, 2, 2), (2, 3, 0)
(1, 1, 1), (2, 2, 3), (2, 3, 2), (3, 2, 2)
(1, 2, 0), (2, 1, 1), (2, 2, 1), (3, 3, 2)
(3, 0, 2), (3, 1, 2), (3, 1, 3), (3, 2, 1)
(1, 3, 1), (2, 1, 3), (3, 0, 1), (3, 1, 0), (3, 3, 3)
(0, 0, 3), (0, 2, 1), (0, 2, 3), (1, 2, 1), (3, 2, 0)
A partition for sets of sizes: 7*3  8*4  2*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (1, 0, 0), (3, 3, 1)
(0, 2, 2), (0, 2, 3), (1, 0, 1), (3, 0, 2)
(0, 3, 2), (1, 0, 2), (1, 0, 3), (2, 1, 1)
(0, 0, 3), (0, 2, 0), (1, 1, 0), (3, 1, 1)
(1, 1, 2), (1, 1, 3), (1, 3, 0), (1, 3, 3)
(1, 2, 2), (1, 2, 3), (3, 0, 0), (3, 0, 3)
(1, 3, 2), (2, 0, 0), (2, 0, 2), (3, 1, 0)
(1, 2, 1), (2, 0, 3), (2, 1, 2), (3, 1, 2)
(2, 1, 0), (2, 1, 3), (2, 3, 0), (2, 3, 1)
(1, 2, 0), (2, 2, 3), (2, 3, 2), (3, 1, 3)
(3, 0, 1), (3, 2, 0), (3, 3, 0), (3, 3, 3)
(0, 1, 2), (0, 3, 0), (2, 2, 0), (2, 2, 2)
(1, 3, 1), (2, 2, 1), (3, 2, 1), (3, 2, 3), (3, 3, 2)
(0, 2, 1), (1, 1, 1), (2, 0, 1), (2, 3, 3), (3, 2, 2)
A partition for sets of sizes: 3*3  11*4  2*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (1, 0, 0), (3, 3, 1)
(0, 2, 2), (0, 3, 0), (0, 3, 2)
(0, 1, 2), (1, 0, 2), (3, 3, 0)
(0, 2, 0), (1, 0, 1), (3, 2, 3)
(1, 0, 3), (1, 1, 0), (2, 3, 1)
(1, 1, 2), (1, 1, 3), (2, 2, 3)
(1, 2, 1), (1, 2, 2), (2, 0, 1)
(1, 3, 0), (1, 3, 2), (2, 2, 2)
(2, 0, 0), (3, 0, 1), (3, 0, 3)
(2, 0, 2), (3, 0, 0), (3, 0, 2)
(2, 1, 1), (3, 1, 1), (3, 2, 2)
(2, 2, 1), (3, 1, 0), (3, 1, 3)
(1, 2, 0), (1, 3, 1), (2, 3, 3)
(2, 3, 2), (3, 2, 0), (3, 3, 2)
(2, 1, 0), (2, 1, 3), (2, 2, 0), (3, 1, 2), (3, 3, 3)
(0, 2, 3), (1, 1, 1), (2, 0, 3), (2, 3, 0), (3, 2, 1)
(0, 0, 3), (0, 2, 1), (1, 2, 3), (1, 3, 3), (2, 1, 2)
A partition for sets of sizes: 16*3  0*4  3*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (1, 0, 0), (3, 3, 1)
(0, 2, 2), (0, 3, 0), (0, 3, 2)
(0, 1, 2), (1, 0, 2), (3, 3, 0)
(0, 2, 0), (1, 0, 1), (3, 2, 3)
(1, 0, 3), (1, 1, 0), (2, 3, 1)
(1, 1, 2), (1, 1, 3), (2, 2, 3)
(1, 2, 1), (1, 2, 2), (2, 0, 1)
(1, 3, 0), (1, 3, 2), (2, 2, 2)
(2, 0, 0), (3, 0, 1), (3, 0, 3)
(2, 0, 2), (3, 0, 0), (3, 0, 2)
(2, 1, 1), (2, 1, 2), (2, 3, 2), (2, 3, 3)
(1, 3, 1), (2, 1, 3), (2, 3, 0), (3, 1, 0)
(1, 1, 1), (2, 2, 0), (2, 2, 1), (3, 3, 2)
(1, 3, 3), (2, 1, 0), (3, 1, 1), (3, 1, 2), (3, 2, 2)
(1, 2, 3), (2, 0, 3), (3, 1, 3), (3, 2, 0), (3, 3, 3)
(0, 0, 3), (0, 2, 1), (0, 2, 3), (1, 2, 0), (3, 2, 1)
A partition for sets of sizes: 12*3  3*4  3*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (1, 0, 0), (3, 3, 1)
(0, 2, 2), (0, 3, 0), (0, 3, 2)
(0, 1, 2), (1, 0, 2), (3, 3, 0)
(0, 2, 0), (1, 0, 1), (3, 2, 3)
(1, 0, 3), (1, 1, 0), (2, 3, 1)
(1, 1, 2), (1, 1, 3), (2, 2, 3)
(1, 2, 1), (1, 2, 2), (3, 0, 0), (3, 0, 1)
(1, 3, 1), (1, 3, 2), (3, 0, 3), (3, 2, 2)
(2, 0, 1), (2, 0, 2), (2, 1, 1), (2, 3, 0)
(2, 0, 3), (2, 1, 2), (2, 1, 3), (2, 2, 0)
(1, 2, 0), (2, 2, 2), (2, 3, 2), (3, 1, 0)
(1, 1, 1), (1, 2, 3), (3, 0, 2), (3, 1, 2)
(1, 3, 0), (2, 3, 3), (3, 1, 1), (3, 2, 1), (3, 3, 3)
(0, 0, 3), (0, 2, 3), (2, 1, 0), (3, 2, 0), (3, 3, 2)
(0, 2, 1), (1, 3, 3), (2, 0, 0), (2, 2, 1), (3, 1, 3)
A partition for sets of sizes: 8*3  6*4  3*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (1, 0, 0), (3, 3, 1)
(0, 2, 2), (0, 3, 0), (0, 3, 2)
(0, 1, 2), (0, 2, 3), (1, 0, 1), (3, 1, 2)
(0, 0, 3), (1, 0, 2), (1, 0, 3), (2, 0, 0)
(1, 1, 1), (1, 1, 2), (1, 3, 0), (1, 3, 1)
(1, 2, 1), (1, 2, 2), (3, 0, 0), (3, 0, 1)
(1, 2, 0), (1, 3, 2), (3, 0, 2), (3, 3, 0)
(2, 0, 1), (2, 0, 2), (2, 1, 0), (2, 3, 1)
(2, 1, 1), (2, 1, 2), (2, 3, 2), (2, 3, 3)
(2, 1, 3), (2, 2, 2), (2, 2, 3), (2, 3, 0)
(1, 2, 3), (2, 2, 0), (2, 2, 1), (3, 2, 0)
(1, 1, 3), (2, 0, 3), (3, 0, 3), (3, 1, 0), (3, 2, 3)
(0, 2, 0), (3, 2, 1), (3, 2, 2), (3, 3, 2), (3, 3, 3)
(0, 2, 1), (1, 1, 0), (1, 3, 3), (3, 1, 1), (3, 1, 3)
A partition for sets of sizes: 4*3  9*4  3*5

(0, 0, 1), (0, 0, 2), (0, 1, 0), (0, 3, 1)
(0, 1, 1), (0, 1, 2), (0, 3, 2), (0, 3, 3)
(0, 2, 1), (0, 2, 2), (1, 0, 0), (3, 0, 1)
(0, 0, 3), (0, 1, 3), (1, 0, 1), (3, 3, 1)
(0, 2, 0), (1, 0, 2), (1, 0, 3), (2, 2, 3)
(1, 1, 1), (1, 1, 2), (1, 3, 0), (1, 3, 1)
(1, 2, 1), (1, 2, 2), (3, 0, 2), (3, 0, 3)
(1, 2, 0), (1, 3, 2), (3, 0, 0), (3, 3, 2)
(2, 0, 1), (2, 0, 2), (2, 1, 0), (2, 3, 1)
(2, 1, 1), (2, 1, 2), (2, 3, 2), (2, 3, 3)
(1, 1, 0), (2, 2, 2), (2, 3, 0), (3, 2, 2)
(1, 3, 3), (2, 1, 3), (2, 2, 1), (3, 2, 1)
(0, 3, 0), (1, 2, 3), (2, 0, 0), (2, 2, 0), (3, 1, 1)
(0, 2, 3), (3, 1, 0), (3, 1, 2), (3, 1, 3), (3, 3, 0)
(1, 1, 3), (2, 0, 3), (3, 2, 0), (3, 2, 3), (3, 3, 3)
A partition for sets of sizes: 0*3  12*4  3*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (1, 0, 0), (3, 3, 1)
(0, 2, 2), (0, 3, 0), (0, 3, 2)
(0, 1, 2), (1, 0, 2), (3, 3, 0)
(0, 2, 0), (1, 0, 1), (3, 2, 3)
(1, 0, 3), (1, 1, 0), (2, 3, 1)
(1, 1, 2), (1, 1, 3), (2, 2, 3)
(1, 2, 1), (1, 2, 2), (2, 0, 1)
(1, 3, 0), (1, 3, 2), (2, 2, 2)
(2, 0, 0), (3, 0, 1), (3, 0, 3)
(2, 0, 2), (3, 0, 0), (3, 0, 2)
(2, 1, 1), (3, 1, 1), (3, 2, 2)
(1, 3, 1), (2, 2, 0), (2, 2, 1), (3, 1, 2)
(2, 3, 0), (2, 3, 2), (2, 3, 3), (3, 1, 3), (3, 2, 0)
(1, 3, 3), (2, 1, 3), (3, 2, 1), (3, 3, 2), (3, 3, 3)
(0, 0, 3), (1, 2, 0), (2, 0, 3), (2, 1, 2), (3, 1, 0)
(0, 2, 1), (0, 2, 3), (1, 1, 1), (1, 2, 3), (2, 1, 0)
A partition for sets of sizes: 13*3  1*4  4*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (1, 0, 0), (3, 3, 1)
(0, 2, 2), (0, 3, 0), (0, 3, 2)
(0, 1, 2), (1, 0, 2), (3, 3, 0)
(0, 2, 0), (1, 0, 1), (3, 2, 3)
(1, 0, 3), (1, 1, 0), (2, 3, 1)
(1, 1, 2), (1, 1, 3), (2, 2, 3)
(1, 2, 1), (1, 2, 2), (2, 0, 1)
(1, 3, 0), (1, 3, 1), (3, 0, 1), (3, 2, 2)
(2, 0, 0), (2, 0, 2), (2, 1, 0), (2, 3, 2)
(1, 2, 3), (2, 1, 1), (2, 1, 2), (3, 0, 2)
(1, 2, 0), (2, 2, 1), (2, 2, 2), (3, 2, 1)
(1, 1, 1), (2, 3, 0), (3, 0, 0), (3, 1, 0), (3, 3, 3)
(1, 3, 2), (2, 1, 3), (3, 0, 3), (3, 1, 2), (3, 3, 2)
(0, 2, 3), (1, 3, 3), (2, 0, 3), (2, 2, 0), (3, 1, 3)
(0, 0, 3), (0, 2, 1), (2, 3, 3), (3, 1, 1), (3, 2, 0)
A partition for sets of sizes: 9*3  4*4  4*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (1, 0, 0), (3, 3, 1)
(0, 2, 2), (0, 3, 0), (0, 3, 2)
(0, 1, 2), (1, 0, 2), (3, 3, 0)
(0, 2, 0), (1, 0, 1), (1, 0, 3), (2, 2, 0)
(1, 1, 0), (1, 1, 1), (1, 3, 0), (1, 3, 3)
(1, 2, 0), (1, 2, 1), (3, 0, 0), (3, 0, 3)
(1, 1, 2), (1, 3, 1), (3, 1, 2), (3, 3, 3)
(2, 0, 0), (2, 0, 1), (2, 1, 0), (2, 3, 3)
(2, 0, 2), (2, 1, 1), (2, 1, 2), (2, 2, 3)
(0, 2, 3), (2, 2, 1), (3, 2, 1), (3, 2, 3)
(2, 3, 0), (2, 3, 1), (2, 3, 2), (3, 1, 1), (3, 2, 0)
(1, 2, 3), (2, 2, 2), (3, 0, 1), (3, 1, 0), (3, 3, 2)
(0, 0, 3), (1, 2, 2), (1, 3, 2), (3, 1, 3), (3, 2, 2)
(0, 2, 1), (1, 1, 3), (2, 0, 3), (2, 1, 3), (3, 0, 2)
A partition for sets of sizes: 5*3  7*4  4*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 1, 2), (0, 2, 3)
(0, 2, 0), (0, 2, 1), (1, 0, 0), (3, 0, 3)
(0, 3, 0), (0, 3, 1), (1, 0, 1), (3, 2, 2)
(0, 2, 2), (0, 3, 2), (1, 0, 2), (3, 3, 2)
(1, 1, 0), (1, 1, 1), (1, 3, 0), (1, 3, 3)
(1, 2, 0), (1, 2, 1), (3, 0, 1), (3, 0, 2)
(1, 1, 2), (1, 3, 1), (3, 1, 0), (3, 3, 1)
(2, 0, 0), (2, 0, 1), (2, 1, 0), (2, 3, 3)
(2, 0, 2), (2, 1, 1), (2, 1, 2), (2, 2, 3)
(2, 1, 3), (2, 2, 1), (2, 2, 2), (2, 3, 2)
(2, 2, 0), (2, 3, 0), (2, 3, 1), (3, 1, 3), (3, 3, 0)
(1, 2, 2), (1, 2, 3), (1, 3, 2), (2, 0, 3), (3, 1, 2)
(0, 1, 3), (3, 1, 1), (3, 2, 0), (3, 2, 1), (3, 2, 3)
(0, 0, 3), (1, 0, 3), (1, 1, 3), (3, 0, 0), (3, 3, 3)
A partition for sets of sizes: 1*3  10*4  4*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (1, 0, 0), (3, 3, 1)
(0, 2, 2), (0, 3, 0), (0, 3, 2)
(0, 1, 2), (1, 0, 2), (3, 3, 0)
(0, 2, 0), (1, 0, 1), (3, 2, 3)
(1, 0, 3), (1, 1, 0), (2, 3, 1)
(1, 1, 2), (1, 1, 3), (2, 2, 3)
(1, 2, 1), (1, 2, 2), (2, 0, 1)
(1, 3, 0), (1, 3, 2), (2, 2, 2)
(1, 3, 3), (2, 0, 0), (2, 0, 2), (3, 1, 3)
(2, 0, 3), (2, 1, 0), (2, 1, 1), (2, 2, 0)
(2, 1, 3), (2, 2, 1), (2, 3, 0), (3, 0, 0), (3, 2, 0)
(2, 1, 2), (2, 3, 2), (2, 3, 3), (3, 0, 1), (3, 1, 0)
(0, 2, 3), (3, 0, 2), (3, 1, 2), (3, 2, 2), (3, 3, 3)
(0, 0, 3), (1, 2, 3), (1, 3, 1), (3, 0, 3), (3, 3, 2)
(0, 2, 1), (1, 1, 1), (1, 2, 0), (3, 1, 1), (3, 2, 1)
A partition for sets of sizes: 10*3  2*4  5*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (1, 0, 0), (3, 3, 1)
(0, 2, 2), (0, 3, 0), (0, 3, 2)
(0, 1, 2), (1, 0, 2), (3, 3, 0)
(0, 2, 0), (1, 0, 1), (3, 2, 3)
(1, 0, 3), (1, 1, 0), (1, 1, 1), (1, 2, 0)
(1, 1, 3), (1, 2, 1), (1, 2, 2), (1, 3, 2)
(1, 2, 3), (1, 3, 0), (3, 0, 2), (3, 3, 3)
(1, 3, 3), (2, 0, 0), (2, 0, 1), (3, 1, 0)
(2, 0, 3), (2, 1, 0), (2, 1, 1), (2, 2, 0)
(2, 1, 3), (2, 2, 1), (2, 2, 2), (3, 0, 0), (3, 3, 2)
(2, 3, 0), (2, 3, 1), (2, 3, 2), (3, 1, 1), (3, 2, 0)
(1, 3, 1), (2, 0, 2), (3, 1, 2), (3, 2, 1), (3, 2, 2)
(0, 2, 3), (1, 1, 2), (2, 2, 3), (2, 3, 3), (3, 0, 1)
(0, 0, 3), (0, 2, 1), (2, 1, 2), (3, 0, 3), (3, 1, 3)
A partition for sets of sizes: 6*3  5*4  5*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (0, 2, 0), (0, 2, 1), (0, 3, 0)
(0, 2, 3), (0, 3, 2), (1, 0, 0), (3, 3, 3)
(0, 0, 3), (0, 1, 2), (1, 0, 1), (3, 3, 2)
(1, 0, 3), (1, 1, 0), (1, 1, 1), (1, 2, 0)
(1, 1, 3), (1, 2, 1), (1, 2, 2), (1, 3, 2)
(1, 2, 3), (1, 3, 0), (3, 0, 0), (3, 3, 1)
(1, 3, 3), (2, 0, 0), (2, 0, 1), (3, 1, 0)
(2, 0, 3), (2, 1, 0), (2, 1, 1), (2, 2, 0)
(2, 1, 3), (2, 2, 1), (2, 2, 2), (3, 0, 2), (3, 3, 0)
(2, 3, 0), (2, 3, 1), (2, 3, 2), (3, 1, 1), (3, 2, 0)
(2, 1, 2), (2, 2, 3), (2, 3, 3), (3, 0, 3), (3, 2, 1)
(1, 0, 2), (2, 0, 2), (3, 1, 2), (3, 1, 3), (3, 2, 3)
(0, 2, 2), (1, 1, 2), (1, 3, 1), (3, 0, 1), (3, 2, 2)
A partition for sets of sizes: 2*3  8*4  5*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (1, 0, 0), (3, 3, 1)
(0, 2, 2), (0, 3, 0), (0, 3, 2)
(0, 1, 2), (1, 0, 2), (3, 3, 0)
(0, 2, 0), (1, 0, 1), (3, 2, 3)
(1, 0, 3), (1, 1, 0), (2, 3, 1)
(1, 1, 2), (1, 1, 3), (2, 2, 3)
(1, 2, 1), (1, 2, 2), (2, 0, 1)
(1, 3, 0), (1, 3, 2), (2, 2, 2)
(2, 0, 0), (3, 0, 1), (3, 0, 3)
(2, 0, 2), (2, 0, 3), (2, 1, 0), (3, 0, 0), (3, 3, 3)
(2, 1, 3), (2, 2, 0), (2, 2, 1), (3, 0, 2), (3, 3, 2)
(2, 3, 0), (2, 3, 2), (2, 3, 3), (3, 1, 1), (3, 2, 2)
(1, 3, 3), (2, 1, 1), (3, 1, 0), (3, 1, 3), (3, 2, 1)
(0, 0, 3), (1, 1, 1), (1, 2, 0), (1, 2, 3), (1, 3, 1)
(0, 2, 1), (0, 2, 3), (2, 1, 2), (3, 1, 2), (3, 2, 0)
A partition for sets of sizes: 11*3  0*4  6*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (1, 0, 0), (3, 3, 1)
(0, 2, 2), (0, 3, 0), (0, 3, 2)
(0, 1, 2), (1, 0, 2), (3, 3, 0)
(0, 2, 0), (1, 0, 1), (3, 2, 3)
(1, 0, 3), (1, 1, 0), (2, 3, 1)
(1, 1, 2), (1, 1, 3), (1, 3, 0), (1, 3, 3)
(1, 2, 2), (1, 2, 3), (3, 0, 0), (3, 0, 3)
(1, 3, 2), (2, 0, 0), (2, 0, 1), (3, 1, 1)
(2, 0, 2), (2, 0, 3), (2, 1, 0), (3, 0, 1), (3, 3, 2)
(2, 1, 3), (2, 2, 0), (2, 2, 1), (3, 1, 0), (3, 2, 0)
(2, 3, 0), (2, 3, 2), (2, 3, 3), (3, 1, 2), (3, 2, 1)
(2, 1, 1), (2, 1, 2), (2, 2, 3), (3, 1, 3), (3, 3, 3)
(0, 2, 3), (1, 2, 0), (1, 2, 1), (3, 0, 2), (3, 2, 2)
(0, 0, 3), (0, 2, 1), (1, 1, 1), (1, 3, 1), (2, 2, 2)
A partition for sets of sizes: 7*3  3*4  6*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (1, 0, 0), (3, 3, 1)
(0, 2, 2), (0, 2, 3), (1, 0, 1), (3, 0, 2)
(0, 3, 2), (1, 0, 2), (1, 0, 3), (2, 1, 1)
(0, 0, 3), (0, 2, 0), (1, 1, 0), (3, 1, 1)
(1, 1, 2), (1, 1, 3), (1, 3, 0), (1, 3, 3)
(1, 2, 2), (1, 2, 3), (3, 0, 0), (3, 0, 3)
(1, 3, 2), (2, 0, 0), (2, 0, 2), (3, 1, 0)
(1, 2, 1), (2, 0, 3), (3, 0, 1), (3, 3, 0), (3, 3, 3)
(2, 1, 3), (2, 2, 0), (2, 2, 1), (3, 1, 2), (3, 2, 2)
(2, 3, 0), (2, 3, 1), (2, 3, 3), (3, 1, 3), (3, 2, 1)
(2, 1, 0), (2, 1, 2), (2, 2, 3), (3, 2, 0), (3, 2, 3)
(0, 2, 1), (0, 3, 0), (1, 2, 0), (1, 3, 1), (2, 2, 2)
(0, 1, 2), (1, 1, 1), (2, 0, 1), (2, 3, 2), (3, 3, 2)
A partition for sets of sizes: 3*3  6*4  6*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (1, 0, 0), (3, 3, 1)
(0, 2, 2), (0, 3, 0), (0, 3, 2)
(0, 1, 2), (1, 0, 2), (3, 3, 0)
(0, 2, 0), (1, 0, 1), (3, 2, 3)
(1, 0, 3), (1, 1, 0), (2, 3, 1)
(1, 1, 2), (1, 1, 3), (2, 2, 3)
(1, 2, 1), (1, 2, 2), (3, 0, 0), (3, 0, 1)
(1, 3, 1), (1, 3, 2), (1, 3, 3), (2, 0, 0), (3, 3, 2)
(2, 0, 2), (2, 0, 3), (2, 1, 0), (3, 1, 1), (3, 2, 2)
(2, 1, 3), (2, 2, 0), (2, 2, 1), (3, 1, 0), (3, 2, 0)
(2, 3, 0), (2, 3, 2), (2, 3, 3), (3, 1, 2), (3, 2, 1)
(1, 1, 1), (1, 2, 0), (1, 2, 3), (2, 0, 1), (3, 3, 3)
(0, 2, 3), (1, 3, 0), (2, 1, 1), (2, 2, 2), (3, 0, 2)
(0, 0, 3), (0, 2, 1), (2, 1, 2), (3, 0, 3), (3, 1, 3)
A partition for sets of sizes: 8*3  1*4  7*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (1, 0, 0), (3, 3, 1)
(0, 2, 2), (0, 3, 0), (0, 3, 2)
(0, 1, 2), (0, 2, 3), (1, 0, 1), (3, 1, 2)
(0, 0, 3), (1, 0, 2), (1, 0, 3), (2, 0, 0)
(1, 1, 1), (1, 1, 2), (1, 3, 0), (1, 3, 1)
(1, 2, 1), (1, 2, 2), (3, 0, 0), (3, 0, 1)
(1, 2, 0), (1, 3, 2), (1, 3, 3), (2, 0, 1), (3, 0, 2)
(2, 0, 2), (2, 0, 3), (2, 1, 0), (3, 0, 3), (3, 3, 0)
(2, 1, 3), (2, 2, 0), (2, 2, 1), (3, 1, 0), (3, 2, 0)
(2, 3, 0), (2, 3, 1), (2, 3, 2), (3, 1, 3), (3, 2, 2)
(1, 1, 3), (2, 1, 1), (3, 1, 1), (3, 2, 1), (3, 3, 2)
(0, 2, 0), (1, 2, 3), (2, 2, 3), (2, 3, 3), (3, 3, 3)
(0, 2, 1), (1, 1, 0), (2, 1, 2), (2, 2, 2), (3, 2, 3)
A partition for sets of sizes: 4*3  4*4  7*5

(0, 0, 1), (0, 0, 2), (0, 1, 0), (0, 3, 1)
(0, 1, 1), (0, 1, 2), (0, 3, 2), (0, 3, 3)
(0, 2, 1), (0, 2, 2), (1, 0, 0), (3, 0, 1)
(0, 0, 3), (0, 1, 3), (1, 0, 1), (3, 3, 1)
(0, 2, 0), (1, 0, 2), (1, 0, 3), (2, 2, 3)
(1, 1, 1), (1, 1, 2), (1, 3, 0), (1, 3, 1)
(1, 2, 1), (1, 2, 2), (3, 0, 2), (3, 0, 3)
(1, 2, 0), (1, 3, 2), (1, 3, 3), (2, 0, 3), (3, 0, 0)
(2, 0, 2), (2, 1, 0), (2, 1, 1), (3, 1, 0), (3, 1, 1)
(2, 1, 3), (2, 2, 0), (2, 2, 1), (3, 1, 2), (3, 2, 2)
(2, 3, 0), (2, 3, 1), (2, 3, 3), (3, 1, 3), (3, 2, 1)
(0, 3, 0), (1, 2, 3), (2, 0, 0), (2, 1, 2), (3, 2, 3)
(1, 1, 0), (2, 3, 2), (3, 2, 0), (3, 3, 0), (3, 3, 2)
(0, 2, 3), (1, 1, 3), (2, 0, 1), (2, 2, 2), (3, 3, 3)
A partition for sets of sizes: 0*3  7*4  7*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (1, 0, 0), (3, 3, 1)
(0, 2, 2), (0, 3, 0), (0, 3, 2)
(0, 1, 2), (1, 0, 2), (3, 3, 0)
(0, 2, 0), (1, 0, 1), (1, 0, 3), (2, 2, 0)
(1, 1, 0), (1, 1, 1), (1, 3, 0), (1, 3, 3)
(1, 2, 0), (1, 2, 1), (1, 2, 2), (2, 0, 0), (3, 2, 1)
(1, 3, 1), (1, 3, 2), (2, 0, 1), (2, 0, 2), (2, 2, 2)
(1, 2, 3), (2, 0, 3), (3, 0, 0), (3, 0, 2), (3, 2, 0)
(2, 1, 3), (2, 2, 1), (2, 2, 3), (3, 0, 3), (3, 3, 2)
(2, 3, 0), (2, 3, 1), (2, 3, 2), (3, 1, 2), (3, 2, 3)
(2, 1, 1), (2, 1, 2), (2, 3, 3), (3, 1, 0), (3, 2, 2)
(1, 1, 3), (2, 1, 0), (3, 0, 1), (3, 1, 1), (3, 1, 3)
(0, 0, 3), (0, 2, 1), (0, 2, 3), (1, 1, 2), (3, 3, 3)
A partition for sets of sizes: 5*3  2*4  8*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 1, 2), (0, 2, 3)
(0, 2, 0), (0, 2, 1), (1, 0, 0), (3, 0, 3)
(0, 3, 0), (0, 3, 1), (1, 0, 1), (3, 2, 2)
(0, 2, 2), (0, 3, 2), (1, 0, 2), (3, 3, 2)
(1, 1, 0), (1, 1, 1), (1, 3, 0), (1, 3, 3)
(1, 2, 0), (1, 2, 1), (1, 2, 2), (2, 0, 0), (3, 2, 1)
(1, 3, 1), (1, 3, 2), (2, 0, 1), (2, 0, 2), (2, 2, 2)
(1, 2, 3), (2, 0, 3), (3, 0, 0), (3, 0, 2), (3, 2, 0)
(2, 1, 3), (2, 2, 0), (2, 2, 1), (3, 0, 1), (3, 3, 3)
(2, 3, 0), (2, 3, 1), (2, 3, 2), (3, 1, 2), (3, 2, 3)
(1, 1, 3), (2, 2, 3), (3, 1, 0), (3, 1, 1), (3, 3, 1)
(0, 0, 3), (1, 1, 2), (2, 1, 0), (2, 3, 3), (3, 3, 0)
(0, 1, 3), (1, 0, 3), (2, 1, 1), (2, 1, 2), (3, 1, 3)
A partition for sets of sizes: 1*3  5*4  8*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (1, 0, 0), (3, 3, 1)
(0, 2, 2), (0, 3, 0), (0, 3, 2)
(0, 1, 2), (1, 0, 2), (3, 3, 0)
(0, 2, 0), (1, 0, 1), (3, 2, 3)
(1, 0, 3), (1, 1, 0), (1, 1, 1), (2, 0, 0), (3, 2, 0)
(1, 2, 0), (1, 2, 1), (1, 2, 2), (2, 0, 3), (3, 2, 2)
(1, 3, 1), (1, 3, 2), (1, 3, 3), (2, 1, 1), (3, 2, 1)
(2, 0, 2), (2, 1, 0), (2, 1, 2), (3, 1, 1), (3, 1, 3)
(2, 1, 3), (2, 2, 0), (2, 2, 1), (3, 0, 1), (3, 3, 3)
(2, 3, 0), (2, 3, 1), (2, 3, 2), (3, 0, 3), (3, 3, 2)
(2, 2, 2), (2, 2, 3), (2, 3, 3), (3, 0, 0), (3, 1, 0)
(0, 0, 3), (0, 2, 3), (1, 1, 2), (1, 1, 3), (2, 0, 1)
(0, 2, 1), (1, 2, 3), (1, 3, 0), (3, 0, 2), (3, 1, 2)
A partition for sets of sizes: 6*3  0*4  9*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (0, 2, 0), (0, 2, 1), (0, 3, 0)
(0, 2, 3), (0, 3, 2), (1, 0, 0), (3, 3, 3)
(0, 0, 3), (0, 1, 2), (1, 0, 1), (3, 3, 2)
(1, 0, 3), (1, 1, 0), (1, 1, 1), (2, 0, 0), (3, 2, 0)
(1, 2, 0), (1, 2, 1), (1, 2, 2), (2, 0, 2), (3, 2, 3)
(1, 3, 1), (1, 3, 2), (1, 3, 3), (2, 0, 1), (3, 3, 1)
(1, 2, 3), (2, 0, 3), (3, 0, 0), (3, 0, 1), (3, 2, 1)
(2, 1, 3), (2, 2, 0), (2, 2, 1), (3, 1, 2), (3, 2, 2)
(2, 3, 0), (2, 3, 2), (2, 3, 3), (3, 0, 3), (3, 3, 0)
(2, 1, 1), (2, 2, 2), (2, 3, 1), (3, 1, 1), (3, 1, 3)
(1, 1, 3), (1, 3, 0), (2, 1, 0), (2, 1, 2), (2, 2, 3)
(0, 2, 2), (1, 0, 2), (1, 1, 2), (3, 0, 2), (3, 1, 0)
A partition for sets of sizes: 2*3  3*4  9*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 3, 1)
(0, 1, 3), (1, 0, 0), (3, 3, 1)
(0, 2, 2), (0, 2, 3), (1, 0, 1), (3, 0, 2)
(0, 3, 2), (1, 0, 2), (1, 0, 3), (1, 2, 0), (1, 3, 1)
(0, 2, 0), (1, 1, 0), (1, 1, 1), (1, 1, 3), (1, 3, 0)
(0, 3, 0), (1, 2, 1), (1, 2, 2), (1, 2, 3), (1, 3, 2)
(0, 0, 3), (1, 1, 2), (1, 3, 3), (3, 0, 1), (3, 0, 3)
(2, 0, 2), (2, 0, 3), (2, 1, 0), (3, 0, 0), (3, 3, 3)
(2, 1, 3), (2, 2, 0), (2, 2, 1), (3, 1, 0), (3, 2, 0)
(2, 3, 0), (2, 3, 1), (2, 3, 2), (3, 1, 2), (3, 2, 3)
(2, 0, 0), (2, 0, 1), (2, 3, 3), (3, 2, 2), (3, 3, 2)
(0, 1, 2), (0, 2, 1), (2, 2, 3), (3, 1, 1), (3, 2, 1)
(2, 1, 1), (2, 1, 2), (2, 2, 2), (3, 1, 3), (3, 3, 0)
A partition for sets of sizes: 3*3  1*4  10*5

(0, 0, 1), (0, 0, 2), (0, 1, 0), (0, 3, 1)
(0, 1, 1), (0, 1, 2), (0, 3, 2), (0, 3, 3)
(0, 2, 1), (0, 2, 2), (0, 2, 3), (1, 0, 0), (3, 2, 2)
(0, 1, 3), (0, 2, 0), (0, 3, 0), (1, 0, 1), (3, 2, 0)
(1, 0, 3), (1, 1, 0), (1, 1, 1), (2, 0, 1), (3, 2, 3)
(1, 2, 0), (1, 2, 1), (1, 2, 2), (2, 0, 0), (3, 2, 1)
(1, 3, 1), (1, 3, 2), (1, 3, 3), (2, 0, 2), (3, 3, 0)
(1, 2, 3), (2, 0, 3), (3, 0, 0), (3, 1, 0), (3, 1, 2)
(2, 1, 3), (2, 2, 0), (2, 2, 1), (3, 0, 1), (3, 3, 3)
(2, 3, 0), (2, 3, 1), (2, 3, 2), (3, 0, 3), (3, 3, 2)
(1, 0, 2), (1, 3, 0), (2, 1, 1), (2, 1, 2), (2, 3, 3)
(0, 0, 3), (1, 1, 3), (2, 2, 2), (2, 2, 3), (3, 3, 1)
(1, 1, 2), (2, 1, 0), (3, 0, 2), (3, 1, 1), (3, 1, 3)
A partition for sets of sizes: 0*3  2*4  11*5

(0, 0, 1), (0, 1, 0), (0, 3, 3)
(0, 0, 2), (0, 1, 1), (0, 1, 2), (0, 3, 1), (0, 3, 2)
(0, 2, 1), (0, 2, 2), (0, 2, 3), (1, 0, 0), (3, 2, 2)
(0, 2, 0), (0, 3, 0), (1, 0, 1), (1, 0, 2), (2, 3, 1)
(1, 0, 3), (1, 1, 0), (1, 1, 1), (2, 0, 0), (3, 2, 0)
(1, 2, 0), (1, 2, 1), (1, 2, 2), (2, 0, 2), (3, 2, 3)
(1, 3, 1), (1, 3, 2), (1, 3, 3), (2, 0, 1), (3, 3, 1)
(1, 2, 3), (2, 0, 3), (3, 0, 0), (3, 0, 1), (3, 2, 1)
(2, 1, 3), (2, 2, 0), (2, 2, 1), (3, 0, 2), (3, 3, 2)
(2, 3, 0), (2, 3, 2), (2, 3, 3), (3, 0, 3), (3, 3, 0)
(2, 1, 1), (2, 1, 2), (2, 2, 2), (3, 1, 0), (3, 3, 3)
(0, 0, 3), (1, 1, 2), (1, 1, 3), (3, 1, 1), (3, 1, 3)
(0, 1, 3), (1, 3, 0), (2, 1, 0), (2, 2, 3), (3, 1, 2)
A partition for sets of sizes: 1*3  0*4  12*5
)ZSPRAW";

const char* const kTable4 = R"ZSPRAW((0, 0, 1), (0, 1, 0), (0, 1, 1)
(1, 0, 0), (1, 0, 1), (6, 0, 1)
(1, 1, 1), (2, 0, 0), (5, 1, 1)
(2, 1, 0), (2, 1, 1), (4, 0, 1)
(3, 0, 1), (6, 0, 0), (7, 0, 1)
(4, 0, 0), (5, 0, 0), (7, 0, 0)
(4, 1, 1), (5, 0, 1), (7, 1, 0)
(2, 0, 1), (3, 1, 0), (3, 1, 1)
(1, 1, 0), (3, 0, 0), (4, 1, 0)
(5, 1, 0), (6, 1, 0), (6, 1, 1), (7, 1, 1)
A partition for sets of sizes: 9*3  1*4  0*5

(0, 0, 1), (0, 1, 0), (0, 1, 1)
(1, 0, 0), (1, 0, 1), (6, 0, 1)
(1, 1, 1), (2, 0, 0), (5, 1, 1)
(2, 1, 0), (2, 1, 1), (4, 0, 1)
(3, 0, 1), (6, 0, 0), (7, 0, 1)
(4, 0, 0), (6, 1, 0), (7, 0, 0), (7, 1, 0)
(2, 0, 1), (3, 1, 0), (5, 0, 0), (6, 1, 1)
(1, 1, 0), (3, 0, 0), (5, 0, 1), (7, 1, 1)
(3, 1, 1), (4, 1, 0), (4, 1, 1), (5, 1, 0)
A partition for sets of sizes: 5*3  4*4  0*5

(0, 0, 1), (0, 1, 0), (0, 1, 1)
(1, 0, 0), (1, 0, 1), (1, 1, 0), (5, 1, 1)
(2, 0, 0), (2, 0, 1), (2, 1, 0), (2, 1, 1)
(3, 0, 0), (3, 0, 1), (3, 1, 0), (7, 1, 1)
(4, 0, 0), (4, 0, 1), (4, 1, 0), (4, 1, 1)
(5, 0, 0), (5, 0, 1), (7, 0, 0), (7, 0, 1)
(6, 0, 0), (6, 0, 1), (6, 1, 0), (6, 1, 1)
(1, 1, 1), (3, 1, 1), (5, 1, 0), (7, 1, 0)
A partition for sets of sizes: 1*3  7*4  0*5

(0, 0, 1), (0, 1, 0), (0, 1, 1)
(1, 0, 0), (1, 0, 1), (6, 0, 1)
(1, 1, 1), (2, 0, 0), (5, 1, 1)
(2, 1, 0), (2, 1, 1), (4, 0, 1)
(3, 0, 1), (6, 0, 0), (7, 0, 1)
(4, 0, 0), (5, 0, 0), (7, 0, 0)
(4, 1, 1), (6, 1, 0), (7, 1, 0), (7, 1, 1)
(2, 0, 1), (3, 0, 0), (5, 1, 0), (6, 1, 1)
(1, 1, 0), (3, 1, 0), (3, 1, 1), (4, 1, 0), (5, 0, 1)
A partition for sets of sizes: 6*3  2*4  1*5

(0, 0, 1), (0, 1, 0), (0, 1, 1)
(1, 0, 0), (1, 0, 1), (6, 0, 1)
(1, 1, 1), (2, 0, 0), (2, 0, 1), (3, 1, 0)
(2, 1, 1), (3, 0, 0), (4, 0, 0), (7, 1, 1)
(3, 1, 1), (4, 0, 1), (4, 1, 0), (5, 0, 0)
(4, 1, 1), (6, 0, 0), (7, 0, 1), (7, 1, 0)
(1, 1, 0), (3, 0, 1), (5, 1, 1), (7, 0, 0)
(2, 1, 0), (5, 0, 1), (5, 1, 0), (6, 1, 0), (6, 1, 1)
A partition for sets of sizes: 2*3  5*4  1*5

(0, 0, 1), (0, 1, 0), (0, 1, 1)
(1, 0, 0), (1, 0, 1), (6, 0, 1)
(1, 1, 1), (2, 0, 0), (5, 1, 1)
(2, 1, 0), (2, 1, 1), (4, 0, 1)
(3, 0, 1), (6, 0, 0), (7, 0, 1)
(4, 0, 0), (5, 0, 0), (7, 0, 0)
(4, 1, 1), (5, 0, 1), (7, 1, 0)
(2, 0, 1), (4, 1, 0), (5, 1, 0), (6, 1, 0), (7, 1, 1)
(1, 1, 0), (3, 0, 0), (3, 1, 0), (3, 1, 1), (6, 1, 1)
A partition for sets of sizes: 7*3  0*4  2*5

(0, 0, 1), (0, 1, 0), (0, 1, 1)
(1, 0, 0), (1, 0, 1), (6, 0, 1)
(1, 1, 1), (2, 0, 0), (5, 1, 1)
(2, 1, 0), (2, 1, 1), (5, 0, 0), (7, 0, 1)
(3, 1, 0), (3, 1, 1), (4, 0, 1), (6, 0, 0)
(4, 1, 0), (6, 1, 1), (7, 1, 0), (7, 1, 1)
(1, 1, 0), (2, 0, 1), (3, 0, 1), (4, 0, 0), (6, 1, 0)
(3, 0, 0), (4, 1, 1), (5, 0, 1), (5, 1, 0), (7, 0, 0)
A partition for sets of sizes: 3*3  3*4  2*5

(0, 0, 1), (0, 1, 0), (0, 1, 1)
(1, 0, 0), (1, 0, 1), (6, 0, 1)
(1, 1, 1), (2, 0, 0), (5, 1, 1)
(2, 1, 0), (2, 1, 1), (4, 0, 1)
(3, 0, 1), (3, 1, 0), (3, 1, 1), (7, 0, 0)
(3, 0, 0), (4, 1, 0), (4, 1, 1), (6, 0, 0), (7, 0, 1)
(2, 0, 1), (5, 0, 0), (5, 0, 1), (5, 1, 0), (7, 1, 0)
(1, 1, 0), (4, 0, 0), (6, 1, 0), (6, 1, 1), (7, 1, 1)
A partition for sets of sizes: 4*3  1*4  3*5

(0, 0, 1), (0, 1, 0), (1, 0, 0), (7, 1, 1)
(1, 0, 1), (1, 1, 0), (1, 1, 1), (5, 0, 0)
(2, 0, 1), (2, 1, 0), (5, 0, 1), (7, 1, 0)
(3, 0, 1), (3, 1, 0), (3, 1, 1), (7, 0, 0)
(4, 0, 1), (4, 1, 0), (5, 1, 0), (5, 1, 1), (6, 1, 0)
(2, 0, 0), (3, 0, 0), (6, 0, 0), (6, 0, 1), (7, 0, 1)
(0, 1, 1), (2, 1, 1), (4, 0, 0), (4, 1, 1), (6, 1, 1)
A partition for sets of sizes: 0*3  4*4  3*5

(0, 0, 1), (0, 1, 0), (0, 1, 1)
(1, 0, 0), (1, 0, 1), (1, 1, 0), (5, 1, 1)
(2, 0, 0), (2, 0, 1), (2, 1, 0), (2, 1, 1)
(3, 0, 0), (3, 0, 1), (3, 1, 0), (3, 1, 1), (4, 0, 0)
(4, 0, 1), (4, 1, 0), (4, 1, 1), (5, 0, 0), (7, 0, 0)
(5, 1, 0), (6, 1, 0), (7, 0, 1), (7, 1, 0), (7, 1, 1)
(1, 1, 1), (5, 0, 1), (6, 0, 0), (6, 0, 1), (6, 1, 1)
A partition for sets of sizes: 1*3  2*4  4*5

(0, 0, 1), (0, 1, 0), (0, 1, 1)
(1, 0, 0), (1, 0, 1), (6, 0, 1)
(1, 1, 1), (2, 0, 0), (2, 0, 1), (4, 0, 0), (7, 1, 0)
(3, 0, 0), (3, 0, 1), (4, 1, 0), (7, 0, 0), (7, 1, 1)
(4, 0, 1), (4, 1, 1), (5, 0, 0), (5, 0, 1), (6, 1, 1)
(1, 1, 0), (5, 1, 0), (5, 1, 1), (6, 1, 0), (7, 0, 1)
(2, 1, 0), (2, 1, 1), (3, 1, 0), (3, 1, 1), (6, 0, 0)
A partition for sets of sizes: 2*3  0*4  5*5
)ZSPRAW";

const char* const kTable5 = R"ZSPRAW((0, 0, 1, 0, 1), (0, 1, 0, 1, 0), (0, 1, 1, 1, 1)
(0, 1, 0, 0, 1), (1, 1, 0, 1, 0), (3, 0, 0, 1, 1)
(0, 1, 1, 0, 1), (1, 1, 0, 1, 1), (3, 0, 1, 1, 0)
(1, 0, 0, 0, 1), (1, 0, 1, 1, 0), (2, 0, 1, 1, 1)
(1, 1, 1, 0, 1), (1, 0, 1, 1, 1), (2, 1, 0, 1, 0)
(1, 1, 0, 0, 1), (1, 0, 0, 1, 0), (2, 1, 0, 1, 1)
(1, 1, 1, 1, 0), (1, 1, 1, 1, 1), (2, 0, 0, 0, 1)
(0, 0, 1, 1, 0), (1, 0, 0, 1, 1), (3, 0, 1, 0, 1)
(2, 0, 1, 0, 1), (3, 0, 0, 1, 0), (3, 0, 1, 1, 1)
(2, 0, 0, 1, 0), (3, 1, 1, 0, 1), (3, 1, 1, 1, 1)
(2, 1, 1, 1, 1), (3, 1, 1, 1, 0), (3, 0, 0, 0, 1)
(0, 1, 1, 1, 0), (1, 0, 1, 0, 1), (3, 1, 0, 1, 1)
(0, 1, 0, 1, 1), (2, 0, 1, 1, 0), (2, 1, 1, 0, 1)
(0, 0, 1, 1, 1), (2, 1, 0, 0, 1), (2, 1, 1, 1, 0)
(2, 0, 0, 1, 1), (3, 1, 0, 0, 1), (3, 1, 0, 1, 0)
A partition for sets of sizes:  15*3  0*4  0*5

(0, 0, 1, 0, 1), (0, 1, 0, 1, 0), (0, 1, 1, 1, 1)
(0, 1, 0, 0, 1), (1, 1, 0, 1, 0), (3, 0, 0, 1, 1)
(0, 1, 1, 0, 1), (1, 1, 0, 1, 1), (3, 0, 1, 1, 0)
(1, 1, 0, 0, 1), (1, 1, 1, 1, 0), (2, 0, 1, 1, 1)
(1, 0, 1, 0, 1), (1, 0, 1, 1, 1), (2, 0, 0, 1, 0)
(1, 0, 0, 0, 1), (1, 0, 0, 1, 0), (2, 0, 0, 1, 1)
(1, 0, 1, 1, 0), (1, 1, 1, 1, 1), (2, 1, 0, 0, 1)
(0, 0, 1, 1, 0), (1, 0, 0, 1, 1), (3, 0, 1, 0, 1)
(2, 0, 1, 0, 1), (3, 0, 0, 1, 0), (3, 0, 1, 1, 1)
(2, 0, 0, 0, 1), (3, 1, 0, 1, 1), (3, 1, 0, 1, 0)
(2, 1, 1, 1, 0), (3, 0, 0, 0, 1), (3, 1, 1, 1, 1)
(0, 1, 1, 1, 0), (2, 1, 1, 0, 1), (3, 1, 1, 0, 1), (3, 1, 1, 1, 0)
(1, 1, 1, 0, 1), (2, 1, 0, 1, 1), (2, 1, 1, 1, 1), (3, 1, 0, 0, 1)
(0, 0, 1, 1, 1), (0, 1, 0, 1, 1), (2, 0, 1, 1, 0), (2, 1, 0, 1, 0)
A partition for sets of sizes:  11*3  3*4  0*5

(0, 1, 1, 0, 1), (0, 1, 0, 1, 0), (0, 0, 1, 1, 1)
(0, 1, 0, 0, 1), (1, 1, 0, 1, 0), (3, 0, 0, 1, 1)
(0, 0, 1, 0, 1), (1, 0, 0, 1, 1), (3, 0, 1, 1, 0)
(1, 1, 0, 0, 1), (1, 1, 1, 1, 0), (2, 0, 1, 1, 1)
(1, 0, 1, 0, 1), (1, 1, 1, 1, 1), (2, 1, 0, 1, 0)
(1, 0, 0, 0, 1), (1, 0, 0, 1, 0), (2, 0, 0, 1, 1)
(1, 0, 1, 1, 0), (1, 0, 1, 1, 1), (2, 0, 0, 0, 1)
(1, 1, 1, 0, 1), (2, 0, 1, 0, 1), (2, 1, 0, 0, 1), (3, 0, 0, 0, 1)
(0, 1, 1, 1, 0), (2, 0, 1, 1, 0), (3, 0, 0, 1, 0), (3, 1, 0, 1, 0)
(0, 0, 1, 1, 0), (2, 1, 1, 0, 1), (3, 1, 1, 1, 0), (3, 0, 1, 0, 1)
(1, 1, 0, 1, 1), (2, 0, 0, 1, 0), (2, 1, 1, 1, 0), (3, 0, 1, 1, 1)
(0, 1, 0, 1, 1), (2, 1, 1, 1, 1), (3, 1, 0, 1, 1), (3, 1, 1, 1, 1)
(0, 1, 1, 1, 1), (2, 1, 0, 1, 1), (3, 1, 1, 0, 1), (3, 1, 0, 0, 1)
A partition for sets of sizes:  7*3  6*4  0*5

(0, 1, 1, 0, 1), (0, 1, 0, 1, 0), (0, 0, 1, 1, 1)
(0, 1, 0, 0, 1), (1, 1, 0, 1, 0), (3, 0, 0, 1, 1)
(0, 0, 1, 0, 1), (1, 0, 0, 1, 1), (3, 0, 1, 1, 0)
(1, 0, 0, 0, 1), (1, 0, 1, 0, 1), (1, 1, 0, 0, 1), (1, 1, 1, 0, 1)
(1, 1, 1, 1, 0), (1, 0, 1, 1, 1), (1, 0, 0, 1, 0), (1, 1, 0, 1, 1)
(0, 1, 1, 1, 0), (1, 0, 1, 1, 0), (1, 1, 1, 1, 1), (2, 0, 1, 1, 1)
(2, 1, 0, 0, 1), (2, 1, 0, 1, 0), (2, 0, 1, 0, 1), (2, 0, 1, 1, 0)
(2, 0, 0, 1, 1), (2, 1, 1, 1, 1), (2, 0, 0, 0, 1), (2, 1, 1, 0, 1)
(0, 0, 1, 1, 0), (2, 0, 0, 1, 0), (3, 0, 0, 0, 1), (3, 0, 1, 0, 1)
(3, 0, 0, 1, 0), (3, 1, 0, 1, 1), (3, 1, 1, 1, 0), (3, 0, 1, 1, 1)
(0, 1, 0, 1, 1), (2, 1, 1, 1, 0), (3, 1, 0, 1, 0), (3, 1, 1, 1, 1)
(0, 1, 1, 1, 1), (2, 1, 0, 1, 1), (3, 1, 1, 0, 1), (3, 1, 0, 0, 1)
A partition for sets of sizes:  3*3  9*4  0*5

(0, 1, 1, 0, 1), (0, 1, 0, 1, 0), (0, 0, 1, 1, 1)
(0, 1, 0, 0, 1), (1, 1, 0, 1, 0), (3, 0, 0, 1, 1)
(0, 0, 1, 0, 1), (1, 0, 0, 1, 1), (3, 0, 1, 1, 0)
(1, 1, 0, 0, 1), (1, 1, 1, 1, 0), (2, 0, 1, 1, 1)
(1, 0, 1, 0, 1), (1, 0, 1, 1, 1), (2, 0, 0, 1, 0)
(1, 0, 0, 0, 1), (1, 0, 0, 1, 0), (2, 0, 0, 1, 1)
(1, 0, 1, 1, 0), (1, 1, 1, 1, 1), (2, 1, 0, 0, 1)
(0, 1, 1, 1, 0), (1, 1, 0, 1, 1), (3, 0, 1, 0, 1)
(2, 0, 1, 0, 1), (3, 0, 0, 1, 0), (3, 0, 1, 1, 1)
(2, 0, 0, 0, 1), (3, 1, 0, 1, 1), (3, 1, 0, 1, 0)
(2, 1, 1, 1, 0), (3, 0, 0, 0, 1), (3, 1, 1, 1, 1)
(0, 1, 0, 1, 1), (2, 0, 1, 1, 0), (2, 1, 1, 0, 1)
(1, 1, 1, 0, 1), (2, 1, 0, 1, 1), (2, 1, 1, 1, 1), (3, 1, 0, 0, 1)
(0, 1, 1, 1, 1), (0, 0, 1, 1, 0), (2, 1, 0, 1, 0), (3, 1, 1, 0, 1), (3, 1, 1, 1, 0)
A partition for sets of sizes:  12*3  1*4  1*5

(0, 0, 1, 0, 1), (0, 1, 0, 1, 0), (0, 1, 1, 1, 1)
(0, 1, 0, 0, 1), (1, 1, 0, 1, 0), (3, 0, 0, 1, 1)
(0, 1, 1, 0, 1), (1, 1, 0, 1, 1), (3, 0, 1, 1, 0)
(1, 1, 0, 0, 1), (1, 1, 1, 1, 0), (2, 0, 1, 1, 1)
(1, 0, 1, 0, 1), (1, 0, 1, 1, 1), (2, 0, 0, 1, 0)
(1, 0, 0, 0, 1), (1, 0, 0, 1, 0), (2, 0, 0, 1, 1)
(1, 0, 1, 1, 0), (1, 1, 1, 1, 1), (2, 1, 0, 0, 1)
(0, 0, 1, 1, 0), (1, 0, 0, 1, 1), (3, 0, 1, 0, 1)
(2, 1, 1, 0, 1), (2, 0, 1, 1, 0), (2, 0, 0, 0, 1), (2, 1, 0, 1, 0)
(0, 1, 1, 1, 0), (2, 1, 0, 1, 1), (3, 0, 0, 1, 0), (3, 0, 1, 1, 1)
(3, 1, 0, 1, 1), (3, 1, 1, 0, 1), (3, 1, 0, 0, 1), (3, 1, 1, 1, 1)
(0, 0, 1, 1, 1), (0, 1, 0, 1, 1), (1, 1, 1, 0, 1), (3, 0, 0, 0, 1)
(2, 0, 1, 0, 1), (2, 1, 1, 1, 0), (2, 1, 1, 1, 1), (3, 1, 1, 1, 0), (3, 1, 0, 1, 0)
A partition for sets of sizes:  8*3  4*4  1*5

(0, 0, 1, 0, 1), (0, 1, 0, 1, 0), (0, 1, 1, 1, 1)
(0, 1, 0, 0, 1), (1, 1, 0, 1, 0), (3, 0, 0, 1, 1)
(0, 1, 1, 0, 1), (1, 1, 0, 1, 1), (3, 0, 1, 1, 0)
(1, 0, 0, 0, 1), (1, 0, 1, 1, 0), (2, 0, 1, 1, 1)
(1, 0, 1, 0, 1), (1, 1, 1, 1, 1), (1, 1, 0, 0, 1), (1, 0, 0, 1, 1)
(1, 0, 0, 1, 0), (1, 1, 1, 0, 1), (3, 0, 0, 0, 1), (3, 1, 1, 1, 0)
(1, 0, 1, 1, 1), (2, 1, 0, 0, 1), (2, 1, 0, 1, 1), (3, 0, 1, 0, 1)
(2, 0, 1, 0, 1), (2, 0, 1, 1, 0), (2, 0, 0, 0, 1), (2, 0, 0, 1, 0)
(0, 0, 1, 1, 0), (2, 0, 0, 1, 1), (3, 0, 0, 1, 0), (3, 0, 1, 1, 1)
(0, 1, 1, 1, 0), (2, 1, 1, 1, 1), (3, 1, 0, 1, 1), (3, 1, 0, 1, 0)
(0, 1, 0, 1, 1), (2, 1, 1, 0, 1), (3, 1, 0, 0, 1), (3, 1, 1, 1, 1)
(0, 0, 1, 1, 1), (1, 1, 1, 1, 0), (2, 1, 0, 1, 0), (2, 1, 1, 1, 0), (3, 1, 1, 0, 1)
A partition for sets of sizes:  4*3  7*4  1*5

(0, 1, 1, 0, 1), (0, 1, 1, 1, 0), (0, 1, 0, 0, 1), (0, 1, 0, 1, 0)
(0, 0, 1, 1, 1), (0, 1, 0, 1, 1), (1, 1, 0, 0, 1), (3, 0, 1, 0, 1)
(0, 1, 1, 1, 1), (1, 0, 0, 1, 0), (1, 1, 0, 1, 1), (2, 0, 1, 1, 0)
(1, 1, 1, 0, 1), (1, 0, 1, 1, 0), (1, 0, 0, 0, 1), (1, 1, 0, 1, 0)
(1, 0, 1, 1, 1), (1, 0, 0, 1, 1), (3, 0, 0, 1, 0), (3, 0, 1, 1, 0)
(1, 1, 1, 1, 1), (2, 1, 0, 0, 1), (2, 0, 1, 0, 1), (3, 0, 0, 1, 1)
(2, 0, 0, 1, 0), (2, 1, 1, 1, 0), (2, 0, 0, 0, 1), (2, 1, 1, 0, 1)
(0, 0, 1, 0, 1), (2, 0, 0, 1, 1), (3, 0, 0, 0, 1), (3, 0, 1, 1, 1)
(1, 0, 1, 0, 1), (2, 0, 1, 1, 1), (2, 1, 1, 1, 1), (3, 1, 1, 0, 1)
(3, 1, 0, 1, 1), (3, 1, 1, 1, 0), (3, 1, 0, 1, 0), (3, 1, 1, 1, 1)
(0, 0, 1, 1, 0), (1, 1, 1, 1, 0), (2, 1, 0, 1, 1), (2, 1, 0, 1, 0), (3, 1, 0, 0, 1)
A partition for sets of sizes:  0*3  10*4  1*5

(0, 1, 1, 0, 1), (0, 1, 0, 1, 0), (0, 0, 1, 1, 1)
(0, 1, 0, 0, 1), (1, 1, 0, 1, 0), (3, 0, 0, 1, 1)
(0, 0, 1, 0, 1), (1, 0, 0, 1, 1), (3, 0, 1, 1, 0)
(1, 1, 0, 0, 1), (1, 1, 1, 1, 0), (2, 0, 1, 1, 1)
(1, 0, 1, 0, 1), (1, 0, 1, 1, 1), (2, 0, 0, 1, 0)
(1, 0, 0, 0, 1), (1, 0, 0, 1, 0), (2, 0, 0, 1, 1)
(1, 0, 1, 1, 0), (1, 1, 1, 1, 1), (2, 1, 0, 0, 1)
(0, 1, 1, 1, 0), (1, 1, 0, 1, 1), (3, 0, 1, 0, 1)
(2, 0, 1, 0, 1), (3, 0, 0, 1, 0), (3, 0, 1, 1, 1)
(2, 0, 0, 0, 1), (2, 1, 0, 1, 0), (2, 1, 1, 0, 1), (2, 0, 1, 1, 0)
(3, 1, 0, 1, 1), (3, 1, 1, 0, 1), (3, 1, 0, 0, 1), (3, 1, 1, 1, 1)
(0, 0, 1, 1, 0), (1, 1, 1, 0, 1), (2, 1, 1, 1, 0), (2, 1, 1, 1, 1), (3, 1, 0, 1, 0)
(0, 1, 1, 1, 1), (0, 1, 0, 1, 1), (2, 1, 0, 1, 1), (3, 0, 0, 0, 1), (3, 1, 1, 1, 0)
A partition for sets of sizes:  9*3  2*4  2*5

(0, 1, 1, 0, 1), (0, 1, 0, 1, 0), (0, 0, 1, 1, 1)
(0, 1, 0, 0, 1), (1, 1, 0, 1, 0), (3, 0, 0, 1, 1)
(0, 0, 1, 0, 1), (1, 0, 0, 1, 1), (3, 0, 1, 1, 0)
(1, 0, 0, 0, 1), (1, 0, 1, 1, 0), (2, 0, 1, 1, 1)
(1, 1, 1, 0, 1), (1, 1, 1, 1, 1), (2, 0, 0, 1, 0)
(1, 1, 0, 0, 1), (1, 0, 0, 1, 0), (1, 0, 1, 0, 1), (1, 1, 1, 1, 0)
(1, 1, 0, 1, 1), (1, 0, 1, 1, 1), (3, 1, 0, 0, 1), (3, 0, 1, 0, 1)
(2, 0, 0, 1, 1), (2, 0, 1, 0, 1), (2, 1, 0, 0, 1), (2, 1, 1, 1, 1)
(0, 0, 1, 1, 0), (2, 1, 0, 1, 0), (3, 0, 0, 1, 0), (3, 1, 1, 1, 0)
(3, 1, 0, 1, 1), (3, 0, 1, 1, 1), (3, 0, 0, 0, 1), (3, 1, 1, 0, 1)
(0, 1, 1, 1, 0), (0, 1, 1, 1, 1), (0, 1, 0, 1, 1), (2, 0, 0, 0, 1), (2, 1, 0, 1, 1)
(2, 0, 1, 1, 0), (2, 1, 1, 0, 1), (2, 1, 1, 1, 0), (3, 1, 0, 1, 0), (3, 1, 1, 1, 1)
A partition for sets of sizes:  5*3  5*4  2*5

(0, 0, 1, 0, 1), (0, 1, 0, 1, 0), (0, 1, 1, 1, 1)
(0, 1, 0, 0, 1), (0, 1, 0, 1, 1), (1, 0, 0, 0, 1), (3, 0, 0, 1, 1)
(0, 1, 1, 1, 0), (1, 0, 0, 1, 0), (1, 1, 0, 1, 1), (2, 0, 1, 1, 1)
(0, 0, 1, 1, 0), (1, 0, 1, 0, 1), (1, 0, 1, 1, 0), (2, 0, 1, 0, 1)
(1, 1, 0, 0, 1), (1, 1, 0, 1, 0), (1, 1, 1, 0, 1), (1, 1, 1, 1, 0)
(1, 0, 0, 1, 1), (1, 0, 1, 1, 1), (3, 0, 0, 0, 1), (3, 0, 1, 0, 1)
(2, 0, 0, 1, 1), (2, 0, 1, 1, 0), (2, 1, 0, 1, 1), (2, 1, 1, 1, 0)
(1, 1, 1, 1, 1), (2, 1, 1, 1, 1), (2, 1, 0, 0, 1), (3, 1, 0, 0, 1)
(0, 0, 1, 1, 1), (2, 0, 0, 0, 1), (3, 1, 0, 1, 1), (3, 1, 1, 0, 1)
(0, 1, 1, 0, 1), (3, 0, 1, 1, 0), (3, 0, 0, 1, 0), (3, 1, 1, 1, 0), (3, 0, 1, 1, 1)
(2, 0, 0, 1, 0), (2, 1, 0, 1, 0), (2, 1, 1, 0, 1), (3, 1, 0, 1, 0), (3, 1, 1, 1, 1)
A partition for sets of sizes:  1*3  8*4  2*5

(0, 0, 1, 0, 1), (0, 1, 0, 1, 0), (0, 1, 1, 1, 1)
(0, 1, 0, 0, 1), (1, 1, 0, 1, 0), (3, 0, 0, 1, 1)
(0, 1, 1, 0, 1), (1, 1, 0, 1, 1), (3, 0, 1, 1, 0)
(1, 1, 0, 0, 1), (1, 1, 1, 1, 0), (2, 0, 1, 1, 1)
(1, 0, 1, 0, 1), (1, 0, 1, 1, 1), (2, 0, 0, 1, 0)
(1, 0, 0, 0, 1), (1, 0, 0, 1, 0), (2, 0, 0, 1, 1)
(1, 0, 1, 1, 0), (1, 1, 1, 1, 1), (2, 1, 0, 0, 1)
(0, 0, 1, 1, 0), (1, 0, 0, 1, 1), (3, 0, 1, 0, 1)
(2, 0, 1, 0, 1), (3, 0, 0, 1, 0), (3, 0, 1, 1, 1)
(2, 0, 0, 0, 1), (3, 1, 0, 1, 1), (3, 1, 0, 1, 0)
(2, 1, 1, 0, 1), (2, 1, 1, 1, 0), (2, 1, 1, 1, 1), (3, 1, 1, 0, 1), (3, 0, 0, 0, 1)
(0, 1, 1, 1, 0), (1, 1, 1, 0, 1), (2, 0, 1, 1, 0), (2, 1, 0, 1, 0), (3, 1, 1, 1, 1)
(0, 0, 1, 1, 1), (0, 1, 0, 1, 1), (2, 1, 0, 1, 1), (3, 1, 0, 0, 1), (3, 1, 1, 1, 0)
A partition for sets of sizes:  10*3  0*4  3*5

(0, 1, 1, 0, 1), (0, 1, 0, 1, 0), (0, 0, 1, 1, 1)
(0, 1, 0, 0, 1), (1, 1, 0, 1, 0), (3, 0, 0, 1, 1)
(0, 0, 1, 0, 1), (1, 0, 0, 1, 1), (3, 0, 1, 1, 0)
(1, 1, 0, 0, 1), (1, 1, 1, 1, 0), (2, 0, 1, 1, 1)
(1, 1, 1, 0, 1), (1, 1, 1, 1, 1), (2, 0, 0, 1, 0)
(1, 0, 0, 0, 1), (1, 0, 0, 1, 0), (2, 0, 0, 1, 1)
(1, 0, 1, 0, 1), (1, 0, 1, 1, 0), (3, 0, 0, 0, 1), (3, 0, 0, 1, 0)
(0, 0, 1, 1, 0), (2, 1, 1, 0, 1), (3, 0, 1, 0, 1), (3, 1, 1, 1, 0)
(0, 1, 1, 1, 0), (2, 1, 0, 0, 1), (3, 1, 0, 1, 0), (3, 1, 1, 0, 1)
(2, 0, 1, 0, 1), (2, 0, 1, 1, 0), (2, 1, 1, 1, 1), (3, 1, 0, 1, 1), (3, 0, 1, 1, 1)
(0, 1, 0, 1, 1), (1, 1, 0, 1, 1), (2, 0, 0, 0, 1), (2, 1, 1, 1, 0), (3, 1, 1, 1, 1)
(0, 1, 1, 1, 1), (1, 0, 1, 1, 1), (2, 1, 0, 1, 0), (2, 1, 0, 1, 1), (3, 1, 0, 0, 1)
A partition for sets of sizes:  6*3  3*4  3*5

(0, 0, 1, 0, 1), (0, 1, 0, 1, 0), (0, 1, 1, 1, 1)
(0, 1, 0, 0, 1), (1, 1, 0, 1, 0), (3, 0, 0, 1, 1)
(0, 1, 1, 0, 1), (0, 0, 1, 1, 0), (1, 1, 0, 0, 1), (3, 0, 0, 1, 0)
(0, 1, 1, 1, 0), (1, 0, 0, 1, 1), (1, 1, 1, 1, 0), (2, 0, 0, 1, 1)
(1, 0, 1, 1, 1), (1, 0, 0, 0, 1), (3, 0, 0, 0, 1), (3, 0, 1, 1, 1)
(1, 0, 1, 0, 1), (1, 0, 1, 1, 0), (3, 0, 1, 0, 1), (3, 0, 1, 1, 0)
(2, 0, 0, 1, 0), (2, 0, 1, 0, 1), (2, 0, 0, 0, 1), (2, 0, 1, 1, 0)
(1, 1, 1, 0, 1), (2, 1, 1, 1, 1), (2, 1, 0, 1, 1), (3, 1, 0, 0, 1)
(2, 1, 1, 1, 0), (2, 1, 1, 0, 1), (2, 0, 1, 1, 1), (3, 1, 0, 1, 1), (3, 1, 1, 1, 1)
(0, 0, 1, 1, 1), (1, 1, 0, 1, 1), (1, 1, 1, 1, 1), (3, 1, 1, 0, 1), (3, 1, 1, 1, 0)
(0, 1, 0, 1, 1), (1, 0, 0, 1, 0), (2, 1, 0, 0, 1), (2, 1, 0, 1, 0), (3, 1, 0, 1, 0)
A partition for sets of sizes:  2*3  6*4  3*5

(0, 1, 1, 0, 1), (0, 1, 0, 1, 0), (0, 0, 1, 1, 1)
(0, 1, 0, 0, 1), (1, 1, 0, 1, 0), (3, 0, 0, 1, 1)
(0, 0, 1, 0, 1), (1, 0, 0, 1, 1), (3, 0, 1, 1, 0)
(1, 1, 0, 0, 1), (1, 1, 1, 1, 0), (2, 0, 1, 1, 1)
(1, 1, 1, 0, 1), (1, 1, 1, 1, 1), (2, 0, 0, 1, 0)
(1, 0, 0, 0, 1), (1, 0, 0, 1, 0), (2, 0, 0, 1, 1)
(1, 0, 1, 1, 0), (1, 0, 1, 1, 1), (2, 0, 0, 0, 1)
(1, 0, 1, 0, 1), (2, 0, 1, 0, 1), (2, 1, 0, 0, 1), (3, 1, 0, 0, 1)
(2, 0, 1, 1, 0), (2, 1, 0, 1, 0), (2, 1, 0, 1, 1), (3, 0, 0, 1, 0), (3, 0, 1, 0, 1)
(2, 1, 1, 0, 1), (2, 1, 1, 1, 0), (2, 1, 1, 1, 1), (3, 1, 0, 1, 1), (3, 0, 1, 1, 1)
(0, 0, 1, 1, 0), (3, 1, 1, 1, 0), (3, 1, 1, 1, 1), (3, 1, 0, 1, 0), (3, 1, 1, 0, 1)
(0, 1, 1, 1, 1), (0, 1, 0, 1, 1), (0, 1, 1, 1, 0), (1, 1, 0, 1, 1), (3, 0, 0, 0, 1)
A partition for sets of sizes:  7*3  1*4  4*5

(0, 1, 1, 0, 1), (0, 1, 0, 1, 0), (0, 0, 1, 1, 1)
(0, 1, 0, 0, 1), (1, 1, 0, 1, 0), (3, 0, 0, 1, 1)
(0, 0, 1, 0, 1), (1, 0, 0, 1, 1), (3, 0, 1, 1, 0)
(1, 0, 0, 0, 1), (1, 0, 1, 0, 1), (1, 1, 0, 0, 1), (1, 1, 1, 0, 1)
(1, 1, 1, 1, 0), (1, 0, 1, 1, 1), (1, 0, 0, 1, 0), (1, 1, 0, 1, 1)
(0, 1, 1, 1, 0), (1, 0, 1, 1, 0), (1, 1, 1, 1, 1), (2, 0, 1, 1, 1)
(2, 0, 0, 0, 1), (2, 1, 0, 1, 0), (2, 1, 1, 0, 1), (2, 0, 1, 1, 0)
(2, 0, 0, 1, 1), (2, 1, 1, 1, 1), (2, 1, 0, 0, 1), (3, 0, 0, 1, 0), (3, 0, 1, 1, 1)
(0, 0, 1, 1, 0), (3, 0, 0, 0, 1), (3, 1, 0, 1, 1), (3, 1, 0, 0, 1), (3, 0, 1, 0, 1)
(2, 0, 0, 1, 0), (2, 1, 0, 1, 1), (2, 1, 1, 1, 0), (3, 1, 1, 0, 1), (3, 1, 0, 1, 0)
(0, 1, 1, 1, 1), (0, 1, 0, 1, 1), (2, 0, 1, 0, 1), (3, 1, 1, 1, 0), (3, 1, 1, 1, 1)
A partition for sets of sizes:  3*3  4*4  4*5

(0, 0, 1, 0, 1), (0, 1, 0, 1, 0), (0, 1, 1, 1, 1)
(0, 1, 0, 0, 1), (1, 1, 0, 1, 0), (3, 0, 0, 1, 1)
(0, 1, 1, 0, 1), (1, 1, 0, 1, 1), (3, 0, 1, 1, 0)
(1, 1, 0, 0, 1), (1, 1, 1, 1, 0), (2, 0, 1, 1, 1)
(1, 0, 1, 0, 1), (1, 0, 1, 1, 1), (1, 0, 0, 0, 1), (1, 0, 0, 1, 1)
(1, 0, 0, 1, 0), (1, 1, 1, 0, 1), (3, 0, 0, 0, 1), (3, 1, 1, 1, 0)
(1, 1, 1, 1, 1), (2, 0, 0, 0, 1), (3, 0, 0, 1, 0), (3, 1, 0, 1, 1), (3, 0, 1, 1, 1)
(2, 0, 1, 1, 0), (2, 1, 0, 0, 1), (2, 0, 0, 1, 1), (3, 1, 0, 0, 1), (3, 0, 1, 0, 1)
(0, 0, 1, 1, 0), (2, 0, 0, 1, 0), (2, 1, 0, 1, 1), (2, 1, 0, 1, 0), (2, 0, 1, 0, 1)
(0, 1, 1, 1, 0), (1, 0, 1, 1, 0), (2, 1, 1, 0, 1), (2, 1, 1, 1, 1), (3, 1, 0, 1, 0)
(0, 0, 1, 1, 1), (0, 1, 0, 1, 1), (2, 1, 1, 1, 0), (3, 1, 1, 0, 1), (3, 1, 1, 1, 1)
A partition for sets of sizes:  4*3  2*4  5*5

(0, 1, 1, 0, 1), (0, 1, 1, 1, 0), (0, 1, 0, 0, 1), (0, 1, 0, 1, 0)
(0, 0, 1, 1, 1), (0, 1, 0, 1, 1), (1, 1, 0, 0, 1), (3, 0, 1, 0, 1)
(0, 1, 1, 1, 1), (1, 0, 0, 1, 0), (1, 1, 0, 1, 1), (2, 0, 1, 1, 0)
(1, 1, 1, 0, 1), (1, 0, 1, 1, 0), (1, 0, 0, 0, 1), (1, 1, 0, 1, 0)
(1, 0, 1, 1, 1), (1, 0, 0, 1, 1), (3, 0, 0, 1, 0), (3, 0, 1, 1, 0)
(1, 1, 1, 1, 1), (2, 1, 0, 0, 1), (3, 0, 0, 0, 1), (3, 1, 1, 0, 1), (3, 1, 0, 1, 0)
(2, 1, 1, 1, 0), (2, 0, 1, 1, 1), (2, 0, 0, 0, 1), (3, 0, 0, 1, 1), (3, 1, 0, 1, 1)
(0, 0, 1, 0, 1), (1, 0, 1, 0, 1), (2, 0, 0, 1, 0), (2, 0, 1, 0, 1), (3, 0, 1, 1, 1)
(2, 1, 0, 1, 0), (2, 0, 0, 1, 1), (2, 1, 1, 1, 1), (3, 1, 1, 1, 1), (3, 1, 0, 0, 1)
(0, 0, 1, 1, 0), (1, 1, 1, 1, 0), (2, 1, 0, 1, 1), (2, 1, 1, 0, 1), (3, 1, 1, 1, 0)
A partition for sets of sizes:  0*3  5*4  5*5

(0, 0, 1, 0, 1), (0, 1, 0, 1, 0), (0, 1, 1, 1, 1)
(0, 1, 0, 0, 1), (1, 1, 0, 1, 0), (3, 0, 0, 1, 1)
(0, 1, 1, 0, 1), (1, 1, 0, 1, 1), (3, 0, 1, 1, 0)
(1, 1, 0, 0, 1), (1, 1, 1, 1, 0), (2, 0, 1, 1, 1)
(1, 0, 1, 0, 1), (1, 0, 1, 1, 1), (2, 0, 0, 1, 0)
(1, 0, 0, 0, 1), (1, 0, 0, 1, 0), (1, 0, 0, 1, 1), (2, 0, 0, 0, 1), (3, 0, 0, 0, 1)
(1, 1, 1, 1, 1), (2, 0, 0, 1, 1), (3, 1, 0, 0, 1), (3, 0, 0, 1, 0), (3, 0, 1, 1, 1)
(2, 0, 1, 1, 0), (2, 1, 0, 0, 1), (2, 1, 0, 1, 0), (3, 1, 0, 1, 1), (3, 1, 1, 1, 0)
(0, 0, 1, 1, 0), (1, 1, 1, 0, 1), (2, 1, 1, 1, 0), (2, 1, 1, 1, 1), (3, 1, 0, 1, 0)
(0, 1, 0, 1, 1), (1, 0, 1, 1, 0), (2, 0, 1, 0, 1), (2, 1, 1, 0, 1), (3, 0, 1, 0, 1)
(0, 0, 1, 1, 1), (0, 1, 1, 1, 0), (2, 1, 0, 1, 1), (3, 1, 1, 0, 1), (3, 1, 1, 1, 1)
A partition for sets of sizes:  5*3  0*4  6*5

(0, 1, 1, 0, 1), (0, 1, 0, 1, 0), (0, 0, 1, 1, 1)
(0, 1, 0, 0, 1), (0, 1, 0, 1, 1), (1, 0, 0, 0, 1), (3, 0, 0, 1, 1)
(0, 0, 1, 1, 0), (1, 0, 0, 1, 0), (1, 0, 0, 1, 1), (2, 0, 1, 1, 1)
(0, 1, 1, 1, 0), (1, 1, 1, 0, 1), (1, 0, 1, 1, 0), (2, 0, 1, 0, 1)
(1, 1, 0, 0, 1), (1, 1, 0, 1, 0), (1, 1, 0, 1, 1), (2, 1, 0, 0, 1), (3, 0, 0, 0, 1)
(1, 0, 1, 1, 1), (2, 1, 0, 1, 0), (3, 1, 0, 0, 1), (3, 0, 0, 1, 0), (3, 0, 1, 1, 0)
(2, 0, 1, 1, 0), (2, 1, 1, 1, 1), (2, 0, 0, 0, 1), (3, 0, 1, 0, 1), (3, 1, 1, 0, 1)
(0, 1, 1, 1, 1), (1, 0, 1, 0, 1), (2, 0, 0, 1, 1), (2, 1, 1, 1, 0), (3, 0, 1, 1, 1)
(0, 0, 1, 0, 1), (1, 1, 1, 1, 1), (1, 1, 1, 1, 0), (3, 1, 0, 1, 1), (3, 1, 1, 1, 1)
(2, 0, 0, 1, 0), (2, 1, 0, 1, 1), (2, 1, 1, 0, 1), (3, 1, 1, 1, 0), (3, 1, 0, 1, 0)
A partition for sets of sizes:  1*3  3*4  6*5

(0, 1, 1, 0, 1), (0, 1, 0, 1, 0), (0, 0, 1, 1, 1)
(0, 1, 0, 0, 1), (1, 1, 0, 1, 0), (3, 0, 0, 1, 1)
(0, 0, 1, 0, 1), (0, 0, 1, 1, 0), (1, 0, 0, 0, 1), (3, 0, 0, 1, 0)
(0, 1, 1, 1, 0), (1, 0, 0, 1, 1), (1, 0, 1, 1, 0), (1, 1, 0, 0, 1), (1, 0, 0, 1, 0)
(1, 0, 1, 0, 1), (1, 0, 1, 1, 1), (1, 1, 0, 1, 1), (2, 0, 0, 1, 1), (3, 1, 0, 1, 0)
(1, 1, 1, 1, 1), (2, 0, 0, 0, 1), (3, 0, 0, 0, 1), (3, 0, 1, 1, 0), (3, 1, 0, 0, 1)
(2, 0, 1, 1, 0), (2, 0, 1, 1, 1), (2, 1, 0, 0, 1), (3, 0, 1, 0, 1), (3, 1, 1, 0, 1)
(2, 1, 1, 0, 1), (2, 1, 1, 1, 0), (2, 1, 1, 1, 1), (3, 1, 0, 1, 1), (3, 0, 1, 1, 1)
(1, 1, 1, 0, 1), (1, 1, 1, 1, 0), (2, 0, 0, 1, 0), (2, 1, 0, 1, 0), (2, 1, 0, 1, 1)
(0, 1, 1, 1, 1), (0, 1, 0, 1, 1), (2, 0, 1, 0, 1), (3, 1, 1, 1, 1), (3, 1, 1, 1, 0)
A partition for sets of sizes:  2*3  1*4  7*5

(0, 0, 1, 0, 1), (0, 0, 1, 1, 0), (0, 0, 1, 1, 1), (0, 1, 0, 0, 1), (0, 1, 1, 0, 1)
(0, 1, 0, 1, 1), (0, 1, 1, 1, 0), (0, 1, 1, 1, 1), (1, 1, 0, 0, 1), (3, 0, 0, 1, 1)
(1, 1, 0, 1, 0), (1, 0, 0, 1, 1), (1, 1, 1, 0, 1), (2, 0, 0, 0, 1), (3, 0, 1, 0, 1)
(1, 0, 0, 0, 1), (1, 0, 0, 1, 0), (1, 1, 0, 1, 1), (2, 1, 0, 1, 0), (3, 0, 0, 1, 0)
(1, 1, 1, 1, 1), (2, 0, 0, 1, 1), (3, 0, 0, 0, 1), (3, 1, 0, 1, 0), (3, 0, 1, 1, 1)
(2, 0, 1, 1, 0), (2, 0, 1, 1, 1), (2, 1, 0, 0, 1), (3, 0, 1, 1, 0), (3, 1, 1, 1, 0)
(1, 0, 1, 0, 1), (2, 1, 1, 1, 0), (3, 1, 1, 1, 1), (3, 1, 0, 0, 1), (3, 1, 1, 0, 1)
(1, 0, 1, 1, 1), (1, 0, 1, 1, 0), (2, 1, 0, 1, 1), (2, 0, 1, 0, 1), (2, 1, 1, 1, 1)
(0, 1, 0, 1, 0), (1, 1, 1, 1, 0), (2, 1, 1, 0, 1), (2, 0, 0, 1, 0), (3, 1, 0, 1, 1)
A partition for sets of sizes:  0*3  0*4  9*5
)ZSPRAW";

extern const RawTable kRawTables[] = {
    {"star:Z4xZ2^2", kTable0},
    {"star:Z4xZ2^3", kTable1},
    {"star:Z4^2xZ2", kTable2},
    {"star:Z4^3", kTable3},
    {"star:Z8xZ2^2", kTable4},
    {"shifted:Z4xZ2^2+Z2^2", kTable5},
};

extern const std::size_t kRawTableCount = sizeof(kRawTables) / sizeof(kRawTables[0]);

}  // namespace embedded
}  // namespace zsp
