#pragma once

#include <string>
#include <vector>

#include "cxg/clannish.hpp"
#include "cxg/gentle.hpp"

namespace cxg {

// The checked-in expected values of the three tables, parsed from the
// fixture format described in data/tables.fixture.
struct TableCheckItem {
    std::string name;
    bool pass;
    std::string detail;
};

struct TableCheckResult {
    std::vector<TableCheckItem> items;
    bool pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
};

// The fixture text compiled into the library (from data/tables.fixture).
const std::string& defaultTablesFixture();

// Standalone local quiver u -> v -> w of a Table-1 row, arrows named
// a/ai/b/bi.
MqPresentation rowQuiver(const Table1Row& row);

// The same quiver with the ideal I^p at the middle vertex.
MqPresentation rowQuiverWithIdeal(const Table1Row& row, int p);

// The matching semilinear presentation: loops at the non-complex vertices,
// arrows a: v -> w and b: u -> v with the given twists, no relations.
SlqPresentation rowSlq(const Table1Row& row, Twist twistA, Twist twistB);

// Table 1: the generator data and the decomposition M(ab) = I^0 + I^1.
TableCheckResult verifyTable1(const std::string& fixtureText);
// Table 2: Psi applied to the listed arguments, coordinate-exactly.
TableCheckResult verifyTable2(const std::string& fixtureText);
// Table 3: Phi over all twist columns plus the I^0-xor-I^1 span law.
TableCheckResult verifyTable3(const std::string& fixtureText);

}  // namespace cxg
