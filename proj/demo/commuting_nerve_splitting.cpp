// Splits the levels of the commuting nerve of S_3 and prints the homology of
// every wedge summand next to the level it came from.

#include <iostream>
#include <string>

#include "suspsplit/suspsplit.hpp"

using namespace suspsplit;

int main() {
    const int max_level = 3;
    Filtration F(commuting_nerve(symmetric_group_3(), max_level));
    for (int n = 0; n <= max_level; ++n) {
        auto rep = verify_theorem_splitting(F, n);
        std::cout << "level " << n << ": " << F.space().level(n).count(0) << " commuting tuples, H~_0 = " << to_string(rep.level_groups[0]) << "\n";
        for (const auto& [J, groups] : rep.summands) std::cout << "  summand " << to_string(J) << ": " << to_string(groups[0]) << "\n";
        if (rep.counting) {
            std::string sum;
            for (const auto& t : rep.counting->terms)
                if (t.rank) sum += (sum.empty() ? " " : " + ") + std::to_string(t.multiplicity) + "*" + std::to_string(t.rank);
            std::cout << "  " << rep.counting->lhs << " =" << (sum.empty() ? " 0" : sum) << "\n";
        }
        std::cout << "  H(" << n << ") " << (rep.ok() ? "is" : "is NOT") << " an isomorphism\n";
    }
}
