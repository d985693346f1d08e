// Reads a facet file (or uses the 6-vertex projective plane) and prints the
// reduced homology of its order complex.

#include <iostream>

#include "suspsplit/suspsplit.hpp"

using namespace suspsplit;

int main(int argc, char** argv) {
    try {
        auto K = argc > 1 ? load_complex(argv[1]) : projective_plane_6();
        int dim = 0;
        for (const auto& f : K.facets) dim = std::max(dim, static_cast<int>(f.size()) - 1);
        auto X = order_complex(K, dim + 1);
        auto h = homology(normalized_chains(X));
        std::cout << K.vertices().size() << " vertices, " << K.facets.size() << " facets\n";
        for (int k = 0; k <= dim; ++k) std::cout << "H~_" << k << " = " << to_string(h.at(k)) << "  (" << X->count(k) << " nondegenerate simplices)\n";
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
