// Walkthrough: normal-ordering products of one-particle factors.
//
// Build and run:
//   cmake --build build --target sample_straighten && ./build/sample_straighten

#include <iostream>

#include <qwedge/qwedge.hpp>

using namespace qwedge;

namespace {

void show(const char* title, const WedgeExpansion& e) {
    std::cout << title << '\n';
    if (e.empty()) {
        std::cout << "  0\n";
        return;
    }
    for (auto it = e.rbegin(); it != e.rend(); ++it) {
        std::cout << "  (" << it->second.to_string() << ")  u[";
        for (std::size_t i = 0; i < it->first.size(); ++i)
            std::cout << (i ? ", " : "") << it->first[i];
        std::cout << "]\n";
    }
}

} // namespace

int main() {
    // A single out-of-order pair picks up a leading swap plus corrections
    // with coefficient q - q^-1, all strictly between the original factors.
    show("u[-2] ^ u[4] at rank 2, two sectors:", straighten_pair(-2, 4, 2, 2));

    // The same indices mean something else at a different level.
    show("\nu[-10] ^ u[1] at rank 2, three sectors:", straighten_pair(-10, 1, 2, 3));

    // Repeated factors only vanish when adjacent; this word survives with a
    // purely coefficient-level trace of the collision.
    show("\nu[1] ^ u[-2] ^ u[1] at rank 2, one sector:", normal_order({1, -2, 1}, 2, 1));

    // Longer products go through the same engine; the memo makes repeated
    // work on shared ordered prefixes free.
    Straightener engine(2, 3);
    show("\na frozen sector column times a mixed word:",
         engine.normal_order({4, 3, -2, -3, 5, 1, -4, -7}));
    std::cout << "\ninsertion cache entries: " << engine.cache_size() << '\n';

    // Index words and their bead pictures.
    const MultiPartition mp = {{}, {1, 1}, {4}};
    const MultiCharge charge = {2, 0, -2};
    const auto word = encode(mp, charge, 2, 10);
    std::cout << "\n|" << to_string(mp) << "; (" << charge_to_string(charge)
              << ")> encodes as u[";
    for (std::size_t i = 0; i < word.size(); ++i) std::cout << (i ? ", " : "") << word[i];
    std::cout << "]\n\n" << render_abacus(word, 2, 3);
    return 0;
}
