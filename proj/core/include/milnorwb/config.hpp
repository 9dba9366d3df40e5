#pragma once

#include <string>

namespace mwb {

// Truncation bounds for the desk-scale computations.  Every report embeds
// the bounds it was produced under so truncated outputs are
// self-describing.
struct Bounds {
    int height = 30;        // |squarefree part| cap for square classes of Q in searches
    int degree = 10;        // topological degree cap for Adem rewriting
    int weight = 12;        // weight cap for cobar bases
    int prime_bound = 50;   // primes <= prime_bound enter bounded Q models

    bool operator==(const Bounds&) const = default;
};

// Defaults, optionally overridden by the JSON config file named in the
// MILNOR_WB_CONFIG environment variable (keys: height, degree, weight,
// prime_bound, data_dir).
Bounds load_bounds();

// Directory holding the Adem relation table and golden fixtures.  Resolution
// order: config file's data_dir, MILNOR_WB_DATA env var, "data" relative to
// the current directory.
std::string data_dir();

}  // namespace mwb
