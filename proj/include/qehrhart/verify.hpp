#pragma once

#include <iosfwd>
#include <string>

namespace qe::verify {

enum class Scope { All, Polytopes, Posets, Umbral };

struct Options {
    Scope scope = Scope::All;
    unsigned seed = 7;
    int random_count = 20;
};

Scope scope_from_string(const std::string& name);

/// Run the identity suites over the built-in corpus (plus seeded random
/// polytopes), writing one line per identity to `report`. Returns true iff
/// every check passed.
bool run(const Options& options, std::ostream& report);

}  // namespace qe::verify
