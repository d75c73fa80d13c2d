#pragma once

#include <array>
#include <string>

#include "widthlab/config.hpp"
#include "widthlab/graph.hpp"

namespace widthlab {

// Byte string canonical under colour-preserving isomorphism: two precoloured
// graphs have equal encodings iff they are isomorphic by a colour-preserving
// vertex bijection.  Exact for n <= 16.
struct CanonicalForm {
    std::string bytes;

    auto operator<=>(const CanonicalForm &) const = default;
    std::string hex() const;
};

// Colour refinement seeded by (precolour, degree), then backtracking over the
// first non-singleton refinement cell; minimum leaf encoding wins.
CanonicalForm canonical_form(const PrecoloredGraph &p, const Budget &budget = default_budget());
CanonicalForm canonical_form(const Graph &g, const Budget &budget = default_budget());

// Decode an encoding back into a precoloured graph (canonical labelling).
PrecoloredGraph decode_canonical(const CanonicalForm &form);

PrecoloredGraph apply_color_permutation(const PrecoloredGraph &p, const std::array<Color, 3> &perm);

// Minimum canonical form over the six colour permutations; identifies the
// S3 orbit of a precoloured graph.  Kept separate from canonical_form so the
// symmetry reduction stays independently testable.
CanonicalForm s3_orbit_representative(const PrecoloredGraph &p, const Budget &budget = default_budget());

} // namespace widthlab
