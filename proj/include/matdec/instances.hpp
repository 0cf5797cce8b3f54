#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "matdec/bipartite.hpp"
#include "matdec/constructions.hpp"
#include "matdec/core.hpp"
#include "matdec/gaingraph.hpp"
#include "matdec/gammoid.hpp"
#include "matdec/latticepath.hpp"
#include "matdec/linear.hpp"

namespace matdec {

struct UniformInstance {
    int r = 0, n = 0;
};

// One value per instance-file kind; the header line of the text format names
// the alternative.
using Instance = std::variant<UniformInstance, LinearRep, BipartitePresentation,
                              LatticePathPresentation, BicircularPresentation, GainGraph,
                              GammoidPresentation, SimpleGraph>;

// Header keyword for the stored alternative (e.g. "uniform", "gaingraph").
std::string kind_of(const Instance& inst);

// Line-oriented text round-trip: write_instance(parse_instance(t)) == t for
// every canonically written t; malformed input raises parse_error carrying
// the 1-based line number.
Instance parse_instance(const std::string& text);
std::string write_instance(const Instance& inst);

MatroidOracle to_oracle(const Instance& inst);

uint64_t fnv1a64(const std::string& s);
// Hash of the canonical text; stable identifier for report rows.
uint64_t instance_hash(const Instance& inst);

}  // namespace matdec
