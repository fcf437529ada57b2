#pragma once

#include <random>

#include "cxg/mq_text.hpp"

namespace cxg {

// Random presentations for the property suites and the CLI's randomized
// roundtrip mode. Uniform instances have every vertex ordinarily gentle over
// one division ring; special instances mix ordinarily-gentle (complex)
// vertices with specially gentle ones, ideals chosen so that classification
// is the named type by construction.
MqPresentation genUniform(std::mt19937_64& rng, Ring ring, int maxVertices = 8);
MqPresentation genSpecialType(std::mt19937_64& rng, int maxVertices = 8);

}  // namespace cxg
