#pragma once

#include <memory>
#include <string>

#include "cxg/modquiver.hpp"

namespace cxg {

struct ParseError : std::runtime_error {
    int line;
    int col;
    ParseError(int l, int c, const std::string& msg)
        : std::runtime_error("line " + std::to_string(l) + ":" + std::to_string(c) + ": " + msg),
          line(l),
          col(c) {}
};

struct MqPresentation {
    ModQuiver q;
    std::shared_ptr<Deg2Ambient> amb;
    Degree2Ideal ideal;
};

// Parses the .mq format:
//   vertices:   lines "name: R|C|H"
//   arrows:     lines "name: src -> tgt [R|C|Cbar|H|C2col|C2row]"
//               (bracket optional when the endpoints force the kind)
//   relations:  "at v: I0|I1", "path a.b: full", or
//               "elem: [coef*]tok[arrow] (x) [coef*]tok[arrow] (+|-) ..."
// '#' starts a comment.
MqPresentation parseMq(const std::string& text);

// Parses one elem-relation body ("[coef*]tok[arrow] (x) [coef*]tok[arrow]
// (+|-) ...") into ambient coordinates; lineNo only labels diagnostics.
QVec parseElemBody(const Deg2Ambient& amb, const std::string& body, int lineNo);

std::string serializeMq(const MqPresentation& pres);

std::string mqToJson(const MqPresentation& pres);

}  // namespace cxg
