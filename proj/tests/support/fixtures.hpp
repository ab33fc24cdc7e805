#pragma once

#include "bgl/formula.hpp"
#include "bgl/graph.hpp"
#include "generate.hpp"

namespace bgl::fixtures {

using testing::make;
using testing::make_ids;

// Path z - x - w - y.
inline LabelledGraph p4() { return make("wxyz", {"zx", "xw", "wy"}); }
inline LabelledGraph p5() { return make("vwxyz", {"vw", "wx", "xy", "yz"}); }
inline LabelledGraph c5() { return make("vwxyz", {"vw", "wx", "xy", "yz", "vz"}); }
// Triangle v, x, y with horns w on x and z on y.
inline LabelledGraph bull() { return make("vwxyz", {"xy", "xw", "yz", "vx", "vy"}); }
inline LabelledGraph abg() {
    return make_ids({"x", "y", "z", "x'", "y'", "z'"},
                    {{"x'", "x"}, {"x", "z"}, {"y", "x"}, {"y", "y'"}, {"z", "z'"}, {"y", "z"}});
}
// M = {v', x'} and N = {v, x} fully joined; N sees u and w'; u - w.
inline LabelledGraph modular() {
    return make_ids({"v'", "x'", "v", "x", "u", "w'", "w"},
                    {{"v'", "v"}, {"v'", "x"}, {"x'", "v"}, {"x'", "x"}, {"v", "u"}, {"x", "u"}, {"v", "w'"},
                     {"x", "w'"}, {"u", "w"}});
}
inline LabelledGraph seven() { return make("abcdefg", {"ab", "cd", "de", "ef", "eg", "fg"}); }
inline LabelledGraph eleven() { return make("abcdefghijk", {"ab", "bc", "cd", "ef", "fg", "gh", "gi", "hi", "jk"}); }
inline LabelledGraph four() { return make("abcd", {"ab", "ac", "ad", "cd"}); }

inline const char* kWeb5 = "((v|(w&x))|y)&z";
inline const char* kLhs = "(u|(v&v'))&(w|x)&(w'|x')&((y&y')|z)";
inline const char* kRhs = "(u&(w|y))|(w'&y')|(v'&x')|((v|x)&z)";

inline LabelledGraph lhs() { return web(parse_formula(kLhs)); }
inline LabelledGraph rhs() { return web(parse_formula(kRhs)); }
inline LabelledGraph interpolant() {
    return make_ids({"u", "v", "v'", "w", "w'", "x", "x'", "y", "y'", "z"},
                    {{"w", "u"}, {"u", "y"}, {"y", "y'"}, {"y", "w'"}, {"w'", "y'"}, {"y'", "v'"}, {"w'", "v'"},
                     {"y'", "x'"}, {"v'", "x'"}, {"v'", "v"}, {"x'", "v"}, {"v", "z"}, {"z", "x"}});
}

}  // namespace bgl::fixtures
