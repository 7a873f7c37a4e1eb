#ifndef MIXPORT_CHANNELS_HPP
#define MIXPORT_CHANNELS_HPP

#include <array>
#include <optional>
#include <string>
#include <variant>

#include "mixport/density.hpp"

namespace mixport {
namespace channels {

// Two-qubit channel families. Weighted families use the ordered weights
// p1 >= p2 >= p3 >= p4, sum 1; rank-2 fixes p3 = p4 = 0, rank-3 fixes
// p1 = p2 and p4 = 0, rank-4 fixes p2 = p3 = p4.
struct Meps {};
struct MemsRank2 {
    double p1;
};
struct MemsRank3 {
    double p1;
};
struct MemsRank4 {
    double p1;
};
struct Werner {
    double r;
};
// X-shaped channel [[a,0,0,e],[0,b,c,0],[0,c*,d,0],[e*,0,0,1-a-b-d]].
struct GeneralXZ {
    double a;
    double b;
    Complex c;
    double d;
    Complex e;
};
struct MemsGeneral {
    std::array<double, 4> p;
};

using ChannelSpec =
    std::variant<Meps, MemsRank2, MemsRank3, MemsRank4, Werner, GeneralXZ, MemsGeneral>;

// Canonical CLI text form: meps | mems2:p1=0.6 | mems3:p1=0.4 | mems4:p1=0.8 |
// werner:r=0.5 | xz:a=..,b=..,c=..,d=..,e=.. | memsg:p1=..,p2=..,p3=..,p4=..
// Complex values are written as re+imi (e.g. 0.1-0.2i).
std::string to_text(const ChannelSpec& spec);
ChannelSpec parse_spec(const std::string& text);

std::string family_name(const ChannelSpec& spec);

// Weight-ordering range of the weighted families: rank-2 needs p1 >= 1/2,
// rank-3 p1 in [1/3, 1/2], rank-4 p1 >= 1/4. Outside the range construction
// still succeeds but the result is flagged (the rank-3 matrix even stops
// being PSD above 1/2); parameters outside the hard matrix domain throw
// InvalidParams.
struct ValidityRange {
    double lo;
    double hi;
};
std::optional<ValidityRange> ordering_range(const ChannelSpec& spec);

struct Channel {
    ChannelSpec spec;
    DensityMatrix state;
    bool physical = true;             // false => built with Validation::AllowNonPsd
    std::optional<std::string> warning; // set when parameters fall outside the ordering range
};

Channel build(const ChannelSpec& spec);

// p1 = (1+3r)/4 and its inverse r = (4*p1-1)/3.
double werner_to_mems_p1(double r);
double mems_p1_to_werner(double p1);

} // namespace channels
} // namespace mixport

#endif
