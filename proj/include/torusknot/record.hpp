#pragma once

#include <string>

#include "json.hpp"
#include "torusknot/knot_map.hpp"
#include "torusknot/report.hpp"
#include "torusknot/uniformizer.hpp"

namespace tk {

// Structured records keep insertion order so output is stable.
using Record = nlohmann::ordered_json;

Record toRecord(cplx z);
cplx complexFromRecord(const Record& r);
Record toRecord(const Moebius& g);
Moebius moebiusFromRecord(const Record& r);
Record toRecord(const LiftedMoebius& g);  // {a, b, c, d, m}
LiftedMoebius liftFromRecord(const Record& r);
Record toRecord(const Rational& x);       // "num/den"
Rational rationalFromRecord(const Record& r);

Record toRecord(const Report& rep);
Record toRecord(const ThetaValue& tv);
Record toRecord(const KnotSample& s);
Record toRecord(const LensData& L);
Record groupInfoRecord(const TriangleGroupData& G);

// Doubles are written in shortest round-trip form, so parse(print(x)) == x.
std::string printRecord(const Record& r);
Record parseRecord(const std::string& text);
// Indented key: value rendering for the text output format.
std::string printText(const Record& r);

}  // namespace tk
