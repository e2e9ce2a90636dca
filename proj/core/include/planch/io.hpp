#pragma once

// JSON readers and writers for the value types. Rationals travel as "a/b"
// strings, doubles as numbers with full precision.

#include <json.hpp>

#include <string>

#include "planch/field_spec.hpp"
#include "planch/limit.hpp"
#include "planch/matrix.hpp"
#include "planch/spectral.hpp"
#include "planch/temp.hpp"
#include "planch/wd.hpp"

namespace planch {

using Json = nlohmann::json;

/// Reads and parses a JSON file; InputError carries the file name and the parser's byte offset.
Json read_json_file(const std::string& path);

Rational rational_from_json(const Json& j, const std::string& where);
Json to_json(const Rational& r);
Json to_json(Complex z);  // [re, im]

Json to_json(const LocalFieldSpec& f);
LocalFieldSpec field_from_json(const Json& j);

Json to_json(const SpectralFunction& f);

Json to_json(const WDRep& r);
/// Object {"atoms": [...]} or a string in the compact grammar of parse_rep.
WDRep rep_from_json(const Json& j);

Json to_json(const TempPoint& pt);
TempPoint point_from_json(const Json& j);

/// {"pairs": [...], "symplectic": [...], "orthogonal": [...]}, entries {"angle", "sp", "mult"}.
/// The keys "I^n", "I^s", "I^o" are accepted as aliases.
Json to_json(const OrthTriple& t);
OrthTriple triple_from_json(const Json& j);

/// Array of rows of "num/den" strings (integers also accepted).
Json to_json(const QMatrix& m);
QMatrix matrix_from_json(const Json& j);

/// {"kind": "constant", "c": 1}
/// {"kind": "trig", "c0": 1, "symmetrize": false, "terms": [{"coef", "freq", "phase", "block"}]}
/// {"kind": "gaussian", "amplitude": 1, "sigma": 0.1, "center": 0, "modes": 40}
Json to_json(const TestFunction& phi);
TestFunction test_function_from_json(const Json& j);

Json to_json(const LimitReport& r);

}  // namespace planch
