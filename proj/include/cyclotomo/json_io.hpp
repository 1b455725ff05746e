#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cyclotomo/certifier.hpp"
#include "cyclotomo/forbidden.hpp"
#include "cyclotomo/geometry.hpp"
#include "cyclotomo/oracle.hpp"
#include "cyclotomo/upolygon.hpp"
#include "cyclotomo/xray.hpp"

namespace cyclotomo {

/// Raised when a JSON document does not match the expected shape or is not
/// in canonical form (bit-exact round-trips require canonical inputs).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Rational <-> ["num","den"] with canonical decimal strings.
nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

/// CycNum <-> {"order": N, "coeffs": [["num","den"], ...]} with exactly
/// phi(N) canonical coefficients. Round-trips are bit-exact.
nlohmann::json cyc_to_json(const CycNum& a);
CycNum cyc_from_json(const nlohmann::json& j);

/// Slope <-> {"slope": "inf"} | {"slope": ["num","den"]} for rational
/// slopes | {"slope": {CycNum}} for irrational real slopes.
nlohmann::json slope_to_json(const Slope& s);
Slope slope_from_json(const nlohmann::json& j);

/// Direction input: {"vector": {CycNum}} or {"slope": ...}; slope inputs are
/// realized in Q(zeta_n). Output carries vector, slope and float angle.
Direction direction_from_json(const nlohmann::json& j, long n);
nlohmann::json direction_to_json(const Direction& d);

/// Directions file: {"n": int, "directions": [direction, ...]}.
std::vector<Direction> directions_from_json(const nlohmann::json& j, long* n_out);
nlohmann::json directions_to_json(long n, const std::vector<Direction>& ds);

/// QuadrupleIndex <-> {"N": int, "k": [k1,k2,k3,k4]}.
nlohmann::json quadruple_to_json(const QuadrupleIndex& q);
QuadrupleIndex quadruple_from_json(const nlohmann::json& j);

/// ForbiddenSet <-> its artifact JSON (values with float approximations and
/// provenance quadruples).
nlohmann::json forbidden_to_json(const ForbiddenSet& fs);
ForbiddenSet forbidden_from_json(const nlohmann::json& j);

/// CutProjectScheme <-> {"n": int, "kind": "lattice"} or
/// {"n", "kind": "polygon", "preset", "scale", "center"} or
/// {"n", "kind": "disk", "r2", "center"}. Loading rebuilds the scheme from
/// its parameters, so derived fields cannot be tampered with.
nlohmann::json scheme_to_json(const CutProjectScheme& s);
CutProjectScheme scheme_from_json(const nlohmann::json& j);

/// ModelSetPatch <-> {"schema": "patch", scheme, radius_squared, count,
/// points, float_points}. Loading verifies shape, membership and radius of
/// every point and the canonical ascending order; completeness of the list
/// within the radius is the generator's contract and is trusted.
nlohmann::json patch_to_json(const ModelSetPatch& p);
ModelSetPatch patch_from_json(const nlohmann::json& j);

/// Point subset file: {"schema": "subset", "n", count, points, float_points}
/// with points in canonical ascending order.
nlohmann::json subset_to_json(const std::vector<CycNum>& pts, long n);
std::vector<CycNum> subset_from_json(const nlohmann::json& j, long* n_out);

/// Certificate plus the examined directions, witness slopes exact.
nlohmann::json certificate_to_json(const Certificate& c, const std::vector<Direction>& U);

/// XRayProfile with exact line keys and float offsets for plotting.
nlohmann::json profile_to_json(const XRayProfile& p);

/// U-polygon artifacts. Search results carry status and node count.
nlohmann::json upolygon_to_json(const UPolygon& P, long n);
nlohmann::json search_result_to_json(const SearchResult& r, long n);
nlohmann::json counterexample_to_json(const CounterexamplePair& c, long n);
CounterexamplePair counterexample_from_json(const nlohmann::json& j, long* n_out);
nlohmann::json oracle_report_to_json(const OracleReport& r);

/// Frozen witness of a U-polygon in a concrete patch: enough data to
/// regenerate the patch and re-verify the polygon from scratch.
struct UPolygonFixture {
    CutProjectScheme scheme;
    Rational radius_squared;
    std::vector<Direction> directions;
    std::vector<CycNum> vertices;
};
nlohmann::json fixture_to_json(const UPolygonFixture& f);
UPolygonFixture fixture_from_json(const nlohmann::json& j);

/// Best-effort double approximations used for human-readable fields.
double cyc_to_double_re(const CycNum& a);
double cyc_to_double_im(const CycNum& a);

/// Parses a whole JSON document; wraps syntax errors in ParseError.
nlohmann::json parse_json_text(const std::string& text, const std::string& what);

/// Reads and parses a JSON file; ParseError on missing file or bad syntax.
nlohmann::json read_json_file(const std::string& path);

/// Serializes with a fixed, diff-friendly layout (2-space indent, sorted
/// keys off, '\n' terminated) so identical data yields identical bytes.
std::string dump_json(const nlohmann::json& j);

/// Writes text to a file atomically (temp file + rename).
void write_file_atomic(const std::string& path, const std::string& text);

}  // namespace cyclotomo
