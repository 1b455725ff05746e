#include "cyclotomo/json_io.hpp"
#include "cyclotomo/svg.hpp"
#include "cyclotomo/version.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace cyclotomo;
using nlohmann::json;

namespace {

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

/// Tracks inputs and outputs of one run and writes the replayable manifest:
/// same command + same inputs reproduce byte-identical outputs.
struct RunRecorder {
    std::string manifest_path;
    std::string command;
    std::vector<std::string> args;
    json inputs = json::array();
    json outputs = json::array();

    std::string read_input(const std::string& path) {
        std::ifstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot read \"" + path + "\"");
        std::ostringstream ss;
        ss << f.rdbuf();
        std::string bytes = ss.str();
        inputs.push_back(json{{"path", path}, {"sha256", sha256_hex(bytes)}});
        return bytes;
    }

    json read_input_json(const std::string& path) {
        return parse_json_text(read_input(path), path);
    }

    /// Writes to the path, or stdout when the path is empty.
    void emit(const std::string& path, const std::string& bytes) {
        if (path.empty()) {
            std::cout << bytes;
            outputs.push_back(json{{"path", "-"}, {"sha256", sha256_hex(bytes)}});
            return;
        }
        write_file_atomic(path, bytes);
        outputs.push_back(json{{"path", path}, {"sha256", sha256_hex(bytes)}});
    }

    void finish() {
        if (manifest_path.empty()) return;
        json m;
        m["schema"] = "run-manifest";
        m["command"] = command;
        m["args"] = args;
        m["version"] = kVersion;
        m["seed"] = 0;
        m["inputs"] = inputs;
        m["outputs"] = outputs;
        write_file_atomic(manifest_path, dump_json(m));
    }
};

Rational parse_rational_arg(const std::string& s, const char* what) {
    try {
        return Rational::from_string(s);
    } catch (const std::exception& e) {
        throw std::domain_error(std::string(what) + ": " + e.what());
    }
}

std::vector<Direction> parse_slopes_arg(const std::string& list, long n) {
    std::vector<Direction> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::domain_error("slopes: empty entry in \"" + list + "\"");
        if (item == "inf")
            out.push_back(Direction::from_slope(Slope::infinity(), n));
        else
            out.push_back(Direction::from_slope(
                Slope(CycNum(parse_rational_arg(item, "slopes"))), n));
    }
    if (out.empty()) throw std::domain_error("slopes: empty list");
    return out;
}

ModelSetPatch load_patch(RunRecorder& rec, const std::string& path) {
    return patch_from_json(rec.read_input_json(path));
}

std::vector<Direction> load_directions(RunRecorder& rec, const std::string& path,
                                       long expect_n) {
    long n_file = 0;
    std::vector<Direction> U = directions_from_json(rec.read_input_json(path), &n_file);
    if (expect_n != 0 && n_file != expect_n)
        throw std::domain_error("directions file is for n = " + std::to_string(n_file) +
                                ", expected n = " + std::to_string(expect_n));
    return U;
}

/// Builds the polygon/patch pair a fixture freezes, re-verifying everything.
std::pair<UPolygon, ModelSetPatch> replay_fixture(const UPolygonFixture& f) {
    ModelSetPatch patch = generate_patch(f.scheme, f.radius_squared);
    UPolygon P{f.vertices, f.directions};
    VerifyFailure why;
    if (!verify_upolygon(P.vertices, P.U, &why))
        throw std::domain_error("fixture polygon failed verification (" + why.reason +
                                " at vertex " + std::to_string(why.vertex) + ")");
    return {std::move(P), std::move(patch)};
}

struct GenArgs {
    long n = 0;
    std::string preset, disk_r2, scale = "1", r2, out, manifest;
};
struct DirectionsArgs {
    std::string patch, out, manifest;
    long max = 100;
};
struct ForbiddenArgs {
    long n = 0;
    std::string out, manifest;
};
struct CertifyArgs {
    long n = 0;
    std::string directions, slopes, out, manifest;
};
struct SuggestArgs {
    long n = 0;
    long count = 0;
    long norm_bound = 3;
    std::string out, manifest;
};
struct XrayArgs {
    std::string patch, subset, direction, out, manifest;
};
struct FindArgs {
    std::string patch, directions, out, fixture_out, manifest;
    long max_vertices = 24;
    long budget = 2'000'000;
};
struct CounterArgs {
    std::string patch, directions, fixture, out, svg, manifest;
    long max_vertices = 24;
    long budget = 2'000'000;
};
struct OracleArgs {
    std::string patch, directions, out, manifest;
    long max_points = 24;
};
struct RenderArgs {
    std::string patch, fixture, counterexample, out, manifest;
};

void run_gen(RunRecorder& rec, const GenArgs& a) {
    if (!a.preset.empty() && !a.disk_r2.empty())
        throw std::domain_error("gen: --preset and --window-disk-r2 are mutually exclusive");
    CutProjectScheme scheme;
    if (!a.disk_r2.empty()) {
        scheme = make_scheme_disk(a.n, parse_rational_arg(a.disk_r2, "window-disk-r2"),
                                  CycNum(0));
    } else if (a.n == 3 || a.n == 4) {
        if (!a.preset.empty() && a.preset != "lattice")
            throw std::domain_error("gen: n = " + std::to_string(a.n) +
                                    " supports only the \"lattice\" preset");
        scheme = make_scheme_lattice(a.n);
    } else {
        Rational scale = parse_rational_arg(a.scale, "scale");
        scheme = make_scheme_polygon(a.n, scale, CycNum(0));
        if (!a.preset.empty() && a.preset != scheme.window.preset)
            throw std::domain_error("gen: n = " + std::to_string(a.n) + " uses the \"" +
                                    scheme.window.preset + "\" preset, not \"" + a.preset +
                                    "\"");
    }
    ModelSetPatch patch = generate_patch(scheme, parse_rational_arg(a.r2, "r2"));
    rec.emit(a.out, dump_json(patch_to_json(patch)));
}

void run_directions(RunRecorder& rec, const DirectionsArgs& a) {
    ModelSetPatch patch = load_patch(rec, a.patch);
    std::vector<Direction> ds = directions_from_patch(patch, a.max);
    rec.emit(a.out, dump_json(directions_to_json(patch.scheme.n, ds)));
}

void run_forbidden(RunRecorder& rec, const ForbiddenArgs& a) {
    rec.emit(a.out, dump_json(forbidden_to_json(forbidden_set(a.n))));
}

void run_certify(RunRecorder& rec, const CertifyArgs& a) {
    if (a.directions.empty() == a.slopes.empty())
        throw std::domain_error("certify: exactly one of --directions or --slopes required");
    std::vector<Direction> U = a.directions.empty()
                                   ? parse_slopes_arg(a.slopes, a.n)
                                   : load_directions(rec, a.directions, a.n);
    Certificate cert = certify(a.n, U);
    rec.emit(a.out, dump_json(certificate_to_json(cert, U)));
}

void run_suggest(RunRecorder& rec, const SuggestArgs& a) {
    std::vector<Direction> ds = suggest_directions(a.n, a.count, a.norm_bound);
    rec.emit(a.out, dump_json(directions_to_json(a.n, ds)));
}

void run_xray(RunRecorder& rec, const XrayArgs& a) {
    ModelSetPatch patch = load_patch(rec, a.patch);
    long n_sub = 0;
    std::vector<CycNum> subset = subset_from_json(rec.read_input_json(a.subset), &n_sub);
    if (n_sub != patch.scheme.n)
        throw std::domain_error("subset file is for n = " + std::to_string(n_sub) +
                                ", patch has n = " + std::to_string(patch.scheme.n));
    if (!std::includes(patch.points.begin(), patch.points.end(), subset.begin(), subset.end(),
                       CycLess{}))
        throw std::domain_error("subset contains a point outside the patch");
    std::vector<Direction> one = parse_slopes_arg(a.direction, patch.scheme.n);
    if (one.size() != 1) throw std::domain_error("xray: --direction takes a single slope");
    rec.emit(a.out, dump_json(profile_to_json(xray(subset, one[0]))));
}

void run_find(RunRecorder& rec, const FindArgs& a) {
    ModelSetPatch patch = load_patch(rec, a.patch);
    std::vector<Direction> U = load_directions(rec, a.directions, patch.scheme.n);
    SearchResult res = search_upolygon(patch, U, a.max_vertices, a.budget);
    rec.emit(a.out, dump_json(search_result_to_json(res, patch.scheme.n)));
    if (!a.fixture_out.empty()) {
        if (res.status != SearchStatus::found)
            throw std::domain_error("find-upolygon: no polygon found, cannot write fixture");
        UPolygonFixture f{patch.scheme, patch.radius_squared, U, res.polygon->vertices};
        rec.emit(a.fixture_out, dump_json(fixture_to_json(f)));
    }
}

void run_counterexample(RunRecorder& rec, const CounterArgs& a) {
    const bool fixture_mode = !a.fixture.empty();
    if (fixture_mode) {
        if (!a.patch.empty() || !a.directions.empty())
            throw std::domain_error(
                "counterexample: --fixture excludes --patch and --directions");
    } else if (a.patch.empty() || a.directions.empty()) {
        throw std::domain_error(
            "counterexample: give either --fixture or both --patch and --directions");
    }
    UPolygon P;
    ModelSetPatch patch;
    if (fixture_mode) {
        std::tie(P, patch) = replay_fixture(fixture_from_json(rec.read_input_json(a.fixture)));
    } else {
        patch = load_patch(rec, a.patch);
        std::vector<Direction> U = load_directions(rec, a.directions, patch.scheme.n);
        SearchResult res = search_upolygon(patch, U, a.max_vertices, a.budget);
        if (res.status != SearchStatus::found)
            throw std::domain_error(std::string("counterexample: no U-polygon in the patch (") +
                                    (res.status == SearchStatus::exhausted
                                         ? "search space exhausted"
                                         : "node budget exceeded") +
                                    ")");
        P = *res.polygon;
    }
    CounterexamplePair pair = derive_counterexample(P, patch);
    rec.emit(a.out, dump_json(counterexample_to_json(pair, patch.scheme.n)));
    if (!a.svg.empty()) {
        std::vector<CycNum> black, grey;
        std::set_difference(pair.F1.begin(), pair.F1.end(), pair.F2.begin(), pair.F2.end(),
                            std::back_inserter(black), CycLess{});
        std::set_difference(pair.F2.begin(), pair.F2.end(), pair.F1.begin(), pair.F1.end(),
                            std::back_inserter(grey), CycLess{});
        rec.emit(a.svg, render_svg(patch, &P, &black, &grey));
    }
}

void run_oracle(RunRecorder& rec, const OracleArgs& a) {
    ModelSetPatch patch = load_patch(rec, a.patch);
    std::vector<Direction> U = load_directions(rec, a.directions, patch.scheme.n);
    OracleReport report = determination_check(patch, U, a.max_points);
    rec.emit(a.out, dump_json(oracle_report_to_json(report)));
}

void run_render(RunRecorder& rec, const RenderArgs& a) {
    if (a.patch.empty() && a.fixture.empty())
        throw std::domain_error("render: need --patch or --fixture");
    UPolygon P;
    ModelSetPatch patch;
    bool have_polygon = false;
    if (!a.fixture.empty()) {
        std::tie(P, patch) = replay_fixture(fixture_from_json(rec.read_input_json(a.fixture)));
        have_polygon = true;
    }
    if (!a.patch.empty()) patch = load_patch(rec, a.patch);
    std::vector<CycNum> black, grey;
    bool have_classes = false;
    if (!a.counterexample.empty()) {
        long n_ce = 0;
        CounterexamplePair pair =
            counterexample_from_json(rec.read_input_json(a.counterexample), &n_ce);
        if (n_ce != patch.scheme.n)
            throw std::domain_error("counterexample file is for n = " + std::to_string(n_ce) +
                                    ", patch has n = " + std::to_string(patch.scheme.n));
        std::set_difference(pair.F1.begin(), pair.F1.end(), pair.F2.begin(), pair.F2.end(),
                            std::back_inserter(black), CycLess{});
        std::set_difference(pair.F2.begin(), pair.F2.end(), pair.F1.begin(), pair.F1.end(),
                            std::back_inserter(grey), CycLess{});
        have_classes = true;
    }
    rec.emit(a.out, render_svg(patch, have_polygon ? &P : nullptr,
                               have_classes ? &black : nullptr,
                               have_classes ? &grey : nullptr));
}

void add_manifest(CLI::App* cmd, std::string& slot) {
    cmd->add_option("--manifest", slot, "write a replayable run manifest to this file");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact discrete tomography of cyclotomic model sets"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    GenArgs gen;
    auto* c_gen = app.add_subcommand("gen", "generate a model set patch");
    c_gen->add_option("--n", gen.n, "cyclotomic order (3, 4, 5, 8 or 12)")->required();
    c_gen->add_option("--preset", gen.preset, "window preset name for this n");
    c_gen->add_option("--window-disk-r2", gen.disk_r2, "disk window squared radius (rational)");
    c_gen->add_option("--scale", gen.scale, "polygon window circumradius scale (rational)");
    c_gen->add_option("--r2", gen.r2, "patch squared radius (rational)")->required();
    c_gen->add_option("--out", gen.out, "output file (stdout when omitted)");
    add_manifest(c_gen, gen.manifest);

    DirectionsArgs dirs;
    auto* c_dirs = app.add_subcommand("directions", "list directions realized in a patch");
    c_dirs->add_option("--patch", dirs.patch, "patch JSON file")->required();
    c_dirs->add_option("--max", dirs.max, "maximum number of directions");
    c_dirs->add_option("--out", dirs.out, "output file (stdout when omitted)");
    add_manifest(c_dirs, dirs.manifest);

    ForbiddenArgs forb;
    auto* c_forb = app.add_subcommand("forbidden-set", "compute the forbidden cross-ratio set");
    c_forb->add_option("--n", forb.n, "cyclotomic order")->required();
    c_forb->add_option("--out", forb.out, "output file (stdout when omitted)");
    add_manifest(c_forb, forb.manifest);

    CertifyArgs cert;
    auto* c_cert = app.add_subcommand("certify", "decide determination for a direction set");
    c_cert->add_option("--n", cert.n, "cyclotomic order")->required();
    c_cert->add_option("--directions", cert.directions, "directions JSON file");
    c_cert->add_option("--slopes", cert.slopes, "comma-separated slopes, e.g. 0,1,5,inf");
    c_cert->add_option("--out", cert.out, "output file (stdout when omitted)");
    add_manifest(c_cert, cert.manifest);

    SuggestArgs sugg;
    auto* c_sugg = app.add_subcommand("suggest", "suggest a certified direction set");
    c_sugg->add_option("--n", sugg.n, "cyclotomic order")->required();
    c_sugg->add_option("--count", sugg.count, "number of directions")->required();
    c_sugg->add_option("--norm-bound", sugg.norm_bound, "coefficient bound for the search");
    c_sugg->add_option("--out", sugg.out, "output file (stdout when omitted)");
    add_manifest(c_sugg, sugg.manifest);

    XrayArgs xr;
    auto* c_xr = app.add_subcommand("xray", "X-ray profile of a subset in one direction");
    c_xr->add_option("--patch", xr.patch, "patch JSON file")->required();
    c_xr->add_option("--subset", xr.subset, "subset JSON file")->required();
    c_xr->add_option("--direction", xr.direction, "slope, e.g. 3/2 or inf")->required();
    c_xr->add_option("--out", xr.out, "output file (stdout when omitted)");
    add_manifest(c_xr, xr.manifest);

    FindArgs find;
    auto* c_find = app.add_subcommand("find-upolygon", "search a patch for a U-polygon");
    c_find->add_option("--patch", find.patch, "patch JSON file")->required();
    c_find->add_option("--directions", find.directions, "directions JSON file")->required();
    c_find->add_option("--max-vertices", find.max_vertices, "vertex cap");
    c_find->add_option("--budget", find.budget, "search node budget");
    c_find->add_option("--out", find.out, "output file (stdout when omitted)");
    c_find->add_option("--fixture-out", find.fixture_out, "freeze a found polygon here");
    add_manifest(c_find, find.manifest);

    CounterArgs ce;
    auto* c_ce = app.add_subcommand(
        "counterexample", "derive two convex sets with equal X-rays from a U-polygon");
    c_ce->add_option("--patch", ce.patch, "patch JSON file");
    c_ce->add_option("--directions", ce.directions, "directions JSON file");
    c_ce->add_option("--fixture", ce.fixture, "replay a frozen U-polygon fixture");
    c_ce->add_option("--max-vertices", ce.max_vertices, "vertex cap for the search");
    c_ce->add_option("--budget", ce.budget, "search node budget");
    c_ce->add_option("--out", ce.out, "output file (stdout when omitted)");
    c_ce->add_option("--svg", ce.svg, "also render the figure to this SVG file");
    add_manifest(c_ce, ce.manifest);

    OracleArgs ora;
    auto* c_ora = app.add_subcommand("oracle", "brute-force determination check on a patch");
    c_ora->add_option("--patch", ora.patch, "patch JSON file")->required();
    c_ora->add_option("--directions", ora.directions, "directions JSON file")->required();
    c_ora->add_option("--max-points", ora.max_points, "patch size cap");
    c_ora->add_option("--out", ora.out, "output file (stdout when omitted)");
    add_manifest(c_ora, ora.manifest);

    RenderArgs ren;
    auto* c_ren = app.add_subcommand("render", "render a patch figure to SVG");
    c_ren->add_option("--patch", ren.patch, "patch JSON file");
    c_ren->add_option("--fixture", ren.fixture, "U-polygon fixture to draw");
    c_ren->add_option("--counterexample", ren.counterexample, "counterexample JSON to classify");
    c_ren->add_option("--out", ren.out, "output SVG file (stdout when omitted)");
    add_manifest(c_ren, ren.manifest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    RunRecorder rec;
    for (int i = 1; i < argc; ++i) rec.args.push_back(argv[i]);

    const char* error_type = "runtime";
    try {
        if (*c_gen) {
            rec.command = "gen";
            rec.manifest_path = gen.manifest;
            run_gen(rec, gen);
        } else if (*c_dirs) {
            rec.command = "directions";
            rec.manifest_path = dirs.manifest;
            run_directions(rec, dirs);
        } else if (*c_forb) {
            rec.command = "forbidden-set";
            rec.manifest_path = forb.manifest;
            run_forbidden(rec, forb);
        } else if (*c_cert) {
            rec.command = "certify";
            rec.manifest_path = cert.manifest;
            run_certify(rec, cert);
        } else if (*c_sugg) {
            rec.command = "suggest";
            rec.manifest_path = sugg.manifest;
            run_suggest(rec, sugg);
        } else if (*c_xr) {
            rec.command = "xray";
            rec.manifest_path = xr.manifest;
            run_xray(rec, xr);
        } else if (*c_find) {
            rec.command = "find-upolygon";
            rec.manifest_path = find.manifest;
            run_find(rec, find);
        } else if (*c_ce) {
            rec.command = "counterexample";
            rec.manifest_path = ce.manifest;
            run_counterexample(rec, ce);
        } else if (*c_ora) {
            rec.command = "oracle";
            rec.manifest_path = ora.manifest;
            run_oracle(rec, ora);
        } else if (*c_ren) {
            rec.command = "render";
            rec.manifest_path = ren.manifest;
            run_render(rec, ren);
        }
        rec.finish();
        return 0;
    } catch (const ParseError& e) {
        error_type = "parse";
        json err{{"error", {{"type", error_type}, {"message", e.what()}}}};
        std::cerr << dump_json(err);
        return 1;
    } catch (const std::domain_error& e) {
        error_type = "domain";
        json err{{"error", {{"type", error_type}, {"message", e.what()}}}};
        std::cerr << dump_json(err);
        return 1;
    } catch (const std::exception& e) {
        json err{{"error", {{"type", error_type}, {"message", e.what()}}}};
        std::cerr << dump_json(err);
        return 1;
    }
}
