// chipfire: exact chip-firing dynamics for M-matrices from the command line.
//
// Input matrices are always delta; firing state i subtracts row i of delta.
// All stdout is deterministic for fixed inputs and flags; diagnostics and the
// orientation banner go to stderr.

#include <chipfire/critical.hpp>
#include <chipfire/energy.hpp>
#include <chipfire/graphio.hpp>
#include <chipfire/io.hpp>
#include <chipfire/stability.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace chipfire;
using nlohmann::json;

struct CommonInput {
    std::string matrix_file;
    std::string graph_file;
    std::int64_t sink = 0; // 1-based vertex id, 0 = unset
    bool json_output = false;
};

void add_source_options(CLI::App* cmd, CommonInput& in, bool need_matrix = true) {
    auto* m = cmd->add_option("--matrix", in.matrix_file, "delta matrix file (text or JSON)");
    auto* g = cmd->add_option("--graph", in.graph_file, "graph file (text or JSON)");
    cmd->add_option("--sink", in.sink, "global sink vertex id (1-based; overrides the file)");
    cmd->add_flag("--json", in.json_output, "machine-readable JSON on stdout");
    m->excludes(g);
    if (need_matrix) (void)0; // both sources stay optional here; resolved at run time
}

std::optional<std::size_t> resolve_sink(const DirectedMultigraph& g, const CommonInput& in) {
    if (in.sink > 0) {
        if (static_cast<std::size_t>(in.sink) > g.vertex_count)
            throw ParseError("sink out of range (vertex ids are 1-based)");
        return static_cast<std::size_t>(in.sink - 1);
    }
    return g.sink;
}

// The delta matrix a subcommand operates on: either the file matrix or the
// reduced Laplacian of the graph at its sink.
IntMatrix load_delta(const CommonInput& in) {
    if (!in.matrix_file.empty()) return parse_matrix(read_file(in.matrix_file));
    if (in.graph_file.empty())
        throw CLI::ValidationError("one of --matrix or --graph is required");
    DirectedMultigraph g = parse_graph(read_file(in.graph_file));
    std::optional<std::size_t> sink = resolve_sink(g, in);
    if (!sink) throw CLI::ValidationError("--graph input needs a sink (--sink or file field)");
    return reduced_laplacian(g, *sink);
}

IntVec load_config(const std::string& path) { return parse_configuration(read_file(path)); }

void emit(const json& j, const std::string& text, bool as_json) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

json record_to_json(const FiringRecord& rec) {
    json seq = json::array();
    for (std::size_t i : rec.sequence) seq.push_back(i);
    return {{"odometer", vec_to_json(rec.odometer)},
            {"sequence", std::move(seq)},
            {"result", vec_to_json(rec.result)}};
}

std::string record_to_text(const FiringRecord& rec) {
    std::string out = "result: " + format_configuration(rec.result) + "\n";
    out += "odometer: " + format_configuration(rec.odometer) + "\n";
    out += "sequence:";
    for (std::size_t i : rec.sequence) out += " " + std::to_string(i);
    out += "\n";
    return out;
}

std::string rats_to_text(const RatVec& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += to_string(v[i]);
    }
    return out;
}

int cmd_check(const CommonInput& in) {
    IntMatrix delta = load_delta(in);
    MVerdict v = m_verdict(delta);
    Int det = determinant(delta);

    json j{{"z_matrix", v.is_z}, {"m_matrix", v.is_m}, {"determinant", int_to_json(det)}};
    std::string text = std::string("z_matrix: ") + (v.is_z ? "true" : "false") + "\n" +
                       "m_matrix: " + (v.is_m ? "true" : "false") + "\n" +
                       "determinant: " + to_string(det) + "\n";
    if (v.is_m) {
        json inv = json::array();
        for (std::size_t i = 0; i < delta.size(); ++i) {
            RatVec row(delta.size());
            for (std::size_t k = 0; k < delta.size(); ++k) row[k] = (*v.inverse)(i, k);
            inv.push_back(ratvec_to_json(row));
        }
        j["inverse"] = std::move(inv);
        j["certificate"] = ratvec_to_json(*v.certificate);
        text += "certificate: " + rats_to_text(*v.certificate) + "\n";
    } else {
        j["failure"] = *v.failure_witness;
        text += "failure: " + *v.failure_witness + "\n";
    }
    emit(j, text, in.json_output);
    return v.is_m ? 0 : 3;
}

int cmd_stabilize(const CommonInput& in, const std::string& config, const std::string& policy,
                  std::uint64_t seed, std::uint64_t cap, bool cap_set) {
    Engine e(load_delta(in));
    StabilizeOptions opt;
    if (policy == "random")
        opt.policy = FirePolicy::random_order;
    else if (policy != "smallest")
        throw CLI::ValidationError("--policy must be smallest or random");
    opt.seed = seed;
    if (cap_set) opt.cap = Int(cap);
    FiringRecord rec = e.stabilize(load_config(config), opt);
    emit(record_to_json(rec), record_to_text(rec), in.json_output);
    return 0;
}

int cmd_superstable(const CommonInput& in, const std::string& config) {
    Engine e(load_delta(in));
    StabilityReport r = stability_report(e, load_config(config));
    json j{{"stable", r.stable},
           {"chi_superstable", r.chi_superstable},
           {"z_superstable", r.z_superstable}};
    std::string text = std::string("stable: ") + (r.stable ? "true" : "false") + "\n" +
                       "chi_superstable: " + (r.chi_superstable ? "true" : "false") + "\n" +
                       "z_superstable: " + (r.z_superstable ? "true" : "false") + "\n";
    if (r.violating_chi) {
        j["violating_chi"] = vec_to_json(*r.violating_chi);
        text += "violating_chi: " + format_configuration(*r.violating_chi) + "\n";
    }
    if (r.violating_z) {
        j["violating_z"] = vec_to_json(*r.violating_z);
        text += "violating_z: " + format_configuration(*r.violating_z) + "\n";
    }
    emit(j, text, in.json_output);
    return 0;
}

int cmd_canonical(const CommonInput& in, const std::string& config, const std::string& kind) {
    Engine e(load_delta(in));
    IntVec f = load_config(config);
    if (kind == "z") {
        IntVec s = canonical_z_superstable(e, f);
        emit(json{{"configuration", vec_to_json(s)}},
             "configuration: " + format_configuration(s) + "\n", in.json_output);
        return 0;
    }
    if (kind != "critical") throw CLI::ValidationError("--kind must be z or critical");
    CanonicalCritical cc = canonical_critical(e, f);
    json cert = record_to_json(cc.certificate.record);
    cert["start"] = vec_to_json(cc.certificate.start);
    emit(json{{"configuration", vec_to_json(cc.configuration)}, {"certificate", std::move(cert)}},
         "configuration: " + format_configuration(cc.configuration) + "\n" +
             "start: " + format_configuration(cc.certificate.start) + "\n" +
             record_to_text(cc.certificate.record),
         in.json_output);
    return 0;
}

int cmd_dual(const CommonInput& in, const std::string& config) {
    Engine e(load_delta(in));
    IntVec d = dual(e, load_config(config));
    emit(json{{"dual", vec_to_json(d)}}, format_configuration(d) + "\n", in.json_output);
    return 0;
}

int cmd_enumerate(const CommonInput& in, const std::string& kind) {
    Engine e(load_delta(in));
    std::vector<IntVec> list;
    if (kind == "z")
        list = enumerate_z_superstables(e);
    else if (kind == "critical")
        list = enumerate_criticals(e);
    else
        throw CLI::ValidationError("--kind must be z or critical");

    json arr = json::array();
    std::string text;
    for (const IntVec& c : list) {
        arr.push_back(vec_to_json(c));
        text += format_configuration(c) + "\n";
    }
    text += "count: " + std::to_string(list.size()) + "\n";
    text += "determinant: " + to_string(e.determinant()) + "\n";
    emit(json{{"configurations", std::move(arr)},
              {"count", list.size()},
              {"determinant", int_to_json(e.determinant())}},
         text, in.json_output);
    return 0;
}

int cmd_energy(const CommonInput& in, const std::string& config, const std::string& spec_file) {
    Engine e(load_delta(in));
    EnergySpec spec = [&] {
        json j = json::parse(read_file(spec_file), nullptr, false);
        if (j.is_discarded()) throw ParseError("invalid JSON in energy spec file");
        return EnergySpec::from_json(j);
    }();
    EnergyValue v = energy(e, spec, load_config(config));
    std::string text;
    if (v.is_exact()) {
        text = "exact: " + to_string(v.exact()) + "\n";
    } else {
        std::string bound;
        std::string mid = v.approx_decimal(30, &bound);
        text = "approx: " + mid + " (error <= " + bound + ")\n";
    }
    emit(v.to_json(), text, in.json_output);
    return 0;
}

int cmd_minimize(const CommonInput& in, const std::string& config, const std::string& spec_file) {
    Engine e(load_delta(in));
    EnergySpec spec = [&] {
        json j = json::parse(read_file(spec_file), nullptr, false);
        if (j.is_discarded()) throw ParseError("invalid JSON in energy spec file");
        return EnergySpec::from_json(j);
    }();
    IntVec m = minimize_energy(e, spec, load_config(config));
    EnergyValue v = energy(e, spec, m);
    std::string text = "minimizer: " + format_configuration(m) + "\n";
    if (v.is_exact()) {
        text += "energy: " + to_string(v.exact()) + "\n";
    } else {
        std::string bound;
        text += "energy: " + v.approx_decimal(30, &bound) + " (error <= " + bound + ")\n";
    }
    emit(json{{"minimizer", vec_to_json(m)}, {"energy", v.to_json()}}, text, in.json_output);
    return 0;
}

int cmd_equiv(const CommonInput& in, const std::string& config, const std::string& config2) {
    Engine e(load_delta(in));
    // Witness in the firing direction: z with first - L z = second.
    std::optional<IntVec> w = e.equivalence_witness(load_config(config2), load_config(config));
    if (w)
        emit(json{{"equivalent", true}, {"witness", vec_to_json(*w)}},
             "witness: " + format_configuration(*w) + "\n", in.json_output);
    else
        emit(json{{"equivalent", false}}, "not equivalent\n", in.json_output);
    return 0;
}

int cmd_gparking(const CommonInput& in, const std::string& config) {
    if (in.graph_file.empty()) throw CLI::ValidationError("gparking needs --graph");
    DirectedMultigraph g = parse_graph(read_file(in.graph_file));
    std::optional<std::size_t> sink = resolve_sink(g, in);
    if (!sink) throw CLI::ValidationError("gparking needs a sink (--sink or file field)");
    bool ok = is_g_parking(g, *sink, load_config(config));
    emit(json{{"g_parking", ok}}, std::string(ok ? "true" : "false") + "\n", in.json_output);
    return 0;
}

int cmd_laplacian(const CommonInput& in) {
    if (in.graph_file.empty()) throw CLI::ValidationError("laplacian needs --graph");
    DirectedMultigraph g = parse_graph(read_file(in.graph_file));
    // Full matrix unless --sink is given explicitly; the file's sink field
    // does not trigger reduction here.
    IntMatrix m = [&] {
        if (in.sink <= 0) return laplacian(g);
        if (static_cast<std::size_t>(in.sink) > g.vertex_count)
            throw ParseError("sink out of range (vertex ids are 1-based)");
        return reduced_laplacian(g, static_cast<std::size_t>(in.sink - 1));
    }();
    emit(matrix_to_json(m), format_matrix_text(m), in.json_output);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    std::cerr << "firing subtracts rows of \xce\x94 (columns of L = \xce\x94\xe1\xb5\x80)\n";

    CLI::App app{"exact chip-firing dynamics for M-matrices"};
    app.require_subcommand(1);

    CommonInput in;
    std::string config, config2, spec_file;
    std::string policy = "smallest";
    std::string kind = "z";
    std::uint64_t seed = 0, cap = 0;

    auto* c_check = app.add_subcommand("check", "M-matrix verdict for delta");
    add_source_options(c_check, in);

    auto* c_stab = app.add_subcommand("stabilize", "fire until stable, with transcript");
    add_source_options(c_stab, in);
    c_stab->add_option("--config", config, "configuration file")->required();
    c_stab->add_option("--policy", policy, "smallest|random (default smallest)");
    c_stab->add_option("--seed", seed, "random policy seed");
    auto* cap_opt = c_stab->add_option("--cap", cap, "firing cap override");

    auto* c_super = app.add_subcommand("superstable", "stability and superstability report");
    add_source_options(c_super, in);
    c_super->add_option("--config", config, "configuration file")->required();

    auto* c_canon = app.add_subcommand("canonical", "canonical class representative");
    add_source_options(c_canon, in);
    c_canon->add_option("--config", config, "configuration file")->required();
    c_canon->add_option("--kind", kind, "z|critical (default z)");

    auto* c_dual = app.add_subcommand("dual", "reflection D^L - c");
    add_source_options(c_dual, in);
    c_dual->add_option("--config", config, "configuration file")->required();

    auto* c_enum = app.add_subcommand("enumerate", "all z-superstable or critical configurations");
    add_source_options(c_enum, in);
    c_enum->add_option("--kind", kind, "z|critical (default z)");

    auto* c_energy = app.add_subcommand("energy", "exact energy of a configuration");
    add_source_options(c_energy, in);
    c_energy->add_option("--config", config, "configuration file")->required();
    c_energy->add_option("--spec", spec_file, "energy spec JSON file")->required();

    auto* c_min = app.add_subcommand("minimize", "energy minimizer over the nonnegative class");
    add_source_options(c_min, in);
    c_min->add_option("--config", config, "configuration file")->required();
    c_min->add_option("--spec", spec_file, "energy spec JSON file")->required();

    auto* c_equiv = app.add_subcommand("equiv", "integer firing vector between two configurations");
    add_source_options(c_equiv, in);
    c_equiv->add_option("--config", config, "first configuration file")->required();
    c_equiv->add_option("--config2", config2, "second configuration file")->required();

    auto* c_gpark = app.add_subcommand("gparking", "G-parking predicate on a sinked graph");
    add_source_options(c_gpark, in);
    c_gpark->add_option("--config", config, "values for non-sink vertices, in id order")
        ->required();

    auto* c_lap = app.add_subcommand("laplacian", "full or reduced graph Laplacian");
    add_source_options(c_lap, in);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(c_check)) return cmd_check(in);
        if (app.got_subcommand(c_stab))
            return cmd_stabilize(in, config, policy, seed, cap, cap_opt->count() > 0);
        if (app.got_subcommand(c_super)) return cmd_superstable(in, config);
        if (app.got_subcommand(c_canon)) return cmd_canonical(in, config, kind);
        if (app.got_subcommand(c_dual)) return cmd_dual(in, config);
        if (app.got_subcommand(c_enum)) return cmd_enumerate(in, kind);
        if (app.got_subcommand(c_energy)) return cmd_energy(in, config, spec_file);
        if (app.got_subcommand(c_min)) return cmd_minimize(in, config, spec_file);
        if (app.got_subcommand(c_equiv)) return cmd_equiv(in, config, config2);
        if (app.got_subcommand(c_gpark)) return cmd_gparking(in, config);
        if (app.got_subcommand(c_lap)) return cmd_laplacian(in);
        std::cerr << "error: usage: no subcommand\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return 2;
    } catch (const NotMMatrixError& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
        return 3;
    } catch (const SearchTooLargeError& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
        return 4;
    } catch (const DimensionTooLargeError& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
        return 4;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
        return 5;
    } catch (const Error& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 1;
    }
}
