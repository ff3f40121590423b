#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sgf/circular.hpp"
#include "sgf/convert.hpp"
#include "sgf/flow.hpp"
#include "sgf/generate.hpp"
#include "sgf/io.hpp"
#include "sgf/oracle.hpp"

namespace {

constexpr int kOk = 0;        // verified / found / converted
constexpr int kFailed = 1;    // verification failed / not found / preconditions unmet
constexpr int kUsage = 2;     // usage or parse error
constexpr int kInternal = 3;  // failed self-check

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

// "mod:K", "int:K", "circ:K/D" (integer), "circmod:K/D" (modulo)
sgf::FlowSpec parse_kind(const std::string& kind, bool nowhere_zero) {
    auto bad = [&]() -> sgf::FlowSpec {
        throw CLI::ValidationError("--kind", "expected mod:K, int:K, circ:K/D or circmod:K/D");
    };
    auto colon = kind.find(':');
    if (colon == std::string::npos) return bad();
    std::string name = kind.substr(0, colon);
    std::string rest = kind.substr(colon + 1);
    try {
        if (name == "mod") return sgf::FlowSpec::modulo(std::stoi(rest), nowhere_zero);
        if (name == "int") return sgf::FlowSpec::integer(std::stoi(rest), nowhere_zero);
        if (name == "circ" || name == "circmod") {
            auto slash = rest.find('/');
            if (slash == std::string::npos) return bad();
            int k = std::stoi(rest.substr(0, slash));
            int d = std::stoi(rest.substr(slash + 1));
            return name == "circ" ? sgf::FlowSpec::circular_integer(k, d)
                                  : sgf::FlowSpec::circular_modulo(k, d);
        }
    } catch (const CLI::ValidationError&) {
        throw;
    } catch (...) {
        return bad();
    }
    return bad();
}

int run_verify(const std::string& graph_path, const std::string& flow_path,
               const std::string& kind, bool nowhere_zero) {
    sgf::SignedGraph g = sgf::io::parse_graph(read_file(graph_path));
    sgf::FlowAssignment fa = sgf::io::parse_flow(read_file(flow_path), g);
    sgf::FlowSpec spec = parse_kind(kind, nowhere_zero);
    sgf::VerifyReport rep = sgf::verify(g, fa, spec);
    std::cout << spec.describe() << ": " << rep.message() << "\n";
    if (!rep.pass) {
        for (int v : rep.bad_boundary_vertices)
            std::cout << "  vertex " << v << " residue " << rep.vertex_residues.at(v) << "\n";
    }
    return rep.pass ? kOk : kFailed;
}

int run_convert(const std::string& mode, const std::string& graph_path,
                const std::string& flow_path, const std::string& orient_path,
                const std::string& out_path) {
    sgf::SignedGraph g = sgf::io::parse_graph(read_file(graph_path));
    sgf::FlowAssignment result;
    if (mode == "2to2" || mode == "2to3" || mode == "3to3" || mode == "3to4") {
        if (flow_path.empty()) throw CLI::ValidationError("--flow", "mode needs a flow file");
        sgf::FlowAssignment f1 = sgf::io::parse_flow(read_file(flow_path), g);
        if (mode == "2to2")
            result = sgf::convert::int2_from_mod2(g, f1);
        else if (mode == "2to3")
            result = sgf::convert::int3_from_mod2(g, f1);
        else if (mode == "3to3")
            result = sgf::convert::int3_from_mod3(g, f1);
        else
            result = sgf::convert::int4_from_mod3(g, f1);
    } else if (mode.rfind("circ:", 0) == 0) {
        int p = std::stoi(mode.substr(5));
        if (orient_path.empty())
            throw CLI::ValidationError("--orientation", "circ mode needs an orientation file");
        sgf::Orientation tau = sgf::io::parse_orientation(read_file(orient_path), g);
        result = sgf::integer_circular_from_orientation(g, tau, p);
    } else {
        throw CLI::ValidationError("--mode", "expected 2to2, 2to3, 3to3, 3to4 or circ:P");
    }
    write_file(out_path, sgf::io::serialize_flow(g, result));
    return kOk;
}

int run_analyze(const std::string& graph_path, bool with_negativeness) {
    sgf::SignedGraph g = sgf::io::parse_graph(read_file(graph_path));
    nlohmann::json j;
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["negative_edges"] = g.negative_edge_count();
    j["components"] = g.component_count();
    auto blocks = g.bridges_and_blocks();
    j["bridges"] = blocks.bridges;
    j["blocks"] = blocks.blocks;
    j["cut_vertices"] = blocks.cut_vertices;
    auto oc = g.odd_edge_connectivity();
    if (oc)
        j["odd_edge_connectivity"] = *oc;
    else
        j["odd_edge_connectivity"] = "infinity";
    if (with_negativeness) j["negativeness"] = g.negativeness();
    std::cout << j.dump(2) << "\n";
    return kOk;
}

int run_gen(const std::string& family, std::uint64_t seed, const std::string& out_path,
            const std::string& flow_out) {
    sgf::gen::Generated gen = sgf::gen::generate(family, seed);
    write_file(out_path, sgf::io::serialize_graph(gen.graph));
    if (!flow_out.empty()) {
        if (!gen.flow) {
            std::cerr << "family '" << family << "' ships no flow file\n";
            return kFailed;
        }
        write_file(flow_out, sgf::io::serialize_flow(gen.graph, *gen.flow));
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed-graph flow toolkit"};
    app.require_subcommand(1);

    std::string graph_path, flow_path, orient_path, out_path, kind, mode, family, sub;
    bool nowhere_zero = false, with_negativeness = false;
    std::uint64_t seed = 0;
    int p = 1;

    auto* verify = app.add_subcommand("verify", "check a flow file against a spec");
    verify->add_option("--graph", graph_path)->required();
    verify->add_option("--flow", flow_path)->required();
    verify->add_option("--kind", kind)->required();
    verify->add_flag("--nowhere-zero", nowhere_zero);

    auto* convert = app.add_subcommand("convert", "convert a modulo flow to an integer flow");
    convert->add_option("--mode", mode)->required();
    convert->add_option("--graph", graph_path)->required();
    convert->add_option("--flow", flow_path);
    convert->add_option("--orientation", orient_path);
    convert->add_option("-o,--out", out_path)->required();

    auto* analyze = app.add_subcommand("analyze", "structural report as JSON");
    analyze->add_option("--graph", graph_path)->required();
    analyze->add_flag("--negativeness", with_negativeness);

    auto* genc = app.add_subcommand("gen", "write a generated instance");
    genc->add_option("--family", family)->required();
    genc->add_option("--seed", seed);
    genc->add_option("-o,--out", out_path)->required();
    genc->add_option("--flow-out", flow_path);

    auto* oraclec = app.add_subcommand("oracle", "exhaustive searches");
    oraclec->add_option("cmd", sub, "find-flow | find-orientation | min-odd-cut")->required();
    oraclec->add_option("--graph", graph_path);
    oraclec->add_option("--kind", kind);
    oraclec->add_flag("--nowhere-zero", nowhere_zero);
    oraclec->add_option("-p", p);
    oraclec->add_option("-o,--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (verify->parsed()) return run_verify(graph_path, flow_path, kind, nowhere_zero);
        if (convert->parsed())
            return run_convert(mode, graph_path, flow_path, orient_path, out_path);
        if (analyze->parsed()) return run_analyze(graph_path, with_negativeness);
        if (genc->parsed()) return run_gen(family, seed, out_path, flow_path);
        if (oraclec->parsed()) {
            if (graph_path.empty())
                throw CLI::ValidationError("--graph", "oracle needs a graph file");
            sgf::SignedGraph g = sgf::io::parse_graph(read_file(graph_path));
            if (sub == "find-flow") {
                sgf::FlowSpec spec = parse_kind(kind, nowhere_zero);
                auto fa = sgf::oracle::search_flow(g, spec);
                if (!fa) {
                    std::cout << "exhausted: no " << spec.describe() << " flow exists\n";
                    return kFailed;
                }
                std::cout << "found\n";
                if (!out_path.empty()) write_file(out_path, sgf::io::serialize_flow(g, *fa));
                return kOk;
            }
            if (sub == "find-orientation") {
                auto tau = sgf::oracle::search_orientation(g, p);
                if (!tau) {
                    std::cout << "exhausted: no modulo " << (2 * p + 1)
                              << "-orientation exists\n";
                    return kFailed;
                }
                std::cout << "found\n";
                if (!out_path.empty())
                    write_file(out_path, sgf::io::serialize_orientation(g, *tau));
                return kOk;
            }
            if (sub == "min-odd-cut") {
                auto cut = sgf::oracle::min_odd_cut(g);
                if (!cut) {
                    std::cout << "infinity\n";
                    return kOk;
                }
                std::cout << cut->size << " side:";
                for (int v : cut->side) std::cout << " " << v;
                std::cout << "\n";
                return kOk;
            }
            throw CLI::ValidationError("cmd", "expected find-flow, find-orientation or min-odd-cut");
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const sgf::io::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kFailed;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
