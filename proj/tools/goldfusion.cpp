// Command line surface: batch verification, construction, classification,
// word evaluation and collapse derivation over the golden fusion rings.
//
// Exit codes: 0 success / pass, 1 verification failure (axiom violation, or
// a derivation request that exhausted its budget), 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "goldfusion/classifier.hpp"
#include "goldfusion/constructors.hpp"
#include "goldfusion/ring_json.hpp"
#include "goldfusion/verify.hpp"
#include "goldfusion/word_engine.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using goldfusion::FusionRing;
using nlohmann::json;

FusionRing resolve_ring(const std::string& name)
{
    if (name == "fib") return goldfusion::make_fib();
    if (name == "tt3") return goldfusion::make_tt3();
    return goldfusion::load_ring_file(name);
}

goldfusion::GeneratorAssignment parse_map(const std::string& spec, const FusionRing& ring)
{
    std::map<char, std::uint32_t> by_letter;
    std::size_t start = 0;
    while (start < spec.size()) {
        std::size_t comma = spec.find(',', start);
        std::string tok = spec.substr(start, comma == std::string::npos ? std::string::npos
                                                                        : comma - start);
        std::size_t eq = tok.find('=');
        if (eq == std::string::npos || eq != 1 || tok[0] < 'a' || tok[0] > 'z')
            throw std::invalid_argument("bad --map token '" + tok + "', expected letter=label");
        auto idx = ring.index_of(tok.substr(2));
        if (!idx) throw std::invalid_argument("unknown basis label '" + tok.substr(2) + "'");
        by_letter[tok[0]] = *idx;
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (by_letter.empty()) throw std::invalid_argument("--map must assign at least one letter");
    char last = by_letter.rbegin()->first;
    goldfusion::GeneratorAssignment assign(static_cast<std::size_t>(last - 'a') + 1, 0);
    std::vector<char> have(assign.size(), 0);
    for (auto [ch, idx] : by_letter) {
        assign[static_cast<std::size_t>(ch - 'a')] = idx;
        have[static_cast<std::size_t>(ch - 'a')] = 1;
    }
    for (std::size_t i = 0; i < have.size(); ++i)
        if (!have[i])
            throw std::invalid_argument(std::string("--map skips letter '") +
                                        static_cast<char>('a' + i) + "'");
    return assign;
}

void emit_object(std::ostream& os, const FusionRing& ring, const goldfusion::ObjectVec& v)
{
    os << "{\"object\":[";
    bool first = true;
    for (std::uint32_t i = 0; i < ring.rank(); ++i) {
        if (v[i] == 0) continue;
        if (!first) os << ",";
        first = false;
        os << "[" << json(ring.label(i)).dump() << "," << v[i] << "]";
    }
    os << "]}\n";
}

json report_to_json(const goldfusion::AxiomReport& rep, const FusionRing& ring)
{
    json j;
    j["pass"] = rep.pass();
    j["unit_law"] = rep.unit_ok;
    j["duality_pairing"] = rep.duality_ok;
    j["frobenius_reciprocity"] = rep.frobenius_ok;
    j["associativity"] = rep.assoc_ok;
    j["triples_checked"] = rep.assoc_triples_checked;
    auto witness = [&ring](const auto& w) {
        json arr = json::array();
        for (std::uint32_t i : *w) arr.push_back(ring.label(i));
        return arr;
    };
    if (rep.unit_witness) j["unit_witness"] = witness(rep.unit_witness);
    if (rep.duality_witness) j["duality_witness"] = witness(rep.duality_witness);
    if (rep.frobenius_witness) j["frobenius_witness"] = witness(rep.frobenius_witness);
    if (rep.assoc_witness) j["associativity_witness"] = witness(rep.assoc_witness);
    return j;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"golden-ratio fusion ring workbench"};
    app.require_subcommand(1);
    app.fallthrough();  // accept --threads after the subcommand name

    int threads = 0;
    if (const char* env = std::getenv("GOLDFUSION_THREADS")) threads = std::atoi(env);
    app.add_option("--threads", threads, "worker threads (default: GOLDFUSION_THREADS or all)");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "check the fusion ring axioms of a ring file");
    std::string verify_in;
    bool verify_serial = false;
    cmd_verify->add_option("--in", verify_in, "ring JSON file, or 'fib'/'tt3'")->required();
    cmd_verify->add_flag("--serial", verify_serial, "use the serial reference verifier");

    // build
    auto* cmd_build = app.add_subcommand("build", "construct a named family ring");
    std::string build_family, build_out;
    std::uint32_t build_n = 1, build_m = 1;
    cmd_build->add_option("--family", build_family,
                          "fib | tt3 | fib-power | tt3-power | fib-wreath | tt3-wreath")
        ->required();
    cmd_build->add_option("--n", build_n, "factor count");
    cmd_build->add_option("--m", build_m, "group order multiplier");
    cmd_build->add_option("--out", build_out, "output file (default: stdout)");

    // classify
    auto* cmd_classify = app.add_subcommand("classify", "enumerate and verify the wreath catalog");
    std::uint32_t cls_n = 3, cls_m = 2;
    cmd_classify->add_option("--n-max", cls_n, "largest factor count");
    cmd_classify->add_option("--m-max", cls_m, "largest multiplier");

    // eval
    auto* cmd_eval = app.add_subcommand("eval", "evaluate a word in a named ring");
    std::string eval_ring, eval_word, eval_map;
    cmd_eval->add_option("--ring", eval_ring, "ring JSON file, or 'fib'/'tt3'")->required();
    cmd_eval->add_option("--word", eval_word, "word over letters a,b,...")->required();
    cmd_eval->add_option("--map", eval_map, "generator assignment, e.g. a=rho,b=mu")->required();

    // derive
    auto* cmd_derive = app.add_subcommand("derive", "search for a generator collapse");
    std::string derive_pres, derive_target;
    std::size_t derive_budget = 50000, derive_len = 0;
    cmd_derive->add_option("--presentation", derive_pres, "presentation JSON file")->required();
    cmd_derive->add_option("--budget", derive_budget, "max derived equalities");
    cmd_derive->add_option("--max-word-len", derive_len, "word length cap (0 = auto)");
    cmd_derive->add_option("--target", derive_target,
                           "two letters naming the pair to collapse, e.g. 'ac' (default: any)");

    // identify
    auto* cmd_identify = app.add_subcommand("identify", "recognize a ring file");
    std::string identify_in;
    cmd_identify->add_option("--in", identify_in, "ring JSON file")->required();

    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif

    try {
        if (cmd_verify->parsed()) {
            FusionRing ring = resolve_ring(verify_in);
            goldfusion::AxiomReport rep;
            if (verify_serial) {
                rep = goldfusion::verify_axioms_serial(ring);
            } else {
                goldfusion::VerifyOptions opts;
                opts.threads = threads;
                rep = goldfusion::verify_axioms(ring, opts);
            }
            std::cout << report_to_json(rep, ring).dump() << "\n";
            return rep.pass() ? 0 : 1;
        }

        if (cmd_build->parsed()) {
            FusionRing ring = [&] {
                if (build_family == "fib") return goldfusion::make_fib();
                if (build_family == "tt3") return goldfusion::make_tt3();
                if (build_family == "fib-power")
                    return goldfusion::deligne_power(goldfusion::make_fib(), build_n);
                if (build_family == "tt3-power")
                    return goldfusion::deligne_power(goldfusion::make_tt3(), build_n);
                if (build_family == "fib-wreath") return goldfusion::fib_wreath(build_n, build_m);
                if (build_family == "tt3-wreath") return goldfusion::tt3_wreath(build_n, build_m);
                throw std::invalid_argument("unknown family '" + build_family + "'");
            }();
            if (build_out.empty()) {
                goldfusion::write_ring_json(std::cout, ring);
            } else {
                std::ofstream out(build_out, std::ios::binary);
                if (!out) throw std::invalid_argument("cannot open output file: " + build_out);
                goldfusion::write_ring_json(out, ring);
            }
            return 0;
        }

        if (cmd_classify->parsed()) {
            auto entries = goldfusion::enumerate_catalog(cls_n, cls_m);
            std::cout << "[";
            for (std::size_t i = 0; i < entries.size(); ++i) {
                const auto& e = entries[i];
                if (i) std::cout << ",";
                std::cout << "\n  {\"family\":\"" << family_name(e.family) << "\",\"n\":" << e.n
                          << ",\"m\":" << e.m << ",\"rank\":" << e.ring.rank()
                          << ",\"global_dim\":[" << e.global_dim.x() << "," << e.global_dim.y()
                          << "],\"generator\":" << json(e.ring.label(e.generator_witness)).dump()
                          << ",\"grading_order\":" << e.grading_order
                          << ",\"twist_count\":" << e.twist_count << "}";
            }
            std::cout << "\n]\n";
            return 0;
        }

        if (cmd_eval->parsed()) {
            FusionRing ring = resolve_ring(eval_ring);
            goldfusion::GeneratorAssignment assign = parse_map(eval_map, ring);
            goldfusion::WordSum sum{eval_word};
            goldfusion::ObjectVec v = goldfusion::evaluate(sum, ring, assign);
            emit_object(std::cout, ring, v);
            return 0;
        }

        if (cmd_derive->parsed()) {
            goldfusion::Presentation pres = goldfusion::load_presentation_file(derive_pres);
            goldfusion::DeriveBudget budget;
            budget.max_equalities = derive_budget;
            budget.max_word_len = derive_len;
            std::optional<std::pair<char, char>> target;
            if (!derive_target.empty()) {
                if (derive_target.size() != 2)
                    throw std::invalid_argument("--target needs exactly two letters");
                target = std::make_pair(derive_target[0], derive_target[1]);
            }
            goldfusion::DeriveOutcome out = goldfusion::derive_collapse(pres, budget, target);
            json j;
            j["status"] = out.collapsed ? "collapsed" : "exhausted";
            j["derived"] = out.stats.derived;
            j["processed"] = out.stats.processed;
            if (out.derivation) j["derivation"] = json::parse(derivation_to_json(*out.derivation));
            std::cout << j.dump() << "\n";
            return out.collapsed ? 0 : 1;
        }

        if (cmd_identify->parsed()) {
            FusionRing ring = goldfusion::load_ring_file(identify_in);
            std::cout << "{\"name\":" << json(goldfusion::identify_ring(ring)).dump() << "}\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
