#include "goldfusion/ring_json.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace goldfusion {

using nlohmann::json;

void write_ring_json(std::ostream& os, const FusionRing& ring)
{
    const std::uint32_t r = ring.rank();
    os << "{\"basis\":[";
    for (std::uint32_t i = 0; i < r; ++i) {
        if (i) os << ",";
        os << json(ring.label(i)).dump();
    }
    os << "],\"unit\":" << ring.unit() << ",\"dual\":[";
    for (std::uint32_t i = 0; i < r; ++i) {
        if (i) os << ",";
        os << ring.dual(i);
    }
    os << "],\"fusion\":[";
    bool first = true;
    for (std::uint32_t a = 0; a < r; ++a)
        for (std::uint32_t b = 0; b < r; ++b) {
            FusionRing::RowView rv = ring.row(a, b);
            for (std::size_t i = 0; i < rv.n; ++i) {
                if (!first) os << ",";
                first = false;
                os << "[" << a << "," << b << "," << rv.c[i] << "," << rv.m[i] << "]";
            }
        }
    os << "]}\n";
}

std::string ring_to_json(const FusionRing& ring)
{
    std::ostringstream os;
    write_ring_json(os, ring);
    return os.str();
}

FusionRing ring_from_json(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("ring JSON parse error: ") + e.what());
    }
    try {
        std::vector<std::string> labels = j.at("basis").get<std::vector<std::string>>();
        std::uint32_t unit = j.at("unit").get<std::uint32_t>();
        std::vector<std::uint32_t> dual = j.at("dual").get<std::vector<std::uint32_t>>();
        std::vector<FusionTriple> triples;
        for (const auto& t : j.at("fusion")) {
            if (!t.is_array() || t.size() != 4)
                throw std::invalid_argument("fusion entries must be [a,b,c,mult]");
            triples.push_back({t[0].get<std::uint32_t>(), t[1].get<std::uint32_t>(),
                               t[2].get<std::uint32_t>(), t[3].get<std::uint32_t>()});
        }
        return FusionRing::from_triples(std::move(labels), unit, std::move(dual), std::move(triples));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("ring JSON shape error: ") + e.what());
    }
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

FusionRing load_ring_file(const std::string& path)
{
    return ring_from_json(read_text_file(path));
}

Presentation presentation_from_json(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("presentation JSON parse error: ") + e.what());
    }
    Presentation p;
    try {
        p.generators = j.at("generators").get<std::uint32_t>();
        for (const auto& rel : j.at("relations")) {
            if (!rel.is_array() || rel.size() != 2)
                throw std::invalid_argument("relations must be [lhs, rhs] pairs");
            p.relations.emplace_back(rel[0].get<std::string>(), rel[1].get<std::string>());
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("presentation JSON shape error: ") + e.what());
    }
    p.validate();
    return p;
}

Presentation load_presentation_file(const std::string& path)
{
    return presentation_from_json(read_text_file(path));
}

std::string derivation_to_json(const Derivation& d)
{
    json steps = json::array();
    for (const DeriveStep& s : d.steps) {
        json step;
        step["rule"] = s.rule;
        step["premises"] = s.premises;
        step["lhs"] = s.lhs;
        step["rhs"] = s.rhs;
        steps.push_back(std::move(step));
    }
    json out;
    out["steps"] = std::move(steps);
    return out.dump();
}

}  // namespace goldfusion
