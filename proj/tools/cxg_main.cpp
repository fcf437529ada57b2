#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "cxg/clannish.hpp"
#include "cxg/complexify.hpp"
#include "cxg/generate.hpp"
#include "cxg/gentle.hpp"
#include "cxg/mq_text.hpp"
#include "cxg/tables.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool endsWith(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct Options {
    std::string out = "text";
    bool json() const { return out == "json"; }
};

void printGamma(const cxg::ModQuiver& q, const cxg::ComplexPresentation& cp, const Options& opt) {
    using namespace cxg;
    if (opt.json()) {
        std::cout << complexPresentationToJson(q, cp) << "\n";
        return;
    }
    const ComplexQuiver& g = cp.gamma;
    std::cout << "Gamma vertices:";
    for (const auto& v : g.vertices) std::cout << " " << v.name;
    std::cout << "\nGamma arrows:\n";
    for (const auto& a : g.arrows)
        std::cout << "  " << a.name << ": " << g.vertices[static_cast<std::size_t>(a.src)].name
                  << " -> " << g.vertices[static_cast<std::size_t>(a.tgt)].name << "\n";
    std::cout << "tau:";
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        int t = g.tauVertex(static_cast<int>(v));
        if (t > static_cast<int>(v))
            std::cout << " (" << g.vertices[v].name << " "
                      << g.vertices[static_cast<std::size_t>(t)].name << ")";
    }
    for (std::size_t a = 0; a < g.arrows.size(); ++a) {
        int t = g.tauArrow(static_cast<int>(a));
        if (t > static_cast<int>(a))
            std::cout << " (" << g.arrows[a].name << " "
                      << g.arrows[static_cast<std::size_t>(t)].name << ")";
    }
    std::cout << "\nrelations J:\n";
    if (cp.generators.empty()) std::cout << "  (none)\n";
    for (const auto& gen : cp.generators) std::cout << "  " << pathVecStr(g, gen) << "\n";
}

void printClassification(const cxg::ModQuiver& q, const cxg::AlgebraVerdict& verdict,
                         const Options& opt) {
    using namespace cxg;
    if (opt.json()) {
        nlohmann::json j;
        j["type"] = algebraTypeName(verdict.type);
        j["generated_by_vertex_parts"] = verdict.generatedByVertexParts;
        j["vertices"] = nlohmann::json::array();
        for (const auto& vv : verdict.vertices) {
            nlohmann::json jv;
            jv["vertex"] = q.vertices[static_cast<std::size_t>(vv.vertex)].name;
            jv["verdict"] = vv.summary();
            jv["notes"] = vv.notes;
            j["vertices"].push_back(jv);
        }
        j["reasons"] = verdict.reasons;
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << algebraTypeName(verdict.type) << "\n";
    for (const auto& vv : verdict.vertices)
        std::cout << "  " << q.vertices[static_cast<std::size_t>(vv.vertex)].name << ": "
                  << vv.summary() << "\n";
    for (const auto& r : verdict.reasons) std::cout << "  note: " << r << "\n";
}

int runVerifyTables(const std::string& table, const std::string& fixturePath, const Options& opt) {
    using namespace cxg;
    std::string fixture =
        fixturePath.empty() ? defaultTablesFixture() : readFile(fixturePath);
    std::vector<std::pair<std::string, TableCheckResult>> results;
    if (table == "1" || table == "all") results.emplace_back("table 1", verifyTable1(fixture));
    if (table == "2" || table == "all") results.emplace_back("table 2", verifyTable2(fixture));
    if (table == "3" || table == "all") results.emplace_back("table 3", verifyTable3(fixture));
    if (results.empty()) {
        std::cerr << "unknown table '" << table << "' (use 1, 2, 3 or all)\n";
        return kExitUsage;
    }
    bool ok = true;
    if (opt.json()) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& [name, res] : results) {
            nlohmann::json jr;
            jr["table"] = name;
            jr["items"] = nlohmann::json::array();
            for (const auto& it : res.items) {
                jr["items"].push_back({{"name", it.name}, {"pass", it.pass}, {"detail", it.detail}});
                ok &= it.pass;
            }
            j.push_back(jr);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& [name, res] : results) {
            int good = 0;
            for (const auto& it : res.items) {
                if (it.pass)
                    ++good;
                else
                    std::cout << name << " MISMATCH " << it.name << ": " << it.detail << "\n";
            }
            ok &= res.pass();
            std::cout << name << ": " << good << "/" << res.items.size() << " entries match\n";
        }
    }
    return ok ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace cxg;
    CLI::App app{"exact toolkit for modulated quivers over R, their complexified "
                 "presentations and semilinear clannish forms"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--out", opt.out, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string file;
    auto* cmdParse = app.add_subcommand("parse", "parse and echo a .mq or .slq file");
    cmdParse->add_option("file", file)->required();
    auto* cmdComplexify =
        app.add_subcommand("complexify", "complexified quiver presentation of a .mq file");
    cmdComplexify->add_option("file", file)->required();
    auto* cmdCheckGentle = app.add_subcommand(
        "check-gentle", "gentleness of the complexified presentation (.mq) or the "
                        "gentle-type clauses (.slq)");
    cmdCheckGentle->add_option("file", file)->required();
    auto* cmdClassify = app.add_subcommand("classify", "vertex and algebra classification");
    cmdClassify->add_option("file", file)->required();
    auto* cmdNormalize =
        app.add_subcommand("normalize", "complexify and apply the normalizing substitution d");
    cmdNormalize->add_option("file", file)->required();
    auto* cmdToClannish =
        app.add_subcommand("to-clannish", "semilinear clannish presentations of a special-type input");
    cmdToClannish->add_option("file", file)->required();
    std::string which = "both";
    cmdToClannish->add_option("--which", which, "z, zprime or both")
        ->check(CLI::IsMember({"z", "zprime", "both"}));
    auto* cmdFromClannish =
        app.add_subcommand("from-clannish", "basic modulated-quiver presentation of a .slq file");
    cmdFromClannish->add_option("file", file)->required();
    auto* cmdRoundtrip = app.add_subcommand(
        "roundtrip", "to-clannish then from-clannish; asserts the presentation returns");
    cmdRoundtrip->add_option("file", file);
    int randomCount = 0;
    std::uint64_t seed = 1;
    cmdRoundtrip->add_option("--random", randomCount, "roundtrip this many generated instances");
    cmdRoundtrip->add_option("--seed", seed, "seed for generated instances");
    auto* cmdVerify = app.add_subcommand("verify-tables", "recompute the reference tables");
    std::string table = "all";
    std::string fixturePath;
    cmdVerify->add_option("--table", table, "1, 2, 3 or all");
    cmdVerify->add_option("--fixture", fixturePath, "override the embedded fixture file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmdParse->parsed()) {
            std::string text = readFile(file);
            if (endsWith(file, ".slq")) {
                SlqPresentation p = parseSlq(text);
                std::cout << (opt.json() ? slqToJson(p) : serializeSlq(p)) << "\n";
            } else {
                MqPresentation p = parseMq(text);
                std::cout << (opt.json() ? mqToJson(p) : serializeMq(p)) << "\n";
            }
            return kExitOk;
        }
        if (cmdComplexify->parsed()) {
            MqPresentation p = parseMq(readFile(file));
            ComplexPresentation cp = complexifyIdeal(p.q, *p.amb, p.ideal);
            printGamma(p.q, cp, opt);
            return kExitOk;
        }
        if (cmdCheckGentle->parsed()) {
            if (endsWith(file, ".slq")) {
                SlqPresentation p = parseSlq(readFile(file));
                GentleTypeReport report = checkGentleType(p);
                if (opt.json()) {
                    nlohmann::json j = {{"pass", report.pass}, {"failures", report.failures}};
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << (report.pass ? "gentle type: PASS" : "gentle type: FAIL") << "\n";
                    for (const auto& f : report.failures) std::cout << "  " << f << "\n";
                }
                return report.pass ? kExitOk : kExitNegative;
            }
            MqPresentation p = parseMq(readFile(file));
            ComplexPresentation cp = complexifyIdeal(p.q, *p.amb, p.ideal);
            GentleReport report = isLocallyGentle(cp);
            if (opt.json()) {
                nlohmann::json j = {{"pass", report.pass}, {"failures", report.failures}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << (report.pass ? "locally gentle: PASS" : "locally gentle: FAIL") << "\n";
                for (const auto& f : report.failures) std::cout << "  " << f << "\n";
            }
            return report.pass ? kExitOk : kExitNegative;
        }
        if (cmdClassify->parsed()) {
            MqPresentation p = parseMq(readFile(file));
            AlgebraVerdict verdict = classifyAlgebra(*p.amb, p.ideal);
            printClassification(p.q, verdict, opt);
            return verdict.type == AlgebraType::NotClassified ? kExitNegative : kExitOk;
        }
        if (cmdNormalize->parsed()) {
            MqPresentation p = parseMq(readFile(file));
            ComplexPresentation cp = complexifyIdeal(p.q, *p.amb, p.ideal);
            AlgebraVerdict verdict = classifyAlgebra(*p.amb, p.ideal);
            ComplexPresentation normalized =
                dTransform(cp, dPairs(p.q, cp.gamma, verdict));
            printGamma(p.q, normalized, opt);
            GentleReport report = isLocallyGentle(normalized);
            if (!opt.json()) {
                std::cout << (report.pass ? "locally gentle after d: PASS"
                                          : "locally gentle after d: FAIL")
                          << "\n";
                for (const auto& f : report.failures) std::cout << "  " << f << "\n";
            }
            return kExitOk;
        }
        if (cmdToClannish->parsed()) {
            MqPresentation p = parseMq(readFile(file));
            AlgebraVerdict verdict = classifyAlgebra(*p.amb, p.ideal);
            if (verdict.type != AlgebraType::SpecialType) {
                std::cerr << "input is " << algebraTypeName(verdict.type)
                          << ", not SpecialType\n";
                return kExitNegative;
            }
            QsOutput qs = buildQs(p.q, *p.amb, p.ideal, verdict);
            if (opt.json()) {
                nlohmann::json j;
                if (which != "zprime") j["twisted"] = nlohmann::json::parse(slqToJson(qs.twisted));
                if (which != "z") j["straight"] = nlohmann::json::parse(slqToJson(qs.straight));
                std::cout << j.dump(2) << "\n";
            } else {
                if (which != "zprime")
                    std::cout << "# (Z, sigma)\n" << serializeSlq(qs.twisted) << "\n";
                if (which != "z")
                    std::cout << "# (Z', sigma')\n" << serializeSlq(qs.straight) << "\n";
            }
            return kExitOk;
        }
        if (cmdFromClannish->parsed()) {
            SlqPresentation p = parseSlq(readFile(file));
            BasicPresentation b = buildQb(p);
            MqPresentation out;
            out.q = b.q;
            out.amb = b.amb;
            out.ideal = inducedIdeal(p, b);
            std::cout << (opt.json() ? mqToJson(out) : serializeMq(out)) << "\n";
            return kExitOk;
        }
        if (cmdRoundtrip->parsed()) {
            auto run = [&](const MqPresentation& p, const std::string& label) {
                RoundtripReport report = roundtripCheck(p.q, *p.amb, p.ideal);
                if (opt.json()) {
                    nlohmann::json j = {{"input", label},
                                        {"pass", report.pass},
                                        {"failures", report.failures},
                                        {"notes", report.notes}};
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << label << ": " << (report.pass ? "PASS" : "FAIL") << "\n";
                    for (const auto& nline : report.notes) std::cout << "  " << nline << "\n";
                    for (const auto& f : report.failures) std::cout << "  " << f << "\n";
                }
                return report.pass;
            };
            bool ok = true;
            if (randomCount > 0) {
                std::mt19937_64 rng(seed);
                for (int t = 0; t < randomCount; ++t)
                    ok &= run(genSpecialType(rng), "instance " + std::to_string(t));
            } else {
                if (file.empty()) {
                    std::cerr << "roundtrip needs a file or --random N\n";
                    return kExitUsage;
                }
                ok = run(parseMq(readFile(file)), file);
            }
            return ok ? kExitOk : kExitNegative;
        }
        if (cmdVerify->parsed()) return runVerifyTables(table, fixturePath, opt);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
