#include "twistkit/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "twistkit/constructions.hpp"
#include "twistkit/pi1.hpp"
#include "twistkit/verify.hpp"

namespace twistkit::cli {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

const json& field(const json& j, const std::string& key, const std::string& path)
{
    if (!j.is_object()) throw InputError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(path + "." + key, "missing");
    return *it;
}

int as_int(const json& j, const std::string& path)
{
    if (!j.is_number_integer()) throw InputError(path, "expected an integer");
    return j.get<int>();
}

Letter parse_letter(const json& j, const std::string& path)
{
    if (!j.is_object()) throw InputError(path, "expected an object");
    const json& b = field(j, "base", path);
    if (!b.is_string()) throw InputError(path + ".base", "expected a curve name");
    auto c = parse_curve(b.get<std::string>());
    if (!c) throw InputError(path + ".base", "unknown curve '" + b.get<std::string>() + "'");
    int sign = 1;
    if (j.contains("sign")) {
        sign = as_int(j["sign"], path + ".sign");
        if (sign != 1 && sign != -1) throw InputError(path + ".sign", "must be 1 or -1");
    }
    return {*c, sign};
}

ojson big(const BigInt& x)
{
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

ojson group_json(const AbelianGroup& g)
{
    ojson t = ojson::array();
    for (const BigInt& d : g.torsion) t.push_back(big(d));
    return {{"rank", g.rank}, {"torsion", t}};
}

const char* verdict_text(const Verdict& v) { return v.outcome == Outcome::Equal ? "true" : v.outcome == Outcome::NotEqual ? "false" : "unknown"; }

int exit_for(const Verdict& v)
{
    if (v.outcome == Outcome::NotEqual) return verified_false;
    if (v.outcome == Outcome::Unknown) return resource_cap;
    return ok;
}

void put_verdict(ojson& r, const Verdict& v)
{
    r["verdict"] = verdict_text(v);
    r["engine"] = v.engine;
    r["exact"] = v.exact;
}

// Worst of several verdicts: false beats unknown beats true.
Verdict combine(const std::vector<Verdict>& vs)
{
    Verdict out{Outcome::Equal, "", true};
    for (const Verdict& v : vs) {
        if (v.outcome == Outcome::NotEqual) return v;
        if (v.outcome == Outcome::Unknown) out = v;
        else if (out.outcome == Outcome::Equal) {
            out.exact = out.exact && v.exact;
            if (out.engine.empty()) out.engine = v.engine;
            else if (out.engine != v.engine) out.engine = "mixed";
        }
    }
    return out;
}

Base parse_base(const json& req)
{
    if (!req.contains("base")) return Base::Disk;
    const json& b = req["base"];
    if (b == "disk") return Base::Disk;
    if (b == "sphere") return Base::Sphere;
    throw InputError("base", "expected \"disk\" or \"sphere\"");
}

Fibration parse_fibration(const json& req, const std::string& key, Base base)
{
    SurfaceSig sig = parse_surface(field(req, "surface", "request"));
    Fibration f{sig, base, parse_word(field(req, key, "request"), sig, key)};
    try {
        f.validate();
    } catch (const std::invalid_argument& e) {
        throw InputError(key, e.what());
    }
    return f;
}

void put_fibration(ojson& r, const Fibration& f)
{
    r["chi"] = big(euler_characteristic(f));
    r["h1"] = group_json(first_homology(f));
    r["word_out"] = word_to_json(f.word);
}

struct Settings {
    VerifyOptions verify;
    int n = 0;
};

struct Outcome2 {
    ojson report;
    int code = ok;
};

Outcome2 cmd_verify(const json& req, const Settings& s)
{
    SurfaceSig sig = parse_surface(field(req, "surface", "request"));
    TwistWord lhs = parse_word(field(req, "word", "request"), sig, "word");
    TwistWord rhs = req.contains("equals") ? parse_word(req["equals"], sig, "equals") : TwistWord(sig);
    if (s.verify.engine == EngineChoice::Pi1 && sig.boundary != 1)
        throw InputError("surface.boundary", "engine pi1 needs boundary 1");
    if (s.verify.engine == EngineChoice::Closed && sig.boundary != 0)
        throw InputError("surface.boundary", "engine closed needs boundary 0");
    Verdict v = verify_equal(lhs, rhs, s.verify);
    ojson r;
    put_verdict(r, v);
    return {r, exit_for(v)};
}

Outcome2 cmd_positivize(const json& req, const Settings& s)
{
    SurfaceSig sig = parse_surface(field(req, "surface", "request"));
    if (!sig.closed()) throw InputError("surface.boundary", "positivize needs a closed surface");
    TwistWord w = parse_word(field(req, "word", "request"), sig, "word");
    for (std::size_t i = 0; i < w.size(); ++i)
        if (!is_nonseparating(w.letters[i].base))
            throw InputError("word[" + std::to_string(i) + "].base", "separating curves cannot be positivized");
    RewriteReport rep = positivize(w, s.verify);
    ojson r;
    put_verdict(r, rep.verified);
    r["word_out"] = word_to_json(rep.output);
    r["steps"] = rep.steps;
    return {r, exit_for(rep.verified)};
}

Outcome2 cmd_double(const json& req, const Settings& s)
{
    Fibration palf = parse_fibration(req, "word", Base::Disk);
    if (palf.fiber.boundary != 1) throw InputError("surface.boundary", "double needs boundary 1");
    if (!is_allowable(palf)) throw InputError("word", "fibration is not allowable");
    Doubled d = double_palf(palf, s.verify);
    ojson r;
    put_verdict(r, d.report.verified);
    put_fibration(r, d.fibration);
    r["steps"] = d.report.steps;
    return {r, exit_for(d.report.verified)};
}

Outcome2 cmd_invariants(const json& req, const Settings&)
{
    Fibration f = parse_fibration(req, "word", parse_base(req));
    ojson r;
    r["chi"] = big(euler_characteristic(f));
    r["h1"] = group_json(first_homology(f));
    r["allowable"] = is_allowable(f);
    return {r, ok};
}

Outcome2 cmd_family(const Settings& s)
{
    if (s.n < 2) throw InputError("n", "family needs --n >= 2");
    FamilyReport fam = filling_family(s.n, s.verify);
    ojson r;
    Verdict all = combine(fam.equal_verdicts);
    put_verdict(r, all);
    r["n"] = fam.n;
    ojson chis = ojson::array(), h1s = ojson::array(), steps = ojson::array(), lengths = ojson::array();
    for (const BigInt& c : fam.chis) chis.push_back(big(c));
    for (const AbelianGroup& g : fam.h1s) h1s.push_back(group_json(g));
    for (const Fibration& f : fam.fillings) lengths.push_back(f.word.size());
    for (std::size_t i = 0; i < fam.equal_verdicts.size(); ++i) {
        const Verdict& v = fam.equal_verdicts[i];
        steps.push_back({{"filling", i + 1}, {"verdict", verdict_text(v)}, {"engine", v.engine}, {"exact", v.exact}});
    }
    r["chis"] = chis;
    r["h1s"] = h1s;
    r["lengths"] = lengths;
    r["allowable"] = std::all_of(fam.allowable.begin(), fam.allowable.end(), [](bool b) { return b; });
    r["verdicts"] = steps;
    r["word_out"] = word_to_json(fam.fillings.back().word);
    return {r, exit_for(all)};
}

Outcome2 cmd_trefoil()
{
    TrefoilCompletions t = trefoil_completions();
    ojson r;
    put_verdict(r, t.equal);
    ojson big_r, small_r;
    put_fibration(big_r, t.big);
    put_fibration(small_r, t.small);
    r["big"] = big_r;
    r["small"] = small_r;
    return {r, exit_for(t.equal)};
}

Outcome2 cmd_branched(const json& req)
{
    SurfaceSig sig = parse_surface(field(req, "surface", "request"));
    if (sig.boundary != 1) throw InputError("surface.boundary", "branched-double needs boundary 1");
    TwistWord phi = parse_word(field(req, "word", "request"), sig, "word");
    for (std::size_t i = 0; i < phi.size(); ++i)
        if (phi.letters[i].base.kind == CurveKind::D || phi.letters[i].base.kind == CurveKind::E)
            throw InputError("word[" + std::to_string(i) + "].base", "only chain curves and delta are supported");
    BranchedDouble bd = branched_double_cover(sig, phi);
    SympMatrix m = homology_action(bd.monodromy);
    bool anti = bd.swap * m * bd.swap.inverse() == m.inverse();
    ojson r;
    r["verdict"] = anti ? "true" : "false";
    r["engine"] = engine_name::homology_necessary;
    r["surface"] = {{"genus", bd.fiber.genus}, {"boundary", bd.fiber.boundary}};
    r["h1"] = group_json(mapping_torus_homology(bd.monodromy));
    r["word_out"] = word_to_json(bd.monodromy);
    return {r, anti ? ok : verified_false};
}

Outcome2 cmd_fibersum(const json& req)
{
    Fibration f1 = parse_fibration(req, "first", Base::Sphere);
    Fibration f2 = parse_fibration(req, "second", Base::Sphere);
    ojson r;
    put_fibration(r, fiber_sum(f1, f2));
    return {r, ok};
}

Outcome2 cmd_gn(const Settings& s)
{
    if (s.n < 1) throw InputError("n", "gn needs --n >= 1");
    Fibration f = gn_word(s.n);
    ojson r;
    put_fibration(r, f);
    return {r, ok};
}

Outcome2 cmd_selftest(const Settings& s)
{
    std::vector<Verdict> vs;
    ojson checks = ojson::array();
    for (const NamedRelation& rel : standard_relations()) {
        Verdict v = verify_equal(rel.lhs, rel.rhs, {EngineChoice::Auto, s.verify.cap});
        checks.push_back({{"name", rel.name}, {"verdict", verdict_text(v)}, {"engine", v.engine}});
        vs.push_back(v);
    }
    bool chain = chain_relation_selftest();
    checks.push_back({{"name", "chain relation self test"}, {"verdict", chain ? "true" : "false"}});
    vs.push_back({chain ? Outcome::Equal : Outcome::NotEqual, engine_name::pi1_boundary, true});
    Verdict all = combine(vs);
    ojson r;
    put_verdict(r, all);
    r["checks"] = checks;
    return {r, exit_for(all)};
}

EngineChoice parse_engine(const std::string& s)
{
    if (s == "auto") return EngineChoice::Auto;
    if (s == "homology") return EngineChoice::Homology;
    if (s == "pi1") return EngineChoice::Pi1;
    return EngineChoice::Closed;
}

}  // namespace

SurfaceSig parse_surface(const json& j, const std::string& path)
{
    SurfaceSig sig{as_int(field(j, "genus", path), path + ".genus"), as_int(field(j, "boundary", path), path + ".boundary")};
    if (sig.genus < 1) throw InputError(path + ".genus", "must be at least 1");
    if (sig.boundary != 0 && sig.boundary != 1) throw InputError(path + ".boundary", "must be 0 or 1");
    return sig;
}

TwistWord parse_word(const json& j, SurfaceSig sig, const std::string& path)
{
    if (!j.is_array()) throw InputError(path, "expected an array of twists");
    TwistWord w(sig);
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        Letter l = parse_letter(j[i], p);
        if (!is_valid(l.base, sig)) throw InputError(p + ".base", curve_name(l.base) + " is not on " + sig.to_string());
        Twist t{l.base, l.sign, {}};
        if (j[i].contains("conj")) {
            const json& cj = j[i]["conj"];
            if (!cj.is_array()) throw InputError(p + ".conj", "expected an array");
            for (std::size_t k = 0; k < cj.size(); ++k) {
                const std::string q = p + ".conj[" + std::to_string(k) + "]";
                if (cj[k].is_object() && cj[k].contains("conj")) throw InputError(q + ".conj", "nested conjugators are not allowed");
                Letter c = parse_letter(cj[k], q);
                if (!is_valid(c.base, sig)) throw InputError(q + ".base", curve_name(c.base) + " is not on " + sig.to_string());
                t.conj.push_back(c);
            }
            t.conj = reduce(t.conj);
        }
        w.letters.push_back(std::move(t));
    }
    return w;
}

ojson word_to_json(const TwistWord& w)
{
    ojson out = ojson::array();
    for (const Twist& t : w.letters) {
        ojson o{{"base", curve_name(t.base)}, {"sign", t.sign}};
        if (!t.conj.empty()) {
            ojson c = ojson::array();
            for (const Letter& l : t.conj) c.push_back({{"base", curve_name(l.base)}, {"sign", l.sign}});
            o["conj"] = c;
        }
        out.push_back(std::move(o));
    }
    return out;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"twist word toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    std::size_t cap = default_word_cap;
    std::string engine = "auto", out_path, in_path;
    bool timing = false;
    bool as_json = true;
    int n = 0;
    app.add_option("--cap", cap, "word-length cap for the pi1 engines")->check(CLI::PositiveNumber);
    app.add_option("--engine", engine, "auto|homology|pi1|closed")->check(CLI::IsMember({"auto", "homology", "pi1", "closed"}));
    app.add_option("--out", out_path, "write the report to a file");
    app.add_option("--input", in_path, "request file (default: standard input)");
    app.add_flag("--json", as_json, "JSON report (default)");
    app.add_flag("--timing", timing, "add runtime_ms to the report");

    const std::vector<std::pair<std::string, std::string>> commands{
        {"verify", "equality of two twist words"},
        {"positivize", "replace negative twists by positive ones"},
        {"double", "close a PALF over the sphere"},
        {"invariants", "Euler characteristic, H_1 and allowability"},
        {"family", "fillings X_0..X_n"},
        {"trefoil", "the two trefoil completions"},
        {"branched-double", "monodromy phi # phi^-1"},
        {"fibersum", "fiber sum of two sphere fibrations"},
        {"gn", "the (chain)^{4n+2} fibration"},
        {"selftest", "relator corpus and chain relation"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        if (name == "family" || name == "gn") sub->add_option("--n", n, "genus")->required();
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return input_error;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    Settings s{{parse_engine(engine), cap}, n};
    const bool needs_input = command == "verify" || command == "positivize" || command == "double" ||
                             command == "invariants" || command == "branched-double" || command == "fibersum";
    auto start = std::chrono::steady_clock::now();
    Outcome2 result;
    try {
        json req;
        if (needs_input) {
            try {
                if (in_path.empty()) req = json::parse(in);
                else {
                    std::ifstream f(in_path);
                    if (!f) throw InputError("--input", "cannot open " + in_path);
                    req = json::parse(f);
                }
            } catch (const json::parse_error& e) {
                throw InputError("request", std::string("malformed JSON: ") + e.what());
            }
            if (!req.is_object()) throw InputError("request", "expected an object");
        }
        if (command == "verify") result = cmd_verify(req, s);
        else if (command == "positivize") result = cmd_positivize(req, s);
        else if (command == "double") result = cmd_double(req, s);
        else if (command == "invariants") result = cmd_invariants(req, s);
        else if (command == "family") result = cmd_family(s);
        else if (command == "trefoil") result = cmd_trefoil();
        else if (command == "branched-double") result = cmd_branched(req);
        else if (command == "fibersum") result = cmd_fibersum(req);
        else if (command == "gn") result = cmd_gn(s);
        else result = cmd_selftest(s);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return input_error;
    } catch (const WordGrowthExceeded& e) {
        err << "resource cap: " << e.what() << "\n";
        return resource_cap;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return input_error;
    }

    ojson report;
    report["command"] = command;
    for (auto& [k, v] : result.report.items()) report[k] = v;
    if (timing)
        report["runtime_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    const std::string text = report.dump(2) + "\n";
    if (out_path.empty()) out << text;
    else {
        std::ofstream f(out_path);
        if (!f) {
            err << "input error: --out: cannot write " << out_path << "\n";
            return input_error;
        }
        f << text;
    }
    return result.code;
}

}  // namespace twistkit::cli
