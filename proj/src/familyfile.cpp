#include "tfam/familyfile.hpp"

#include "tfam/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace tfam {

namespace {

using nlohmann::json;

std::vector<Theory> theory_list(const json& j, const char* what) {
    std::vector<Theory> out;
    if (j.is_null()) return out;
    if (!j.is_array()) throw parse_error(std::string(what) + " must be an array", 0);
    for (const auto& e : j) out.push_back(Theory::parse(e.get<std::string>()));
    return out;
}

SafetyAutomaton automaton_from_json(const json& j) {
    SafetyAutomaton a;
    size_t n = j.at("states").get<size_t>();
    a.next.assign(n, {-1, -1});
    a.initial = j.at("initial").get<int>();
    if (n == 0) {
        if (a.initial != -1) throw parse_error("an automaton with no states has initial -1", 0);
        return a;
    }
    if (a.initial < 0 || static_cast<size_t>(a.initial) >= n)
        throw parse_error("initial state out of range", 0);
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 3)
            throw parse_error("each edge must be [src, bit, dst]", 0);
        int src = e[0].get<int>();
        int bit = e[1].get<int>();
        int dst = e[2].get<int>();
        if (src < 0 || static_cast<size_t>(src) >= n || dst < 0 ||
            static_cast<size_t>(dst) >= n || (bit != 0 && bit != 1))
            throw parse_error("edge out of range", 0);
        a.next[static_cast<size_t>(src)][static_cast<size_t>(bit)] = dst;
    }
    return trim(a); // normalize: loaded carriers are kept trim
}

// Renders the automaton fields with one edge triple per line; dump(2) would
// spread every [src, bit, dst] over five lines. Values are digits and bare
// strings of ()01, so no JSON escaping is ever needed.
std::string automaton_json_text(const SafetyAutomaton& a, const std::string& ind) {
    std::string s;
    s += ind + "\"states\": " + std::to_string(a.size()) + ",\n";
    s += ind + "\"initial\": " + std::to_string(a.initial) + ",\n";
    s += ind + "\"edges\": [";
    bool first = true;
    for (size_t q = 0; q < a.size(); ++q)
        for (int b = 0; b < 2; ++b) {
            int t = a.next[q][static_cast<size_t>(b)];
            if (t < 0) continue;
            s += first ? "\n" : ",\n";
            s += ind + "  [" + std::to_string(q) + ", " + std::to_string(b) + ", " +
                 std::to_string(t) + "]";
            first = false;
        }
    s += first ? "]" : "\n" + ind + "]";
    return s;
}

FamilyExpr expr_from_json(const json& j) {
    std::string op = j.at("op").get<std::string>();
    if (op == "point")
        return FamilyExpr::point(Theory::parse(j.at("theory").get<std::string>()));
    if (op == "union") {
        std::vector<FamilyExpr::Branch> branches;
        for (const auto& b : j.at("branches")) {
            if (!b.is_array() || b.size() != 2)
                throw parse_error("each union branch must be [prefix, expr]", 0);
            branches.push_back({parse_word(b[0].get<std::string>()), expr_from_json(b[1])});
        }
        return FamilyExpr::prefixed_union(std::move(branches));
    }
    if (op == "stack")
        return FamilyExpr::limit_stack(expr_from_json(j.at("body")),
                                       static_cast<uint8_t>(j.value("bit", 1)));
    if (op == "omega")
        return FamilyExpr::omega_stack(OrdinalCnf::parse(j.at("limit").get<std::string>()),
                                       static_cast<uint8_t>(j.value("bit", 1)));
    throw parse_error("unknown expr op: " + op, 0);
}

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what(), 0);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write file: " + path);
    out << text;
}

} // namespace

Family parse_family_json(const std::string& text) {
    json j = parse_document(text);
    try {
        std::string kind = j.at("kind").get<std::string>();
        std::vector<Theory> exclude = theory_list(j.value("exclude", json()), "exclude");
        if (kind == "explicit") {
            std::vector<Theory> pts = theory_list(j.at("points"), "points");
            if (!exclude.empty()) {
                std::vector<Theory> kept;
                for (auto& p : pts)
                    if (std::find(exclude.begin(), exclude.end(), p) == exclude.end())
                        kept.push_back(std::move(p));
                pts = std::move(kept);
            }
            return Family::explicit_set(std::move(pts));
        }
        if (kind == "automaton")
            return Family::regular(automaton_from_json(j), std::move(exclude));
        if (kind == "expr")
            return Family::regular(expr_from_json(j.at("expr")).compile(), std::move(exclude));
        throw parse_error("unknown family kind: " + kind, 0);
    } catch (const json::exception& e) {
        throw parse_error(std::string("malformed family document: ") + e.what(), 0);
    }
}

std::string family_json(const Family& f) {
    if (f.is_explicit()) {
        json j;
        j["kind"] = "explicit";
        json pts = json::array();
        for (const auto& t : f.points()) pts.push_back(t.str());
        j["points"] = pts;
        return j.dump(2) + "\n";
    }
    std::string s = "{\n  \"kind\": \"automaton\",\n";
    s += automaton_json_text(f.carrier(), "  ") + ",\n";
    s += "  \"exclude\": [";
    bool first = true;
    for (const auto& t : f.excluded()) {
        s += first ? "" : ", ";
        s += "\"" + t.str() + "\"";
        first = false;
    }
    s += "]\n}\n";
    return s;
}

Family load_family(const std::string& path) { return parse_family_json(read_file(path)); }

void save_family(const Family& f, const std::string& path) { write_file(path, family_json(f)); }

FamilyExpr parse_expr_json(const std::string& text) {
    json j = parse_document(text);
    try {
        return expr_from_json(j);
    } catch (const json::exception& e) {
        throw parse_error(std::string("malformed expr document: ") + e.what(), 0);
    }
}

namespace {

json expr_to_json(const FamilyExpr& e) {
    json j;
    switch (e.kind()) {
    case FamilyExpr::Kind::Point:
        j["op"] = "point";
        j["theory"] = e.point_value().str();
        break;
    case FamilyExpr::Kind::PrefixedUnion: {
        j["op"] = "union";
        json bs = json::array();
        for (const auto& b : e.branches())
            bs.push_back(json::array({word_str(b.prefix), expr_to_json(b.child)}));
        j["branches"] = bs;
        break;
    }
    case FamilyExpr::Kind::LimitStack:
        j["op"] = "stack";
        j["body"] = expr_to_json(e.body());
        j["bit"] = static_cast<int>(e.branch_bit());
        break;
    case FamilyExpr::Kind::OmegaStack:
        j["op"] = "omega";
        j["limit"] = e.limit().str();
        j["bit"] = static_cast<int>(e.branch_bit());
        break;
    }
    return j;
}

} // namespace

std::string expr_json(const FamilyExpr& e) { return expr_to_json(e).dump(2) + "\n"; }

Scheme parse_scheme_json(const std::string& text) {
    json j = parse_document(text);
    try {
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "finite") {
            std::vector<Sentence> ss;
            for (const auto& e : j.at("sentences"))
                ss.push_back(parse_sentence(e.get<std::string>()));
            return Scheme::finite_set(std::move(ss));
        }
        if (kind == "diagram")
            return Scheme::diagram(Theory::parse(j.at("theory").get<std::string>()));
        if (kind == "target")
            return Scheme::closed_target(automaton_from_json(j.at("automaton")));
        throw parse_error("unknown scheme kind: " + kind, 0);
    } catch (const json::exception& e) {
        throw parse_error(std::string("malformed scheme document: ") + e.what(), 0);
    }
}

std::string scheme_json(const Scheme& s) {
    if (s.kind() == Scheme::Kind::ClosedTarget) {
        std::string out = "{\n  \"kind\": \"target\",\n  \"automaton\": {\n";
        out += automaton_json_text(s.target(), "    ");
        out += "\n  }\n}\n";
        return out;
    }
    json j;
    switch (s.kind()) {
    case Scheme::Kind::FiniteSet: {
        j["kind"] = "finite";
        json ss = json::array();
        for (const auto& e : s.sentences()) ss.push_back(e.str());
        j["sentences"] = ss;
        break;
    }
    case Scheme::Kind::Diagram:
        j["kind"] = "diagram";
        j["theory"] = s.theory().str();
        break;
    default:
        break;
    }
    return j.dump(2) + "\n";
}

Scheme load_scheme(const std::string& path) { return parse_scheme_json(read_file(path)); }

} // namespace tfam
