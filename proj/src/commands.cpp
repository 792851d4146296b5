#include "commands.hpp"

#include <algorithm>
#include <set>

namespace arthur {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorKind::invalid_input, msg); }

void require_keys(const json& obj, const std::string& where,
                  const std::set<std::string>& allowed) {
    if (!obj.is_object()) fail(where + " must be an object");
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key())) fail(where + ": unknown field \"" + it.key() + "\"");
}

Sign sign_from_json(const json& j, const std::string& where) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "+") return Sign::plus();
        if (s == "-") return Sign::minus();
    }
    fail(where + " must be \"+\" or \"-\"");
}

int int_from_json(const json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where + " must be an integer");
    return j.get<int>();
}

} // namespace

HalfInt parse_half(const std::string& text) {
    size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return HalfInt(std::stoi(text));
        if (text.substr(slash + 1) != "2") fail("half-integer denominators must be 2: " + text);
        return HalfInt::from_twice(std::stoi(text.substr(0, slash)));
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail("cannot parse half-integer \"" + text + "\"");
    }
}

json half_json(HalfInt h) {
    if (h.is_integral()) return h.as_int();
    return h.str();
}

HalfInt half_from_json(const json& j) {
    if (j.is_number_integer()) return HalfInt(j.get<int>());
    if (j.is_string()) return parse_half(j.get<std::string>());
    fail("half-integers must be integers or strings like \"3/2\"");
}

Document parse_document(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::exception& e) {
        fail(std::string("malformed JSON: ") + e.what());
    }
    require_keys(root, "document", {"version", "group", "cuspidals", "blocks"});
    if (!root.contains("version") || !root["version"].is_number_integer() ||
        root["version"].get<int>() != 1)
        fail("document requires \"version\": 1");
    if (!root.contains("group") || !root.contains("cuspidals") || !root.contains("blocks"))
        fail("document requires \"group\", \"cuspidals\" and \"blocks\"");

    Document doc;
    const json& group = root["group"];
    require_keys(group, "group", {"type", "hasse"});
    if (!group.contains("type") || !group["type"].is_string()) fail("group.type must be a string");
    doc.group_type = group["type"].get<std::string>();
    bool orthogonal_group =
        doc.group_type == "orthogonal_odd" || doc.group_type == "orthogonal_even";
    if (doc.group_type != "symplectic" && !orthogonal_group)
        fail("group.type must be symplectic, orthogonal_odd or orthogonal_even");
    if (orthogonal_group) {
        if (!group.contains("hasse")) fail("orthogonal groups require group.hasse");
        doc.hasse = int_from_json(group["hasse"], "group.hasse");
        if (doc.hasse != 1 && doc.hasse != -1) fail("group.hasse must be 1 or -1");
    } else if (group.contains("hasse")) {
        fail("group.hasse is only meaningful for orthogonal groups");
    }

    if (!root["cuspidals"].is_array()) fail("cuspidals must be an array");
    std::vector<CuspidalLabel> cuspidals;
    for (const json& c : root["cuspidals"]) {
        require_keys(c, "cuspidal", {"name", "d", "self_dual", "eta"});
        if (!c.contains("name") || !c["name"].is_string()) fail("cuspidal.name must be a string");
        std::string name = c["name"].get<std::string>();
        for (const auto& prev : cuspidals)
            if (prev.name == name) fail("duplicate cuspidal \"" + name + "\"");
        int d = c.contains("d") ? int_from_json(c["d"], "cuspidal.d") : 1;
        bool self_dual = true;
        if (c.contains("self_dual")) {
            if (!c["self_dual"].is_boolean()) fail("cuspidal.self_dual must be a boolean");
            self_dual = c["self_dual"].get<bool>();
        }
        std::optional<Sign> eta;
        if (c.contains("eta")) eta = sign_from_json(c["eta"], "cuspidal.eta");
        if (self_dual && !eta) fail("self-dual cuspidal \"" + name + "\" requires eta");
        if (!self_dual && eta) fail("cuspidal \"" + name + "\" is not self-dual, drop eta");
        cuspidals.emplace_back(name, d, self_dual, eta);
    }
    doc.cuspidals = cuspidals;

    if (!root["blocks"].is_array()) fail("blocks must be an array");
    std::vector<JordanBlock> blocks;
    for (const json& b : root["blocks"]) {
        require_keys(b, "block", {"rho", "a", "b", "multiplicity"});
        if (!b.contains("rho") || !b["rho"].is_string()) fail("block.rho must be a string");
        std::string rho_name = b["rho"].get<std::string>();
        auto it = std::find_if(cuspidals.begin(), cuspidals.end(),
                               [&](const CuspidalLabel& c) { return c.name == rho_name; });
        if (it == cuspidals.end())
            fail("block references undeclared cuspidal \"" + rho_name + "\"");
        if (!b.contains("a") || !b.contains("b")) fail("block requires a and b");
        int a = int_from_json(b["a"], "block.a");
        int bb = int_from_json(b["b"], "block.b");
        if (a < 1 || bb < 1) fail("block.a and block.b must be at least 1");
        int mult = b.contains("multiplicity") ? int_from_json(b["multiplicity"], "multiplicity") : 1;
        if (mult < 1) fail("multiplicity must be at least 1");
        auto [A, B, zeta] = triple_to_quad(a, bb);
        for (int k = 0; k < mult; ++k) blocks.emplace_back(*it, A, B, zeta);
    }

    LGroupType lgroup =
        doc.group_type == "orthogonal_odd" ? LGroupType::symplectic : LGroupType::orthogonal;
    Sign eta_G = (doc.group_type == "symplectic" || doc.hasse == 1) ? Sign::plus() : Sign::minus();
    doc.psi = ArthurParam(std::move(blocks), lgroup, eta_G);
    return doc;
}

EpsChar parse_eps(const ArthurParam& psi, const std::string& spec) {
    std::vector<BlockClass> classes = psi.good_classes();
    if (spec.size() != classes.size())
        throw Error(ErrorKind::invalid_character,
                    "eps needs one sign per good-parity class (" +
                        std::to_string(classes.size()) + " expected, got " +
                        std::to_string(spec.size()) + ")");
    EpsChar eps;
    for (size_t i = 0; i < classes.size(); ++i) {
        if (spec[i] != '+' && spec[i] != '-')
            throw Error(ErrorKind::invalid_character, "eps characters must be + or -");
        eps.values[classes[i]] = spec[i] == '+' ? Sign::plus() : Sign::minus();
    }
    return eps;
}

namespace {

json class_json(const BlockClass& cls) {
    json j;
    j["rho"] = cls.rho_name;
    j["A"] = half_json(cls.A);
    j["B"] = half_json(cls.B);
    j["zeta"] = cls.zeta.str();
    return j;
}

json symbol_json(const ConstituentSymbol& sym) {
    json blocks = json::array();
    for (size_t i = 0; i < sym.param.blocks().size(); ++i) {
        const JordanBlock& b = sym.param.blocks()[i];
        json j;
        j["rho"] = b.rho.name;
        j["A"] = half_json(b.A);
        j["B"] = half_json(b.B);
        j["zeta"] = b.zeta.str();
        auto [a, bb] = b.triple();
        j["a"] = a;
        j["b"] = bb;
        auto it = sym.levels.assignments.find(i);
        if (it != sym.levels.assignments.end()) {
            j["ell"] = it->second.ell;
            if (it->second.eta) j["eta"] = it->second.eta->str();
        }
        blocks.push_back(std::move(j));
    }
    json out;
    out["blocks"] = std::move(blocks);
    out["certificate"] = zero_flag_name(nonvanishing_certificate(sym));
    return out;
}

ConstituentSymbol select_constituent(const Document& doc, const std::string& eps_spec,
                                     int constituent) {
    EpsChar eps = parse_eps(doc.psi, eps_spec);
    std::vector<ConstituentParam> all = enumerate_constituents(doc.psi, eps);
    if (constituent < 0 || static_cast<size_t>(constituent) >= all.size())
        throw Error(ErrorKind::invalid_parameter,
                    "constituent index out of range (0.." + std::to_string(all.size() - 1) + ")");
    ConstituentSymbol sym;
    sym.param = doc.psi;
    sym.eps = eps;
    sym.levels = all[static_cast<size_t>(constituent)];
    sym.zero_flag = ZeroFlag::unknown;
    return sym;
}

const CuspidalLabel& find_cuspidal(const Document& doc, const std::string& name) {
    for (const auto& c : doc.cuspidals)
        if (c.name == name) return c;
    throw Error(ErrorKind::invalid_input, "unknown cuspidal \"" + name + "\"");
}

json report_json(const CheckReport& report) {
    json items = json::array();
    for (const auto& it : report.items) {
        json j;
        j["name"] = it.name;
        j["params"] = it.params;
        j["pass"] = it.pass;
        if (!it.detail.empty()) j["detail"] = it.detail;
        items.push_back(std::move(j));
    }
    json out;
    out["suite"] = report.suite;
    out["pass"] = report.pass();
    out["items"] = std::move(items);
    return out;
}

} // namespace

json cmd_convert(const Document& doc) {
    json rows = json::array();
    for (const auto& cls : doc.psi.classes()) {
        JordanBlock rep;
        for (const auto& b : doc.psi.blocks())
            if (BlockClass(b) == cls) { rep = b; break; }
        json j = class_json(cls);
        auto [a, b] = rep.triple();
        j["a"] = a;
        j["b"] = b;
        j["multiplicity"] = doc.psi.multiplicity(cls);
        j["parity"] = has_parity(rep, doc.psi.lgroup()) ? "good" : "bad";
        rows.push_back(std::move(j));
    }
    json out;
    out["group"] = doc.group_type;
    out["lgroup"] = lgroup_name(doc.psi.lgroup());
    out["eta_G"] = doc.psi.eta_G().str();
    out["dimension"] = doc.psi.dimension();
    out["blocks"] = std::move(rows);
    return out;
}

json cmd_packet(const Document& doc, const std::string& eps_spec) {
    EpsChar eps = parse_eps(doc.psi, eps_spec);
    std::vector<ConstituentParam> all = enumerate_constituents(doc.psi, eps);
    json eps_rows = json::array();
    for (const auto& cls : doc.psi.good_classes()) {
        json j = class_json(cls);
        j["value"] = eps.at(cls).str();
        eps_rows.push_back(std::move(j));
    }
    json constituents = json::array();
    for (size_t i = 0; i < all.size(); ++i) {
        ConstituentSymbol sym{doc.psi, eps, all[i], ZeroFlag::unknown};
        json j = symbol_json(sym);
        j["index"] = i;
        constituents.push_back(std::move(j));
    }
    json out;
    out["eps"] = std::move(eps_rows);
    out["count"] = all.size();
    out["constituents"] = std::move(constituents);
    return out;
}

json cmd_induce(const Document& doc, const std::string& eps_spec, int constituent,
                const std::string& rho_name, int a, int b, int copies, int margin) {
    ConstituentSymbol base = select_constituent(doc, eps_spec, constituent);
    const CuspidalLabel& rho = find_cuspidal(doc, rho_name);
    auto [A, B, zeta] = triple_to_quad(a, b);
    JordanBlock block(rho, A, B, zeta);

    json out;
    json factor;
    factor["rho"] = rho.name;
    factor["a"] = a;
    factor["b"] = b;
    factor["copies"] = copies;
    out["factors"] = json::array({factor});
    out["base"] = symbol_json(base);

    if (has_parity(block, doc.psi.lgroup())) {
        InducedDecomposition dec = decompose_multi(block, copies, base, margin);
        out["route"] = "good-parity";
        out["length_bound"] = dec.length_bound;
        json cs = json::array();
        for (size_t i = 0; i < dec.constituents.size(); ++i) {
            json j = symbol_json(dec.constituents[i]);
            j["index"] = i;
            cs.push_back(std::move(j));
        }
        out["constituents"] = std::move(cs);
    } else {
        std::vector<JordanBlock> E(static_cast<size_t>(copies), block);
        ConstituentSymbol sym = bad_parity_irreducible(E, base);
        out["route"] = "bad-parity";
        out["length_bound"] = 1;
        json j = symbol_json(sym);
        j["index"] = 0;
        out["constituents"] = json::array({std::move(j)});
    }
    return out;
}

json cmd_jac(const Document& doc, const std::string& eps_spec, int constituent,
             const std::string& rho_name, const std::string& cells_spec) {
    ConstituentSymbol sym = select_constituent(doc, eps_spec, constituent);
    const CuspidalLabel& rho = find_cuspidal(doc, rho_name);

    std::vector<HalfInt> cells;
    std::string cur;
    for (char ch : cells_spec + ",") {
        if (ch == ',') {
            if (!cur.empty()) cells.push_back(parse_half(cur));
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (cells.empty()) throw Error(ErrorKind::invalid_input, "no cells given");

    JacSymbolResult res = jac_symbol(cells, rho, sym);
    json out;
    switch (res.kind) {
        case JacSymbolResult::Kind::symbol:
            out["result"] = "symbol";
            out["rule"] = res.rule;
            out["symbol"] = symbol_json(*res.value);
            break;
        case JacSymbolResult::Kind::zero:
            out["result"] = "zero";
            out["rule"] = res.rule;
            break;
        case JacSymbolResult::Kind::unknown:
            out["result"] = "unknown";
            break;
    }
    return out;
}

json cmd_check(const std::string& suite, int max_gap, int max_size) {
    CheckReport merged;
    if (suite == "counts") {
        merged = check_counts(max_gap);
    } else if (suite == "signs") {
        merged = tabulate_sign_agreement(max_size);
    } else if (suite == "ladder-jac") {
        merged.suite = "ladder-jac";
        for (int twiceB : {0, 1, 2, 3, 4}) {
            for (int gap = 0; gap <= max_gap; ++gap) {
                for (int T = 0; T <= max_size; ++T) {
                    for (Sign zeta : {Sign::plus(), Sign::minus()}) {
                        HalfInt B = HalfInt::from_twice(twiceB);
                        CheckReport r = check_ladder_jac_support(B + HalfInt(gap), B, T, zeta);
                        merged.items.insert(merged.items.end(), r.items.begin(), r.items.end());
                    }
                }
            }
        }
    } else if (suite == "translation") {
        merged.suite = "translation";
        for (int twiceB : {0, 1, 2, 3}) {
            for (int gap = 0; gap <= max_gap; ++gap) {
                for (int T = 1; T <= max_size; ++T) {
                    for (Sign zeta : {Sign::plus(), Sign::minus()}) {
                        HalfInt B = HalfInt::from_twice(twiceB);
                        CheckReport r = check_translation_identity(B + HalfInt(gap), B, T, zeta);
                        merged.items.insert(merged.items.end(), r.items.begin(), r.items.end());
                    }
                }
            }
        }
    } else {
        throw Error(ErrorKind::invalid_input, "unknown check suite \"" + suite + "\"");
    }
    return report_json(merged);
}

json error_json(ErrorKind kind, const std::string& message) {
    json out;
    out["error"] = {{"kind", error_kind_name(kind)}, {"message", message}};
    return out;
}

} // namespace arthur
