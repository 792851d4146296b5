#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "arthurcomb.h"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        std::exit(1);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string take(char* s) {
    std::string out = s ? s : "";
    ac_free_string(s);
    return out;
}

std::string cell_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    return v.dump();
}

void print_table(const json& rows, const std::vector<std::string>& cols) {
    std::vector<size_t> width;
    for (const auto& c : cols) width.push_back(c.size());
    std::vector<std::vector<std::string>> grid;
    for (const auto& row : rows) {
        std::vector<std::string> line;
        for (size_t i = 0; i < cols.size(); ++i) {
            std::string v = row.contains(cols[i]) ? cell_text(row[cols[i]]) : "";
            width[i] = std::max(width[i], v.size());
            line.push_back(std::move(v));
        }
        grid.push_back(std::move(line));
    }
    auto emit_row = [&](const std::vector<std::string>& line) {
        for (size_t i = 0; i < line.size(); ++i)
            std::cout << (i ? "  " : "") << line[i]
                      << std::string(width[i] - line[i].size(), ' ');
        std::cout << "\n";
    };
    emit_row(cols);
    for (const auto& line : grid) emit_row(line);
}

std::string levels_text(const json& blocks) {
    std::string out;
    for (const auto& b : blocks) {
        if (!b.contains("ell")) continue;
        if (!out.empty()) out += " ";
        out += "(" + cell_text(b["A"]) + "," + cell_text(b["B"]) + "," +
               b["zeta"].get<std::string>() + "):" + cell_text(b["ell"]);
        out += b.contains("eta") ? "," + b["eta"].get<std::string>() : ",.";
    }
    return out.empty() ? "-" : out;
}

void print_text(const std::string& verb, const json& doc) {
    if (doc.contains("error")) {
        std::cout << "error (" << doc["error"]["kind"].get<std::string>()
                  << "): " << doc["error"]["message"].get<std::string>() << "\n";
        return;
    }
    if (verb == "convert") {
        std::cout << "group " << doc["group"].get<std::string>() << "  dual "
                  << doc["lgroup"].get<std::string>() << "  eta_G "
                  << doc["eta_G"].get<std::string>() << "  dimension "
                  << cell_text(doc["dimension"]) << "\n";
        print_table(doc["blocks"], {"rho", "a", "b", "A", "B", "zeta", "multiplicity", "parity"});
    } else if (verb == "packet") {
        std::string eps;
        for (const auto& e : doc["eps"]) eps += e["value"].get<std::string>();
        std::cout << "eps " << (eps.empty() ? "(trivial)" : eps) << "  constituents "
                  << cell_text(doc["count"]) << "\n";
        json rows = json::array();
        for (const auto& c : doc["constituents"])
            rows.push_back({{"index", c["index"]},
                            {"levels", levels_text(c["blocks"])},
                            {"certificate", c["certificate"]}});
        print_table(rows, {"index", "levels", "certificate"});
    } else if (verb == "induce") {
        std::cout << "route " << doc["route"].get<std::string>() << "  length bound "
                  << cell_text(doc["length_bound"]) << "\n";
        json rows = json::array();
        for (const auto& c : doc["constituents"])
            rows.push_back({{"index", c["index"]},
                            {"levels", levels_text(c["blocks"])},
                            {"certificate", c["certificate"]}});
        print_table(rows, {"index", "levels", "certificate"});
    } else if (verb == "jac") {
        std::cout << "result " << doc["result"].get<std::string>();
        if (doc.contains("rule")) std::cout << "  rule " << doc["rule"].get<std::string>();
        std::cout << "\n";
        if (doc.contains("symbol"))
            print_table(doc["symbol"]["blocks"], {"rho", "A", "B", "zeta", "ell", "eta"});
    } else if (verb == "check") {
        std::cout << "suite " << doc["suite"].get<std::string>() << "  "
                  << (doc["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
        for (const auto& it : doc["items"]) {
            if (it["pass"].get<bool>()) continue;
            std::cout << "  FAIL " << it["name"].get<std::string>() << " "
                      << it["params"].get<std::string>();
            if (it.contains("detail")) std::cout << "  " << it["detail"].get<std::string>();
            std::cout << "\n";
        }
    }
}

int finish(const std::string& verb, int rc, const std::string& payload, bool text) {
    if (payload.empty()) return rc;
    if (!text) {
        std::cout << payload;
        if (rc != 0 && rc != 2) std::cout.flush();
    } else {
        print_text(verb, json::parse(payload));
    }
    return rc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of Arthur packets for p-adic classical groups"};
    app.require_subcommand(1);

    std::string input, eps, rho, cells, suite;
    int constituent = 0, a = 1, b = 1, copies = 1, margin = 2;
    int max_gap = -1, max_size = -1;
    bool text = false, json_mode = false;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input)
            cmd->add_option("--input", input, "input document (JSON), - for stdin")->required();
        cmd->add_flag("--text", text, "aligned text output");
        cmd->add_flag("--json", json_mode, "JSON output (default)");
    };

    CLI::App* convert = app.add_subcommand("convert", "block table with both coordinate systems");
    add_common(convert, true);

    CLI::App* packet = app.add_subcommand("packet", "constituents of a packet");
    add_common(packet, true);
    packet->add_option("--eps", eps, "one +/- per good-parity class")->required();

    CLI::App* induce = app.add_subcommand("induce", "decompose an induced representation");
    add_common(induce, true);
    induce->add_option("--eps", eps, "one +/- per good-parity class")->required();
    induce->add_option("--constituent", constituent, "base constituent index (default 0)");
    induce->add_option("--rho", rho, "cuspidal name of the inducing block")->required();
    induce->add_option("--a", a, "first block size")->required();
    induce->add_option("--b", b, "second block size")->required();
    induce->add_option("--copies", copies, "number of copies (default 1)");
    induce->add_option("--margin", margin, "separation margin (default 2)");

    CLI::App* jac = app.add_subcommand("jac", "partial derivative evaluation on a constituent");
    add_common(jac, true);
    jac->add_option("--eps", eps, "one +/- per good-parity class")->required();
    jac->add_option("--constituent", constituent, "constituent index (default 0)");
    jac->add_option("--rho", rho, "cuspidal name")->required();
    jac->add_option("--cells", cells, "comma-separated exponents, e.g. 2,3,1,2")->required();

    CLI::App* check = app.add_subcommand("check", "run a verification suite");
    check->add_option("--suite", suite, "counts | signs | ladder-jac | translation")->required();
    check->add_option("--max-gap", max_gap, "bound on A-B");
    check->add_option("--max", max_size, "bound on the secondary size (T or A)");
    check->add_flag("--text", text, "aligned text output");
    check->add_flag("--json", json_mode, "JSON output (default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 1;
    }

    char* out = nullptr;
    int rc = 1;

    if (check->parsed()) {
        if (max_gap < 0) max_gap = suite == "counts" ? 8 : suite == "ladder-jac" ? 4 : 3;
        if (max_size < 0) max_size = suite == "signs" ? 8 : suite == "ladder-jac" ? 4 : 3;
        rc = ac_check(suite.c_str(), max_gap, max_size, &out);
        return finish("check", rc, take(out), text);
    }

    std::string doc_text = read_file(input);
    ac_document* doc = nullptr;
    rc = ac_document_parse(doc_text.c_str(), &doc, &out);
    if (rc != 0) return finish(app.get_subcommands().front()->get_name(), rc, take(out), text);

    std::string verb;
    if (convert->parsed()) {
        verb = "convert";
        rc = ac_convert(doc, &out);
    } else if (packet->parsed()) {
        verb = "packet";
        rc = ac_packet(doc, eps.c_str(), &out);
    } else if (induce->parsed()) {
        verb = "induce";
        rc = ac_induce(doc, eps.c_str(), constituent, rho.c_str(), a, b, copies, margin, &out);
    } else if (jac->parsed()) {
        verb = "jac";
        rc = ac_jac(doc, eps.c_str(), constituent, rho.c_str(), cells.c_str(), &out);
    }
    ac_document_free(doc);
    return finish(verb, rc, take(out), text);
}
