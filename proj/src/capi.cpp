#include "arthurcomb.h"

#include <cstring>
#include <new>
#include <string>

#include "commands.hpp"

using arthur::Document;
using arthur::Error;
using arthur::ErrorKind;

struct ac_document {
    Document doc;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(char** out, const nlohmann::json& j) {
    if (out) *out = dup_string(j.dump(2) + "\n");
}

int handle_error(char** out) {
    try {
        throw;
    } catch (const Error& e) {
        emit(out, arthur::error_json(e.kind(), e.what()));
        return 1;
    } catch (const std::exception& e) {
        emit(out, arthur::error_json(ErrorKind::invalid_input, e.what()));
        return 1;
    }
}

} // namespace

extern "C" {

int ac_document_parse(const char* json_text, ac_document** out_doc, char** out_error) {
    if (out_error) *out_error = nullptr;
    if (!json_text || !out_doc) {
        if (out_error)
            emit(out_error, arthur::error_json(ErrorKind::invalid_input, "null argument"));
        return 1;
    }
    try {
        *out_doc = new ac_document{arthur::parse_document(json_text)};
        return 0;
    } catch (...) {
        *out_doc = nullptr;
        return handle_error(out_error);
    }
}

void ac_document_free(ac_document* doc) { delete doc; }

int ac_convert(const ac_document* doc, char** out) {
    if (!doc) {
        if (out) emit(out, arthur::error_json(ErrorKind::invalid_input, "null document"));
        return 1;
    }
    try {
        emit(out, arthur::cmd_convert(doc->doc));
        return 0;
    } catch (...) {
        return handle_error(out);
    }
}

int ac_packet(const ac_document* doc, const char* eps, char** out) {
    if (!doc || !eps) {
        if (out) emit(out, arthur::error_json(ErrorKind::invalid_input, "null argument"));
        return 1;
    }
    try {
        emit(out, arthur::cmd_packet(doc->doc, eps));
        return 0;
    } catch (...) {
        return handle_error(out);
    }
}

int ac_induce(const ac_document* doc, const char* eps, int constituent, const char* rho,
              int a, int b, int copies, int margin, char** out) {
    if (!doc || !eps || !rho) {
        if (out) emit(out, arthur::error_json(ErrorKind::invalid_input, "null argument"));
        return 1;
    }
    try {
        emit(out, arthur::cmd_induce(doc->doc, eps, constituent, rho, a, b, copies, margin));
        return 0;
    } catch (...) {
        return handle_error(out);
    }
}

int ac_jac(const ac_document* doc, const char* eps, int constituent, const char* rho,
           const char* cells, char** out) {
    if (!doc || !eps || !rho || !cells) {
        if (out) emit(out, arthur::error_json(ErrorKind::invalid_input, "null argument"));
        return 1;
    }
    try {
        emit(out, arthur::cmd_jac(doc->doc, eps, constituent, rho, cells));
        return 0;
    } catch (...) {
        return handle_error(out);
    }
}

int ac_check(const char* suite, int max_gap, int max_size, char** out) {
    if (!suite) {
        if (out) emit(out, arthur::error_json(ErrorKind::invalid_input, "null suite"));
        return 1;
    }
    try {
        nlohmann::json report = arthur::cmd_check(suite, max_gap, max_size);
        emit(out, report);
        return report["pass"].get<bool>() ? 0 : 2;
    } catch (...) {
        return handle_error(out);
    }
}

void ac_free_string(char* s) { delete[] s; }

const char* ac_version(void) { return "1.0.0"; }

} // extern "C"
