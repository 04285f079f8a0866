#include "hermenc/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hermenc {

namespace {
using nlohmann::json;
}

int hex_width(const Field& f) { return (2 * f.s() + 3) / 4; }

std::string to_hex(const Field& f, elem v) {
    static const char* digits = "0123456789abcdef";
    int w = hex_width(f);
    std::string out(w, '0');
    for (int i = w - 1; i >= 0; --i) {
        out[i] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

elem from_hex(const Field& f, const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty hex symbol");
    unsigned long v = 0;
    for (char ch : s) {
        int d;
        if (ch >= '0' && ch <= '9') d = ch - '0';
        else if (ch >= 'a' && ch <= 'f') d = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F') d = ch - 'A' + 10;
        else throw std::invalid_argument("bad hex digit in symbol '" + s + "'");
        v = (v << 4) | static_cast<unsigned>(d);
        if (v >= 1u << 20) throw std::invalid_argument("hex symbol too long: '" + s + "'");
    }
    if (v >= static_cast<unsigned long>(f.q2())) {
        throw std::invalid_argument("symbol '" + s + "' exceeds q^2 - 1");
    }
    return static_cast<elem>(v);
}

std::string array_to_json(const Field& f, int m, const CodeArray& a) {
    json rows = json::array();
    for (int r = 0; r < a.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < a.cols(); ++c) row.push_back(to_hex(f, a.at(r, c)));
        rows.push_back(std::move(row));
    }
    json doc;
    doc["s"] = f.s();
    doc["m"] = m;
    doc["rows"] = std::move(rows);
    return doc.dump(1);
}

ArrayFile array_from_json(const std::string& text) {
    json doc = json::parse(text);
    ArrayFile out;
    out.s = doc.at("s").get<int>();
    out.m = doc.at("m").get<int>();
    Field f = build_field(out.s);
    const auto& rows = doc.at("rows");
    if (!rows.is_array() || static_cast<int>(rows.size()) != f.q()) {
        throw std::invalid_argument("array file must have exactly q rows");
    }
    out.array = CodeArray(f);
    for (int r = 0; r < f.q(); ++r) {
        const auto& row = rows[r];
        if (!row.is_array() || static_cast<int>(row.size()) != f.q2()) {
            throw std::invalid_argument("array row " + std::to_string(r) + " must have q^2 symbols");
        }
        for (int c = 0; c < f.q2(); ++c) {
            out.array.at(r, c) = from_hex(f, row[c].get<std::string>());
        }
    }
    return out;
}

void write_array_file(const std::string& path, const Field& f, int m, const CodeArray& a) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
    os << array_to_json(f, m, a) << "\n";
}

ArrayFile read_array_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << is.rdbuf();
    return array_from_json(ss.str());
}

std::vector<elem> parse_info_text(const Field& f, const std::string& text) {
    std::vector<elem> out;
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        json doc = json::parse(text);
        for (const auto& item : doc) {
            if (item.is_string()) {
                out.push_back(from_hex(f, item.get<std::string>()));
            } else {
                long v = item.get<long>();
                if (v < 0 || v >= f.q2()) throw std::invalid_argument("info symbol out of range");
                out.push_back(static_cast<elem>(v));
            }
        }
        return out;
    }
    std::istringstream ss(text);
    std::string tok;
    while (ss >> tok) out.push_back(from_hex(f, tok));
    return out;
}

std::vector<elem> read_info_file(const Field& f, const std::string& path) {
    std::stringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream is(path);
        if (!is) throw std::runtime_error("cannot open '" + path + "'");
        ss << is.rdbuf();
    }
    return parse_info_text(f, ss.str());
}

std::string info_to_hex(const Field& f, const std::vector<elem>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += to_hex(f, v[i]);
    }
    return out;
}

}  // namespace hermenc
