#ifndef HERMENC_IO_HPP
#define HERMENC_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "hermenc/code.hpp"
#include "hermenc/gf.hpp"

namespace hermenc {

/// Fixed-width lowercase hex for one symbol; width = ceil(2s / 4) digits.
int hex_width(const Field& f);
std::string to_hex(const Field& f, elem v);
elem from_hex(const Field& f, const std::string& s);

/// Array file: {"s": ..., "m": ..., "rows": [[hex, ...], ...]} with q rows of
/// q^2 symbols. Throws std::invalid_argument on shape or field mismatches.
std::string array_to_json(const Field& f, int m, const CodeArray& a);
struct ArrayFile {
    int s = 0;
    int m = 0;
    CodeArray array;
};
ArrayFile array_from_json(const std::string& text);

void write_array_file(const std::string& path, const Field& f, int m, const CodeArray& a);
ArrayFile read_array_file(const std::string& path);

/// Information symbols: either a JSON array of hex strings or a whitespace
/// separated hex stream. "-" reads stdin.
std::vector<elem> parse_info_text(const Field& f, const std::string& text);
std::vector<elem> read_info_file(const Field& f, const std::string& path);

std::string info_to_hex(const Field& f, const std::vector<elem>& v);

}  // namespace hermenc

#endif
