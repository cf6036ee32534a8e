#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>

#include "k3lat/error.hpp"
#include "k3lat/lattice.hpp"
#include "k3lat/sbad.hpp"

namespace k3lat {

// Gram-file format: the rank r on the first line, then r lines of r
// whitespace-separated integers.  Witness files append one bordering line
// of r + 1 integers: the pairings of D with the basis, then D's norm.

namespace detail {

inline std::string next_data_line(std::istream& in, std::size_t& line_no) {
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
    }
    throw GramFileError("unexpected end of file after line " + std::to_string(line_no));
}

inline IntVector parse_int_row(const std::string& line, std::size_t expected, std::size_t line_no) {
    std::istringstream ss(line);
    IntVector row;
    std::string tok;
    while (ss >> tok) {
        Integer v;
        if (v.set_str(tok, 10) != 0)
            throw GramFileError("line " + std::to_string(line_no) + ": not an integer: '" + tok + "'");
        row.push_back(v);
    }
    if (row.size() != expected)
        throw GramFileError("line " + std::to_string(line_no) + ": expected " + std::to_string(expected) +
                            " integers, found " + std::to_string(row.size()));
    return row;
}

inline IntMatrix read_gram_block(std::istream& in, std::size_t& line_no) {
    const std::string first = next_data_line(in, line_no);
    const IntVector header = parse_int_row(first, 1, line_no);
    if (header[0] < 0 || !header[0].fits_ulong_p()) throw GramFileError("rank must be a nonnegative integer");
    const std::size_t r = header[0].get_ui();
    IntMatrix g(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        const std::string line = next_data_line(in, line_no);
        const IntVector row = parse_int_row(line, r, line_no);
        std::copy(row.begin(), row.end(), g.row(i).begin());
    }
    if (!g.is_symmetric()) throw GramFileError("Gram matrix is not symmetric");
    return g;
}

inline std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GramFileError("cannot open '" + path + "'");
    return in;
}

}  // namespace detail

inline Lattice read_gram(std::istream& in) {
    std::size_t line_no = 0;
    return Lattice(detail::read_gram_block(in, line_no));
}

inline Lattice read_gram_file(const std::string& path) {
    auto in = detail::open_or_throw(path);
    return read_gram(in);
}

inline ExtensionWitness read_witness(std::istream& in) {
    std::size_t line_no = 0;
    ExtensionWitness w;
    w.s_gram = detail::read_gram_block(in, line_no);
    const std::string line = detail::next_data_line(in, line_no);
    IntVector border = detail::parse_int_row(line, w.rank() + 1, line_no);
    w.d_norm = border.back();
    border.pop_back();
    w.pairings = std::move(border);
    return w;
}

inline ExtensionWitness read_witness_file(const std::string& path) {
    auto in = detail::open_or_throw(path);
    return read_witness(in);
}

inline void write_gram(std::ostream& out, const IntMatrix& g) {
    out << g.rows() << '\n';
    for (std::size_t i = 0; i < g.rows(); ++i) {
        for (std::size_t j = 0; j < g.cols(); ++j) out << (j ? " " : "") << g(i, j);
        out << '\n';
    }
}

}  // namespace k3lat
