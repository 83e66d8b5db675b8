#include "torsionph/filtration_io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

#include "torsionph/errors.hpp"

namespace torsionph {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

template <class Int>
Int parse_int(std::string_view tok, std::size_t line) {
    Int value{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
    return value;
}

// Reads all non-blank, non-comment lines. The returned views point into text.
std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        ++number;
        std::string_view line(text.data() + pos, end - pos);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tokens = split(line);
        if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
        if (end == text.size()) break;
        pos = end + 1;
    }
    return lines;
}

std::string slurp(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

FiltrationFormat parse_filtration_format(std::string_view name) {
    if (name == "simplicial") return FiltrationFormat::Simplicial;
    if (name == "cells") return FiltrationFormat::Cells;
    throw UsageError("unknown filtration format '" + std::string(name) + "' (expected simplicial or cells)");
}

Filtration read_filtration(std::istream& in, FiltrationFormat format) {
    const std::string text = slurp(in);
    const auto lines = tokenize(text);
    try {
        if (format == FiltrationFormat::Simplicial) {
            std::vector<Simplex> simplices;
            simplices.reserve(lines.size());
            for (const auto& line : lines) {
                const int q = parse_int<int>(line.tokens[0], line.number);
                if (q < 0) throw ParseError(line.number, "negative dimension");
                if (line.tokens.size() != static_cast<std::size_t>(q) + 2)
                    throw ParseError(line.number, "a " + std::to_string(q) + "-simplex needs " +
                                                      std::to_string(q + 1) + " vertices");
                Simplex s;
                s.reserve(static_cast<std::size_t>(q) + 1);
                for (std::size_t t = 1; t < line.tokens.size(); ++t)
                    s.push_back(parse_int<Vertex>(line.tokens[t], line.number));
                simplices.push_back(std::move(s));
            }
            return Filtration::from_simplices(simplices);
        }
        std::vector<CellSpec> cells;
        cells.reserve(lines.size());
        for (const auto& line : lines) {
            if (line.tokens.size() < 2) throw ParseError(line.number, "expected 'q k' header");
            CellSpec c;
            c.dim = parse_int<int>(line.tokens[0], line.number);
            if (c.dim < 0) throw ParseError(line.number, "negative dimension");
            const auto k = parse_int<std::size_t>(line.tokens[1], line.number);
            if (line.tokens.size() != 2 + 2 * k)
                throw ParseError(line.number, "expected " + std::to_string(k) + " (index, coefficient) pairs");
            for (std::size_t t = 0; t < k; ++t) {
                BoundaryTerm term;
                term.cell = parse_int<Index>(line.tokens[2 + 2 * t], line.number);
                term.coeff = parse_int<std::int64_t>(line.tokens[3 + 2 * t], line.number);
                c.boundary.push_back(term);
            }
            cells.push_back(std::move(c));
        }
        return Filtration::from_cells(cells);
    } catch (const StructureError& e) {
        const std::size_t line = e.cell() >= 1 && e.cell() <= lines.size() ? lines[e.cell() - 1].number : 0;
        throw ParseError(line, e.what());
    }
}

Filtration read_filtration_file(const std::string& path, FiltrationFormat format) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return read_filtration(in, format);
}

void write_simplicial(std::ostream& out, const Filtration& f) {
    if (!f.simplicial()) throw UsageError("filtration has general cells; use the cells format");
    for (const auto& c : f.cells()) {
        out << c.dim;
        for (Vertex v : c.vertices) out << ' ' << v;
        out << '\n';
    }
}

void write_cells(std::ostream& out, const Filtration& f) {
    for (const auto& c : f.cells()) {
        out << c.dim << ' ' << c.boundary.size();
        for (const auto& term : c.boundary) out << ' ' << term.cell << ' ' << term.coeff;
        out << '\n';
    }
}

void write_filtration(std::ostream& out, const Filtration& f, FiltrationFormat format) {
    if (format == FiltrationFormat::Simplicial)
        write_simplicial(out, f);
    else
        write_cells(out, f);
}

std::vector<double> read_labels(std::istream& in) {
    const std::string text = slurp(in);
    std::vector<double> labels;
    for (const auto& line : tokenize(text)) {
        if (line.tokens.size() != 1) throw ParseError(line.number, "expected one value per line");
        try {
            std::size_t used = 0;
            const std::string tok(line.tokens[0]);
            labels.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::logic_error&) {
            throw ParseError(line.number, "expected a number, got '" + std::string(line.tokens[0]) + "'");
        }
    }
    return labels;
}

void write_labels(std::ostream& out, const std::vector<double>& labels) {
    const auto old = out.precision(std::numeric_limits<double>::max_digits10);
    for (double v : labels) out << v << '\n';
    out.precision(old);
}

}  // namespace torsionph
