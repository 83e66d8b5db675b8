#pragma once

// Text formats, one cell per line in filtration order. '#' starts a comment
// and blank lines are ignored.
//
//   simplicial:  q v_0 v_1 ... v_q
//   cells:       q k i_1 c_1 ... i_k c_k     (1-based cell indices)
//
// Writers emit the canonical form: single spaces, no comments, '\n' endings.
// Reading a canonical file and writing it back reproduces it byte for byte.

#include <iosfwd>
#include <string>
#include <string_view>

#include "torsionph/filtration.hpp"

namespace torsionph {

enum class FiltrationFormat { Simplicial, Cells };

FiltrationFormat parse_filtration_format(std::string_view name);

/// Throws ParseError carrying the 1-based line number on malformed input or
/// on a structural violation of the cell on that line.
Filtration read_filtration(std::istream& in, FiltrationFormat format);
Filtration read_filtration_file(const std::string& path, FiltrationFormat format);

void write_simplicial(std::ostream& out, const Filtration& f);
void write_cells(std::ostream& out, const Filtration& f);
void write_filtration(std::ostream& out, const Filtration& f, FiltrationFormat format);

/// One double per line, '#' comments allowed.
std::vector<double> read_labels(std::istream& in);
void write_labels(std::ostream& out, const std::vector<double>& labels);

}  // namespace torsionph
