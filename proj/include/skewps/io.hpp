#pragma once

#include <string>

#include "skewps/presentation.hpp"
#include "skewps/series.hpp"

namespace skewps {

// Presentation config format (one directive per line, '#' comments):
//   base field            | base central-series <T>
//   generators <name> <name> ...          (adjunction order)
//   tau <y_l> <y_j> = <rational>          (j < l; unset entries default to 1)
//   delta <y_l> <y_j> = <expression>      (expression grammar, lower generators)
// Directives may appear in any order; delta rules are normalized level by
// level on load. dump emits every tau entry and every nonzero delta rule.
std::string dump_presentation_config(const Presentation& pres);
PresentationPtr load_presentation_config(const std::string& text);

// Series file format:
//   # skewps series
//   algebra <reference string>
//   order <N>
//   <coeff> ; <e_1> <e_2> ... <e_n>       (one line per monomial, canonical order)
// Round-trips bit-exactly: dump(load(dump(s))) == dump(s).
std::string dump_series(const TruncatedSeries& s, const std::string& algebra_ref);

struct SeriesFileHeader {
    std::string algebra_ref;
    unsigned order = 0;
};
SeriesFileHeader peek_series_header(const std::string& text);
TruncatedSeries load_series(const std::string& text, const PresentationPtr& pres);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace skewps
