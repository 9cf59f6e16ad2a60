#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "pham/harmonic.hpp"

namespace pham {

/// Coefficient CSV schema: optional leading '#' comment lines, then the
/// exact header "n,a_re,a_im,b_re,b_im", then one row per n from 2 to N
/// ascending with no gaps. The n = 1 normalization is implicit and must not
/// appear. A header-only file is the identity.

/// Throws CsvFormatError citing the offending 1-based line.
HarmonicSeries read_coeff_csv(std::istream& in);

/// Convenience wrapper; prefixes the file name to any error message.
HarmonicSeries read_coeff_file(const std::string& path);

/// Writes comments (each emitted as "# <text>"), the header, and the rows.
/// Numbers are printed with 17 significant digits so a round trip is exact.
void write_coeff_csv(std::ostream& out, const HarmonicSeries& f,
                     std::span<const std::string> comments = {});

}  // namespace pham
