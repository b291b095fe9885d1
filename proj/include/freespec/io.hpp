#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "freespec/brown.hpp"
#include "freespec/mat2.hpp"
#include "freespec/matrixmodel.hpp"
#include "freespec/measures.hpp"
#include "freespec/spectra.hpp"

namespace freespec::io {

using nlohmann::json;

/// Parses [[a, b], [c, d]] where each entry is a number or a [re, im] pair.
/// Throws PreconditionError on malformed input.
Mat2 parse_matrix(const std::string& text);
json matrix_to_json(const Mat2& m);
/// A number or a [re, im] pair, as text.
cplx parse_scalar(const std::string& text);

/// JSON number, with infinities as the strings "inf" / "-inf" and NaN as "nan".
json number(double x);
json complex_number(std::complex<double> z);

/// Shortest round-trip decimal form.
std::string format_double(double x);

/// RFC 4180 writer: fields quoted when needed, CRLF record terminator.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& os) : os_(os) {}
    void row(const std::vector<std::string>& fields);

private:
    std::ostream& os_;
};

/// RFC 4180 reader; returns records as vectors of unquoted fields.
std::vector<std::vector<std::string>> read_csv(std::istream& is);

/// Columns kind,t,value: one "atom" row per atom (t = location, value =
/// mass), then "density" rows of the tabulated density.
void write_measure_csv(std::ostream& os, const MeasureR& mu);
/// Inverse of write_measure_csv.
MeasureR read_measure_csv(std::istream& is);
/// A file in measure CSV form, or one of the names arcsine01, arcsine_sym,
/// dirac:<x>, atoms:<x1>:<m1>,<x2>:<m2>...
MeasureR load_measure(const std::string& spec);

/// Columns s,F,r_inner,r_outer,atom_at_zero; the last three are filled on
/// the first record only.
void write_radial_csv(std::ostream& os, const RadialMeasure& nu);

json radial_summary(const RadialMeasure& nu);
json mixture_summary(const ShiftedMixture& m);
json region_to_json(const SpectrumRegion& r);

/// Columns re,im.
void write_points_csv(std::ostream& os, const std::vector<std::complex<double>>& pts);

/// Columns trial,re,im or trial,sigma.
void write_cloud_csv(std::ostream& os, const EmpiricalSpectrum& spec);

/// Writes text to `path`, or to stdout when path is empty or "-".
/// Throws IoError when the file cannot be written.
void write_output(const std::string& path, const std::string& text);

}  // namespace freespec::io
