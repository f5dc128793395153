#pragma once

#include "hfgrowth/graded_ideals.hpp"
#include "hfgrowth/point_geometry.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hfg {

// Malformed input. The message starts with "line N:" when a line is at fault.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what);
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Text formats. Lines starting with '#' are comments everywhere.
//
//   monomial ideal   vars r
//                    e1 ... er            one generator per line
//
//   form list        vars r deg d
//                    p/q e1 ... er        one term per line, blank line between forms
//                    deg e                (optional) later forms have degree e
//
//   point set        ambient r
//                    p/q ... p/q          r+1 homogeneous coordinates per line
MonomialIdeal read_monomial_ideal(std::istream& in);
std::vector<Form> read_forms(std::istream& in);
PointSet read_points(std::istream& in);

// Either input format, told apart by the header.
struct IdealInput {
    int num_vars = 0;
    std::optional<MonomialIdeal> monomial;
    std::vector<Form> forms;

    // Components of the ideal over degrees 0..d_max.
    GradedSpan span(int d_max) const;
};
IdealInput read_ideal(std::istream& in);

// "-" reads stdin_source instead of a file.
std::string read_source(const std::string& path, std::istream& stdin_source);

void write_monomial_ideal(std::ostream& out, const MonomialIdeal& ideal);
void write_forms(std::ostream& out, int num_vars, const std::vector<Form>& forms);
void write_points(std::ostream& out, const PointSet& z);

nlohmann::json to_json(const DavisDecomposition& d);
nlohmann::json to_json(const HVector& h);

}  // namespace hfg
