#ifndef POLYTORUS_IO_HPP
#define POLYTORUS_IO_HPP

#include <ostream>
#include <string>
#include <vector>

#include "polytorus/classify.hpp"
#include "polytorus/hankel.hpp"

namespace polytorus {

// Every emitted file starts with a schema line: "# polytorus-csv <name> <version>"
// for CSV, a "schema" field for JSON.  Formats are fixed-width-free and
// byte-stable: the same inputs produce identical bytes.

std::string format_double(double v);  // %.12g
std::string format_complex(Complex v);

struct NormsRow {
  double alpha = 0.0;
  double h2 = 0.0;
  double w_closed = 0.0;
  double h1_closed = 0.0;
  double h1_quad = 0.0;
  double w_lower = 0.0;
  double w_dual = 0.0;
};

void emit_norms_csv(std::ostream& out, const std::vector<NormsRow>& rows);
void emit_norms_json(std::ostream& out, const std::vector<NormsRow>& rows);

void emit_classify_csv(std::ostream& out, const std::vector<NormReport>& reports);
void emit_classify_json(std::ostream& out, const std::vector<NormReport>& reports);

void emit_hankel_csv(std::ostream& out, const HankelMatrix& h, double norm);
void emit_hankel_json(std::ostream& out, const HankelMatrix& h, double norm);

}  // namespace polytorus

#endif
