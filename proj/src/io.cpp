#include "polytorus/io.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace polytorus {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_complex(Complex v) {
  if (std::abs(v.imag()) < 1e-15) return format_double(v.real());
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", v.real(), v.imag());
  return buf;
}

namespace {

ordered_json polynomial_json(const Polynomial& p) {
  ordered_json terms = ordered_json::array();
  for (const auto& [k, c] : p.terms()) {
    ordered_json t;
    t["k"] = k.exponents();
    t["re"] = c.real();
    t["im"] = c.imag();
    terms.push_back(std::move(t));
  }
  ordered_json out;
  out["dim"] = p.dim();
  out["terms"] = std::move(terms);
  return out;
}

}  // namespace

void emit_norms_csv(std::ostream& out, const std::vector<NormsRow>& rows) {
  out << "# polytorus-csv norms 1\n";
  out << "alpha,h2,w_closed,h1_closed,h1_quad,w_lower,w_dual\n";
  for (const auto& r : rows) {
    out << format_double(r.alpha) << ',' << format_double(r.h2) << ',' << format_double(r.w_closed)
        << ',' << format_double(r.h1_closed) << ',' << format_double(r.h1_quad) << ','
        << format_double(r.w_lower) << ',' << format_double(r.w_dual) << '\n';
  }
}

void emit_norms_json(std::ostream& out, const std::vector<NormsRow>& rows) {
  ordered_json doc;
  doc["schema"] = "polytorus/norms/1";
  ordered_json jr = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json row;
    row["alpha"] = r.alpha;
    row["h2"] = r.h2;
    row["w_closed"] = r.w_closed;
    row["h1_closed"] = r.h1_closed;
    row["h1_quad"] = r.h1_quad;
    row["w_lower"] = r.w_lower;
    row["w_dual"] = r.w_dual;
    jr.push_back(std::move(row));
  }
  doc["rows"] = std::move(jr);
  out << doc.dump(2) << '\n';
}

void emit_classify_csv(std::ostream& out, const std::vector<NormReport>& reports) {
  out << "# polytorus-csv classify 1\n";
  out << "alpha,h2,h1,w_lower,w_upper,w_dual,h1_residual,na_h1,hp_h1,na_w,hp_w,"
         "w_conclusive,h1_route,w_route,tol\n";
  for (const auto& r : reports) {
    out << (r.alpha ? format_double(*r.alpha) : std::string()) << ',' << format_double(r.h2) << ','
        << format_double(r.h1) << ',' << format_double(r.w_lower) << ',' << format_double(r.w_upper)
        << ',' << format_double(r.w_dual) << ',' << format_double(r.h1_residual) << ','
        << int(r.na_h1) << ',' << int(r.hp_h1) << ',' << int(r.na_w) << ',' << int(r.hp_w) << ','
        << int(r.w_conclusive) << ',' << route_name(r.h1_route) << ',' << route_name(r.w_route)
        << ',' << format_double(r.tol_used) << '\n';
  }
}

void emit_classify_json(std::ostream& out, const std::vector<NormReport>& reports) {
  ordered_json doc;
  doc["schema"] = "polytorus/classify/1";
  ordered_json jr = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json row;
    if (r.alpha)
      row["alpha"] = *r.alpha;
    else
      row["symbol"] = polynomial_json(r.symbol);
    row["h2"] = r.h2;
    row["h1"] = r.h1;
    row["w_lower"] = r.w_lower;
    row["w_upper"] = r.w_upper;
    row["w_dual"] = r.w_dual;
    row["h1_residual"] = r.h1_residual;
    row["na_h1"] = r.na_h1;
    row["hp_h1"] = r.hp_h1;
    row["na_w"] = r.na_w;
    row["hp_w"] = r.hp_w;
    row["w_conclusive"] = r.w_conclusive;
    row["h1_route"] = route_name(r.h1_route);
    row["w_route"] = route_name(r.w_route);
    row["tol"] = r.tol_used;
    jr.push_back(std::move(row));
  }
  doc["rows"] = std::move(jr);
  out << doc.dump(2) << '\n';
}

void emit_hankel_csv(std::ostream& out, const HankelMatrix& h, double norm) {
  out << "# polytorus-csv hankel 1\n";
  out << "basis";
  for (const auto& c : h.col_basis) out << ',' << c.str();
  out << '\n';
  for (std::size_t r = 0; r < h.row_basis.size(); ++r) {
    out << h.row_basis[r].str();
    for (std::size_t c = 0; c < h.col_basis.size(); ++c) out << ',' << format_complex(h.entries.at(r, c));
    out << '\n';
  }
  out << "# spectral-norm " << format_double(norm) << '\n';
}

void emit_hankel_json(std::ostream& out, const HankelMatrix& h, double norm) {
  ordered_json doc;
  doc["schema"] = "polytorus/hankel/1";
  doc["symbol"] = polynomial_json(h.symbol);
  ordered_json rows = ordered_json::array(), cols = ordered_json::array();
  for (const auto& r : h.row_basis) rows.push_back(r.exponents());
  for (const auto& c : h.col_basis) cols.push_back(c.exponents());
  doc["row_basis"] = std::move(rows);
  doc["col_basis"] = std::move(cols);
  ordered_json entries = ordered_json::array();
  for (std::size_t r = 0; r < h.row_basis.size(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < h.col_basis.size(); ++c) {
      const Complex v = h.entries.at(r, c);
      row.push_back(ordered_json::array({v.real(), v.imag()}));
    }
    entries.push_back(std::move(row));
  }
  doc["entries"] = std::move(entries);
  doc["spectral_norm"] = norm;
  out << doc.dump(2) << '\n';
}

}  // namespace polytorus
