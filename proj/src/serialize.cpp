#include "hexa/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace hexa {

Json cyc_to_json(const Cyc& v) {
  Json terms = Json::array();
  const auto& c = v.coeffs();
  for (size_t e = 0; e < c.size(); ++e) {
    if (c[e] == 0) continue;
    terms.push_back(Json::array({static_cast<long>(e),
                                 c[e].get_num().get_str(),
                                 c[e].get_den().get_str()}));
  }
  return Json{{"conductor", v.conductor()}, {"terms", terms}};
}

Cyc cyc_from_json(const Json& j) {
  long N = j.at("conductor").get<long>();
  Cyc out(0);
  for (const auto& t : j.at("terms")) {
    long e = t.at(0).get<long>();
    mpq_class q(mpz_class(t.at(1).get<std::string>()),
                mpz_class(t.at(2).get<std::string>()));
    q.canonicalize();
    out += Cyc(q) * Cyc::root(N, e);
  }
  return out;
}

Json matrix_to_json(const ExactMatrix& M) {
  long pow = 0;
  unsigned long den = M.denom;
  while (den > 1) {
    if (M.d <= 1 || den % static_cast<unsigned long>(M.d) != 0)
      throw std::invalid_argument("denom is not a power of d");
    den /= static_cast<unsigned long>(M.d);
    ++pow;
  }
  Json rows = Json::array();
  for (long r = 0; r < M.rows; ++r) {
    Json row = Json::array();
    for (long c = 0; c < M.cols; ++c) row.push_back(cyc_to_json(M.at(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{
      {"dim", M.rows}, {"denom_pow", pow}, {"d", M.d}, {"entries", rows}};
}

ExactMatrix matrix_from_json(const Json& j) {
  long dim = j.at("dim").get<long>();
  long d = j.at("d").get<long>();
  long pow = j.at("denom_pow").get<long>();
  unsigned long den = 1;
  for (long i = 0; i < pow; ++i) den *= static_cast<unsigned long>(d);
  const Json& rows = j.at("entries");
  long cols = rows.empty() ? 0 : static_cast<long>(rows.at(0).size());
  ExactMatrix M(dim, cols, d, den);
  for (long r = 0; r < dim; ++r)
    for (long c = 0; c < cols; ++c)
      M.at(r, c) = cyc_from_json(rows.at(r).at(c));
  return M;
}

Json matrix_to_float_json(const ExactMatrix& M) {
  auto v = M.to_complex();
  Json rows = Json::array();
  for (long r = 0; r < M.rows; ++r) {
    Json row = Json::array();
    for (long c = 0; c < M.cols; ++c) {
      const auto& z = v[r * M.cols + c];
      row.push_back(Json::array({z.real(), z.imag()}));
    }
    rows.push_back(std::move(row));
  }
  return Json{{"dim", M.rows}, {"entries", rows}};
}

Json phase_function_to_json(const PhaseFunction& lam) {
  if (lam.has_exponents) {
    return Json{{"d", lam.d},
                {"n", lam.n},
                {"kind", "exponent"},
                {"base", lam.base},
                {"exponents", lam.exponents}};
  }
  Json vals = Json::array();
  for (const auto& v : lam.values) vals.push_back(cyc_to_json(v));
  return Json{{"d", lam.d}, {"n", lam.n}, {"kind", "cyc"}, {"values", vals}};
}

PhaseFunction phase_function_from_json(const Json& j) {
  long d = j.at("d").get<long>();
  long n = j.at("n").get<long>();
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "exponent") {
    return PhaseFunction::from_exponents(
        d, n, j.at("base").get<long>(),
        j.at("exponents").get<std::vector<long>>());
  }
  if (kind != "cyc") throw std::invalid_argument("unknown phase-function kind");
  std::vector<Cyc> vals;
  for (const auto& v : j.at("values")) vals.push_back(cyc_from_json(v));
  return PhaseFunction::from_values(d, n, std::move(vals));
}

std::string phase_function_to_csv(const PhaseFunction& lam) {
  if (!lam.has_exponents)
    throw std::invalid_argument("CSV export needs an exponent table");
  std::ostringstream os;
  os << "d,n,base\n" << lam.d << "," << lam.n << "," << lam.base << "\n";
  for (long i = 0; i < 2 * lam.n; ++i)
    os << (i < lam.n ? "p" : "q") << (i % lam.n) << ",";
  os << "exponent\n";
  for (long i = 0; i < lam.size(); ++i) {
    PhasePoint a = PhasePoint::from_index(lam.d, lam.n, i);
    for (long c = 0; c < 2 * lam.n; ++c) os << a.coords[c] << ",";
    os << lam.exponents[i] << "\n";
  }
  return os.str();
}

namespace {
Json square_rows(const std::vector<long>& t, long k) {
  Json rows = Json::array();
  for (long r = 0; r < k; ++r) {
    Json row = Json::array();
    for (long c = 0; c < k; ++c) row.push_back(t[r * k + c]);
    rows.push_back(std::move(row));
  }
  return rows;
}
}  // namespace

Json latin_to_json(const LatinSquare& K, const LatinSquare& L) {
  return Json{{"d", K.d},
              {"K", square_rows(K.table, K.d)},
              {"L", square_rows(L.table, L.d)}};
}

Json scan_report_to_json(const ScanReport& rep) {
  Json orbs = Json::array();
  for (const auto& o : rep.orbits) {
    orbs.push_back(Json{{"size", o.size},
                        {"representative_PQ",
                         Json{{"P", square_rows(o.representative.P, 2)},
                              {"Q", square_rows(o.representative.Q, 3)}}},
                        {"trace", cyc_to_json(o.trace)}});
  }
  return Json{{"candidates", rep.candidates},
              {"survivors", rep.survivors},
              {"orbits", orbs}};
}

Json orbit_to_json(const std::vector<OrbitEntry>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) {
    out.push_back(Json{
        {"G", Json::array({Json::array({e.G[0], e.G[1]}),
                           Json::array({e.G[2], e.G[3]})})},
        {"P", square_rows(e.pq.P, 2)},
        {"Q", square_rows(e.pq.Q, 3)},
        {"exponents", e.exponents}});
  }
  return Json{{"size", static_cast<long>(entries.size())}, {"entries", out}};
}

}  // namespace hexa
