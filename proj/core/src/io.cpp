#include "qspectra/io.hpp"

#include <json.hpp>

namespace qspectra {

namespace {

using ojson = nlohmann::ordered_json;

ojson parse_json(const std::string& text) {
  ojson j = ojson::parse(text, nullptr, false);
  if (j.is_discarded()) throw validation_error("malformed JSON");
  return j;
}

Int json_to_int(const ojson& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw validation_error("not an integer: " + j.dump());
    }
  }
  throw validation_error("expected an integer, got " + j.dump());
}

ojson int_to_json(const Int& v) {
  if (v.fits_slong_p()) return ojson(v.get_si());
  return ojson(v.get_str());
}

const ojson& field(const ojson& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw validation_error(std::string("missing field: ") + key);
  return *it;
}

ojson group_to_json(const CoefficientGroup& g) {
  ojson out;
  out["characteristic"] = int_to_json(g.characteristic());
  out["generators"] = ojson::array();
  for (const auto& gen : g.generators()) {
    ojson gj;
    gj["name"] = gen.name;
    gj["order"] = int_to_json(gen.order);
    out["generators"].push_back(std::move(gj));
  }
  return out;
}

std::shared_ptr<const CoefficientGroup> group_from_json(const ojson& j) {
  Int chr = json_to_int(field(j, "characteristic"));
  std::vector<GroupGenerator> gens;
  for (const ojson& gj : field(j, "generators")) {
    GroupGenerator g;
    g.name = field(gj, "name").get<std::string>();
    g.order = json_to_int(field(gj, "order"));
    if (g.name.rfind("sqrt_", 0) == 0)
      throw validation_error("generator names may not start with sqrt_ (reserved)");
    gens.push_back(std::move(g));
  }
  return std::make_shared<const CoefficientGroup>(chr, std::move(gens));
}

/// Scalar display: coordinates in group order; sqrt_g with exponent
/// e = 2h + r prints as g:h then sqrt_g:r.
ojson element_to_json(const KElement& v) {
  ojson out = ojson::object();
  const CoefficientGroup& g = v.group();
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Int& e = v.exponents()[k];
    if (e == 0) continue;
    const std::string& name = g.name(k);
    if (name.rfind("sqrt_", 0) == 0) {
      Int h, r;
      mpz_fdiv_qr(h.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), Int(2).get_mpz_t());
      if (h != 0) out[name.substr(5)] = int_to_json(h);
      if (r != 0) out[name] = int_to_json(r);
    } else {
      out[name] = int_to_json(e);
    }
  }
  return out;
}

/// Resolve a name->exponent map against a target group; base names of
/// halved generators contribute doubled exponents to sqrt_<name>.
KElement element_from_json(const ojson& j,
                           const std::shared_ptr<const CoefficientGroup>& target) {
  if (!j.is_object()) throw validation_error("expected a name->exponent map");
  std::vector<Int> e(target->size());
  for (auto it = j.begin(); it != j.end(); ++it) {
    Int v = json_to_int(it.value());
    std::size_t k = target->index_of(it.key());
    if (k != CoefficientGroup::npos) {
      e[k] += v;
      continue;
    }
    k = target->index_of("sqrt_" + it.key());
    if (k != CoefficientGroup::npos) {
      e[k] += 2 * v;
      continue;
    }
    throw validation_error("unknown generator: " + it.key());
  }
  return KElement(target, std::move(e));
}

bool names_resolve(const ojson& j, const CoefficientGroup& g) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (g.index_of(it.key()) == CoefficientGroup::npos &&
        g.index_of("sqrt_" + it.key()) == CoefficientGroup::npos)
      return false;
  return true;
}

/// Exponent vector as a monomial map {prefix<i+1>: e}.
ojson monomial_to_json(const std::vector<Int>& v, const std::string& prefix) {
  ojson out = ojson::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out[prefix + std::to_string(i + 1)] = int_to_json(v[i]);
  return out;
}

ojson stratum_to_json(const std::vector<std::size_t>& w) {
  ojson out = ojson::array();
  for (std::size_t i : w) out.push_back(i + 1);  // 1-based in files
  return out;
}

std::string dump_document(const ojson& doc) { return doc.dump(2) + "\n"; }

ojson make_envelope(const resultdoc::Echo& echo, const char* command) {
  ojson doc;
  doc["command"] = command;
  doc["inputs"] = ojson::object();
  for (const auto& [k, v] : echo) doc["inputs"][k] = v;
  return doc;
}

std::string finish_document(ojson doc, std::vector<std::string> diagnostics = {}) {
  doc["diagnostics"] = std::move(diagnostics);
  return dump_document(doc);
}

ojson presentation_to_json(const IdealPresentation& I, const std::string& prefix,
                           bool torus_mode) {
  ojson r;
  r["stratum"] = stratum_to_json(I.stratum);
  r["torus_mode"] = torus_mode;
  r["laurent_exact"] = I.laurent_exact;
  r["variables"] = ojson::array();
  for (std::size_t i : I.variable_gens)
    r["variables"].push_back(prefix + std::to_string(i + 1));
  r["binomials"] = ojson::array();
  for (const Binomial& b : I.binomial_gens) {
    ojson bj;
    bj["plus"] = monomial_to_json(b.plus, prefix);
    bj["minus"] = monomial_to_json(b.minus, prefix);
    bj["scalar"] = element_to_json(b.scalar);
    r["binomials"].push_back(std::move(bj));
  }
  if (!I.binomial_gens.empty())
    r["scalar_group"] = group_to_json(I.binomial_gens.front().scalar.group());
  return r;
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
  ojson j = parse_json(text);
  ProblemFile pf;
  pf.group = group_from_json(j);
  std::size_t n = field(j, "n").get<std::size_t>();
  const ojson& qm = field(j, "q_matrix");
  if (!qm.is_array() || qm.size() != n)
    throw validation_error("q_matrix must be an n x n array");
  std::vector<IntMatrix> mats(pf.group->size(), IntMatrix(n, n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!qm[i].is_array() || qm[i].size() != n)
      throw validation_error("q_matrix must be an n x n array");
    for (std::size_t jj = 0; jj < n; ++jj) {
      KElement e = element_from_json(qm[i][jj], pf.group);
      for (std::size_t k = 0; k < pf.group->size(); ++k)
        mats[k].at(i, jj) = e.exponents()[k];
    }
  }
  pf.q = BicharMatrix(n, pf.group, std::move(mats));

  if (j.contains("toric")) {
    const ojson& t = j["toric"];
    std::size_t m = field(t, "rank").get<std::size_t>();
    std::vector<std::vector<Int>> rel;
    for (const ojson& row : field(t, "relations")) {
      std::vector<Int> r;
      for (const ojson& x : row) r.push_back(json_to_int(x));
      if (r.size() != m) throw validation_error("relation length mismatch");
      rel.push_back(std::move(r));
    }
    std::vector<std::vector<Int>> degs;
    for (const ojson& row : field(t, "degrees")) {
      std::vector<Int> d;
      for (const ojson& x : row) d.push_back(json_to_int(x));
      if (d.size() != m) throw validation_error("degree length mismatch");
      degs.push_back(std::move(d));
    }
    if (degs.size() != n)
      throw validation_error("one degree per generator required");
    FgAbelianGroup G(m, IntMatrix::from_rows(m, rel));
    pf.grading = GradingData(G, degs);

    const ojson& cm = field(t, "c_matrix");
    if (!cm.is_array() || cm.size() != m)
      throw validation_error("c_matrix must be an m x m array");
    std::vector<IntMatrix> cmats(pf.group->size(), IntMatrix(m, m));
    for (std::size_t i = 0; i < m; ++i) {
      if (!cm[i].is_array() || cm[i].size() != m)
        throw validation_error("c_matrix must be an m x m array");
      for (std::size_t jj = 0; jj < m; ++jj) {
        KElement e = element_from_json(cm[i][jj], pf.group);
        for (std::size_t k = 0; k < pf.group->size(); ++k)
          cmats[k].at(i, jj) = e.exponents()[k];
      }
    }
    pf.toric_c = GBicharacter(m, pf.group, std::move(cmats));
    if (!well_defined(*pf.grading, *pf.toric_c))
      throw validation_error(
          "toric bicharacter is not well defined modulo the relations");
  }
  return pf;
}

std::string serialize_problem(const ProblemFile& pf) {
  ojson j = group_to_json(*pf.group);
  j["n"] = pf.q.n();
  j["q_matrix"] = ojson::array();
  for (std::size_t i = 0; i < pf.q.n(); ++i) {
    ojson row = ojson::array();
    for (std::size_t k = 0; k < pf.q.n(); ++k)
      row.push_back(element_to_json(pf.q.entry(i, k)));
    j["q_matrix"].push_back(std::move(row));
  }
  if (pf.has_toric()) {
    ojson t;
    t["rank"] = pf.grading->m();
    t["relations"] = ojson::array();
    const IntMatrix& rel = pf.grading->group().relations();
    for (std::size_t r = 0; r < rel.rows(); ++r) {
      ojson row = ojson::array();
      for (std::size_t c = 0; c < rel.cols(); ++c) row.push_back(int_to_json(rel.at(r, c)));
      t["relations"].push_back(std::move(row));
    }
    t["degrees"] = ojson::array();
    for (std::size_t i = 0; i < pf.grading->n(); ++i) {
      ojson row = ojson::array();
      for (const Int& x : pf.grading->degree(i)) row.push_back(int_to_json(x));
      t["degrees"].push_back(std::move(row));
    }
    t["c_matrix"] = ojson::array();
    for (std::size_t i = 0; i < pf.grading->m(); ++i) {
      ojson row = ojson::array();
      for (std::size_t c = 0; c < pf.grading->m(); ++c)
        row.push_back(element_to_json(pf.toric_c->data().entry(i, c)));
      t["c_matrix"].push_back(std::move(row));
    }
    j["toric"] = std::move(t);
  }
  return dump_document(j);
}

GBicharacter parse_second_cocycle(const std::string& text, const ProblemFile& pf) {
  if (!pf.has_toric())
    throw validation_error("problem has no toric block to refine against");
  ojson j = parse_json(text);
  std::size_t m = pf.grading->m();
  const ojson& cm = field(j, "c_matrix");
  if (!cm.is_array() || cm.size() != m)
    throw validation_error("c_matrix must be an m x m array");
  std::vector<IntMatrix> cmats(pf.group->size(), IntMatrix(m, m));
  for (std::size_t i = 0; i < m; ++i) {
    if (!cm[i].is_array() || cm[i].size() != m)
      throw validation_error("c_matrix must be an m x m array");
    for (std::size_t jj = 0; jj < m; ++jj) {
      KElement e = element_from_json(cm[i][jj], pf.group);
      for (std::size_t k = 0; k < pf.group->size(); ++k)
        cmats[k].at(i, jj) = e.exponents()[k];
    }
  }
  GBicharacter c(m, pf.group, std::move(cmats));
  if (!well_defined(*pf.grading, c))
    throw validation_error("second bicharacter is not well defined modulo the relations");
  return c;
}

Point parse_point(const std::string& text, const ProblemFile& pf) {
  ojson j = parse_json(text);
  const ojson& cs = field(j, "coords");
  if (!cs.is_array() || cs.size() != pf.q.n())
    throw validation_error("coords must be an array of length n");
  bool base_ok = true;
  for (const ojson& c : cs) {
    if (c.is_number() && c == 0) continue;
    if (!c.is_object()) throw validation_error("coordinate must be 0 or an exponent map");
    for (auto it = c.begin(); it != c.end(); ++it)
      if (pf.group->index_of(it.key()) == CoefficientGroup::npos) base_ok = false;
  }
  std::shared_ptr<const CoefficientGroup> g;
  if (base_ok) {
    g = pf.group;
  } else {
    SqrtExtension ext = SqrtExtension::of(pf.group);
    for (const ojson& c : cs)
      if (c.is_object() && !names_resolve(c, *ext.extended))
        throw validation_error("coordinate uses an unknown generator");
    g = ext.extended;
  }
  std::vector<std::optional<KElement>> coords(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].is_number() && cs[i] == 0) continue;
    coords[i] = element_from_json(cs[i], g);
  }
  return Point(g, std::move(coords));
}

std::string serialize_point(const Point& p) {
  ojson j;
  j["coords"] = ojson::array();
  for (std::size_t i = 0; i < p.n(); ++i) {
    if (p.is_zero(i))
      j["coords"].push_back(0);
    else
      j["coords"].push_back(element_to_json(p.coord(i)));
  }
  return dump_document(j);
}

namespace resultdoc {

std::string validate(const Echo& echo, const ProblemFile& pf) {
  ojson doc = make_envelope(echo, "validate");
  ojson r;
  r["valid"] = true;
  r["n"] = pf.q.n();
  r["characteristic"] = int_to_json(pf.group->characteristic());
  r["generators"] = group_to_json(*pf.group)["generators"];
  r["toric"] = pf.has_toric();
  doc["result"] = std::move(r);
  return finish_document(std::move(doc));
}

std::string strata(const Echo& echo, const std::vector<StratumSummary>& summaries,
                   const std::string& var_prefix) {
  ojson doc = make_envelope(echo, "strata");
  ojson r;
  r["count"] = summaries.size();
  r["strata"] = ojson::array();
  for (const StratumSummary& s : summaries) {
    ojson sj;
    sj["stratum"] = stratum_to_json(s.stratum);
    sj["radical_rank"] = s.radical_rank;
    sj["fibre_dimension"] = s.fibre_dimension;
    sj["torus_mode"] = s.torus_mode;
    sj["center_monomial_basis"] = ojson::array();
    for (const auto& v : s.center_monomial_basis)
      sj["center_monomial_basis"].push_back(monomial_to_json(v, var_prefix));
    r["strata"].push_back(std::move(sj));
  }
  doc["result"] = std::move(r);
  return finish_document(std::move(doc));
}

std::string radical_basis(const Echo& echo, const std::vector<std::size_t>& stratum,
                          const std::vector<std::vector<Int>>& basis,
                          const std::string& var_prefix) {
  ojson doc = make_envelope(echo, "radical");
  ojson r;
  r["stratum"] = stratum_to_json(stratum);
  r["rank"] = basis.size();
  r["basis"] = ojson::array();
  for (const auto& v : basis) r["basis"].push_back(monomial_to_json(v, var_prefix));
  doc["result"] = std::move(r);
  return finish_document(std::move(doc));
}

std::string cocycle(const Echo& echo, const Cocycle& c) {
  ojson doc = make_envelope(echo, "cocycle");
  ojson r;
  r["group"] = group_to_json(*c.scalar_group());
  r["values"] = ojson::array();
  for (std::size_t i = 0; i < c.n(); ++i) {
    for (std::size_t j = i + 1; j < c.n(); ++j) {
      ojson vj;
      vj["i"] = i + 1;
      vj["j"] = j + 1;
      vj["value"] = element_to_json(c.values.entry(i, j));
      r["values"].push_back(std::move(vj));
    }
  }
  doc["result"] = std::move(r);
  return finish_document(std::move(doc));
}

std::string center(const Echo& echo, const std::vector<std::size_t>& stratum,
                   const std::vector<std::vector<Int>>& basis,
                   const std::string& var_prefix) {
  ojson doc = make_envelope(echo, "center");
  ojson r;
  r["stratum"] = stratum_to_json(stratum);
  r["generators"] = ojson::array();
  for (const auto& v : basis) r["generators"].push_back(monomial_to_json(v, var_prefix));
  doc["result"] = std::move(r);
  return finish_document(std::move(doc));
}

std::string map_point(const Echo& echo, const IdealPresentation& I,
                      const std::string& var_prefix, bool torus_mode) {
  ojson doc = make_envelope(echo, torus_mode ? "torus-map-point" : "map-point");
  doc["result"] = presentation_to_json(I, var_prefix, torus_mode);
  return finish_document(std::move(doc));
}

std::string fibre(const Echo& echo, bool same) {
  ojson doc = make_envelope(echo, "fibre");
  doc["result"] = ojson{{"same_fibre", same}};
  return finish_document(std::move(doc));
}

std::string orbit(const Echo& echo, const std::vector<Point>& points) {
  ojson doc = make_envelope(echo, "orbit-sample");
  ojson r;
  r["count"] = points.size();
  if (!points.empty()) r["group"] = group_to_json(points.front().group());
  r["points"] = ojson::array();
  for (const Point& p : points) {
    ojson coords = ojson::array();
    for (std::size_t i = 0; i < p.n(); ++i) {
      if (p.is_zero(i))
        coords.push_back(0);
      else
        coords.push_back(element_to_json(p.coord(i)));
    }
    r["points"].push_back(ojson{{"coords", std::move(coords)}});
  }
  doc["result"] = std::move(r);
  return finish_document(std::move(doc));
}

std::string refine(const Echo& echo, const RefineResult& r,
                   const std::string& var_prefix) {
  ojson doc = make_envelope(echo, "refine");
  ojson rj;
  rj["radical_inclusion"] = r.radical_inclusion;
  rj["strata_checked"] = r.strata_checked;
  if (r.triangle) {
    ojson t;
    t["c1"] = presentation_to_json(r.triangle->first, var_prefix, false);
    t["c2"] = presentation_to_json(r.triangle->second, var_prefix, false);
    rj["triangle"] = std::move(t);
  }
  doc["result"] = std::move(rj);
  return finish_document(std::move(doc));
}

std::string grading_report(const Echo& echo, const GradingReport& rep) {
  ojson doc = make_envelope(echo, "check-grading");
  ojson r;
  r["degrees_generate"] = rep.degrees_generate;
  r["torsion_visible"] = rep.torsion_visible;
  r["pass"] = rep.pass();
  doc["result"] = std::move(r);
  return finish_document(std::move(doc), rep.notes);
}

std::string error_document(const std::string& kind, const std::string& message) {
  ojson doc;
  doc["error"] = ojson{{"kind", kind}, {"message", message}};
  return dump_document(doc);
}

std::string reserialize(const std::string& text) {
  ojson doc = parse_json(text);
  bool is_error = doc.contains("error");
  bool is_result =
      doc.contains("command") && doc.contains("inputs") && doc.contains("result");
  if (!is_error && !is_result)
    throw validation_error("not a result document");
  return dump_document(doc);
}

}  // namespace resultdoc

}  // namespace qspectra
