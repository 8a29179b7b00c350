#include "sylab/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace sylab {

namespace {

[[noreturn]] void fail(const std::string &where, const std::string &what) {
  throw ParseError(where + ": " + what);
}

void only_keys(const Json &j, const std::string &where,
               const std::set<std::string> &allowed) {
  if (!j.is_object())
    fail(where, "expected an object");
  for (const auto &[key, value] : j.items())
    if (!allowed.count(key))
      fail(where, "unknown key \"" + key + "\"");
}

const Json &require(const Json &j, const std::string &where,
                    const std::string &key) {
  auto it = j.find(key);
  if (it == j.end())
    fail(where, "missing key \"" + key + "\"");
  return *it;
}

std::string as_string(const Json &j, const std::string &where) {
  if (!j.is_string())
    fail(where, "expected a string");
  return j.get<std::string>();
}

std::int64_t as_int(const Json &j, const std::string &where) {
  if (!j.is_number_integer())
    fail(where, "expected an integer");
  return j.get<std::int64_t>();
}

std::size_t as_count(const Json &j, const std::string &where) {
  const auto v = as_int(j, where);
  if (v < 0)
    fail(where, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

const Json &as_array(const Json &j, const std::string &where) {
  if (!j.is_array())
    fail(where, "expected an array");
  return j;
}

FMatrix matrix_from_json(const PrimeField &k, const Json &j, std::size_t rows,
                         std::size_t cols, const std::string &where) {
  as_array(j, where);
  if (j.size() != rows)
    fail(where, "expected " + std::to_string(rows) + " rows, got " +
                    std::to_string(j.size()));
  std::vector<std::vector<std::int64_t>> v;
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rw = where + "[" + std::to_string(r) + "]";
    as_array(j[r], rw);
    if (j[r].size() != cols)
      fail(rw, "expected " + std::to_string(cols) + " entries, got " +
                   std::to_string(j[r].size()));
    std::vector<std::int64_t> row;
    for (std::size_t c = 0; c < cols; ++c)
      row.push_back(as_int(j[r][c], rw + "[" + std::to_string(c) + "]"));
    v.push_back(std::move(row));
  }
  return FMatrix::from_rows(k, rows, cols, v);
}

} // namespace

AlgebraSpec algebra_spec_from_json(const Json &j) {
  only_keys(j, "algebra",
            {"field", "nilpotency_bound", "vertices", "arrows", "relations"});
  const Json &field = require(j, "algebra", "field");
  only_keys(field, "algebra.field", {"p"});
  const auto p = as_int(require(field, "algebra.field", "p"), "algebra.field.p");
  if (p < 2 || p >= (std::int64_t{1} << 31))
    fail("algebra.field.p", "must satisfy 2 <= p < 2^31");
  PrimeField k(2);
  try {
    k = PrimeField(static_cast<std::uint32_t>(p));
  } catch (const Error &e) {
    fail("algebra.field.p", e.what());
  }

  std::vector<std::string> vertices;
  const auto &vs = as_array(require(j, "algebra", "vertices"), "algebra.vertices");
  for (std::size_t i = 0; i < vs.size(); ++i)
    vertices.push_back(
        as_string(vs[i], "algebra.vertices[" + std::to_string(i) + "]"));

  std::vector<Arrow> arrows;
  auto index_of = [&](const std::string &label, const std::string &where) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == label)
        return i;
    fail(where, "unknown vertex \"" + label + "\"");
  };
  if (j.contains("arrows")) {
    const auto &as = as_array(j["arrows"], "algebra.arrows");
    for (std::size_t i = 0; i < as.size(); ++i) {
      const std::string w = "algebra.arrows[" + std::to_string(i) + "]";
      only_keys(as[i], w, {"name", "from", "to"});
      arrows.push_back(
          {as_string(require(as[i], w, "name"), w + ".name"),
           index_of(as_string(require(as[i], w, "from"), w + ".from"), w + ".from"),
           index_of(as_string(require(as[i], w, "to"), w + ".to"), w + ".to")});
    }
  }

  std::vector<Relation> relations;
  if (j.contains("relations")) {
    const auto &rs = as_array(j["relations"], "algebra.relations");
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const std::string w = "algebra.relations[" + std::to_string(i) + "]";
      Relation rel;
      const auto &ts = as_array(rs[i], w);
      for (std::size_t t = 0; t < ts.size(); ++t) {
        const std::string wt = w + "[" + std::to_string(t) + "]";
        only_keys(ts[t], wt, {"coef", "path"});
        RelationTerm term;
        term.coef = static_cast<std::int64_t>(
            k.reduce(as_int(require(ts[t], wt, "coef"), wt + ".coef")));
        const auto &path = as_array(require(ts[t], wt, "path"), wt + ".path");
        for (std::size_t s = 0; s < path.size(); ++s)
          term.path.push_back(
              as_string(path[s], wt + ".path[" + std::to_string(s) + "]"));
        rel.terms.push_back(std::move(term));
      }
      relations.push_back(std::move(rel));
    }
  }

  const auto m = as_count(require(j, "algebra", "nilpotency_bound"),
                          "algebra.nilpotency_bound");
  try {
    return {k, Quiver(vertices, arrows), relations, m};
  } catch (const Error &e) {
    fail("algebra", e.what());
  }
}

Json algebra_spec_to_json(const AlgebraSpec &spec) {
  Json j;
  j["field"] = {{"p", spec.field.characteristic()}};
  j["nilpotency_bound"] = spec.nilpotency_bound;
  j["vertices"] = spec.quiver.vertices();
  j["arrows"] = Json::array();
  for (const auto &a : spec.quiver.arrows())
    j["arrows"].push_back({{"name", a.name},
                           {"from", spec.quiver.vertices()[a.source]},
                           {"to", spec.quiver.vertices()[a.target]}});
  j["relations"] = Json::array();
  for (const auto &r : spec.relations) {
    Json terms = Json::array();
    for (const auto &t : r.terms)
      terms.push_back({{"coef", t.coef}, {"path", t.path}});
    j["relations"].push_back(std::move(terms));
  }
  return j;
}

Representation module_from_json(const AlgebraPtr &a, const Json &j) {
  only_keys(j, "module", {"dims", "maps"});
  const Quiver &q = a->quiver();
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  if (j.contains("dims")) {
    const auto &d = j["dims"];
    if (!d.is_object())
      fail("module.dims", "expected an object");
    for (const auto &[label, value] : d.items()) {
      if (!q.has_vertex(label))
        fail("module.dims", "unknown vertex \"" + label + "\"");
      dims[q.vertex_index(label)] = as_count(value, "module.dims." + label);
    }
  }
  std::vector<FMatrix> maps;
  for (const auto &arrow : q.arrows())
    maps.emplace_back(a->field(), dims[arrow.target], dims[arrow.source]);
  if (j.contains("maps")) {
    const auto &ms = j["maps"];
    if (!ms.is_object())
      fail("module.maps", "expected an object");
    for (const auto &[name, value] : ms.items()) {
      if (!q.has_arrow(name))
        fail("module.maps", "unknown arrow \"" + name + "\"");
      const auto i = q.arrow_index(name);
      maps[i] = matrix_from_json(a->field(), value, dims[q.arrow(i).target],
                                 dims[q.arrow(i).source], "module.maps." + name);
    }
  }
  Representation m(a, dims, maps);
  if (auto err = m.validate())
    throw ParseError("module: " + *err);
  return m;
}

Json matrix_to_json(const FMatrix &m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json module_to_json(const Representation &m) {
  const Quiver &q = m.algebra()->quiver();
  Json dims = Json::object(), maps = Json::object();
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    dims[q.vertices()[v]] = m.dim(v);
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    maps[q.arrow(a).name] = matrix_to_json(m.map(a));
  return {{"dims", dims}, {"maps", maps}};
}

Json parse_json_text(const std::string &text, const std::string &origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error &e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(origin + ":" + std::to_string(line) + ":" +
                     std::to_string(col) + ": invalid JSON");
  }
}

Json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

} // namespace sylab
