#include "vapp/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "vapp/finite_set.hpp"

namespace vapp {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw StructuralError("bad integer for " + what + ": '" + s + "'");
  }
}

std::vector<double> parse_doubles(const std::string& s,
                                  const std::string& what) {
  std::vector<double> out;
  for (const auto& part : split(s, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(part, &pos));
      if (pos != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw StructuralError("bad number for " + what + ": '" + part + "'");
    }
  }
  return out;
}

TNorm parse_tnorm(const std::string& s) {
  if (s == "min") return TNorm::Min;
  if (s == "lukasiewicz") return TNorm::Lukasiewicz;
  throw StructuralError("unknown t-norm '" + s + "'");
}

Elt label_index(const Quantale& q, const std::string& label) {
  for (Elt a = 0; a < q.size(); ++a)
    if (q.label(a) == label) return a;
  throw StructuralError("unknown quantale element '" + label + "'");
}

int point_index(const std::vector<std::string>& points,
                const std::string& label) {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i] == label) return static_cast<int>(i);
  throw StructuralError("unknown point '" + label + "'");
}

const Json& field(const Json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key))
    throw StructuralError("missing field '" + key + "'");
  return j.at(key);
}

std::string str_field(const Json& j, const std::string& key) {
  const Json& v = field(j, key);
  if (!v.is_string())
    throw StructuralError("field '" + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<std::string> read_points(const Json& j) {
  std::vector<std::string> points;
  for (const auto& p : field(j, "points")) points.push_back(p);
  if (points.size() > 20) throw StructuralError("too many points");
  return points;
}

Mask subset_mask(const Json& set, const std::vector<std::string>& points) {
  Mask m = 0;
  for (const auto& p : set) m |= Mask{1} << point_index(points, p);
  return m;
}

Json subset_labels(Mask m, const std::vector<std::string>& points) {
  Json arr = Json::array();
  for (int x : mask_elems(m)) arr.push_back(points[x]);
  return arr;
}

}  // namespace

ParsedQuantale parse_builtin(const std::string& spec) {
  ParsedQuantale pq;
  pq.descriptor = spec;
  auto parts = split(spec, ':');
  const std::string& name = parts[0];
  auto want = [&](std::size_t n) {
    if (parts.size() != n)
      throw StructuralError("builtin '" + name + "' takes " +
                            std::to_string(n - 1) + " parameter(s)");
  };
  if (name == "terminal") {
    want(1);
    pq.q = terminal_quantale();
  } else if (name == "two_chain") {
    want(1);
    pq.q = two_chain();
  } else if (name == "chain_frame") {
    want(2);
    pq.q = chain_frame(parse_int(parts[1], "chain_frame"));
  } else if (name == "cost_chain") {
    want(2);
    pq.q = cost_chain(parse_int(parts[1], "cost_chain"));
  } else if (name == "unit_grid") {
    want(3);
    pq.q = unit_grid(parse_int(parts[1], "unit_grid"), parse_tnorm(parts[2]));
  } else if (name == "delta_grid") {
    want(4);
    pq.grid = make_delta_grid(parse_doubles(parts[1], "times"),
                              parse_doubles(parts[2], "values"),
                              parse_tnorm(parts[3]));
    pq.q = pq.grid->q;
  } else if (name == "downset") {
    if (parts.size() < 2) throw StructuralError("downset needs a base");
    ParsedQuantale base =
        parse_builtin(spec.substr(std::string("downset:").size()));
    pq.downset = make_downset(base.q);
    pq.q = pq.downset->q;
  } else {
    throw StructuralError("unknown builtin quantale '" + name + "'");
  }
  return pq;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw StructuralError("parse error in '" + path + "': " + e.what());
  }
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw StructuralError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

ParsedQuantale quantale_from_json(const Json& j) {
  if (j.is_string()) return parse_builtin(j.get<std::string>());
  if (j.contains("builtin")) return parse_builtin(str_field(j, "builtin"));
  ParsedQuantale pq;
  auto q = std::make_shared<Quantale>();
  if (j.contains("name")) q->name = str_field(j, "name");
  for (const auto& e : field(j, "elements"))
    q->labels.push_back(e.get<std::string>());
  const int n = q->size();
  if (n == 0 || n > 32) throw StructuralError("bad element count");
  q->leq_tab.assign(n * n, 0);
  for (const auto& pair : field(j, "leq")) {
    if (!pair.is_array() || pair.size() != 2)
      throw StructuralError("leq entries must be [a,b] pairs");
    Elt a = label_index(*q, pair[0]);
    Elt b = label_index(*q, pair[1]);
    q->leq_tab[a * n + b] = 1;
  }
  q->finalize();
  q->tensor_tab.assign(n * n, -1);
  for (const auto& triple : field(j, "tensor")) {
    if (!triple.is_array() || triple.size() != 3)
      throw StructuralError("tensor entries must be [a,b,c] triples");
    Elt a = label_index(*q, triple[0]);
    Elt b = label_index(*q, triple[1]);
    q->tensor_tab[a * n + b] = label_index(*q, triple[2]);
  }
  for (Elt v : q->tensor_tab)
    if (v < 0) throw StructuralError("tensor table has missing entries");
  q->unit = label_index(*q, str_field(j, "unit"));
  pq.q = q;
  return pq;
}

Json quantale_to_json(const ParsedQuantale& pq) {
  Json j;
  j["type"] = "quantale";
  if (!pq.descriptor.empty()) {
    j["builtin"] = pq.descriptor;
    return j;
  }
  const Quantale& q = *pq.q;
  if (!q.name.empty()) j["name"] = q.name;
  j["elements"] = q.labels;
  Json leq = Json::array();
  for (Elt a = 0; a < q.size(); ++a)
    for (Elt b = 0; b < q.size(); ++b)
      if (q.leq(a, b)) leq.push_back(Json::array({q.label(a), q.label(b)}));
  j["leq"] = leq;
  Json tensor = Json::array();
  for (Elt a = 0; a < q.size(); ++a)
    for (Elt b = 0; b < q.size(); ++b)
      tensor.push_back(
          Json::array({q.label(a), q.label(b), q.label(q.tensor(a, b))}));
  j["tensor"] = tensor;
  j["unit"] = q.label(q.unit);
  return j;
}

SpaceDoc space_from_json(const Json& j) {
  SpaceDoc doc;
  doc.pq = quantale_from_json(field(j, "quantale"));
  doc.points = read_points(j);
  const int n = static_cast<int>(doc.points.size());
  doc.presentation = str_field(j, "presentation");
  const Quantale& q = *doc.pq.q;
  if (doc.presentation == "distance") {
    doc.c = DistanceStructure(doc.pq.q, n);
    std::vector<bool> seen(std::size_t{1} << n, false);
    for (const auto& row : field(j, "table")) {
      Mask A = subset_mask(field(row, "set"), doc.points);
      if (seen[A]) throw StructuralError("duplicate subset row");
      seen[A] = true;
      const Json& dist = field(row, "distances");
      for (const auto& p : doc.points)
        doc.c.at(A, point_index(doc.points, p)) =
            label_index(q, str_field(dist, p));
    }
    for (Mask A = 0; A < (Mask{1} << n); ++A)
      if (!seen[A]) throw StructuralError("missing subset row");
  } else if (doc.presentation == "tower") {
    Tower t;
    t.q = doc.pq.q;
    t.n = n;
    t.ops.assign(q.size(), std::vector<Mask>(std::size_t{1} << n, 0));
    std::vector<bool> seen(q.size(), false);
    for (const auto& level : field(j, "table")) {
      Elt v = label_index(q, str_field(level, "level"));
      if (seen[v]) throw StructuralError("duplicate tower level");
      seen[v] = true;
      for (const auto& row : field(level, "layers"))
        t.ops[v][subset_mask(field(row, "set"), doc.points)] =
            subset_mask(field(row, "closure"), doc.points);
    }
    for (Elt v = 0; v < q.size(); ++v)
      if (!seen[v]) throw StructuralError("missing tower level");
    doc.c = from_tower(t);
  } else {
    throw StructuralError("unknown presentation '" + doc.presentation + "'");
  }
  return doc;
}

Json space_to_json(const DistanceStructure& c, const ParsedQuantale& pq,
                   const std::vector<std::string>& points,
                   const std::string& presentation) {
  Json j;
  j["type"] = "space";
  j["quantale"] = quantale_to_json(pq);
  j["points"] = points;
  j["presentation"] = presentation;
  const Quantale& q = *c.q;
  Json table = Json::array();
  if (presentation == "distance") {
    for (Mask A = 0; A < (Mask{1} << c.n); ++A) {
      Json row;
      row["set"] = subset_labels(A, points);
      Json dist;
      for (int x = 0; x < c.n; ++x) dist[points[x]] = q.label(c.at(A, x));
      row["distances"] = dist;
      table.push_back(row);
    }
  } else if (presentation == "tower") {
    Tower t = to_tower(c);
    for (Elt v = 0; v < q.size(); ++v) {
      Json level;
      level["level"] = q.label(v);
      Json layers = Json::array();
      for (Mask A = 0; A < (Mask{1} << c.n); ++A) {
        Json row;
        row["set"] = subset_labels(A, points);
        row["closure"] = subset_labels(t.ops[v][A], points);
        layers.push_back(row);
      }
      level["layers"] = layers;
      table.push_back(level);
    }
  } else {
    throw StructuralError("unknown presentation '" + presentation + "'");
  }
  j["table"] = table;
  return j;
}

ConvergenceDoc convergence_from_json(const Json& j) {
  ConvergenceDoc doc;
  doc.pq = quantale_from_json(field(j, "quantale"));
  doc.points = read_points(j);
  const int n = static_cast<int>(doc.points.size());
  doc.l = ConvergenceStructure(doc.pq.q, n);
  const Json& table = field(j, "table");
  for (const auto& w : doc.points)
    for (const auto& y : doc.points)
      doc.l.at(point_index(doc.points, w), point_index(doc.points, y)) =
          label_index(*doc.pq.q, str_field(field(table, w), y));
  return doc;
}

Json convergence_to_json(const ConvergenceStructure& l,
                         const ParsedQuantale& pq,
                         const std::vector<std::string>& points) {
  Json j;
  j["type"] = "convergence";
  j["quantale"] = quantale_to_json(pq);
  j["points"] = points;
  Json table;
  for (int w = 0; w < l.n; ++w) {
    Json row;
    for (int y = 0; y < l.n; ++y) row[points[y]] = l.q->label(l.at(w, y));
    table[points[w]] = row;
  }
  j["table"] = table;
  return j;
}

MapDoc map_from_json(const Json& j) {
  MapDoc doc;
  doc.source = quantale_from_json(field(j, "source"));
  doc.target = quantale_from_json(field(j, "target"));
  doc.f.source = doc.source.q;
  doc.f.target = doc.target.q;
  if (j.contains("name")) doc.f.name = str_field(j, "name");
  doc.f.table.resize(doc.source.q->size());
  const Json& table = field(j, "table");
  for (Elt a = 0; a < doc.source.q->size(); ++a)
    doc.f.table[a] =
        label_index(*doc.target.q, str_field(table, doc.source.q->label(a)));
  return doc;
}

Json map_to_json(const MonotoneMap& f, const ParsedQuantale& src,
                 const ParsedQuantale& dst) {
  Json j;
  j["type"] = "map";
  if (!f.name.empty()) j["name"] = f.name;
  j["source"] = quantale_to_json(src);
  j["target"] = quantale_to_json(dst);
  Json table;
  for (Elt a = 0; a < f.source->size(); ++a)
    table[f.source->label(a)] = f.target->label(f(a));
  j["table"] = table;
  return j;
}

MonotoneMap builtin_map(const std::string& name, const ParsedQuantale& src,
                        const ParsedQuantale& dst) {
  auto need_two = [&](const ParsedQuantale& pq, const char* side) {
    if (pq.q->size() != 2)
      throw StructuralError(std::string(side) + " of '" + name +
                            "' must be the two chain");
  };
  auto need_grid = [&](const ParsedQuantale& pq,
                       const char* side) -> const DeltaGrid& {
    if (!pq.grid)
      throw StructuralError(std::string(side) + " of '" + name +
                            "' must be a distance grid");
    return *pq.grid;
  };
  auto need_downset = [&](const ParsedQuantale& pq,
                          const char* side) -> const DownsetQuantale& {
    if (!pq.downset)
      throw StructuralError(std::string(side) + " of '" + name +
                            "' must be a downset quantale");
    return *pq.downset;
  };
  if (name == "iota") {
    need_two(src, "source");
    return iota_map(dst.q);
  }
  if (name == "pi") {
    need_two(dst, "target");
    return pi_map(src.q);
  }
  if (name == "o") {
    need_two(dst, "target");
    return o_map(src.q);
  }
  if (name == "sigma") return sigma_map(src.q, need_grid(dst, "target"));
  if (name == "rho") return rho_map(need_grid(src, "source"), dst.q);
  if (name == "lambda") return lambda_map(need_grid(src, "source"), dst.q);
  if (name == "tau") {
    const DeltaGrid& g = need_grid(dst, "target");
    const int m = static_cast<int>(g.values.size());
    if (src.q->size() != m)
      throw StructuralError("tau source must match the value grid");
    for (int i = 0; i < m; ++i) {
      double v = 0;
      std::istringstream(src.q->label(i)) >> v;
      if (std::abs(v - g.values[i]) > 1e-9)
        throw StructuralError("tau source values differ from the grid");
    }
    MonotoneMap f;
    f.source = src.q;
    f.target = g.q;
    f.table.resize(m);
    for (int i = 0; i < m; ++i) f.table[i] = g.tau(i);
    f.name = "tau";
    return f;
  }
  if (name == "downset.up") return totally_below_map(need_downset(dst, "target"));
  if (name == "downset.sup") return sup_map(need_downset(src, "source"));
  if (name == "downset.down") return down_map(need_downset(dst, "target"));
  throw StructuralError("unknown builtin map '" + name + "'");
}

}  // namespace vapp
