#include "resfold/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "json.hpp"

namespace resfold {

using Json = nlohmann::ordered_json;

namespace {

Json matrix_json(const PolyMatrix& m) {
  Json j = Json::object();
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = m.to_strings();
  return j;
}

Json labels_json(const std::vector<std::vector<std::string>>& labels) { return labels; }

struct Reader {
  const Json& j;
  std::string path;

  [[noreturn]] void fail(const std::string& what) const { throw IoError(path, what); }

  Reader at(const std::string& key) const {
    if (!j.is_object()) fail("expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw IoError(path.empty() ? key : path + "." + key, "missing");
    return {*it, path.empty() ? key : path + "." + key};
  }
  Reader at(std::size_t i) const {
    if (!j.is_array() || i >= j.size()) fail("index out of range");
    return {j[i], path + "[" + std::to_string(i) + "]"};
  }
  bool has(const std::string& key) const { return j.is_object() && j.contains(key); }
  void only(std::initializer_list<const char*> keys) const {
    if (!j.is_object()) fail("expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
      bool known = false;
      for (const char* k : keys) known = known || it.key() == k;
      if (!known) throw IoError(path.empty() ? it.key() : path + "." + it.key(), "unknown field");
    }
  }
  const Json& array() const {
    if (!j.is_array()) fail("expected an array");
    return j;
  }
  std::string str() const {
    if (!j.is_string()) fail("expected a string");
    return j.get<std::string>();
  }
  int integer() const {
    if (!j.is_number_integer()) fail("expected an integer");
    return j.get<int>();
  }
  std::vector<int> ints() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < array().size(); ++i) out.push_back(at(i).integer());
    return out;
  }
  std::vector<std::string> strings() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < array().size(); ++i) out.push_back(at(i).str());
    return out;
  }
};

Poly read_poly(const Reader& r, const RingPtr& ring) {
  std::string text = r.str();
  try {
    return Poly::parse(ring, text);
  } catch (const Error& e) {
    r.fail(e.what());
  }
}

PolyMatrix read_matrix(const Reader& r, const RingPtr& ring) {
  r.only({"rows", "cols", "entries", "field"});
  if (r.has("field") && Field::parse(r.at("field").str()) != ring->field())
    r.at("field").fail("field differs from the ring");
  int rows = r.at("rows").integer(), cols = r.at("cols").integer();
  if (rows < 0 || cols < 0) r.fail("negative size");
  Reader e = r.at("entries");
  if (e.array().size() != static_cast<std::size_t>(rows)) e.fail("expected " + std::to_string(rows) + " rows");
  PolyMatrix m(ring, rows, cols);
  for (int i = 0; i < rows; ++i) {
    Reader row = e.at(static_cast<std::size_t>(i));
    if (row.array().size() != static_cast<std::size_t>(cols)) row.fail("expected " + std::to_string(cols) + " entries");
    for (int k = 0; k < cols; ++k) m.at(i, k) = read_poly(row.at(static_cast<std::size_t>(k)), ring);
  }
  return m;
}

RingPtr read_ring(const Reader& r) {
  r.only({"variables", "field", "multidegrees"});
  auto vars = r.at("variables").strings();
  Field field = Field::rationals();
  try {
    field = Field::parse(r.at("field").str());
  } catch (const IoError&) {
    throw;
  } catch (const Error& e) {
    r.at("field").fail(e.what());
  }
  std::vector<std::vector<int>> deg;
  if (r.has("multidegrees")) {
    Reader d = r.at("multidegrees");
    for (std::size_t i = 0; i < d.array().size(); ++i) deg.push_back(d.at(i).ints());
    if (deg.size() != vars.size()) d.fail("one multidegree per variable expected");
  }
  try {
    return make_ring(vars, field, deg);
  } catch (const Error& e) {
    r.fail(e.what());
  }
}

Json spinor_json(const SpinorVector& s) {
  Json j = Json::object();
  j["n"] = s.n;
  j["parity"] = s.parity ? "odd" : "even";
  Json coeffs = Json::array();
  for (Subset k : spinor_basis(s.n, s.parity)) {
    auto it = s.coeffs.find(k);
    if (it == s.coeffs.end()) continue;
    Json e = Json::object();
    e["subset"] = subset_indices(k);
    e["poly"] = it->second.to_string();
    coeffs.push_back(e);
  }
  j["coeffs"] = coeffs;
  return j;
}

SpinorVector read_spinor(const Reader& r, const RingPtr& ring) {
  r.only({"n", "parity", "coeffs"});
  SpinorVector s;
  s.n = r.at("n").integer();
  if (s.n < 1 || s.n > 16) r.at("n").fail("out of range");
  std::string parity = r.at("parity").str();
  if (parity != "odd" && parity != "even") r.at("parity").fail("expected odd or even");
  s.parity = parity == "odd" ? 1 : 0;
  Reader c = r.at("coeffs");
  for (std::size_t i = 0; i < c.array().size(); ++i) {
    Reader e = c.at(i);
    e.only({"subset", "poly"});
    Subset k = 0;
    int prev = 0;
    for (int idx : e.at("subset").ints()) {
      if (idx <= prev || idx > s.n) e.at("subset").fail("indices must increase within 1..n");
      k |= 1u << (idx - 1);
      prev = idx;
    }
    if ((__builtin_popcount(k) & 1) != s.parity) e.at("subset").fail("wrong parity");
    Poly p = read_poly(e.at("poly"), ring);
    if (!p.is_zero()) s.coeffs[k] = p;
  }
  return s;
}

void attach_labels(FreeComplex& f) {
  if (f.labels.size() != f.ranks.size()) return;
  for (int k = 1; k <= f.length(); ++k) {
    f.diff(k).row_labels = f.labels[k - 1];
    f.diff(k).col_labels = f.labels[k];
  }
}

}  // namespace

std::string matrix_to_json(const PolyMatrix& m) { return matrix_json(m).dump(2); }

std::string write_document(const Document& doc) {
  const RingPtr& ring = doc.ring;
  Json j = Json::object();
  j["schema"] = kSchema;
  Json rj = Json::object();
  rj["variables"] = ring->variables();
  rj["field"] = ring->field().name();
  if (ring->graded()) rj["multidegrees"] = ring->multidegrees();
  j["ring"] = rj;
  if (doc.complex) {
    Json c = Json::object();
    c["ranks"] = doc.complex->ranks;
    Json d = Json::array();
    for (const auto& m : doc.complex->d) d.push_back(matrix_json(m));
    c["differentials"] = d;
    if (!doc.complex->labels.empty()) c["labels"] = labels_json(doc.complex->labels);
    j["complex"] = c;
  }
  if (doc.selfdual) {
    Json s = Json::object();
    s["form"] = matrix_json(doc.selfdual->form);
    s["twist"] = doc.selfdual->twist;
    s["twist_degree"] = doc.selfdual->twist_degree;
    j["selfdual"] = s;
  }
  if (doc.frame) {
    Json f = Json::object();
    f["n"] = doc.frame->n;
    f["embed"] = matrix_json(doc.frame->embed);
    f["form"] = matrix_json(doc.frame->form);
    j["frame"] = f;
  }
  if (doc.multiplication) {
    Json m = Json::object();
    m["m11"] = matrix_json(doc.multiplication->m11);
    m["m12"] = matrix_json(doc.multiplication->m12);
    j["multiplication"] = m;
  }
  if (doc.basis_change) j["basis_change"] = matrix_json(*doc.basis_change);
  if (doc.spinor) j["spinor"] = spinor_json(*doc.spinor);
  if (doc.w) j["w"] = matrix_json(*doc.w);
  if (!doc.report.empty()) j["report"] = Json::parse(doc.report);
  return j.dump(2) + "\n";
}

Document parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError("", std::string("invalid JSON: ") + e.what());
  }
  Reader root{j, ""};
  root.only({"schema", "ring", "complex", "selfdual", "frame", "multiplication", "basis_change", "spinor", "w", "report"});
  if (root.at("schema").str() != kSchema) root.at("schema").fail("expected " + std::string(kSchema));
  Document doc;
  doc.ring = read_ring(root.at("ring"));
  const RingPtr& ring = doc.ring;
  if (root.has("complex")) {
    Reader c = root.at("complex");
    c.only({"ranks", "differentials", "labels"});
    auto ranks = c.at("ranks").ints();
    Reader d = c.at("differentials");
    std::vector<PolyMatrix> ds;
    for (std::size_t i = 0; i < d.array().size(); ++i) ds.push_back(read_matrix(d.at(i), ring));
    if (ranks.size() != ds.size() + 1) c.at("ranks").fail("expected one rank per module");
    for (std::size_t i = 0; i < ds.size(); ++i)
      if (ds[i].rows() != ranks[i] || ds[i].cols() != ranks[i + 1])
        d.at(i).fail("shape disagrees with ranks");
    FreeComplex f = FreeComplex::unchecked(ring, ds);
    f.ranks = ranks;
    if (c.has("labels")) {
      Reader l = c.at("labels");
      for (std::size_t i = 0; i < l.array().size(); ++i) f.labels.push_back(l.at(i).strings());
      if (f.labels.size() != ranks.size()) l.fail("expected one label list per module");
      for (std::size_t i = 0; i < ranks.size(); ++i)
        if (f.labels[i].size() != static_cast<std::size_t>(ranks[i])) l.at(i).fail("expected one label per basis element");
    }
    attach_labels(f);
    doc.complex = std::move(f);
  }
  if (root.has("selfdual")) {
    Reader s = root.at("selfdual");
    s.only({"form", "twist", "twist_degree"});
    SelfDualStructure sd;
    sd.form = read_matrix(s.at("form"), ring);
    sd.twist = s.at("twist").str();
    sd.twist_degree = s.at("twist_degree").ints();
    doc.selfdual = std::move(sd);
  }
  if (root.has("frame")) {
    Reader f = root.at("frame");
    f.only({"n", "embed", "form"});
    HyperbolicFrame fr{f.at("n").integer(), read_matrix(f.at("embed"), ring), read_matrix(f.at("form"), ring)};
    if (!fr.valid()) f.fail("not a hyperbolic frame");
    doc.frame = std::move(fr);
  }
  if (root.has("multiplication")) {
    Reader m = root.at("multiplication");
    m.only({"m11", "m12"});
    doc.multiplication = MultiplicationStructure{read_matrix(m.at("m11"), ring), read_matrix(m.at("m12"), ring)};
  }
  if (root.has("basis_change")) doc.basis_change = read_matrix(root.at("basis_change"), ring);
  if (root.has("spinor")) doc.spinor = read_spinor(root.at("spinor"), ring);
  if (root.has("w")) doc.w = read_matrix(root.at("w"), ring);
  if (root.has("report")) doc.report = root.at("report").j.dump();
  return doc;
}

Document read_document_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path, "cannot open");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return parse_document(text);
  } catch (const IoError& e) {
    throw IoError(path == "-" ? "<stdin>" : path, e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path, "cannot write");
  out << text;
  if (!out) throw IoError(path, "write failed");
}

}  // namespace resfold
