#include "mixknap/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mixknap/error.hpp"

namespace mixknap {

namespace {

using ojson = nlohmann::ordered_json;

// DOM builder that keeps the raw token of every decimal literal so values
// like 0.2 can be converted to exact rationals instead of doubles.
class ExactSax {
 public:
  using json = ojson;

  bool null() { return put(nullptr); }
  bool boolean(bool v) { return put(v); }
  bool number_integer(std::int64_t v) { return put(v); }
  bool number_unsigned(std::uint64_t v) { return put(v); }
  bool number_float(double, const std::string& raw) {
    json token;
    token["$rational"] = raw;
    return put(std::move(token));
  }
  bool string(std::string& v) { return put(v); }
  bool binary(json::binary_t& v) { return put(v); }

  bool start_object(std::size_t) {
    stack_.push_back(json::object());
    return true;
  }
  bool key(std::string& k) {
    keys_.push_back(k);
    return true;
  }
  bool end_object() { return pop(); }
  bool start_array(std::size_t) {
    stack_.push_back(json::array());
    return true;
  }
  bool end_array() { return pop(); }

  bool parse_error(std::size_t position, const std::string&,
                   const nlohmann::detail::exception& ex) {
    throw Error("JSON parse error at byte " + std::to_string(position) + ": " +
                ex.what());
  }

  json take() { return std::move(root_); }

 private:
  bool put(json value) {
    if (stack_.empty()) {
      root_ = std::move(value);
      return true;
    }
    json& top = stack_.back();
    if (top.is_array()) {
      top.push_back(std::move(value));
    } else {
      top[keys_.back()] = std::move(value);
      keys_.pop_back();
    }
    return true;
  }

  bool pop() {
    json done = std::move(stack_.back());
    stack_.pop_back();
    return put(std::move(done));
  }

  json root_;
  std::vector<json> stack_;
  std::vector<std::string> keys_;
};

ojson parse_exact(std::istream& in) {
  ExactSax sax;
  if (!ojson::sax_parse(in, &sax))
    throw Error("JSON parse failed");
  return sax.take();
}

ojson parse_exact(const std::string& text) {
  ExactSax sax;
  if (!ojson::sax_parse(text, &sax))
    throw Error("JSON parse failed");
  return sax.take();
}

Rat rat_from_json(const ojson& v) {
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_number_unsigned())
    return Rat(static_cast<unsigned long>(v.get<std::uint64_t>()));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_object() && v.contains("$rational"))
    return parse_rational(v["$rational"].get<std::string>());
  if (v.is_number_float()) {
    // Only reachable for documents built in memory; binary-exact.
    Rat r(v.get<double>());
    r.canonicalize();
    return r;
  }
  throw Error("expected a rational value");
}

RatVector rat_vector_from_json(const ojson& v) {
  if (!v.is_array()) throw Error("expected an array of rationals");
  RatVector out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(rat_from_json(e));
  return out;
}

ojson rat_to_json(const Rat& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p())
    return ojson(r.get_num().get_si());
  return ojson(to_string(r));
}

ojson rat_vector_to_json(const RatVector& v) {
  ojson arr = ojson::array();
  for (const Rat& r : v) arr.push_back(rat_to_json(r));
  return arr;
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return in;
}

}  // namespace

Instance load_instance(std::istream& in) {
  ojson doc = parse_exact(in);
  if (!doc.is_object()) throw Error("instance file must hold a JSON object");
  if (doc.contains("xi")) {
    ScenarioSource src;
    src.xi = rat_vector_from_json(doc.at("xi"));
    src.pi = rat_vector_from_json(doc.at("pi"));
    src.epsilon = rat_from_json(doc.at("epsilon"));
    return from_chance_constraint(src);
  }
  return Instance::canonicalize(rat_vector_from_json(doc.at("h")),
                                rat_vector_from_json(doc.at("a")),
                                rat_from_json(doc.at("p")));
}

Instance load_instance_file(const std::string& path) {
  auto in = open_file(path);
  return load_instance(in);
}

std::string instance_to_json(const Instance& instance) {
  ojson doc;
  doc["h"] = rat_vector_to_json(instance.h_vec());
  doc["a"] = rat_vector_to_json(instance.a_vec());
  doc["p"] = rat_to_json(instance.p());
  return doc.dump(2) + "\n";
}

std::string source_to_json(const ScenarioSource& source) {
  ojson doc;
  doc["xi"] = rat_vector_to_json(source.xi);
  doc["pi"] = rat_vector_to_json(source.pi);
  doc["epsilon"] = rat_to_json(source.epsilon);
  return doc.dump(2) + "\n";
}

SeparationQuery load_query(std::istream& in) {
  ojson doc = parse_exact(in);
  SeparationQuery query;
  query.y_star = rat_from_json(doc.at("y"));
  query.z_star = rat_vector_from_json(doc.at("z"));
  if (doc.contains("assume_z_in_convP"))
    query.assume_z_in_convP = doc.at("assume_z_in_convP").get<bool>();
  query.validate();
  return query;
}

SeparationQuery load_query_file(const std::string& path) {
  auto in = open_file(path);
  return load_query(in);
}

std::string query_to_json(const SeparationQuery& query) {
  ojson doc;
  doc["y"] = rat_to_json(query.y_star);
  doc["z"] = rat_vector_to_json(query.z_star);
  doc["assume_z_in_convP"] = query.assume_z_in_convP;
  return doc.dump(2) + "\n";
}

std::vector<CutRecord> load_cuts(std::istream& in) {
  std::vector<CutRecord> records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    ojson doc;
    try {
      doc = parse_exact(line);
    } catch (const Error& e) {
      throw Error("cut line " + std::to_string(line_no) + ": " + e.what());
    }
    CutRecord record;
    record.cut.alpha = rat_vector_from_json(doc.at("alpha"));
    record.cut.beta = rat_from_json(doc.at("beta"));
    if (doc.contains("provenance"))
      record.cut.provenance =
          provenance_from_string(doc.at("provenance").get<std::string>());
    if (doc.contains("spec")) {
      const ojson& s = doc.at("spec");
      FdiSpec spec;
      spec.m = s.at("m").get<int>();
      for (const auto& t : s.at("T")) spec.T.push_back(t.get<int>());
      for (const auto& q : s.at("S")) spec.S.push_back(q.get<int>());
      if (s.contains("scale")) spec.scale = rat_from_json(s.at("scale"));
      record.spec = std::move(spec);
    }
    if (doc.contains("facet_claim"))
      record.facet_claim = doc.at("facet_claim").get<bool>();
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<CutRecord> load_cuts_file(const std::string& path) {
  auto in = open_file(path);
  return load_cuts(in);
}

std::string cut_to_json_line(const CutRecord& record) {
  ojson doc;
  doc["alpha"] = rat_vector_to_json(record.cut.alpha);
  doc["beta"] = rat_to_json(record.cut.beta);
  doc["provenance"] = to_string(record.cut.provenance);
  if (record.spec) {
    ojson s;
    s["m"] = record.spec->m;
    s["T"] = record.spec->T;
    s["S"] = record.spec->S;
    s["scale"] = rat_to_json(record.spec->scale);
    doc["spec"] = std::move(s);
  }
  if (record.facet_claim) doc["facet_claim"] = *record.facet_claim;
  return doc.dump() + "\n";
}

std::string result_to_json(const SeparationResult& result,
                           const std::string& method) {
  ojson doc;
  doc["method"] = method;
  doc["verdict"] = to_string(result.verdict);
  doc["lp_value"] = rat_to_json(result.lp_value);
  doc["violation"] = rat_to_json(result.violation);
  doc["generated_rows"] = result.generated_rows;
  if (result.cut) {
    ojson c;
    c["alpha"] = rat_vector_to_json(result.cut->alpha);
    c["beta"] = rat_to_json(result.cut->beta);
    c["provenance"] = to_string(result.cut->provenance);
    doc["cut"] = std::move(c);
  } else {
    doc["cut"] = nullptr;
  }
  return doc.dump(2) + "\n";
}

std::string hull_to_json(const Instance& instance,
                         const std::vector<HullPoint>& points) {
  ojson doc;
  doc["n"] = instance.n();
  ojson arr = ojson::array();
  for (const HullPoint& point : points) {
    ojson p;
    p["y"] = rat_to_json(point.y);
    ojson z = ojson::array();
    for (char bit : point.z(instance.n())) z.push_back(bit ? 1 : 0);
    p["z"] = std::move(z);
    arr.push_back(std::move(p));
  }
  doc["points"] = std::move(arr);
  return doc.dump(2) + "\n";
}

}  // namespace mixknap
