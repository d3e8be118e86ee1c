#include "symconn/spec_io.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "json.hpp"

#include "symconn/error.hpp"

namespace symconn {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

bool valid_identifier(const std::string& s, bool lower_only) {
  if (s.empty()) {
    return false;
  }
  auto letter = [&](char c) {
    return (c >= 'a' && c <= 'z') || (!lower_only && c >= 'A' && c <= 'Z');
  };
  if (!letter(s[0])) {
    return false;
  }
  return std::all_of(s.begin() + 1, s.end(), [&](char c) {
    return letter(c) || (c >= '0' && c <= '9') || c == '_';
  });
}

// Tracks object keys during parsing; nlohmann keeps the last duplicate
// silently otherwise.
class DuplicateKeyGuard {
 public:
  bool operator()(int /*depth*/, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start:
        keys_.emplace_back();
        break;
      case json::parse_event_t::object_end:
        keys_.pop_back();
        break;
      case json::parse_event_t::key: {
        const std::string key = parsed.get<std::string>();
        if (!keys_.back().insert(key).second) {
          throw SpecFormatError("key '" + key + "'", "duplicate key");
        }
        break;
      }
      default:
        break;
    }
    return true;
  }

 private:
  std::vector<std::set<std::string>> keys_;
};

class DocumentReader {
 public:
  explicit DocumentReader(const json& root) : root_(root) {}

  ModelSpecDocument read() {
    if (!root_.is_object()) {
      fail("", "top level must be an object");
    }
    check_keys(root_, "", {"dim", "parameter", "brackets", "omega",
                           "connection", "vectors"});
    ModelSpecDocument doc;
    if (!root_.contains("dim")) {
      fail("", "missing field 'dim'");
    }
    doc.dim = read_index_value(root_["dim"], "/dim");
    if (doc.dim == 0 || doc.dim > kMaxDimension) {
      fail("/dim", "dimension must be in 1.." + std::to_string(kMaxDimension));
    }
    dim_ = doc.dim;

    if (root_.contains("parameter")) {
      const json& p = root_["parameter"];
      if (!p.is_string() || !valid_identifier(p.get<std::string>(), true)) {
        fail("/parameter", "parameter must be a lowercase identifier string");
      }
      doc.parameter = p.get<std::string>();
      parameter_ = *doc.parameter;
    }

    for_each_entry("brackets", true, [&](const json& e, const std::string& at) {
      check_keys(e, at, {"i", "j", "k", "v"});
      BracketEntry entry{index(e, at, "i"), index(e, at, "j"), index(e, at, "k"),
                         value(e, at)};
      if (entry.i >= entry.j) {
        fail(at, "bracket indices must satisfy i < j");
      }
      unique(at, {entry.i, entry.j, entry.k});
      doc.brackets.push_back(std::move(entry));
    });
    seen_.clear();
    for_each_entry("omega", true, [&](const json& e, const std::string& at) {
      check_keys(e, at, {"i", "j", "v"});
      OmegaEntry entry{index(e, at, "i"), index(e, at, "j"), value(e, at)};
      if (entry.i >= entry.j) {
        fail(at, "omega indices must satisfy i < j");
      }
      unique(at, {entry.i, entry.j, 0});
      doc.omega.push_back(std::move(entry));
    });
    seen_.clear();
    if (root_.contains("connection")) {
      doc.connection.emplace();
      for_each_entry("connection", false,
                     [&](const json& e, const std::string& at) {
                       check_keys(e, at, {"i", "j", "k", "v"});
                       ConnectionEntry entry{index(e, at, "i"), index(e, at, "j"),
                                             index(e, at, "k"), value(e, at)};
                       unique(at, {entry.i, entry.j, entry.k});
                       doc.connection->push_back(std::move(entry));
                     });
    }

    if (root_.contains("vectors")) {
      const json& vs = root_["vectors"];
      if (!vs.is_object()) {
        fail("/vectors", "vectors must be an object");
      }
      for (const auto& [name, comps] : vs.items()) {
        const std::string at = "/vectors/" + name;
        if (!valid_identifier(name, false)) {
          fail(at, "vector names must be identifiers");
        }
        if (!comps.is_array() || comps.size() != dim_) {
          fail(at, "expected an array of " + std::to_string(dim_) + " scalars");
        }
        std::vector<Scalar> values;
        for (std::size_t a = 0; a < comps.size(); ++a) {
          values.push_back(scalar(comps[a], at + "/" + std::to_string(a)));
        }
        doc.vectors.emplace(name, std::move(values));
      }
    }
    return doc;
  }

 private:
  [[noreturn]] static void fail(const std::string& where, const std::string& msg) {
    throw SpecFormatError(where.empty() ? "/" : where, msg);
  }

  static void check_keys(const json& obj, const std::string& at,
                         std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
      if (std::none_of(allowed.begin(), allowed.end(),
                       [&](const char* k) { return item.key() == k; })) {
        fail(at + "/" + item.key(), "unknown field '" + item.key() + "'");
      }
    }
  }

  static std::size_t read_index_value(const json& v, const std::string& at) {
    if (!v.is_number_integer()) {
      fail(at, "expected an integer");
    }
    const auto n = v.get<long long>();
    if (n < 0) {
      fail(at, "expected a non-negative integer");
    }
    return static_cast<std::size_t>(n);
  }

  std::size_t index(const json& e, const std::string& at, const char* key) const {
    if (!e.contains(key)) {
      fail(at, std::string("missing field '") + key + "'");
    }
    const std::size_t i = read_index_value(e[key], at + "/" + key);
    if (i < 1 || i > dim_) {
      fail(at + "/" + key, "index " + std::to_string(i) + " outside 1.." +
                               std::to_string(dim_));
    }
    return i;
  }

  Scalar value(const json& e, const std::string& at) const {
    if (!e.contains("v")) {
      fail(at, "missing field 'v'");
    }
    return scalar(e["v"], at + "/v");
  }

  Scalar scalar(const json& v, const std::string& at) const {
    if (!v.is_string()) {
      fail(at, "scalar values must be strings");
    }
    Scalar s;
    try {
      s = parse_scalar(v.get<std::string>());
    } catch (const ParseError& e) {
      fail(at, e.what());
    }
    if (!s.is_rational() && s.parameter_name() != parameter_) {
      fail(at, parameter_.empty()
                   ? "parameter '" + s.parameter_name() + "' is not declared"
                   : "parameter '" + s.parameter_name() + "' differs from '" +
                         parameter_ + "'");
    }
    return s;
  }

  void unique(const std::string& at, std::tuple<std::size_t, std::size_t, std::size_t> key) {
    if (!seen_.insert(key).second) {
      fail(at, "duplicate entry");
    }
  }

  template <typename F>
  void for_each_entry(const char* field, bool required, F&& f) {
    const std::string at = std::string("/") + field;
    if (!root_.contains(field)) {
      if (required) {
        fail("", std::string("missing field '") + field + "'");
      }
      return;
    }
    const json& arr = root_[field];
    if (!arr.is_array()) {
      fail(at, "expected an array");
    }
    for (std::size_t n = 0; n < arr.size(); ++n) {
      const std::string entry_at = at + "/" + std::to_string(n);
      if (!arr[n].is_object()) {
        fail(entry_at, "expected an object");
      }
      f(arr[n], entry_at);
    }
  }

  const json& root_;
  std::size_t dim_ = 0;
  std::string parameter_;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen_;
};

template <typename Entry>
std::vector<Entry> sorted_nonzero(std::vector<Entry> entries) {
  std::erase_if(entries, [](const Entry& e) { return e.value.is_zero(); });
  return entries;
}

Tensor structure_tensor(std::size_t n, const std::vector<BracketEntry>& entries) {
  Tensor c(n, {Variance::down, Variance::down, Variance::up});
  for (const auto& e : entries) {
    c.at({e.i - 1, e.j - 1, e.k - 1}) = e.value;
    c.at({e.j - 1, e.i - 1, e.k - 1}) = -e.value;
  }
  return c;
}

void require_rational(const Tensor& t, const char* what) {
  if (!t.is_rational()) {
    throw ParameterError(std::string(what) + " must not depend on the parameter");
  }
}

}  // namespace

ModelSpecDocument parse_spec(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end(), DuplicateKeyGuard{});
  } catch (const json::parse_error& e) {
    throw SpecFormatError("byte " + std::to_string(e.byte), e.what());
  }
  return DocumentReader(root).read();
}

std::string serialize_spec(const ModelSpecDocument& doc) {
  ordered_json out;
  out["dim"] = doc.dim;
  if (doc.parameter) {
    out["parameter"] = *doc.parameter;
  }

  auto brackets = sorted_nonzero(doc.brackets);
  std::sort(brackets.begin(), brackets.end(), [](const auto& a, const auto& b) {
    return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
  });
  out["brackets"] = ordered_json::array();
  for (const auto& e : brackets) {
    out["brackets"].push_back(
        {{"i", e.i}, {"j", e.j}, {"k", e.k}, {"v", e.value.to_string()}});
  }

  auto omega = sorted_nonzero(doc.omega);
  std::sort(omega.begin(), omega.end(), [](const auto& a, const auto& b) {
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  });
  out["omega"] = ordered_json::array();
  for (const auto& e : omega) {
    out["omega"].push_back({{"i", e.i}, {"j", e.j}, {"v", e.value.to_string()}});
  }

  if (doc.connection) {
    auto conn = sorted_nonzero(*doc.connection);
    std::sort(conn.begin(), conn.end(), [](const auto& a, const auto& b) {
      return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    out["connection"] = ordered_json::array();
    for (const auto& e : conn) {
      out["connection"].push_back(
          {{"i", e.i}, {"j", e.j}, {"k", e.k}, {"v", e.value.to_string()}});
    }
  }

  if (!doc.vectors.empty()) {
    out["vectors"] = ordered_json::object();
    for (const auto& [name, comps] : doc.vectors) {
      auto arr = ordered_json::array();
      for (const auto& s : comps) {
        arr.push_back(s.to_string());
      }
      out["vectors"][name] = std::move(arr);
    }
  }
  return out.dump(2) + "\n";
}

LoadedModel load_model(const ModelSpecDocument& doc, const std::string& name) {
  const std::size_t n = doc.dim;
  Tensor c = structure_tensor(n, doc.brackets);
  require_rational(c, "structure constants");
  FrameAlgebra algebra = FrameAlgebra::validate(std::move(c));

  Tensor w(n, {Variance::down, Variance::down});
  for (const auto& e : doc.omega) {
    w.at({e.i - 1, e.j - 1}) = e.value;
    w.at({e.j - 1, e.i - 1}) = -e.value;
  }
  require_rational(w, "omega");
  SymplecticForm omega(std::move(w));
  if (!ce_differential(algebra, omega.lower()).is_zero()) {
    throw PreconditionError("omega is not closed: dΩ != 0");
  }

  std::optional<Connection> connection;
  if (doc.connection) {
    Tensor gamma(n, {Variance::down, Variance::down, Variance::up});
    for (const auto& e : *doc.connection) {
      gamma.at({e.i - 1, e.j - 1, e.k - 1}) = e.value;
    }
    connection.emplace(std::move(gamma));
  }

  std::map<std::string, Tensor> vectors;
  for (const auto& [vname, comps] : doc.vectors) {
    vectors.emplace(vname, Tensor::vector(comps));
  }
  return LoadedModel{name,         std::move(algebra), std::move(omega),
                     std::move(connection), doc.parameter, std::move(vectors)};
}

ModelSpecDocument document_from_model(const NamedModel& model) {
  const std::size_t n = model.algebra.dim();
  ModelSpecDocument doc;
  doc.dim = n;
  std::string parameter;
  auto note = [&](const Scalar& s) {
    if (!s.is_rational()) {
      parameter = s.parameter_name();
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (const Scalar& v = model.algebra.c(i, j, k); !v.is_zero()) {
          doc.brackets.push_back({i + 1, j + 1, k + 1, v});
        }
      }
      if (const Scalar& v = model.omega(i, j); !v.is_zero()) {
        doc.omega.push_back({i + 1, j + 1, v});
      }
    }
  }
  if (model.connection) {
    doc.connection.emplace();
    for (IndexCounter idx(n, 3); !idx.done(); idx.next()) {
      const Scalar& v = model.connection->gamma(idx[0], idx[1], idx[2]);
      if (!v.is_zero()) {
        note(v);
        doc.connection->push_back({idx[0] + 1, idx[1] + 1, idx[2] + 1, v});
      }
    }
  }
  if (!parameter.empty()) {
    doc.parameter = parameter;
  }
  for (std::size_t a = 1; a <= n; ++a) {
    std::vector<Scalar> comps(n);
    comps[a - 1] = Scalar(1);
    doc.vectors.emplace("E" + std::to_string(a), std::move(comps));
  }
  return doc;
}

}  // namespace symconn
