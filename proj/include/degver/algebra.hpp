// Algebra presentations and catalog files.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "degver/expr.hpp"
#include "degver/tensor.hpp"

namespace degver {

class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

class ConstraintError : public std::runtime_error {
 public:
  explicit ConstraintError(const std::string& what) : std::runtime_error(what) {}
};

enum class Kind { LieYamaguti, Bol, CompatibleLie };

inline std::string kind_name(Kind k) {
  switch (k) {
    case Kind::LieYamaguti: return "LieYamaguti";
    case Kind::Bol: return "Bol";
    case Kind::CompatibleLie: return "CompatibleLie";
  }
  return "?";
}

inline Kind kind_from_name(const std::string& s) {
  if (s == "LieYamaguti") return Kind::LieYamaguti;
  if (s == "Bol") return Kind::Bol;
  if (s == "CompatibleLie") return Kind::CompatibleLie;
  throw SchemaError("unknown algebra kind '" + s + "'");
}

/// Expected tensor arities per kind: [2,3] for Lie-Yamaguti and Bol (one
/// bilinear, one trilinear bracket), [2,2] for compatible Lie (two bilinear).
inline std::vector<int> arities_for(Kind k) {
  return k == Kind::CompatibleLie ? std::vector<int>{2, 2} : std::vector<int>{2, 3};
}

/// Excluded parameter value, e.g. "alpha != 0".
struct Constraint {
  std::string parameter;
  Rational excluded;

  std::string str() const { return parameter + " != " + excluded.str(); }
};

inline Constraint parse_constraint(const std::string& text) {
  auto pos = text.find("!=");
  if (pos == std::string::npos) throw SchemaError("constraint must be of the form 'name != value': " + text);
  auto trim = [](std::string s) {
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  std::string name = trim(text.substr(0, pos));
  std::string value = trim(text.substr(pos + 2));
  if (name.empty() || value.empty()) throw SchemaError("malformed constraint: " + text);
  return Constraint{name, Rational::from_string(value)};
}

/// One catalog entry: a d-dimensional algebra (or parametric family) given by
/// canonicalized structure-constant tensors over the declared parameters.
struct AlgebraPresentation {
  std::string id;
  Kind kind = Kind::LieYamaguti;
  int dim = 0;
  std::vector<std::string> parameters;
  std::vector<Constraint> constraints;
  std::vector<MultilinearTensor> ops;

  bool has_parameter(const std::string& name) const {
    for (const auto& p : parameters)
      if (p == name) return true;
    return false;
  }

  /// True when the assignment avoids every excluded value.
  bool admissible(const std::map<std::string, Rational>& assignment) const {
    for (const auto& c : constraints) {
      auto it = assignment.find(c.parameter);
      if (it != assignment.end() && it->second == c.excluded) return false;
    }
    return true;
  }

  /// Substitutes the given parameters in every structure constant. Parameters
  /// that are fully closed are removed from the parameter list.
  AlgebraPresentation specialize(const std::map<std::string, RationalFunction>& at) const {
    AlgebraPresentation out = *this;
    out.ops.clear();
    for (const auto& op : ops) out.ops.push_back(op.substitute(at));
    out.parameters.clear();
    for (const auto& p : parameters)
      if (at.find(p) == at.end()) out.parameters.push_back(p);
    out.constraints.clear();
    for (const auto& c : constraints)
      if (at.find(c.parameter) == at.end()) out.constraints.push_back(c);
    return out;
  }

  std::vector<std::vector<RationalFunction>> basis_vectors() const {
    std::vector<std::vector<RationalFunction>> e(dim, std::vector<RationalFunction>(dim));
    for (int i = 0; i < dim; ++i) e[i][i] = RationalFunction(1);
    return e;
  }
};

/// A loaded catalog: uniform kind and dimension, entries in file order.
struct Catalog {
  std::string name;
  Kind kind = Kind::LieYamaguti;
  int dim = 0;
  std::vector<AlgebraPresentation> entries;
  std::map<std::string, size_t> index;

  const AlgebraPresentation& at(const std::string& id) const {
    auto it = index.find(id);
    if (it == index.end()) throw SchemaError("unknown catalog entry '" + id + "'");
    return entries[it->second];
  }
  bool contains(const std::string& id) const { return index.find(id) != index.end(); }
};

/// Parses a catalog document (see data/*.json for the shape). Coefficients go
/// through parse_expr restricted to the entry's declared parameters.
inline Catalog load_catalog(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("catalog is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc.contains("dim") || !doc.contains("entries"))
    throw SchemaError("catalog must have kind, dim and entries");
  Catalog cat;
  cat.name = doc.value("name", "");
  cat.kind = kind_from_name(doc.at("kind").get<std::string>());
  cat.dim = doc.at("dim").get<int>();
  if (cat.dim < 1) throw SchemaError("catalog dim must be positive");
  const auto arities = arities_for(cat.kind);

  for (const auto& je : doc.at("entries")) {
    AlgebraPresentation a;
    a.kind = cat.kind;
    a.dim = cat.dim;
    a.id = je.at("id").get<std::string>();
    if (cat.index.count(a.id)) throw SchemaError("duplicate catalog id '" + a.id + "'");
    std::set<std::string> allowed;
    if (je.contains("parameters"))
      for (const auto& p : je.at("parameters")) {
        a.parameters.push_back(p.get<std::string>());
        allowed.insert(p.get<std::string>());
      }
    if (je.contains("constraints"))
      for (const auto& c : je.at("constraints")) {
        Constraint parsed = parse_constraint(c.get<std::string>());
        if (!allowed.count(parsed.parameter))
          throw SchemaError("constraint on undeclared parameter in '" + a.id + "'");
        a.constraints.push_back(parsed);
      }
    const auto& jops = je.at("ops");
    if (jops.size() != arities.size())
      throw SchemaError("entry '" + a.id + "' must have " + std::to_string(arities.size()) + " ops");
    for (size_t oi = 0; oi < arities.size(); ++oi) {
      const auto& jop = jops[oi];
      int arity = jop.at("arity").get<int>();
      if (arity != arities[oi])
        throw SchemaError("entry '" + a.id + "' op " + std::to_string(oi) + " must have arity " +
                          std::to_string(arities[oi]));
      MultilinearTensor t(arity, cat.dim);
      for (const auto& jc : jop.at("constants")) {
        if (static_cast<int>(jc.size()) != arity + 2)
          throw SchemaError("constant tuple of wrong length in '" + a.id + "'");
        TensorIndex idx{0, 0, 0, 0};
        for (int s = 0; s <= arity; ++s) idx[s] = jc[s].get<int>();
        RationalFunction coeff;
        try {
          coeff = parse_expr(jc[arity + 1].get<std::string>(), allowed);
        } catch (const ParseError& e) {
          throw SchemaError("bad coefficient in '" + a.id + "': " + e.what());
        }
        try {
          t.add_constant(idx, coeff);
        } catch (const std::out_of_range& e) {
          throw SchemaError("bad index in '" + a.id + "': " + e.what());
        } catch (const std::invalid_argument& e) {
          throw SchemaError("bad constant in '" + a.id + "': " + e.what());
        }
      }
      a.ops.push_back(std::move(t));
    }
    cat.index[a.id] = cat.entries.size();
    cat.entries.push_back(std::move(a));
  }
  return cat;
}

}  // namespace degver
